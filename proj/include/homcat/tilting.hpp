#pragma once

#include "homcat/endalg.hpp"

namespace homcat {

enum class ApproxMode { raw, reduced };

struct ApproxComponent {
    int m_index;     // which summand of M
    int shift_degree;
    int basis_index; // which canonical basis map of hom_k(X, M_j, shift)
};

// Left add(M)-approximation of X in the orbit category: f stacks basis maps
// of the graded Hom spaces into correspondingly shifted copies of the
// M-summands.
struct Approximation {
    ProjComplex m_prime;
    ChainMap f; // X -> m_prime, degree 0
    std::vector<ApproxComponent> components;
    bool zero = false; // the graded Hom space vanished entirely
};

Approximation left_approximation(const ProjComplex& x, const std::vector<ProjComplex>& m, ApproxMode mode);

// Composition with f maps hom(M', S, i) onto hom(X, S, i) for every
// M-summand S and every degree i (rank check).
bool verify_left_approx(const ChainMap& f, const std::vector<ProjComplex>& m);
// Dual condition: precomposition with g maps hom(S, M', i) onto hom(S, Y, i).
bool verify_right_approx(const ChainMap& g, const std::vector<ProjComplex>& m);

// Summand exchange along a triangle X -> M' -> Y -> X[1]: the endomorphism
// algebras of (M, X) and (M, Y) in the orbit category, together with their
// degree-0 parts.
struct ExchangeResult {
    Approximation approx;
    ProjComplex cone_raw;
    ProjComplex y; // minimized cone
    ChainMap tri_g; // M' -> Y
    ChainMap tri_h; // Y -> X[1]
    GradedEndAlgebra lambda, gamma;   // graded end algebras
    GradedEndAlgebra lambda0, gamma0; // degree-0 parts
    bool left_ok = false, right_ok = false;
    bool lambda_symmetric = false, gamma_symmetric = false;
    bool lambda0_symmetric = false, gamma0_symmetric = false;
};

// Requires a symmetric base algebra (certified symmetrizing form).
ExchangeResult exchange(const ProjComplex& x, const std::vector<ProjComplex>& m);

// One-step tilting complex T = T1 (+) T2 over the end algebra of (M, X):
// T1 the projectives of the M-summands, T2 = [e_X L -> e_{M'} L] with the
// differential given by left multiplication by the approximation.
struct TiltingComplex {
    AlgebraPtr base;                        // the end algebra the complex lives over
    std::vector<ProjComplex> summands;      // T1 stalks then T2
    ProjComplex t2;
    std::vector<int> missing_idems;         // projectives recovered by the cone
    std::vector<std::pair<int, int>> mprime; // (idempotent, degree tag) per T2 row

    ProjComplex total() const { return direct_sum_list(summands); }
};

// lambda must be the end algebra of (M..., X) with X listed last, and approx
// the approximation used in the exchange.
TiltingComplex build_tilting_complex(const GradedEndAlgebra& lambda, const Approximation& approx);

struct TiltingReport {
    bool hom_vanishing = false;
    std::map<int, int> nonzero_degree_dims; // offending degrees -> dim
    bool generation = false;
    std::vector<std::pair<int, std::vector<int>>> cone_profile; // minimized recovery cone
    bool pass() const { return hom_vanishing && generation; }
};

// (1) Hom(T, T[n]) = 0 for n != 0 inside the support window; (2) the cone of
// the evident map from the M'-profile stalk to T2 minimizes to the missing
// projectives in degree -1, and together the summands reach every projective.
TiltingReport verify_tilting(const TiltingComplex& t);

FDAlgebra endring_of_tilting(const TiltingComplex& t);

// T = [P -> Q'] (+) Q for a split A = P (+) Q of the regular module, with
// P -> Q' a left add(Q)-approximation.  Requires a certified symmetrizing
// form and a nonempty Q.
TiltingComplex prop21_tilting(const AlgebraPtr& a, const std::vector<int>& p_idems,
                              const std::vector<int>& q_idems);

} // namespace homcat
