#pragma once

#include <vector>

#include "homcat/algebra.hpp"

namespace homcat {

// Matrix of algebra elements acting by left multiplication; rows index target
// summands, columns index source summands, so composition is the usual
// matrix product with entries multiplied in the algebra.
class MatAlg {
public:
    MatAlg() : rows_(0), cols_(0), dim_(0) {}
    MatAlg(FieldSpec f, int alg_dim, int rows, int cols)
        : rows_(rows), cols_(cols), dim_(alg_dim),
          entries_(static_cast<std::size_t>(rows) * cols, vec_zero(f, alg_dim)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Vec& at(int r, int c) { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Vec& at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * cols_ + c]; }
    bool is_zero() const;

    friend bool operator==(const MatAlg&, const MatAlg&) = default;

private:
    int rows_, cols_, dim_;
    std::vector<Vec> entries_;
};

MatAlg mat_alg_mul(const FDAlgebra& a, const MatAlg& later, const MatAlg& earlier);
MatAlg mat_alg_add(const MatAlg& a, const MatAlg& b);
MatAlg mat_alg_scaled(const MatAlg& m, const Scalar& c);

// Bounded complex of finitely generated projective right modules e_i A, in
// cohomological indexing (differential of degree +1).  The degree-n term is
// the direct sum of e_i A over summands_at(n).  Zero complexes have an empty
// support.  Construction trims empty boundary degrees and validates d^2 = 0
// and corner membership of every differential entry.
class ProjComplex {
public:
    explicit ProjComplex(AlgebraPtr a); // zero complex
    ProjComplex(AlgebraPtr a, int lo, std::vector<std::vector<int>> summands,
                std::vector<MatAlg> diff); // diff[k] : degree lo+k -> lo+k+1

    bool is_zero() const { return lo_ > hi_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    int count(int n) const;
    const std::vector<int>& summands_at(int n) const;
    int idem_at(int n, int t) const { return summands_at(n)[t]; }
    MatAlg diff_at(int n) const; // zero-shaped outside the support
    int total_summands() const;

    const FDAlgebra& algebra() const { return *alg_; }
    const AlgebraPtr& algebra_ptr() const { return alg_; }

    friend bool operator==(const ProjComplex&, const ProjComplex&);

private:
    void normalize_and_validate();

    AlgebraPtr alg_;
    int lo_, hi_;
    std::vector<std::vector<int>> summands_;
    std::vector<MatAlg> diff_;
};

ProjComplex stalk(AlgebraPtr a, std::vector<int> idempotents, int degree = 0);
// (X[k])^n = X^{n+k}; differential scaled by (-1)^k.
ProjComplex shift(const ProjComplex& x, int k);
ProjComplex direct_sum(const ProjComplex& x, const ProjComplex& y);
ProjComplex direct_sum_list(const std::vector<ProjComplex>& pieces);

// Degree-i component family f_n : X^n -> Y^{n+i}.  A family is a cocycle for
// the Hom-complex differential d(f)_n = d_Y f_n - (-1)^i f_{n+1} d_X exactly
// when it is a chain map X -> Y[i] under the shift convention above; the
// ChainMap type stores the data without requiring the equation, so it also
// carries homotopies.
struct ChainMap {
    ProjComplex source, target;
    int degree = 0;
    std::vector<MatAlg> comps; // indexed by source degrees lo..hi

    MatAlg comp_at(int n) const;
};

ChainMap make_family(const ProjComplex& x, const ProjComplex& y, int degree);
ChainMap identity_map(const ProjComplex& x);
// The Hom-complex differential of a degree-i family (a degree-i+1 family).
ChainMap hom_differential(const ChainMap& f);
bool is_chain_map(const ChainMap& f);
bool is_zero_map(const ChainMap& f);

// compose(f, g) applies f first: the result is g o f, of degree
// f.degree + g.degree, with (g o f)_n = g_{n + deg f} f_n.
ChainMap compose(const ChainMap& f, const ChainMap& g);
ChainMap cm_add(const ChainMap& f, const ChainMap& g);
ChainMap cm_scaled(const ChainMap& f, const Scalar& c);
ChainMap cm_sub(const ChainMap& f, const ChainMap& g);
// Reinterpret f as a family X -> Y[k] of degree (f.degree - k); the
// component matrices are unchanged.
ChainMap reinterpret_into_shift(const ChainMap& f, int k);

struct ConeTriangle {
    ProjComplex cone;
    ChainMap incl; // Y -> cone
    ChainMap proj; // cone -> X[1]
};
// Mapping cone of a degree-0 chain map: C^n = X^{n+1} (+) Y^n with
// differential [[-d_X, 0], [f, d_Y]].
ConeTriangle cone_triangle(const ChainMap& f);
ProjComplex cone(const ChainMap& f);

struct Minimized {
    ProjComplex complex;
    ChainMap incl; // minimized -> original; proj o incl = id exactly
    ChainMap proj; // original -> minimized; incl o proj homotopic to id
    int steps = 0;
};
// Gaussian elimination of differential entries that are units of a diagonal
// corner e_i A e_i; the result carries no such entry.  Realizes "same object
// up to contractible summands" in the homotopy category.
Minimized minimize(const ProjComplex& x);

// Summand profile {degree -> idempotent indices}, for report output.
std::vector<std::pair<int, std::vector<int>>> summand_profile(const ProjComplex& x);

// For total = pieces[0] (+) pieces[1] (+) ..., the idempotent endomorphisms
// of the total complex projecting onto each piece.
std::vector<ChainMap> split_identity_maps(const std::vector<ProjComplex>& pieces);

} // namespace homcat
