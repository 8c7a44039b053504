#pragma once

#include <map>
#include <string>

#include "homcat/hom.hpp"

namespace homcat {

struct EndBasisKey {
    int src, dst, deg, idx;
    friend auto operator<=>(const EndBasisKey&, const EndBasisKey&) = default;
};

// Endomorphism algebra of a list of complexes, graded (orbit-category) or
// concentrated in degree 0 (plain homotopy category).  The underlying
// FDAlgebra has one basis element per canonical Hom-space representative and
// one idempotent per summand (its identity map); multiplication is
// composition followed by reduction, so a*b applies b first.
class GradedEndAlgebra {
public:
    GradedEndAlgebra(std::vector<ProjComplex> summands, bool graded);

    const FDAlgebra& algebra() const { return *alg_; }
    const AlgebraPtr& algebra_ptr() const { return alg_; }
    bool graded() const { return graded_; }
    int summand_count() const { return static_cast<int>(summands_.size()); }
    const std::vector<ProjComplex>& summands() const { return summands_; }
    const std::vector<int>& grading() const { return grading_; }
    const EndBasisKey& key(int b) const { return keys_[b]; }

    const HomSpace* hom_ptr(int src, int dst, int deg) const;
    const HomSpace& hom(int src, int dst, int deg) const;

    int find_summand(const ProjComplex& c) const; // -1 if absent
    // Algebra coordinates of a chain map between listed summands.
    Vec element_of(const ChainMap& f) const;
    Vec idempotent_element(int summand) const { return alg_->idempotent(summand); }

private:
    std::vector<ProjComplex> summands_;
    bool graded_;
    std::vector<std::vector<std::map<int, HomSpace>>> homs_;
    std::vector<int> grading_;
    std::vector<EndBasisKey> keys_;
    std::map<std::tuple<int, int, int>, std::pair<int, int>> block_offsets_; // (src,dst,deg) -> (offset, dim)
    AlgebraPtr alg_;
};

GradedEndAlgebra end_graded(const std::vector<ProjComplex>& summands);
GradedEndAlgebra end_degree0(const std::vector<ProjComplex>& summands);
FDAlgebra end_ungraded(const std::vector<ProjComplex>& summands);

// A relation is a signed integer combination of composable words in named
// generators, asserted to vanish modulo null-homotopy.  Words are written
// left to right in composition order: {"beta", "alpha"} means beta o alpha
// (alpha applied first).
struct RelationTerm {
    long long coeff = 1;
    std::vector<std::string> word;
};
struct Relation {
    std::string display;
    std::vector<RelationTerm> terms;
};

struct RelationCheck {
    std::string display;
    bool pass = false;
    bool trivially_zero = false; // every term vanished identically
    int degree = 0;
    Vec residual_coeffs;
    std::optional<ChainMap> homotopy; // certificate when pass && !trivially_zero
};
struct RelationReport {
    std::vector<RelationCheck> checks;
    bool all_pass = true;
};

RelationReport verify_relations(const GradedEndAlgebra& e,
                                const std::map<std::string, ChainMap>& named,
                                const std::vector<Relation>& relations);

// True iff monomials in the named generators together with the idempotents
// span the algebra (words up to length dim).
bool spanning_check(const GradedEndAlgebra& e, const std::map<std::string, ChainMap>& named);

struct QuiverData {
    int vertices = 0;
    // arrows[i][j] = number of arrows i -> j = dim e_j (rad/rad^2) e_i,
    // paths composing right to left.
    std::vector<std::vector<int>> arrows;
};
QuiverData quiver_data(const FDAlgebra& a);

} // namespace homcat
