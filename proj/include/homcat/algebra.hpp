#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homcat/linalg.hpp"

namespace homcat {

struct SparseTerm {
    int index;
    Scalar coeff;
};
using SparseVec = std::vector<SparseTerm>;

using IntMat = std::vector<std::vector<std::int64_t>>;

// Finite-dimensional associative unital algebra given by structure constants,
// together with a complete list of orthogonal idempotents.  Elements are
// coefficient vectors over the fixed basis.  Instances are immutable; the
// constructor validates associativity, the unit laws and the idempotent
// axioms and throws StructuralError on any violation.
class FDAlgebra {
public:
    FDAlgebra(FieldSpec field, std::vector<std::string> basis_labels,
              std::vector<std::vector<SparseVec>> mult, Vec unit,
              std::vector<Vec> idempotents);

    int dim() const { return dim_; }
    FieldSpec field() const { return field_; }
    const std::string& label(int i) const { return labels_[i]; }
    const std::vector<std::string>& labels() const { return labels_; }
    const Vec& unit() const { return unit_; }
    int idempotent_count() const { return static_cast<int>(idempotents_.size()); }
    const Vec& idempotent(int a) const { return idempotents_[a]; }
    const std::vector<Vec>& idempotents() const { return idempotents_; }
    const SparseVec& mult_entry(int i, int j) const { return mult_[i][j]; }

    Vec zero_element() const { return vec_zero(field_, dim_); }
    Vec basis_element(int i) const;
    Vec mul(const Vec& a, const Vec& b) const;

    // Matrix of x |-> a*x in the chosen basis.
    Mat left_mult_matrix(const Vec& a) const;

private:
    void validate() const;

    FieldSpec field_;
    int dim_;
    std::vector<std::string> labels_;
    std::vector<std::vector<SparseVec>> mult_;
    Vec unit_;
    std::vector<Vec> idempotents_;
};

using AlgebraPtr = std::shared_ptr<const FDAlgebra>;

// Echelon bases of the corner spaces e_t A e_s for all idempotent pairs.
// Maps e_s A -> e_t A of projective right modules are left multiplications
// by elements of e_t A e_s, so these corners carry every matrix entry of a
// complex and every chain-map component.
class CornerTable {
public:
    explicit CornerTable(const FDAlgebra& a);

    const EchelonBasis& corner(int t, int s) const { return corners_[t][s]; }
    int corner_dim(int t, int s) const { return corners_[t][s].dim(); }
    Vec element_of(int t, int s, const Vec& coords) const;
    // Coordinates of an element that must lie in e_t A e_s.
    Vec coords_of(int t, int s, const Vec& element) const;
    bool contains(int t, int s, const Vec& element) const { return corners_[t][s].contains(element); }

private:
    std::vector<std::vector<EchelonBasis>> corners_;
};

// Jacobson radical via the trace form of the regular representation;
// characteristic 0 only.
std::vector<Vec> radical_basis(const FDAlgebra& a);
// Dimensions of rad, rad^2, ... down to the first zero power (exclusive).
std::vector<int> radical_power_dims(const FDAlgebra& a);

// Entry (i, j) = dim_k e_i A e_j.
IntMat cartan_matrix(const FDAlgebra& a);
std::string int_mat_det(const IntMat& m); // exact integer determinant, decimal string
// Lexicographically least simultaneous row/column permutation of a square
// matrix; at most 8 rows.
IntMat canonical_int_mat(const IntMat& m);

int center_dim(const FDAlgebra& a);
int commutator_dim(const FDAlgebra& a); // dim of span{ab - ba}

// A linear functional l with l(ab) = l(ba) and nondegenerate Gram matrix
// l(b_i b_j), or nullopt if the deterministic search cannot certify one.
std::optional<Vec> symmetrizing_form(const FDAlgebra& a);
// Value of the functional on an element.
Scalar apply_functional(const Vec& functional, const Vec& element);
Mat gram_matrix(const FDAlgebra& a, const Vec& functional);

struct Fingerprint {
    int dim = 0;
    int idempotents = 0;
    IntMat cartan_canonical;
    std::string cartan_det;
    std::vector<int> radical_power_dims;
    int center_dim = 0;
    int commutator_dim = 0;
    bool symmetric_certified = false;

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

// Invariant bundle used as the comparison proxy for algebras; requires
// characteristic 0 (radical entries).
Fingerprint fingerprint(const FDAlgebra& a);

} // namespace homcat
