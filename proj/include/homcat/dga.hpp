#pragma once

#include <map>
#include <optional>

#include "homcat/complexes.hpp"

namespace homcat {

struct DGPosition {
    int n;   // term degree inside the complex
    int idx; // summand index within that degree
    friend bool operator==(const DGPosition&, const DGPosition&) = default;
};

// The endomorphism dg-algebra of a complex: degree-i part is the space of
// all degree-i component families, multiplication is composition (right
// factor applied first) and the differential is
// d(f)_n = d_C f_n - (-1)^i f_{n+1} d_C.  Construction validates d o d = 0,
// the graded Leibniz rule on all basis pairs and the unit laws.
class DGAlgebra {
public:
    struct Key {
        int row_pos, col_pos; // indices into positions()
        int k;                // corner-basis index
    };

    int dim() const { return static_cast<int>(keys_.size()); }
    FieldSpec field() const { return field_; }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<Key>& keys() const { return keys_; }
    const std::vector<DGPosition>& positions() const { return positions_; }
    int position_degree(int pos) const { return positions_[pos].n; }
    const Vec& unit() const { return unit_; }
    const SparseVec& mult_entry(int i, int j) const { return mult_[i][j]; }
    const SparseVec& differential_of(int i) const { return dvec_[i]; }

    Vec zero_element() const { return vec_zero(field_, dim()); }
    // a*b composes b first, matching the end-algebra convention.
    Vec mul(const Vec& a, const Vec& b) const;
    Vec apply_d(const Vec& a) const;

    // Entry degrees u_row - u_col over a chosen ordering of the positions.
    std::vector<std::vector<int>> degree_pattern(const std::vector<DGPosition>& order) const;
    // Coordinates of a degree-i endomorphism family of the underlying complex.
    Vec coords_of_family(const ChainMap& f) const;

private:
    friend DGAlgebra rhom_dga(const ProjComplex& c);
    DGAlgebra() = default;
    void validate() const;

    FieldSpec field_;
    std::optional<ProjComplex> complex_;
    std::optional<CornerTable> corner_store_;
    std::vector<DGPosition> positions_;
    std::vector<Key> keys_;
    std::vector<int> degrees_;
    std::vector<std::vector<SparseVec>> mult_;
    std::vector<SparseVec> dvec_;
    Vec unit_;
};

DGAlgebra rhom_dga(const ProjComplex& c);

struct Cohomology {
    std::map<int, int> dims;            // per dg degree (0 entries included)
    std::optional<FDAlgebra> total;     // H^* as an algebra; nullopt when H = 0
    std::vector<int> grading;           // degree per basis element of total
    std::vector<int> degree0_indices;   // indices of the degree-0 part inside total
    std::optional<FDAlgebra> degree0;   // H^0 with the provided idempotents
};

// Kernel-modulo-image cohomology with induced multiplication on canonical
// representatives.  summand_identities (degree-0 cocycle coordinates, e.g.
// the projections of a direct sum) become the idempotent list of H^0;
// defaults to the unit alone.  Well-definedness of the induced product is
// spot-checked by perturbing each representative with a boundary.
Cohomology cohomology(const DGAlgebra& dga, const std::vector<Vec>& summand_identities = {});

} // namespace homcat
