#pragma once

#include <map>
#include <optional>

#include "homcat/complexes.hpp"

namespace homcat {

// Coordinate system for the space of degree-i component families X -> Y:
// one block per (source degree n, target summand t, source summand s) whose
// idempotent corner is nonzero, in lexicographic block order, with corner
// coordinates inside each block.  The ordering fixes canonical echelon
// representatives, so structure constants are reproducible across runs.
struct FamilyLayout {
    struct Block {
        int n, t, s;
        int idem_t, idem_s;
        int dim;
        int offset;
    };
    std::vector<Block> blocks;
    int total = 0;

    static FamilyLayout build(const CornerTable& corners, const ProjComplex& x, const ProjComplex& y,
                              int degree);
};

// Hom space in the homotopy category at a fixed shift degree, presented as
// cocycles of the Hom-complex modulo boundaries, with canonical echelon
// representatives.
class HomSpace {
public:
    HomSpace(const ProjComplex& x, const ProjComplex& y, int degree);

    const ProjComplex& source() const { return source_; }
    const ProjComplex& target() const { return target_; }
    int degree() const { return degree_; }
    int dim() const { return static_cast<int>(reps_.size()); }
    int chainmap_dim() const { return chainmap_dim_; }
    int homotopy_dim() const { return homotopy_dim_; }
    const std::vector<ChainMap>& basis() const { return basis_; }
    const std::vector<Vec>& rep_coords() const { return reps_; }

    Vec flatten(const ChainMap& f) const;
    ChainMap unflatten(const Vec& coords) const;

    struct Reduction {
        Vec coeffs;        // coordinates in basis()
        ChainMap homotopy; // degree-1-lower family h with f - sum coeffs*basis = d(h)
    };
    // Unique coefficients of a chain map modulo null-homotopy, with an
    // explicit homotopy witnessing the residual.
    Reduction reduce(const ChainMap& f) const;
    bool is_null_homotopic(const ChainMap& f) const;

private:
    ProjComplex source_, target_;
    int degree_;
    CornerTable corners_;
    FamilyLayout layout_, layout_below_;
    Mat boundary_map_; // layout_below_ coords -> layout_ coords
    EchelonBasis boundary_span_;
    std::vector<Vec> reps_;
    std::vector<ChainMap> basis_;
    int chainmap_dim_ = 0, homotopy_dim_ = 0;
};

HomSpace hom_k(const ProjComplex& x, const ProjComplex& y, int degree);
int hom_dim(const ProjComplex& x, const ProjComplex& y, int degree);

// Interval of degrees outside which every Hom space vanishes for support
// reasons; nullopt when either complex is zero.
std::optional<std::pair<int, int>> support_window(const ProjComplex& x, const ProjComplex& y);

// hom_k over the whole support window.
std::map<int, HomSpace> graded_hom(const ProjComplex& x, const ProjComplex& y);
int graded_hom_total_dim(const ProjComplex& x, const ProjComplex& y);

} // namespace homcat
