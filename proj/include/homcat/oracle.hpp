#pragma once

#include <cstdint>

#include "homcat/complexes.hpp"

namespace homcat {

struct OracleResult {
    std::uint64_t cocycle_count = 1;  // assignments satisfying the chain-map equation
    std::uint64_t boundary_count = 1; // distinct boundaries of lower-degree families
    int cocycle_dim = 0;
    int boundary_dim = 0;
    int dim() const { return cocycle_dim - boundary_dim; }
};

// Anti-regression oracle: exhaustively enumerates every component-matrix
// assignment over a prime field and counts chain maps and boundaries.  Kept
// independent of the echelon/nullspace path used by hom_k: it owns its
// modular arithmetic and tests the defining equations assignment by
// assignment.  Throws UnsupportedError when p^coords exceeds max_count.
OracleResult oracle_enumerate(const ProjComplex& x, const ProjComplex& y, int degree,
                              std::uint64_t max_count = (std::uint64_t{1} << 24));

} // namespace homcat
