#ifndef SESQUI_TORIC_W_MAP_HPP
#define SESQUI_TORIC_W_MAP_HPP

#include <array>
#include <cstdint>
#include <utility>

#include "sesqui/exact/lattice.hpp"

namespace sesqui::toric {

/// One linear piece of a piecewise-linear map: the closed cone from `lower`
/// counterclockwise to `upper`, and the unimodular matrix used there.
struct PLBranch {
    LatticeVector lower;
    LatticeVector upper;
    IntMatrix2 matrix;

    bool contains(LatticeVector v) const;
};

// The three branches of W_{T0} on the closed positive quadrant:
//   p >= 2q         (p, q) -> (-q, p - 5q)
//   q/2 <= p <= 2q  (p, q) -> (q - p, q - 2p)
//   p <= q/2        (p, q) -> (p, q - 2p)
const std::array<PLBranch, 3>& w_t0_branches();

LatticeVector w_t0(std::int64_t p, std::int64_t q);

// Preimage in the closed positive quadrant; throws DomainError on zero input.
// W(p, 0) = W(0, p), and the preimage is reported as (p, 0).
std::pair<std::int64_t, std::int64_t> w_t0_inverse(LatticeVector m);

} // namespace sesqui::toric

#endif
