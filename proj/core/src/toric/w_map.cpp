#include "sesqui/toric/w_map.hpp"

#include "sesqui/exact/errors.hpp"

namespace sesqui::toric {

bool PLBranch::contains(LatticeVector v) const {
    return wedge(lower, v) >= 0 && wedge(v, upper) >= 0;
}

const std::array<PLBranch, 3>& w_t0_branches() {
    static const std::array<PLBranch, 3> branches{{
        {{1, 0}, {2, 1}, {0, -1, 1, -5}},
        {{2, 1}, {1, 2}, {-1, 1, -2, 1}},
        {{1, 2}, {0, 1}, {1, 0, -2, 1}},
    }};
    return branches;
}

LatticeVector w_t0(std::int64_t p, std::int64_t q) {
    if (p < 0 || q < 0) throw DomainError("w_t0: p and q must be nonnegative");
    if (p == 0 && q == 0) throw DomainError("w_t0: zero input");
    for (const auto& br : w_t0_branches()) {
        if (br.contains({p, q})) return br.matrix.apply({p, q});
    }
    throw ConventionError("w_t0: no branch contains " + LatticeVector{p, q}.str());
}

std::pair<std::int64_t, std::int64_t> w_t0_inverse(LatticeVector m) {
    if (m.is_zero()) throw DomainError("w_t0_inverse: zero input");
    const std::int64_t m1 = m.a, m2 = m.b;
    {
        std::int64_t p = m2 - 5 * m1, q = -m1;
        if (p >= 0 && q >= 0 && p >= 2 * q) return {p, q};
    }
    {
        std::int64_t p = m1 - m2, q = 2 * m1 - m2;
        if (p >= 0 && q >= 0 && p <= 2 * q && q <= 2 * p) return {p, q};
    }
    {
        std::int64_t p = m1, q = m2 + 2 * m1;
        if (p >= 0 && q >= 0 && q >= 2 * p) return {p, q};
    }
    throw ConventionError("w_t0_inverse: no branch maps onto " + m.str());
}

} // namespace sesqui::toric
