#ifndef SESQUI_CURVES_BOUNDS_HPP
#define SESQUI_CURVES_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sesqui/exact/lattice.hpp"
#include "sesqui/exact/rational.hpp"

namespace sesqui::curves {

// pq / area; for a degree-d plane curve (area d) this bounds E(1, p/q) >= p/d after dividing by q.
Rational obstruction_lower_bound(std::int64_t p, std::int64_t q, const Rational& area);

// c when self_intersection >= pq.
std::optional<Rational> inflation_upper_bound(std::int64_t p, std::int64_t q, std::int64_t self_intersection,
                                              const Rational& c);

// r p q
Rational visible_area(const Rational& r, std::int64_t p, std::int64_t q);

struct DegenerationCheck {
    bool admissible = true;
    // Violating a = (a1, a2) with positive integer entries, when inadmissible.
    std::optional<LatticeVector> witness;
    Rational lhs; // sum_i min(a1 p_i, a2 q_i) at the witness
    Rational rhs; // min(a1 p, a2 q) at the witness
};

// sum_i min(a1 p_i, a2 q_i) - min(a1 p, a2 q) at a given a.
Rational degeneration_gap(std::pair<std::int64_t, std::int64_t> target,
                          const std::vector<std::pair<std::int64_t, std::int64_t>>& parts, const Rational& a1,
                          const Rational& a2);

// Decides sum_i min(a1 p_i, a2 q_i) >= min(a1 p, a2 q) for all a in R^2_{>0}
// by testing every breakpoint slope and both ends.
DegenerationCheck degeneration_admissible(std::pair<std::int64_t, std::int64_t> target,
                                          const std::vector<std::pair<std::int64_t, std::int64_t>>& parts);

} // namespace sesqui::curves

#endif
