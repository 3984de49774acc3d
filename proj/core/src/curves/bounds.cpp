#include "sesqui/curves/bounds.hpp"

#include <algorithm>
#include <set>

#include "sesqui/exact/errors.hpp"

namespace sesqui::curves {

namespace {

void check_positive(std::int64_t p, std::int64_t q, const char* who) {
    if (p < 1 || q < 1) throw DomainError(std::string(who) + ": p and q must be positive");
}

} // namespace

Rational obstruction_lower_bound(std::int64_t p, std::int64_t q, const Rational& area) {
    check_positive(p, q, "obstruction_lower_bound");
    if (area.sign() <= 0) throw DomainError("obstruction_lower_bound: area must be positive");
    return Rational(p) * Rational(q) / area;
}

std::optional<Rational> inflation_upper_bound(std::int64_t p, std::int64_t q, std::int64_t self_intersection,
                                              const Rational& c) {
    check_positive(p, q, "inflation_upper_bound");
    if (c.sign() <= 0) throw DomainError("inflation_upper_bound: c must be positive");
    if (self_intersection >= p * q) return c;
    return std::nullopt;
}

Rational visible_area(const Rational& r, std::int64_t p, std::int64_t q) {
    check_positive(p, q, "visible_area");
    if (r.sign() <= 0) throw DomainError("visible_area: r must be positive");
    return r * Rational(p) * Rational(q);
}

Rational degeneration_gap(std::pair<std::int64_t, std::int64_t> target,
                          const std::vector<std::pair<std::int64_t, std::int64_t>>& parts, const Rational& a1,
                          const Rational& a2) {
    Rational sum(0);
    for (auto [p, q] : parts) sum += std::min(a1 * Rational(p), a2 * Rational(q));
    return sum - std::min(a1 * Rational(target.first), a2 * Rational(target.second));
}

DegenerationCheck degeneration_admissible(std::pair<std::int64_t, std::int64_t> target,
                                          const std::vector<std::pair<std::int64_t, std::int64_t>>& parts) {
    if (parts.empty()) throw DomainError("degeneration_admissible: empty parts list");
    check_positive(target.first, target.second, "degeneration_admissible");
    for (auto [p, q] : parts) check_positive(p, q, "degeneration_admissible");

    // a = (1, s): every term is linear in s between consecutive breakpoints p_i/q_i, p/q.
    std::set<Rational> breaks{Rational(target.first, target.second)};
    for (auto [p, q] : parts) breaks.insert(Rational(p, q));
    std::vector<Rational> slopes;
    slopes.push_back(*breaks.begin() / Rational(2));
    slopes.insert(slopes.end(), breaks.begin(), breaks.end());
    slopes.push_back(*breaks.rbegin() * Rational(2));

    DegenerationCheck out;
    for (const auto& s : slopes) {
        // s = u/v, a = (v, u)
        const Rational a1(s.den()), a2(s.num());
        Rational gap = degeneration_gap(target, parts, a1, a2);
        if (gap.sign() < 0) {
            out.admissible = false;
            out.witness = LatticeVector{a1.to_int64(), a2.to_int64()};
            Rational rhs = std::min(a1 * Rational(target.first), a2 * Rational(target.second));
            out.rhs = rhs;
            out.lhs = rhs + gap;
            return out;
        }
    }
    return out;
}

} // namespace sesqui::curves
