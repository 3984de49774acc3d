#include "sesqui/curves/symmetry.hpp"

#include "sesqui/curves/classify.hpp"
#include "sesqui/exact/errors.hpp"

namespace sesqui::curves {

Pair phi_map(std::int64_t p, std::int64_t q) {
    if (p < 1 || q < 1) throw DomainError("phi_map: inputs must be positive");
    if (7 * p >= q) return {p, 7 * p - q};
    const std::int64_t r = q - 7 * p;
    return {r, p + 7 * r};
}

Pair psi_map(std::int64_t p, std::int64_t q) {
    if (p < 1 || q < 1) throw DomainError("psi_map: inputs must be positive");
    if (p >= 7 * q) {
        const std::int64_t r = p - 7 * q;
        return {q + 7 * r, r};
    }
    return {7 * q - p, q};
}

Rational shift_s(const Rational& x) {
    if (x.is_zero()) throw DomainError("shift_s: pole at 0");
    return Rational(7) - inverse(x);
}

Rational reflect_r(const Rational& x) {
    if (x == Rational(7)) throw DomainError("reflect_r: pole at 7");
    return Rational(7) + inverse(x - Rational(7));
}

int shift_decomposition_index(const Rational& x) {
    if (!exceeds_tau4(x)) throw DomainError("shift_decomposition_index: " + x.str() + " is not above tau^4");
    Rational y = x;
    int i = 0;
    while (y < Rational(7)) {
        y = inverse(Rational(7) - y);
        ++i;
    }
    return i;
}

std::vector<Pair> alternating_orbit(Pair seed, int steps) {
    std::vector<Pair> out{seed};
    Pair cur = seed;
    for (int s = 0; s < steps; ++s) {
        cur = (s % 2 == 0) ? phi_map(cur.first, cur.second) : psi_map(cur.first, cur.second);
        out.push_back(cur);
    }
    return out;
}

} // namespace sesqui::curves
