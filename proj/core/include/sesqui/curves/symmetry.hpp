#ifndef SESQUI_CURVES_SYMMETRY_HPP
#define SESQUI_CURVES_SYMMETRY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "sesqui/exact/rational.hpp"

namespace sesqui::curves {

using Pair = std::pair<std::int64_t, std::int64_t>;

//   Phi(p, q) = (p, 7p - q)                      if p/q >= 1/7
//             = (q - 7p, p + 7(q - 7p))          otherwise
Pair phi_map(std::int64_t p, std::int64_t q);
//   Psi(p, q) = (q + 7(p - 7q), p - 7q)          if p/q >= 7
//             = (7q - p, q)                      otherwise
Pair psi_map(std::int64_t p, std::int64_t q);

// S(x) = 7 - 1/x, R(x) = 7 + 1/(x - 7). Throw DomainError at the poles.
Rational shift_s(const Rational& x);
Rational reflect_r(const Rational& x);

// The i with x in S^i([7, inf)), for x > tau^4.
int shift_decomposition_index(const Rational& x);

// Alternating Phi, Psi (Phi first) from a seed; returns the seed followed by
// `steps` images.
std::vector<Pair> alternating_orbit(Pair seed, int steps);

} // namespace sesqui::curves

#endif
