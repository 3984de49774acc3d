#ifndef SESQUI_STAIRCASE_WEIGHTS_HPP
#define SESQUI_STAIRCASE_WEIGHTS_HPP

#include <cstdint>
#include <vector>

#include "sesqui/exact/rational.hpp"

namespace sesqui::staircase {

/// Side lengths of the squares tiling a 1 x a rectangle, largest first.
struct WeightSequence {
    Rational a;
    std::vector<Rational> weights;
    std::vector<BigInt> multiplicities; // continued fraction of a

    Rational sum_of_squares() const;
};

std::vector<BigInt> continued_fraction(const Rational& a);

// Euclid on (p, q), scaled by 1/q. Requires a = p/q > 1 in lowest terms.
WeightSequence weight_sequence(const BigInt& p, const BigInt& q);
WeightSequence weight_sequence(const Rational& a);

} // namespace sesqui::staircase

#endif
