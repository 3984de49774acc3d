#include "sesqui/staircase/weights.hpp"

#include "sesqui/exact/errors.hpp"

namespace sesqui::staircase {

Rational WeightSequence::sum_of_squares() const {
    Rational s(0);
    for (const auto& w : weights) s += w * w;
    return s;
}

std::vector<BigInt> continued_fraction(const Rational& a) {
    if (a.sign() <= 0) throw DomainError("continued_fraction: input must be positive");
    std::vector<BigInt> out;
    BigInt p = a.num(), q = a.den();
    while (q != 0) {
        BigInt quot = p / q;
        out.push_back(quot);
        BigInt r = p - quot * q;
        p = q;
        q = r;
    }
    return out;
}

WeightSequence weight_sequence(const Rational& a) {
    if (a <= Rational(1)) throw DomainError("weight_sequence: a = " + a.str() + " must exceed 1");
    WeightSequence ws;
    ws.a = a;
    ws.multiplicities = continued_fraction(a);
    BigInt big = a.num(), small = a.den();
    const Rational unit(BigInt(1), a.den());
    for (const auto& m : ws.multiplicities) {
        const Rational w = Rational(small) * unit;
        for (BigInt i = 0; i < m; ++i) ws.weights.push_back(w);
        BigInt r = big - m * small;
        big = small;
        small = r;
    }
    return ws;
}

WeightSequence weight_sequence(const BigInt& p, const BigInt& q) {
    if (sgn(q) <= 0) throw DomainError("weight_sequence: q must be positive");
    Rational a(p, q);
    if (a.den() != q) throw DomainError("weight_sequence: gcd(p, q) must be 1");
    return weight_sequence(a);
}

} // namespace sesqui::staircase
