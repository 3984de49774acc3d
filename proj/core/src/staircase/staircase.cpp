#include "sesqui/staircase/staircase.hpp"

#include "sesqui/curves/classify.hpp"
#include "sesqui/exact/errors.hpp"
#include "sesqui/staircase/fibonacci.hpp"

namespace sesqui::staircase {

std::optional<Rational> exact_sqrt(const Rational& x) {
    if (x.sign() < 0) return std::nullopt;
    BigInt n = x.num(), d = x.den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    return Rational(BigInt(sqrt(n)), BigInt(sqrt(d)));
}

int compare_sqrt(const Rational& radicand, const Rational& x) {
    if (radicand.sign() < 0) throw DomainError("compare_sqrt: negative radicand");
    if (x.sign() < 0) return 1;
    auto c = radicand <=> x * x;
    return c < 0 ? -1 : c > 0 ? 1 : 0;
}

std::optional<Rational> StaircaseValue::as_rational() const {
    switch (kind) {
    case Kind::Exact: return value;
    case Kind::Sqrt: return exact_sqrt(value);
    case Kind::Unspecified: return std::nullopt;
    }
    return std::nullopt;
}

std::string StaircaseValue::str() const {
    switch (kind) {
    case Kind::Exact: return value.fraction_str();
    case Kind::Sqrt:
        if (auto r = exact_sqrt(value)) return r->fraction_str();
        return "sqrt(" + value.fraction_str() + ")";
    case Kind::Unspecified: return "unspecified";
    }
    return "unspecified";
}

namespace {

const Rational kWindowEnd(289, 36);

} // namespace

std::string Endpoint::str() const {
    switch (kind) {
    case Kind::Value: return value.fraction_str();
    case Kind::Tau4: return "tau^4";
    case Kind::Infinity: return "inf";
    }
    return "?";
}

std::string Piece::describe() const {
    switch (kind) {
    case PieceKind::Linear: return coefficient.fraction_str() + "*a";
    case PieceKind::Constant: return coefficient.fraction_str();
    case PieceKind::Affine: return "(a+1)/3";
    case PieceKind::Rational3: return "3a/(a+1)";
    case PieceKind::Sqrt: return "sqrt(a)";
    case PieceKind::Corners: return "staircase";
    case PieceKind::Unspecified: return "unspecified";
    }
    return "unspecified";
}

std::vector<Piece> mcduff_schlenk_pieces(int k_max) {
    if (k_max < -1) throw DomainError("mcduff_schlenk_pieces: k_max must be >= -1");
    using EK = Endpoint::Kind;
    auto at = [](Rational v) { return Endpoint{EK::Value, std::move(v)}; };
    const Endpoint tau4{EK::Tau4, Rational(0)}, inf{EK::Infinity, Rational(0)};
    std::vector<Piece> out;
    for (int k = -1; k <= k_max; ++k) {
        out.push_back({at(gamma(k)), at(alpha(k)), PieceKind::Linear, slope(k)});
        out.push_back({at(alpha(k)), at(gamma(k + 1)), PieceKind::Constant, beta(k)});
    }
    out.push_back({at(gamma(k_max + 1)), tau4, PieceKind::Corners, Rational(0)});
    out.push_back({tau4, at(Rational(7)), PieceKind::Affine, Rational(0)});
    out.push_back({at(Rational(7)), at(kWindowEnd), PieceKind::Unspecified, Rational(0)});
    out.push_back({at(kWindowEnd), inf, PieceKind::Sqrt, Rational(0)});
    return out;
}

StaircaseValue mcduff_schlenk_value(const Rational& a) {
    if (a < Rational(1)) throw DomainError("mcduff_schlenk_value: a = " + a.str() + " < 1");
    if (curves::exceeds_tau4(a)) {
        if (a <= Rational(7)) return StaircaseValue::exact((a + Rational(1)) / Rational(3));
        if (a < kWindowEnd) return StaircaseValue::unspecified();
        return StaircaseValue::sqrt(a);
    }
    // a < tau^4 is rational, so the corners gamma_k -> tau^4 eventually pass it.
    for (int k = -1;; ++k) {
        if (a <= alpha(k)) return StaircaseValue::exact(a * slope(k));
        if (a <= gamma(k + 1)) return StaircaseValue::exact(beta(k));
    }
}

Rational stabilized_value(const Rational& a, int n) {
    if (a < Rational(1)) throw DomainError("stabilized_value: a = " + a.str() + " < 1");
    if (n < 1) throw DomainError("stabilized_value: N must be >= 1");
    if (curves::exceeds_tau4(a)) return hind_capacity(a);
    return *mcduff_schlenk_value(a).as_rational();
}

Rational hind_capacity(const Rational& a) {
    if (a < Rational(1)) throw DomainError("hind_capacity: a = " + a.str() + " < 1");
    return Rational(3) * a / (a + Rational(1));
}

} // namespace sesqui::staircase
