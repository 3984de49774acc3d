#ifndef SESQUI_STAIRCASE_STAIRCASE_HPP
#define SESQUI_STAIRCASE_STAIRCASE_HPP

#include <optional>
#include <string>
#include <vector>

#include "sesqui/exact/rational.hpp"

namespace sesqui::staircase {

/// Exact value, sqrt(radicand), or no formula.
struct StaircaseValue {
    enum class Kind { Exact, Sqrt, Unspecified };

    Kind kind = Kind::Unspecified;
    Rational value; // the value for Exact, the radicand for Sqrt

    static StaircaseValue exact(Rational v) { return {Kind::Exact, std::move(v)}; }
    static StaircaseValue sqrt(Rational radicand) { return {Kind::Sqrt, std::move(radicand)}; }
    static StaircaseValue unspecified() { return {}; }

    // Rational value when one exists (Exact, or Sqrt of a rational square).
    std::optional<Rational> as_rational() const;
    // "p/q", "sqrt(p/q)" or "unspecified"
    std::string str() const;

    friend bool operator==(const StaircaseValue&, const StaircaseValue&) = default;
};

// Sign of sqrt(radicand) - x, exactly.
int compare_sqrt(const Rational& radicand, const Rational& x);
std::optional<Rational> exact_sqrt(const Rational& x);

enum class PieceKind {
    Linear,     // coefficient * a
    Constant,   // coefficient
    Affine,     // (a + 1) / 3
    Rational3,  // 3a / (a + 1)
    Sqrt,       // sqrt(a)
    Corners,    // further staircase corners, not expanded
    Unspecified,
};

// Interval endpoint: a rational, tau^4, or +infinity.
struct Endpoint {
    enum class Kind { Value, Tau4, Infinity };
    Kind kind = Kind::Value;
    Rational value;

    std::string str() const;
};

struct Piece {
    Endpoint lo;
    Endpoint hi;
    PieceKind kind = PieceKind::Unspecified;
    Rational coefficient;

    std::string describe() const;
};

// Unstabilized ball function: staircase corners for k = -1..k_max, the
// accumulation gap up to tau^4, then (a+1)/3, the window and sqrt(a).
std::vector<Piece> mcduff_schlenk_pieces(int k_max);

// Throws DomainError for a < 1.
StaircaseValue mcduff_schlenk_value(const Rational& a);

// Staircase value for a <= tau^4, 3a/(a+1) beyond; independent of N >= 1.
Rational stabilized_value(const Rational& a, int n = 1);

// 3a / (a + 1)
Rational hind_capacity(const Rational& a);

} // namespace sesqui::staircase

#endif
