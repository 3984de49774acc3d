#ifndef SESQUI_EXACT_LATTICE_HPP
#define SESQUI_EXACT_LATTICE_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace sesqui {

/// Point of the rank-two lattice Z^2.
struct LatticeVector {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

    LatticeVector operator-() const { return {-a, -b}; }
    friend LatticeVector operator+(LatticeVector v, LatticeVector w) { return {v.a + w.a, v.b + w.b}; }
    friend LatticeVector operator-(LatticeVector v, LatticeVector w) { return {v.a - w.a, v.b - w.b}; }
    friend LatticeVector operator*(std::int64_t s, LatticeVector v) { return {s * v.a, s * v.b}; }

    bool is_zero() const { return a == 0 && b == 0; }
    std::string str() const; // "a,b"
};

// Determinant of the matrix with columns v, w.
std::int64_t wedge(LatticeVector v, LatticeVector w);
std::int64_t dot(LatticeVector v, LatticeVector w);
// (a, b) -> (-b, a)
LatticeVector rot90(LatticeVector v);

bool is_primitive(LatticeVector v);

struct PrimitivePart {
    LatticeVector primitive;
    std::int64_t multiplicity = 1;
};
// v = multiplicity * primitive; throws DomainError on zero input.
PrimitivePart primitive_part(LatticeVector v);

// Strict counterclockwise order of directions by angle in [0, 2pi), starting
// at the positive x-axis. Exact integer comparison; colinear same-direction
// vectors compare equal. Zero vectors are rejected.
bool angle_less(LatticeVector v, LatticeVector w);
bool same_ray(LatticeVector v, LatticeVector w);

/// 2x2 integer matrix acting on column vectors.
struct IntMatrix2 {
    std::int64_t m00 = 1, m01 = 0;
    std::int64_t m10 = 0, m11 = 1;

    friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;

    static IntMatrix2 identity() { return {}; }
    static IntMatrix2 from_columns(LatticeVector c0, LatticeVector c1) { return {c0.a, c1.a, c0.b, c1.b}; }

    std::int64_t det() const { return m00 * m11 - m01 * m10; }
    LatticeVector apply(LatticeVector v) const { return {m00 * v.a + m01 * v.b, m10 * v.a + m11 * v.b}; }
    IntMatrix2 operator*(const IntMatrix2& o) const;
    std::string str() const; // "[[m00,m01],[m10,m11]]"
};

// Parses "a,b"; throws ParseError.
LatticeVector parse_vector(std::string_view text);
// Parses "a,b;c,d;..." (at least one vector).
std::vector<LatticeVector> parse_vector_list(std::string_view text);
std::string format_vector_list(const std::vector<LatticeVector>& vs);

std::ostream& operator<<(std::ostream& os, LatticeVector v);

} // namespace sesqui

#endif
