#ifndef SESQUI_EXACT_RATIONAL_HPP
#define SESQUI_EXACT_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sesqui {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with positive denominator.
///
/// Thin value wrapper over GMP's mpq_class: every constructor canonicalizes,
/// so equality is structural and the invariant never needs re-checking.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value); // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const BigInt& value);

    static Rational parse(std::string_view text); // "p/q" or "p"

    BigInt num() const { return value_.get_num(); }
    BigInt den() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    // Compact form: "p" for integers, "p/q" otherwise.
    std::string str() const;
    // Always "p/q", used at the CLI boundary.
    std::string fraction_str() const;

    // Integer value; throws DomainError if not an integer or out of range.
    std::int64_t to_int64() const;
    // Nearest double, for plotting only.
    double to_double() const { return value_.get_d(); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    const mpq_class& raw() const { return value_; }

private:
    mpq_class value_{0};
};

Rational abs(const Rational& x);
Rational inverse(const Rational& x); // throws DomainError on zero
Rational pow(const Rational& x, int exponent);

std::ostream& operator<<(std::ostream& os, const Rational& x);

} // namespace sesqui

#endif
