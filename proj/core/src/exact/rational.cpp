#include "sesqui/exact/rational.hpp"

#include <ostream>

#include "sesqui/exact/errors.hpp"

namespace sesqui {

namespace {

BigInt to_big(std::int64_t v) {
    // mpz_class has no int64 constructor on every platform; go through strings
    // only when long is narrower than 64 bits.
    if constexpr (sizeof(long) >= sizeof(std::int64_t)) {
        return BigInt(static_cast<long>(v));
    } else {
        return BigInt(std::to_string(v));
    }
}

BigInt parse_integer(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty integer");
    }
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) {
        throw ParseError("malformed integer: " + std::string(text));
    }
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9') {
            throw ParseError("malformed integer: " + std::string(text));
        }
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return BigInt(digits, 10);
}

} // namespace

Rational::Rational(std::int64_t value) : value_(to_big(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(to_big(num), to_big(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(const BigInt& value) : value_(value) {}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    BigInt num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
        throw ParseError("denominator must be an unsigned integer: " + std::string(text));
    }
    BigInt den = parse_integer(den_text);
    if (den == 0) {
        throw ParseError("zero denominator: " + std::string(text));
    }
    return Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer()) {
        return value_.get_num().get_str();
    }
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rational::fraction_str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) {
        throw DomainError("not an integer: " + str());
    }
    const BigInt& n = value_.get_num();
    if (!n.fits_slong_p() || sizeof(long) < sizeof(std::int64_t)) {
        // Fall back to string parsing when long is 32-bit.
        try {
            return std::stoll(n.get_str());
        } catch (const std::out_of_range&) {
            throw DomainError("integer out of 64-bit range: " + n.get_str());
        }
    }
    return n.get_si();
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw DomainError("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational abs(const Rational& x) {
    return x.sign() < 0 ? -x : x;
}

Rational inverse(const Rational& x) {
    if (x.is_zero()) {
        throw DomainError("inverse of zero");
    }
    return Rational(x.den(), x.num());
}

Rational pow(const Rational& x, int exponent) {
    Rational base = exponent < 0 ? inverse(x) : x;
    unsigned e = exponent < 0 ? static_cast<unsigned>(-static_cast<long>(exponent))
                              : static_cast<unsigned>(exponent);
    Rational result(1);
    while (e != 0) {
        if (e & 1U) result *= base;
        base *= base;
        e >>= 1U;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
    return os << x.str();
}

} // namespace sesqui
