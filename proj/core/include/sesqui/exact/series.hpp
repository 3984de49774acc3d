#ifndef SESQUI_EXACT_SERIES_HPP
#define SESQUI_EXACT_SERIES_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "sesqui/exact/lattice.hpp"
#include "sesqui/exact/rational.hpp"

namespace sesqui {

/// Monomial z^m t^k of the ring Q[x^{+-1}, y^{+-1}][[t]].
struct Monomial {
    LatticeVector z;
    int t_degree = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Canonical term order: t-degree ascending, then z-exponent lexicographic.
struct MonomialOrder {
    bool operator()(const Monomial& lhs, const Monomial& rhs) const {
        if (lhs.t_degree != rhs.t_degree) return lhs.t_degree < rhs.t_degree;
        return lhs.z < rhs.z;
    }
};

/// Element of Q[x^{+-1}, y^{+-1}][[t]] modulo t^K.
///
/// Terms are stored sparsely in canonical order with no zero coefficients and
/// every t-degree below the truncation order K, so two series are equal iff
/// their term maps are equal. Binary operations require equal K and throw
/// TruncationMismatch otherwise; nothing is silently re-truncated.
class TruncatedSeries {
public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    explicit TruncatedSeries(int order);

    static TruncatedSeries zero(int order) { return TruncatedSeries(order); }
    static TruncatedSeries one(int order);
    static TruncatedSeries constant(int order, const Rational& c);
    static TruncatedSeries monomial(int order, const Rational& c, LatticeVector z, int t_degree);
    // 1 + c * t^k * z^m
    static TruncatedSeries binomial(int order, const Rational& c, LatticeVector z, int t_degree);

    int order() const { return order_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;

    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const { return coefficient({{0, 0}, 0}); }
    // Constant term 1 and every other term has t-degree >= 1.
    bool is_unit() const;
    // Every term has t-degree >= 1 (the ideal (t)).
    bool in_t_ideal() const;

    // Adds c * m in place; drops the term if it cancels or lies beyond K.
    void add_term(const Monomial& m, const Rational& c);

    TruncatedSeries truncated(int new_order) const;
    // Multiplication by the monomial z^shift.
    TruncatedSeries shifted(LatticeVector shift) const;
    TruncatedSeries scaled(const Rational& c) const;
    // Terms whose t-degree equals k.
    TruncatedSeries homogeneous_part(int k) const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const TruncatedSeries& rhs);
    friend TruncatedSeries operator+(TruncatedSeries f, const TruncatedSeries& g) { return f += g; }
    friend TruncatedSeries operator-(TruncatedSeries f, const TruncatedSeries& g) { return f -= g; }
    friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);
    TruncatedSeries operator-() const { return scaled(Rational(-1)); }

    friend bool operator==(const TruncatedSeries& f, const TruncatedSeries& g) {
        return f.order_ == g.order_ && f.terms_ == g.terms_;
    }

private:
    void require_same_order(const TruncatedSeries& other, std::string_view op) const;

    int order_;
    Terms terms_;
};

TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g);
// f^n; negative n requires f to be a unit and uses the geometric series.
TruncatedSeries series_pow(const TruncatedSeries& f, long n);
// sum_{j>=1} (-1)^{j+1} g^j / j for f = 1 + g, f a unit.
TruncatedSeries series_log(const TruncatedSeries& f);
// sum_{j>=0} g^j / j! for g in the ideal (t).
TruncatedSeries series_exp(const TruncatedSeries& g);
// (1 + g)^{-1} for g in the ideal (t).
TruncatedSeries series_inverse(const TruncatedSeries& f);

// Canonical text: terms in canonical order joined by " + " / " - ",
// factors joined by "*", e.g. "1 + 2*t*x + t^2*x^2 - 1/2*t^4*x^2*y^-1".
std::string to_text(const TruncatedSeries& f);
TruncatedSeries parse_series(std::string_view text, int order);

} // namespace sesqui

#endif
