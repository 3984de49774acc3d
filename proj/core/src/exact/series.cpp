#include "sesqui/exact/series.hpp"

#include "sesqui/exact/errors.hpp"

namespace sesqui {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    if (order < 1) {
        throw DomainError("truncation order must be positive, got " + std::to_string(order));
    }
}

TruncatedSeries TruncatedSeries::one(int order) {
    return constant(order, Rational(1));
}

TruncatedSeries TruncatedSeries::constant(int order, const Rational& c) {
    TruncatedSeries s(order);
    s.add_term({{0, 0}, 0}, c);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int order, const Rational& c, LatticeVector z, int t_degree) {
    if (t_degree < 0) {
        throw DomainError("negative t-degree");
    }
    TruncatedSeries s(order);
    s.add_term({z, t_degree}, c);
    return s;
}

TruncatedSeries TruncatedSeries::binomial(int order, const Rational& c, LatticeVector z, int t_degree) {
    TruncatedSeries s = one(order);
    s += monomial(order, c, z, t_degree);
    return s;
}

bool TruncatedSeries::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Monomial{{0, 0}, 0} &&
           terms_.begin()->second == Rational(1);
}

Rational TruncatedSeries::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool TruncatedSeries::is_unit() const {
    if (constant_term() != Rational(1)) return false;
    for (const auto& [m, c] : terms_) {
        if (m.t_degree == 0 && !m.z.is_zero()) return false;
    }
    return true;
}

bool TruncatedSeries::in_t_ideal() const {
    return terms_.empty() || terms_.begin()->first.t_degree >= 1;
}

void TruncatedSeries::add_term(const Monomial& m, const Rational& c) {
    if (m.t_degree < 0) {
        throw DomainError("negative t-degree");
    }
    if (m.t_degree >= order_ || c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TruncatedSeries TruncatedSeries::truncated(int new_order) const {
    if (new_order > order_) {
        throw TruncationMismatch("cannot raise truncation order from " + std::to_string(order_) + " to " +
                                 std::to_string(new_order));
    }
    TruncatedSeries out(new_order);
    for (const auto& [m, c] : terms_) {
        if (m.t_degree >= new_order) break;
        out.terms_.emplace_hint(out.terms_.end(), m, c);
    }
    return out;
}

TruncatedSeries TruncatedSeries::shifted(LatticeVector shift) const {
    TruncatedSeries out(order_);
    for (const auto& [m, c] : terms_) {
        out.terms_.emplace(Monomial{m.z + shift, m.t_degree}, c);
    }
    return out;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
    TruncatedSeries out(order_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : terms_) {
        out.terms_.emplace_hint(out.terms_.end(), m, v * c);
    }
    return out;
}

TruncatedSeries TruncatedSeries::homogeneous_part(int k) const {
    TruncatedSeries out(order_);
    for (const auto& [m, c] : terms_) {
        if (m.t_degree == k) out.terms_.emplace_hint(out.terms_.end(), m, c);
    }
    return out;
}

void TruncatedSeries::require_same_order(const TruncatedSeries& other, std::string_view op) const {
    if (order_ != other.order_) {
        throw TruncationMismatch(std::string(op) + ": truncation orders differ (" + std::to_string(order_) +
                                 " vs " + std::to_string(other.order_) + ")");
    }
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    require_same_order(rhs, "series_add");
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    require_same_order(rhs, "series_sub");
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
    f.require_same_order(g, "series_mul");
    TruncatedSeries out(f.order_);
    const int order = f.order_;
    mpq_class product;
    for (const auto& [mf, cf] : f.terms_) {
        if (mf.t_degree >= order) break;
        for (const auto& [mg, cg] : g.terms_) {
            int k = mf.t_degree + mg.t_degree;
            if (k >= order) break; // g is sorted by t-degree
            product = cf.raw() * cg.raw();
            Monomial key{mf.z + mg.z, k};
            auto [it, inserted] = out.terms_.try_emplace(key);
            if (inserted) {
                it->second = Rational(product.get_num(), product.get_den());
            } else {
                it->second += Rational(product.get_num(), product.get_den());
            }
        }
    }
    for (auto it = out.terms_.begin(); it != out.terms_.end();) {
        it = it->second.is_zero() ? out.terms_.erase(it) : std::next(it);
    }
    return out;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& rhs) {
    *this = *this * rhs;
    return *this;
}

TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g) {
    return f + g;
}

TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    return f * g;
}

TruncatedSeries series_inverse(const TruncatedSeries& f) {
    if (!f.is_unit()) {
        throw DomainError("series_inverse: not a unit (constant term must be 1, other terms in (t))");
    }
    TruncatedSeries neg_g = -(f - TruncatedSeries::one(f.order()));
    TruncatedSeries result = TruncatedSeries::one(f.order());
    TruncatedSeries power = result;
    while (true) {
        power *= neg_g;
        if (power.is_zero()) break;
        result += power;
    }
    return result;
}

TruncatedSeries series_pow(const TruncatedSeries& f, long n) {
    TruncatedSeries base = f;
    if (n < 0) {
        if (!f.is_unit()) {
            throw DomainError("series_pow: negative power of a non-unit");
        }
        base = series_inverse(f);
        n = -n;
    }
    TruncatedSeries result = TruncatedSeries::one(f.order());
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

TruncatedSeries series_log(const TruncatedSeries& f) {
    if (!f.is_unit()) {
        throw DomainError("series_log: argument must have constant term 1 and all other terms in (t)");
    }
    TruncatedSeries g = f - TruncatedSeries::one(f.order());
    TruncatedSeries result(f.order());
    TruncatedSeries power = TruncatedSeries::one(f.order());
    for (long j = 1;; ++j) {
        power *= g;
        if (power.is_zero()) break;
        Rational coeff(j % 2 == 1 ? 1 : -1, j);
        result += power.scaled(coeff);
    }
    return result;
}

TruncatedSeries series_exp(const TruncatedSeries& g) {
    if (!g.in_t_ideal()) {
        throw DomainError("series_exp: argument must lie in the ideal (t) (zero constant term)");
    }
    TruncatedSeries result = TruncatedSeries::one(g.order());
    TruncatedSeries term = result;
    for (long j = 1;; ++j) {
        term = (term * g).scaled(Rational(1, j));
        if (term.is_zero()) break;
        result += term;
    }
    return result;
}

} // namespace sesqui
