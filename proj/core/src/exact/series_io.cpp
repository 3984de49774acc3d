#include <charconv>
#include <vector>

#include "sesqui/exact/errors.hpp"
#include "sesqui/exact/series.hpp"
#include "sesqui/exact/series_json.hpp"

namespace sesqui {

namespace {

std::string power_factor(char var, std::int64_t e) {
    std::string s(1, var);
    if (e != 1) s += "^" + std::to_string(e);
    return s;
}

std::string term_body(const Monomial& m, const Rational& abs_coeff) {
    std::vector<std::string> factors;
    if (m.t_degree != 0) factors.push_back(power_factor('t', m.t_degree));
    if (m.z.a != 0) factors.push_back(power_factor('x', m.z.a));
    if (m.z.b != 0) factors.push_back(power_factor('y', m.z.b));
    if (factors.empty()) return abs_coeff.str();
    std::string out = abs_coeff == Rational(1) ? std::string() : abs_coeff.str() + "*";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += "*";
        out += factors[i];
    }
    return out;
}

std::int64_t parse_exponent(std::string_view text, std::string_view term) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("bad exponent in term '" + std::string(term) + "'");
    }
    return value;
}

void parse_term(std::string_view term, bool negative, TruncatedSeries& out) {
    if (term.empty()) throw ParseError("empty term");
    Rational coeff(1);
    Monomial m;
    bool seen_t = false, seen_x = false, seen_y = false;
    std::size_t start = 0;
    bool first = true;
    while (start <= term.size()) {
        auto star = term.find('*', start);
        std::string_view factor = term.substr(start, star == std::string_view::npos ? star : star - start);
        if (factor.empty()) throw ParseError("empty factor in term '" + std::string(term) + "'");
        if (first && (factor[0] >= '0' && factor[0] <= '9')) {
            coeff = Rational::parse(factor);
        } else {
            char var = factor[0];
            std::int64_t e = 1;
            if (factor.size() > 1) {
                if (factor[1] != '^') throw ParseError("bad factor '" + std::string(factor) + "'");
                e = parse_exponent(factor.substr(2), term);
            }
            bool* seen = var == 't' ? &seen_t : var == 'x' ? &seen_x : var == 'y' ? &seen_y : nullptr;
            if (seen == nullptr) throw ParseError("unknown variable in '" + std::string(factor) + "'");
            if (*seen) throw ParseError("repeated variable in term '" + std::string(term) + "'");
            *seen = true;
            if (var == 't') {
                if (e < 0) throw ParseError("negative t exponent in '" + std::string(term) + "'");
                m.t_degree = static_cast<int>(e);
            } else if (var == 'x') {
                m.z.a = e;
            } else {
                m.z.b = e;
            }
        }
        first = false;
        if (star == std::string_view::npos) break;
        start = star + 1;
    }
    out.add_term(m, negative ? -coeff : coeff);
}

} // namespace

std::string to_text(const TruncatedSeries& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        bool neg = c.sign() < 0;
        std::string body = term_body(m, abs(c));
        if (first) {
            out += neg ? "-" + body : body;
        } else {
            out += neg ? " - " : " + ";
            out += body;
        }
        first = false;
    }
    return out;
}

TruncatedSeries parse_series(std::string_view text, int order) {
    TruncatedSeries out(order);
    if (text == "0") return out;
    bool negative = false;
    if (!text.empty() && text[0] == '-') {
        negative = true;
        text.remove_prefix(1);
    }
    while (true) {
        auto plus = text.find(" + ");
        auto minus = text.find(" - ");
        auto sep = std::min(plus, minus);
        parse_term(text.substr(0, sep), negative, out);
        if (sep == std::string_view::npos) break;
        negative = (sep == minus);
        text.remove_prefix(sep + 3);
    }
    return out;
}

nlohmann::ordered_json bigint_to_json(const BigInt& v) {
    if (v.fits_slong_p() && sizeof(long) >= sizeof(std::int64_t)) {
        return static_cast<std::int64_t>(v.get_si());
    }
    return v.get_str();
}

BigInt bigint_from_json(const nlohmann::ordered_json& j) {
    if (j.is_number_integer()) {
        return BigInt(std::to_string(j.get<std::int64_t>()));
    }
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>()).num();
    }
    throw ParseError("expected integer (number or decimal string)");
}

nlohmann::ordered_json rational_to_json(const Rational& r) {
    return r.fraction_str();
}

Rational rational_from_json(const nlohmann::ordered_json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw ParseError("expected rational \"p/q\"");
}

nlohmann::ordered_json series_to_json(const TruncatedSeries& f) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [m, c] : f.terms()) {
        nlohmann::ordered_json rec;
        rec["a"] = m.z.a;
        rec["b"] = m.z.b;
        rec["k"] = m.t_degree;
        rec["num"] = bigint_to_json(c.num());
        rec["den"] = bigint_to_json(c.den());
        arr.push_back(std::move(rec));
    }
    return arr;
}

TruncatedSeries series_from_json(const nlohmann::ordered_json& terms, int order) {
    if (!terms.is_array()) throw ParseError("series must be a JSON array of term records");
    TruncatedSeries out(order);
    for (const auto& rec : terms) {
        try {
            Monomial m{{rec.at("a").get<std::int64_t>(), rec.at("b").get<std::int64_t>()}, rec.at("k").get<int>()};
            if (m.t_degree >= order) {
                throw ParseError("term t-degree " + std::to_string(m.t_degree) + " beyond truncation order");
            }
            out.add_term(m, Rational(bigint_from_json(rec.at("num")), bigint_from_json(rec.at("den"))));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad term record: ") + e.what());
        }
    }
    return out;
}

} // namespace sesqui
