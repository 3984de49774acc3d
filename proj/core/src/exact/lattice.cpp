#include "sesqui/exact/lattice.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

#include "sesqui/exact/errors.hpp"

namespace sesqui {

std::string LatticeVector::str() const {
    return std::to_string(a) + "," + std::to_string(b);
}

std::int64_t wedge(LatticeVector v, LatticeVector w) {
    return v.a * w.b - v.b * w.a;
}

std::int64_t dot(LatticeVector v, LatticeVector w) {
    return v.a * w.a + v.b * w.b;
}

LatticeVector rot90(LatticeVector v) {
    return {-v.b, v.a};
}

bool is_primitive(LatticeVector v) {
    return !v.is_zero() && std::gcd(v.a, v.b) == 1;
}

PrimitivePart primitive_part(LatticeVector v) {
    if (v.is_zero()) {
        throw DomainError("primitive part of the zero vector");
    }
    std::int64_t g = std::gcd(v.a, v.b);
    return {{v.a / g, v.b / g}, g};
}

namespace {

// 0 for angles in [0, pi), 1 for [pi, 2pi).
int half_plane(LatticeVector v) {
    return (v.b > 0 || (v.b == 0 && v.a > 0)) ? 0 : 1;
}

} // namespace

bool angle_less(LatticeVector v, LatticeVector w) {
    if (v.is_zero() || w.is_zero()) {
        throw DomainError("angle of the zero vector");
    }
    int hv = half_plane(v);
    int hw = half_plane(w);
    if (hv != hw) {
        return hv < hw;
    }
    return wedge(v, w) > 0;
}

bool same_ray(LatticeVector v, LatticeVector w) {
    return wedge(v, w) == 0 && dot(v, w) > 0;
}

IntMatrix2 IntMatrix2::operator*(const IntMatrix2& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
            m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
}

std::string IntMatrix2::str() const {
    return "[[" + std::to_string(m00) + "," + std::to_string(m01) + "],[" + std::to_string(m10) + "," +
           std::to_string(m11) + "]]";
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view context) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError("malformed lattice vector: '" + std::string(context) + "'");
    }
    return value;
}

} // namespace

LatticeVector parse_vector(std::string_view text) {
    auto comma = text.find(',');
    if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
        throw ParseError("lattice vector must look like 'a,b': '" + std::string(text) + "'");
    }
    return {parse_int(text.substr(0, comma), text), parse_int(text.substr(comma + 1), text)};
}

std::vector<LatticeVector> parse_vector_list(std::string_view text) {
    std::vector<LatticeVector> out;
    std::size_t start = 0;
    while (true) {
        auto semi = text.find(';', start);
        out.push_back(parse_vector(text.substr(start, semi == std::string_view::npos ? semi : semi - start)));
        if (semi == std::string_view::npos) break;
        start = semi + 1;
    }
    return out;
}

std::string format_vector_list(const std::vector<LatticeVector>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ';';
        out += vs[i].str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, LatticeVector v) {
    return os << '(' << v.a << ',' << v.b << ')';
}

} // namespace sesqui
