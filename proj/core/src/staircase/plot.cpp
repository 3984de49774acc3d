#include "sesqui/staircase/plot.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "sesqui/curves/classify.hpp"
#include "sesqui/exact/errors.hpp"
#include "sesqui/staircase/fibonacci.hpp"

namespace sesqui::staircase {

using nlohmann::ordered_json;

std::vector<SampleRow> sample_grid(const Rational& lo, const Rational& hi, const Rational& step) {
    if (lo < Rational(1)) throw DomainError("sample_grid: lower end must be >= 1");
    if (hi < lo) throw DomainError("sample_grid: empty range");
    if (step.sign() <= 0) throw DomainError("sample_grid: step must be positive");
    if ((hi - lo) / step > Rational(100000)) throw DomainError("sample_grid: more than 100000 samples");
    std::vector<SampleRow> rows;
    for (Rational a = lo; a <= hi; a += step) {
        rows.push_back({a, mcduff_schlenk_value(a), stabilized_value(a), hind_capacity(a)});
    }
    return rows;
}

std::string samples_to_csv(const std::vector<SampleRow>& rows) {
    std::ostringstream os;
    os << "a,unstabilized,stabilized,hind,volume\n";
    for (const auto& r : rows) {
        os << r.a.fraction_str() << "," << r.unstabilized.str() << "," << r.stabilized.fraction_str() << ","
           << r.hind.fraction_str() << "," << StaircaseValue::sqrt(r.a).str() << "\n";
    }
    return os.str();
}

ordered_json samples_to_json(const std::vector<SampleRow>& rows) {
    ordered_json out = ordered_json::array();
    for (const auto& r : rows) {
        ordered_json j;
        j["a"] = r.a.fraction_str();
        j["unstabilized"] = r.unstabilized.str();
        j["stabilized"] = r.stabilized.fraction_str();
        j["hind"] = r.hind.fraction_str();
        j["volume"] = StaircaseValue::sqrt(r.a).str();
        out.push_back(std::move(j));
    }
    return out;
}

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

std::string staircase_svg(const Rational& lo, const Rational& hi, const std::vector<std::string>& provenance) {
    if (lo < Rational(1) || hi <= lo) throw DomainError("staircase_svg: need 1 <= lo < hi");
    constexpr double width = 640, height = 400, margin = 40;
    const double x0 = lo.to_double(), x1 = hi.to_double();
    const double y0 = 1.0, y1 = std::max(3.0, std::sqrt(x1)) + 0.1;
    auto sx = [&](double x) { return margin + (x - x0) / (x1 - x0) * (width - 2 * margin); };
    auto sy = [&](double y) { return height - margin - (y - y0) / (y1 - y0) * (height - 2 * margin); };

    constexpr int samples = 800;
    auto polyline = [&](auto&& f, const char* colour, const char* extra) {
        std::ostringstream os;
        std::ostringstream pts;
        bool open = false;
        auto flush = [&] {
            if (open) os << "  <polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.2\"" << extra
                         << " points=\"" << pts.str() << "\"/>\n";
            pts.str("");
            open = false;
        };
        for (int i = 0; i <= samples; ++i) {
            Rational a = lo + (hi - lo) * Rational(i, samples);
            std::optional<double> y = f(a);
            if (!y) {
                flush();
                continue;
            }
            pts << (open ? " " : "") << num(sx(a.to_double())) << "," << num(sy(*y));
            open = true;
        }
        flush();
        return os.str();
    };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    os << "  <metadata>\n";
    for (const auto& line : provenance) os << "    " << xml_escape(line) << "\n";
    os << "    range [" << lo.fraction_str() << ", " << hi.fraction_str() << "]\n";
    os << "  </metadata>\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "  <line x1=\"" << margin << "\" y1=\"" << num(sy(y0)) << "\" x2=\"" << width - margin << "\" y2=\""
       << num(sy(y0)) << "\" stroke=\"black\"/>\n";
    os << "  <line x1=\"" << margin << "\" y1=\"" << num(sy(y0)) << "\" x2=\"" << margin << "\" y2=\"" << num(sy(y1))
       << "\" stroke=\"black\"/>\n";
    os << polyline([](const Rational& a) -> std::optional<double> { return std::sqrt(a.to_double()); }, "gray",
                   " stroke-dasharray=\"3 3\"");
    os << polyline([](const Rational& a) -> std::optional<double> { return hind_capacity(a).to_double(); },
                   "firebrick", "");
    os << polyline(
        [](const Rational& a) -> std::optional<double> {
            auto v = mcduff_schlenk_value(a);
            if (v.kind == StaircaseValue::Kind::Unspecified) return std::nullopt;
            if (v.kind == StaircaseValue::Kind::Sqrt) return std::sqrt(v.value.to_double());
            return v.value.to_double();
        },
        "black", "");
    for (int k = -1; k <= 12; ++k) {
        Rational a = alpha(k);
        if (a < lo || a > hi) continue;
        os << "  <circle cx=\"" << num(sx(a.to_double())) << "\" cy=\"" << num(sy(beta(k).to_double()))
           << "\" r=\"2.5\" fill=\"royalblue\"><title>" << a.fraction_str() << ", " << beta(k).fraction_str()
           << "</title></circle>\n";
    }
    os << "  <text x=\"" << margin << "\" y=\"" << height - 12 << "\" font-family=\"monospace\" font-size=\"10\">a in ["
       << lo.fraction_str() << ", " << hi.fraction_str()
       << "]; black: staircase, red: 3a/(a+1), gray: sqrt(a)</text>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace sesqui::staircase
