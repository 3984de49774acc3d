#include "sesqui/scattering/diagram_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "sesqui/exact/errors.hpp"
#include "sesqui/exact/series_json.hpp"

namespace sesqui::scattering {

using nlohmann::ordered_json;

ordered_json diagram_to_json(const ScatteringDiagram& diagram) {
    ordered_json walls = ordered_json::array();
    for (const auto& w : diagram.walls()) {
        ordered_json jw;
        jw["dir"] = {w.direction.a, w.direction.b};
        jw["orientation"] = std::string(to_string(w.orientation));
        jw["label"] = series_to_json(w.label);
        walls.push_back(std::move(jw));
    }
    ordered_json j;
    j["K"] = diagram.order();
    j["walls"] = std::move(walls);
    return j;
}

ScatteringDiagram diagram_from_json(const ordered_json& j) {
    try {
        const int order = j.at("K").get<int>();
        if (order < 1) throw ParseError("diagram JSON: K must be positive");
        ScatteringDiagram out(order);
        for (const auto& jw : j.at("walls")) {
            const auto& dir = jw.at("dir");
            if (!dir.is_array() || dir.size() != 2) throw ParseError("diagram JSON: dir must be [a,b]");
            LatticeVector d{dir[0].get<std::int64_t>(), dir[1].get<std::int64_t>()};
            const auto o = jw.at("orientation").get<std::string>();
            Orientation orient;
            if (o == "in") {
                orient = Orientation::Incoming;
            } else if (o == "out") {
                orient = Orientation::Outgoing;
            } else {
                throw ParseError("diagram JSON: orientation must be \"in\" or \"out\"");
            }
            out.add_wall(make_wall(d, orient, series_from_json(jw.at("label"), order)));
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("diagram JSON: ") + e.what());
    }
}

ordered_json spectrum_to_json(const std::vector<RaySpectrumEntry>& spectrum) {
    ordered_json out = ordered_json::array();
    for (const auto& e : spectrum) {
        ordered_json j;
        j["dir"] = {e.direction.a, e.direction.b};
        j["t_order"] = e.t_order;
        j["monomial"] = {e.monomial.a, e.monomial.b};
        j["coefficient"] = rational_to_json(e.coefficient);
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
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

std::string lowest_term_text(const Wall& w, int order) {
    TruncatedSeries rest = w.label - TruncatedSeries::one(order);
    if (rest.is_zero()) return "1";
    TruncatedSeries lead(order);
    const auto& [m, c] = *rest.terms().begin();
    lead.add_term(m, c);
    return to_text(lead);
}

} // namespace

std::string diagram_to_svg(const ScatteringDiagram& diagram, const std::vector<std::string>& provenance) {
    constexpr double size = 480.0, center = size / 2, radius = 180.0;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    os << "  <metadata>\n";
    for (const auto& line : provenance) os << "    " << xml_escape(line) << "\n";
    os << "    K = " << diagram.order() << ", walls = " << diagram.size() << "\n";
    os << "  </metadata>\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "  <g font-family=\"monospace\" font-size=\"9\">\n";
    for (const auto& w : diagram.walls()) {
        const double len = std::hypot(double(w.direction.a), double(w.direction.b));
        const double ux = double(w.direction.a) / len, uy = double(w.direction.b) / len;
        const double x = center + radius * ux, y = center - radius * uy;
        const bool out = w.orientation == Orientation::Outgoing;
        os << "    <line x1=\"" << fixed(center) << "\" y1=\"" << fixed(center) << "\" x2=\"" << fixed(x)
           << "\" y2=\"" << fixed(y) << "\" stroke=\"" << (out ? "black" : "steelblue") << "\" stroke-width=\"1\""
           << (out ? "" : " stroke-dasharray=\"4 3\"") << "/>\n";
        const double lx = center + (radius + 8) * ux, ly = center - (radius + 8) * uy;
        os << "    <text x=\"" << fixed(lx) << "\" y=\"" << fixed(ly) << "\" text-anchor=\""
           << (ux > 0.1 ? "start" : ux < -0.1 ? "end" : "middle") << "\">" << xml_escape(w.direction.str()) << ": "
           << xml_escape(lowest_term_text(w, diagram.order())) << "</text>\n";
    }
    os << "  </g>\n";
    os << "  <circle cx=\"" << fixed(center) << "\" cy=\"" << fixed(center) << "\" r=\"2\" fill=\"black\"/>\n";
    os << "</svg>\n";
    return os.str();
}

std::string diagram_to_text(const ScatteringDiagram& diagram) {
    std::ostringstream os;
    os << "K = " << diagram.order() << ", " << diagram.size() << " walls\n";
    for (const auto& w : diagram.walls()) {
        os << "(" << w.direction.str() << ") " << to_string(w.orientation) << "  " << to_text(w.label) << "\n";
    }
    return os.str();
}

} // namespace sesqui::scattering
