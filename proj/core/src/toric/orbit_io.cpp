#include "sesqui/toric/orbit_io.hpp"

#include <sstream>

namespace sesqui::toric {

using nlohmann::ordered_json;

std::string format_word(const std::vector<std::size_t>& word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(word[i]);
    }
    return out;
}

ordered_json model_to_json(const ToricModel& model) {
    ordered_json j;
    ordered_json vs = ordered_json::array();
    for (auto v : model.blowup_vectors) vs.push_back({v.a, v.b});
    j["vectors"] = std::move(vs);
    if (!model.fan_rays.empty()) {
        ordered_json fan = ordered_json::array();
        for (auto v : model.fan_rays) fan.push_back({v.a, v.b});
        j["fan"] = std::move(fan);
    }
    return j;
}

ordered_json orbit_to_json(const MutationOrbit& orbit) {
    ordered_json nodes = ordered_json::array();
    for (std::size_t i = 0; i < orbit.nodes.size(); ++i) {
        const auto& n = orbit.nodes[i];
        ordered_json j;
        j["id"] = i;
        j["vectors"] = n.model.str();
        j["word"] = n.word;
        j["depth"] = n.depth;
        nodes.push_back(std::move(j));
    }
    ordered_json edges = ordered_json::array();
    for (const auto& e : orbit.edges) {
        edges.push_back({{"from", e.from}, {"to", e.to}, {"index", e.index}});
    }
    return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

std::string orbit_to_dot(const MutationOrbit& orbit, const std::vector<std::string>& provenance) {
    std::ostringstream os;
    for (const auto& line : provenance) os << "// " << line << "\n";
    os << "digraph mutation_orbit {\n";
    os << "  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < orbit.nodes.size(); ++i) {
        const auto& n = orbit.nodes[i];
        os << "  n" << i << " [label=\"" << n.model.str();
        if (!n.word.empty()) os << "\\nmut " << format_word(n.word);
        os << "\"];\n";
    }
    for (const auto& e : orbit.edges) {
        os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.index << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace sesqui::toric
