#ifndef SESQUI_SCATTERING_DIAGRAM_IO_HPP
#define SESQUI_SCATTERING_DIAGRAM_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "sesqui/scattering/diagram.hpp"
#include "sesqui/scattering/diagram_ops.hpp"

namespace sesqui::scattering {

// {"K": int, "walls": [{"dir": [a,b], "orientation": "in"|"out", "label": [terms]}]}
// with walls in the diagram's stored order (canonical order after canonicalize).
nlohmann::ordered_json diagram_to_json(const ScatteringDiagram& diagram);
ScatteringDiagram diagram_from_json(const nlohmann::ordered_json& j);

// [{"dir": [a,b], "t_order": k, "monomial": [a,b], "coefficient": "p/q"}]
nlohmann::ordered_json spectrum_to_json(const std::vector<RaySpectrumEntry>& spectrum);

// Rays drawn to unit length, outgoing solid and incoming dashed, each tagged
// with its lowest-order label term. Lines of `provenance` become an XML comment.
std::string diagram_to_svg(const ScatteringDiagram& diagram, const std::vector<std::string>& provenance = {});

// Plain-text listing: one wall per line, "dir orientation label".
std::string diagram_to_text(const ScatteringDiagram& diagram);

} // namespace sesqui::scattering

#endif
