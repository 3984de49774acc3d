#ifndef SESQUI_TORIC_ORBIT_IO_HPP
#define SESQUI_TORIC_ORBIT_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "sesqui/toric/toric_model.hpp"

namespace sesqui::toric {

// {"nodes": [{"id", "vectors", "word", "depth"}], "edges": [{"from", "to", "index"}]}
nlohmann::ordered_json orbit_to_json(const MutationOrbit& orbit);
std::string orbit_to_dot(const MutationOrbit& orbit, const std::vector<std::string>& provenance = {});

nlohmann::ordered_json model_to_json(const ToricModel& model);

std::string format_word(const std::vector<std::size_t>& word); // "1,2,1"; "" for the empty word

} // namespace sesqui::toric

#endif
