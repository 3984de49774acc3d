#ifndef SESQUI_TORIC_TORIC_MODEL_HPP
#define SESQUI_TORIC_TORIC_MODEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "sesqui/exact/lattice.hpp"

namespace sesqui::toric {

/// Edge-blowup data m_1..m_l of a toric model, optionally with the fan rays
/// of the underlying toric surface.
struct ToricModel {
    std::vector<LatticeVector> blowup_vectors;
    std::vector<LatticeVector> fan_rays;

    friend bool operator==(const ToricModel&, const ToricModel&) = default;

    std::size_t size() const { return blowup_vectors.size(); }
    std::string str() const { return format_vector_list(blowup_vectors); }
};

// Checks l >= 1 and primitivity of every vector; throws DomainError.
ToricModel make_model(std::vector<LatticeVector> blowup_vectors, std::vector<LatticeVector> fan_rays = {});

// w + max(w ^ v, 0) v
LatticeVector half_shear(LatticeVector v, LatticeVector w);

// Elementary transformation centered at fan[i - 1] (1-based). Requires the
// opposite ray to be present.
std::vector<LatticeVector> elementary_transform_fan(const std::vector<LatticeVector>& fan, std::size_t i);

// Mutation at index i (1-based):
//   m'_i = -m_i,  m'_s = m_s + max(m_s ^ m_i, 0) m_i  (s != i).
// Fan rays, when present, follow the elementary transformation along m_i; the
// opposite-ray condition is not enforced there.
ToricModel mutate(const ToricModel& model, std::size_t i);
ToricModel mutate_word(const ToricModel& model, const std::vector<std::size_t>& word);

// A in GL(2,Z) with A m_s(a) = m_s(b) for all s, or for some reordering of
// b's vectors when ordered is false.
std::optional<IntMatrix2> gl2z_equivalent(const ToricModel& a, const ToricModel& b, bool ordered);

struct OrbitNode {
    ToricModel model;
    std::vector<std::size_t> word; // mutation indices, applied left to right
    int depth = 0;
};

struct OrbitEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t index = 0;
};

struct MutationOrbit {
    std::vector<OrbitNode> nodes; // nodes[0] is the seed
    std::vector<OrbitEdge> edges;
};

// Breadth-first exploration up to the given depth, one node per unordered
// GL(2,Z) class.
MutationOrbit mutation_orbit(const ToricModel& model, int depth);

// Index of the orbit node equivalent to the model, if any.
std::optional<std::size_t> find_in_orbit(const MutationOrbit& orbit, const ToricModel& model);

} // namespace sesqui::toric

#endif
