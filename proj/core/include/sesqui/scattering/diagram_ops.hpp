#ifndef SESQUI_SCATTERING_DIAGRAM_OPS_HPP
#define SESQUI_SCATTERING_DIAGRAM_OPS_HPP

#include <optional>
#include <vector>

#include "sesqui/scattering/diagram.hpp"

namespace sesqui::scattering {

// One wall per (direction, orientation) carrying the product of the merged
// labels; trivial walls dropped; walls sorted by angle, outgoing before
// incoming on a shared ray.
ScatteringDiagram canonicalize(const ScatteringDiagram& diagram);

/// Linear t-grading t_degree = ga * a + gb * b satisfied by every label term.
struct Grading {
    Rational ga;
    Rational gb;

    Rational degree_of(LatticeVector z) const { return ga * Rational(z.a) + gb * Rational(z.b); }
};

// Solves for a grading from the diagram's own terms and checks it on all of
// them; empty when the terms admit no common linear grading.
std::optional<Grading> infer_grading(const ScatteringDiagram& diagram);

// Pushes rays and label exponents forward along e1 -> m1, e2 -> m2. Ray
// directions are re-normalized to primitive generators; coefficients are
// transported unchanged (they agree with a native computation only up to a
// combinatorial factor when |m1 ^ m2| > 1).
ScatteringDiagram change_of_lattice(const ScatteringDiagram& diagram, LatticeVector m1, LatticeVector m2);

// Primitive s with (m1 m2) s a positive multiple of r, i.e. the standard-lattice
// ray that change_of_lattice sends onto R_{>=0} r.
LatticeVector pull_back_direction(LatticeVector r, LatticeVector m1, LatticeVector m2);

// Coefficient of z^{kappa * direction} in log(label) of the outgoing wall on
// that ray, summed over t-degrees; 0 if the ray carries no outgoing wall.
// Throws TruncationTooLow when the grading puts that monomial at t^K or beyond.
Rational log_coefficient(const ScatteringDiagram& diagram, LatticeVector direction, int kappa);

struct RaySpectrumEntry {
    LatticeVector direction;
    int t_order = 0;          // lowest t-degree of label - 1
    Rational coefficient;     // its coefficient
    LatticeVector monomial;   // its z-exponent
};

// Outgoing rays in angular order with their lowest-order label term.
std::vector<RaySpectrumEntry> ray_spectrum(const ScatteringDiagram& diagram);

// Outgoing wall label on a ray, or nullopt.
std::optional<TruncatedSeries> outgoing_label(const ScatteringDiagram& diagram, LatticeVector direction);

} // namespace sesqui::scattering

#endif
