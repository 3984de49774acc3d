#ifndef SESQUI_SCATTERING_COMPLETION_HPP
#define SESQUI_SCATTERING_COMPLETION_HPP

#include <cstddef>
#include <map>

#include "sesqui/scattering/diagram.hpp"

namespace sesqui::scattering {

/// Lowest-order obstruction to trivial monodromy.
///
/// If Mon = id mod t^k, then mod t^{k+1}
///   Mon(x)/x - 1 = t^k sum_w c_w (-w_2) z^w,  Mon(y)/y - 1 = t^k sum_w c_w w_1 z^w,
/// i.e. the defect is the derivation sum_w c_w t^k z^w <., rot90(w)>.
struct DefectReport {
    int order = 0;
    std::map<LatticeVector, Rational> terms; // w -> c_w, nonzero entries only

    bool empty() const { return terms.empty(); }
};

// Throws DomainError if Mon is not already trivial mod t^k, ConventionError if
// the x- and y-readouts disagree or a defect sits at w = 0.
DefectReport defect_at_order(const ScatteringDiagram& diagram, int k);

struct CompletionOptions {
    // Upper bound on the total number of stored label terms.
    std::size_t term_cap = 2'000'000;
};

/// Kontsevich-Soibelman completion up to the diagram's truncation order.
///
/// Order by order, every defect term (w, c_w) with w = j p (p primitive) is
/// cancelled by an outgoing wall on ray p with label 1 - j c_w t^k z^w. The
/// result is canonicalized and has trivial total monodromy mod t^K.
ScatteringDiagram ks_complete(const ScatteringDiagram& diagram, const CompletionOptions& options = {});

// True iff Mon = id mod t^K.
bool has_trivial_monodromy(const ScatteringDiagram& diagram);

} // namespace sesqui::scattering

#endif
