#ifndef SESQUI_SCATTERING_MONODROMY_HPP
#define SESQUI_SCATTERING_MONODROMY_HPP

#include <map>
#include <utility>
#include <vector>

#include "sesqui/scattering/diagram.hpp"

namespace sesqui::scattering {

/// Wall-crossing automorphism z^m -> label^{<m, n>} z^m with n = rot90(direction).
///
/// The normal ignores in/out orientation. Powers of the label are cached, so
/// reuse one instance when applying the same wall to many series.
class WallAutomorphism {
public:
    explicit WallAutomorphism(const Wall& wall);

    TruncatedSeries apply(const TruncatedSeries& f) const;
    const LatticeVector& normal() const { return normal_; }

private:
    const TruncatedSeries& label_power(std::int64_t e) const;

    const Wall* wall_;
    LatticeVector normal_;
    mutable std::map<std::int64_t, TruncatedSeries> powers_;
};

TruncatedSeries wall_automorphism_apply(const Wall& wall, const TruncatedSeries& f);

// Walls in crossing order: by angle of direction in [0, 2pi) starting at the
// positive x-axis; ties keep their relative order (they commute).
std::vector<const Wall*> crossing_order(const ScatteringDiagram& diagram);

// Mon(f) = Theta_last(... Theta_first(f)).
TruncatedSeries apply_monodromy(const ScatteringDiagram& diagram, const TruncatedSeries& f);

// (Mon(x), Mon(y)).
std::pair<TruncatedSeries, TruncatedSeries> total_monodromy(const ScatteringDiagram& diagram);

} // namespace sesqui::scattering

#endif
