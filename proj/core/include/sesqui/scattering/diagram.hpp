#ifndef SESQUI_SCATTERING_DIAGRAM_HPP
#define SESQUI_SCATTERING_DIAGRAM_HPP

#include <span>
#include <string_view>
#include <vector>

#include "sesqui/exact/lattice.hpp"
#include "sesqui/exact/series.hpp"

namespace sesqui::scattering {

enum class Orientation { Incoming, Outgoing };

std::string_view to_string(Orientation o); // "in" / "out"

/// Origin-anchored ray R_{>=0} * direction with a series label.
///
/// The label lives in Q[z^m][[t]] with m = direction for outgoing walls and
/// m = -direction for incoming ones, and is congruent to 1 modulo z^m t.
struct Wall {
    LatticeVector direction;
    Orientation orientation = Orientation::Outgoing;
    TruncatedSeries label;

    // Exponent generator m of the label's monomials.
    LatticeVector label_generator() const {
        return orientation == Orientation::Outgoing ? direction : -direction;
    }

    friend bool operator==(const Wall&, const Wall&) = default;
};

// Builds a wall after checking every invariant; throws DomainError.
Wall make_wall(LatticeVector direction, Orientation orientation, TruncatedSeries label);
void validate_wall(const Wall& wall);

/// Finite multiset of walls sharing one truncation order.
class ScatteringDiagram {
public:
    explicit ScatteringDiagram(int order) : order_(order) {}
    ScatteringDiagram(int order, std::vector<Wall> walls);

    int order() const { return order_; }
    const std::vector<Wall>& walls() const { return walls_; }
    std::size_t size() const { return walls_.size(); }
    bool empty() const { return walls_.empty(); }

    void add_wall(Wall wall);
    // Total number of stored label terms.
    std::size_t term_count() const;

    friend bool operator==(const ScatteringDiagram&, const ScatteringDiagram&) = default;

private:
    int order_;
    std::vector<Wall> walls_;
};

/// Incoming walls (R_{<=0} m_s, (1 + t z^{m_s})^{k_s}) for s = 1..l.
ScatteringDiagram incoming_diagram(int order, std::span<const LatticeVector> generators,
                                   std::span<const int> exponents);

} // namespace sesqui::scattering

#endif
