#include "sesqui/exact/errors.hpp"
#include "sesqui/scattering/diagram.hpp"

namespace sesqui::scattering {

std::string_view to_string(Orientation o) {
    return o == Orientation::Incoming ? "in" : "out";
}

void validate_wall(const Wall& wall) {
    if (!is_primitive(wall.direction)) {
        throw DomainError("wall direction " + wall.direction.str() + " is not primitive");
    }
    const TruncatedSeries& f = wall.label;
    if (f.constant_term() != Rational(1)) {
        throw DomainError("wall label must have constant term 1");
    }
    const LatticeVector m = wall.label_generator();
    for (const auto& [mono, c] : f.terms()) {
        if (mono.z.is_zero() && mono.t_degree == 0) continue;
        if (mono.t_degree < 1) {
            throw DomainError("wall label term at t-degree 0 on ray " + wall.direction.str());
        }
        if (mono.z.is_zero() || !same_ray(mono.z, m)) {
            throw DomainError("wall label monomial " + mono.z.str() + " is not a positive multiple of " + m.str());
        }
    }
}

Wall make_wall(LatticeVector direction, Orientation orientation, TruncatedSeries label) {
    Wall w{direction, orientation, std::move(label)};
    validate_wall(w);
    return w;
}

ScatteringDiagram::ScatteringDiagram(int order, std::vector<Wall> walls) : order_(order) {
    for (auto& w : walls) add_wall(std::move(w));
}

void ScatteringDiagram::add_wall(Wall wall) {
    if (wall.label.order() != order_) {
        throw TruncationMismatch("wall label order " + std::to_string(wall.label.order()) +
                                 " differs from diagram order " + std::to_string(order_));
    }
    validate_wall(wall);
    walls_.push_back(std::move(wall));
}

std::size_t ScatteringDiagram::term_count() const {
    std::size_t n = 0;
    for (const auto& w : walls_) n += w.label.size();
    return n;
}

ScatteringDiagram incoming_diagram(int order, std::span<const LatticeVector> generators,
                                   std::span<const int> exponents) {
    if (generators.size() != exponents.size()) {
        throw DomainError("incoming_diagram: need one exponent per generator");
    }
    ScatteringDiagram d(order);
    for (std::size_t s = 0; s < generators.size(); ++s) {
        if (!is_primitive(generators[s])) {
            throw DomainError("initial direction " + generators[s].str() + " is not primitive");
        }
        if (exponents[s] < 1) {
            throw DomainError("initial exponent must be >= 1");
        }
        auto base = TruncatedSeries::binomial(order, Rational(1), generators[s], 1);
        d.add_wall(make_wall(-generators[s], Orientation::Incoming, series_pow(base, exponents[s])));
    }
    return d;
}

} // namespace sesqui::scattering
