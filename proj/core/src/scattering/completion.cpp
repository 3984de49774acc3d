#include "sesqui/scattering/completion.hpp"

#include <optional>

#include "sesqui/exact/errors.hpp"
#include "sesqui/scattering/diagram_ops.hpp"
#include "sesqui/scattering/monodromy.hpp"

namespace sesqui::scattering {

namespace {

ScatteringDiagram truncate_diagram(const ScatteringDiagram& diagram, int order) {
    ScatteringDiagram out(order);
    for (const auto& w : diagram.walls()) {
        TruncatedSeries label = w.label.truncated(order);
        if (label.is_one()) continue;
        out.add_wall(Wall{w.direction, w.orientation, std::move(label)});
    }
    return out;
}

// Mon(v)/v - 1 for v = z^unit.
TruncatedSeries relative_defect(const TruncatedSeries& image, LatticeVector unit) {
    return image.shifted(-unit) - TruncatedSeries::one(image.order());
}

} // namespace

DefectReport defect_at_order(const ScatteringDiagram& diagram, int k) {
    if (k < 1 || k >= diagram.order()) {
        throw DomainError("defect_at_order: need 1 <= k < K, got k=" + std::to_string(k));
    }
    ScatteringDiagram low = truncate_diagram(diagram, k + 1);
    auto [mx, my] = total_monodromy(low);
    TruncatedSeries dx = relative_defect(mx, {1, 0});
    TruncatedSeries dy = relative_defect(my, {0, 1});

    DefectReport report;
    report.order = k;
    std::map<LatticeVector, std::pair<Rational, Rational>> readouts;
    for (const auto* d : {&dx, &dy}) {
        for (const auto& [m, c] : d->terms()) {
            if (m.t_degree < k) {
                throw DomainError("defect_at_order: monodromy is not trivial modulo t^" + std::to_string(k));
            }
            auto& slot = readouts[m.z];
            (d == &dx ? slot.first : slot.second) = c;
        }
    }
    for (const auto& [w, ab] : readouts) {
        const auto& [a, b] = ab;
        if (w.is_zero()) {
            throw ConventionError("defect term at w = (0,0) cannot be cancelled by a wall");
        }
        // a = c (-w2), b = c w1
        std::optional<Rational> from_x, from_y;
        if (w.b != 0) {
            from_x = -a / Rational(w.b);
        } else if (!a.is_zero()) {
            throw ConventionError("x-readout nonzero at w = " + w.str() + " where it must vanish");
        }
        if (w.a != 0) {
            from_y = b / Rational(w.a);
        } else if (!b.is_zero()) {
            throw ConventionError("y-readout nonzero at w = " + w.str() + " where it must vanish");
        }
        if (from_x && from_y && *from_x != *from_y) {
            throw ConventionError("inconsistent defect readouts at w = " + w.str() + ": " + from_x->str() +
                                  " vs " + from_y->str());
        }
        Rational c = from_x ? *from_x : *from_y;
        if (!c.is_zero()) report.terms.emplace(w, c);
    }
    return report;
}

bool has_trivial_monodromy(const ScatteringDiagram& diagram) {
    auto [mx, my] = total_monodromy(diagram);
    const int K = diagram.order();
    return mx == TruncatedSeries::monomial(K, Rational(1), {1, 0}, 0) &&
           my == TruncatedSeries::monomial(K, Rational(1), {0, 1}, 0);
}

ScatteringDiagram ks_complete(const ScatteringDiagram& diagram, const CompletionOptions& options) {
    for (const auto& w : diagram.walls()) {
        if (w.orientation != Orientation::Incoming) {
            throw DomainError("ks_complete: input diagram must contain only incoming walls");
        }
    }
    const int K = diagram.order();
    ScatteringDiagram current = canonicalize(diagram);
    for (int k = 1; k < K; ++k) {
        DefectReport report = defect_at_order(current, k);
        if (report.empty()) continue;
        for (const auto& [w, c] : report.terms) {
            auto [p, j] = primitive_part(w);
            auto label = TruncatedSeries::binomial(K, -(Rational(j) * c), w, k);
            current.add_wall(Wall{p, Orientation::Outgoing, std::move(label)});
        }
        current = canonicalize(current);
        if (current.term_count() > options.term_cap) {
            throw TermCapExceeded("ks_complete: " + std::to_string(current.term_count()) +
                                  " label terms exceed the cap of " + std::to_string(options.term_cap) +
                                  " at order " + std::to_string(k));
        }
        if (!defect_at_order(current, k).empty()) {
            throw ConventionError("ks_complete: defect at order " + std::to_string(k) + " survived wall insertion");
        }
    }
    return current;
}

} // namespace sesqui::scattering
