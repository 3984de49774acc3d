#include "sesqui/scattering/diagram_ops.hpp"

#include <algorithm>
#include <map>

#include "sesqui/exact/errors.hpp"

namespace sesqui::scattering {

ScatteringDiagram canonicalize(const ScatteringDiagram& diagram) {
    using Key = std::pair<LatticeVector, int>;
    std::map<Key, TruncatedSeries> merged;
    for (const auto& w : diagram.walls()) {
        Key key{w.direction, w.orientation == Orientation::Outgoing ? 0 : 1};
        auto [it, inserted] = merged.try_emplace(key, w.label);
        if (!inserted) it->second *= w.label;
    }
    std::vector<Wall> walls;
    for (auto& [key, label] : merged) {
        if (label.is_one()) continue;
        walls.push_back(Wall{key.first, key.second == 0 ? Orientation::Outgoing : Orientation::Incoming,
                             std::move(label)});
    }
    std::stable_sort(walls.begin(), walls.end(), [](const Wall& a, const Wall& b) {
        if (angle_less(a.direction, b.direction)) return true;
        if (angle_less(b.direction, a.direction)) return false;
        return a.orientation == Orientation::Outgoing && b.orientation == Orientation::Incoming;
    });
    return ScatteringDiagram(diagram.order(), std::move(walls));
}

std::optional<Grading> infer_grading(const ScatteringDiagram& diagram) {
    std::vector<Monomial> samples;
    for (const auto& w : diagram.walls()) {
        for (const auto& [m, c] : w.label.terms()) {
            if (m.t_degree > 0) samples.push_back(m);
        }
    }
    if (samples.empty()) return std::nullopt;

    Grading g;
    const Monomial& first = samples.front();
    auto second = std::find_if(samples.begin(), samples.end(),
                               [&](const Monomial& m) { return wedge(first.z, m.z) != 0; });
    if (second != samples.end()) {
        // Solve [z1; z2] g = [t1; t2].
        Rational det(wedge(first.z, second->z));
        g.ga = (Rational(first.t_degree) * Rational(second->z.b) - Rational(second->t_degree) * Rational(first.z.b)) / det;
        g.gb = (Rational(first.z.a) * Rational(second->t_degree) - Rational(second->z.a) * Rational(first.t_degree)) / det;
    } else {
        // All terms colinear: grade along the line, zero on its complement.
        Rational norm2(dot(first.z, first.z));
        g.ga = Rational(first.t_degree) * Rational(first.z.a) / norm2;
        g.gb = Rational(first.t_degree) * Rational(first.z.b) / norm2;
    }
    for (const auto& m : samples) {
        if (g.degree_of(m.z) != Rational(m.t_degree)) return std::nullopt;
    }
    return g;
}

LatticeVector pull_back_direction(LatticeVector r, LatticeVector m1, LatticeVector m2) {
    std::int64_t det = wedge(m1, m2);
    if (det == 0) {
        throw DomainError("change of lattice: m1 and m2 are colinear");
    }
    LatticeVector s{m2.b * r.a - m2.a * r.b, -m1.b * r.a + m1.a * r.b};
    if (det < 0) s = -s;
    return primitive_part(s).primitive;
}

ScatteringDiagram change_of_lattice(const ScatteringDiagram& diagram, LatticeVector m1, LatticeVector m2) {
    if (!is_primitive(m1) || !is_primitive(m2)) {
        throw DomainError("change of lattice: m1 and m2 must be primitive");
    }
    if (wedge(m1, m2) == 0) {
        throw DomainError("change of lattice: m1 and m2 are colinear");
    }
    auto push = [&](LatticeVector v) { return v.a * m1 + v.b * m2; };
    ScatteringDiagram out(diagram.order());
    for (const auto& w : diagram.walls()) {
        TruncatedSeries label(diagram.order());
        for (const auto& [m, c] : w.label.terms()) {
            label.add_term({push(m.z), m.t_degree}, c);
        }
        out.add_wall(Wall{primitive_part(push(w.direction)).primitive, w.orientation, std::move(label)});
    }
    return canonicalize(out);
}

std::optional<TruncatedSeries> outgoing_label(const ScatteringDiagram& diagram, LatticeVector direction) {
    std::optional<TruncatedSeries> label;
    for (const auto& w : diagram.walls()) {
        if (w.orientation != Orientation::Outgoing || w.direction != direction) continue;
        if (label) {
            *label *= w.label;
        } else {
            label = w.label;
        }
    }
    return label;
}

Rational log_coefficient(const ScatteringDiagram& diagram, LatticeVector direction, int kappa) {
    if (!is_primitive(direction)) {
        throw DomainError("log_coefficient: direction must be primitive");
    }
    if (kappa < 1) {
        throw DomainError("log_coefficient: kappa must be positive");
    }
    const LatticeVector target = kappa * direction;
    if (auto grading = infer_grading(diagram)) {
        Rational degree = grading->degree_of(target);
        if (degree >= Rational(diagram.order())) {
            throw TruncationTooLow("log_coefficient: z^" + target.str() + " first appears at t^" + degree.str() +
                                   ", beyond truncation order " + std::to_string(diagram.order()));
        }
    }
    auto label = outgoing_label(diagram, direction);
    if (!label) return Rational(0);
    const TruncatedSeries log_label = series_log(*label);
    Rational sum(0);
    for (const auto& [m, c] : log_label.terms()) {
        if (m.z == target) sum += c;
    }
    return sum;
}

std::vector<RaySpectrumEntry> ray_spectrum(const ScatteringDiagram& diagram) {
    std::vector<RaySpectrumEntry> out;
    const ScatteringDiagram canon = canonicalize(diagram);
    for (const auto& w : canon.walls()) {
        if (w.orientation != Orientation::Outgoing) continue;
        TruncatedSeries rest = w.label - TruncatedSeries::one(diagram.order());
        if (rest.is_zero()) continue;
        const auto& [m, c] = *rest.terms().begin();
        out.push_back({w.direction, m.t_degree, c, m.z});
    }
    return out;
}

} // namespace sesqui::scattering
