#include "sesqui/scattering/monodromy.hpp"

#include <algorithm>

namespace sesqui::scattering {

WallAutomorphism::WallAutomorphism(const Wall& wall) : wall_(&wall), normal_(rot90(wall.direction)) {}

const TruncatedSeries& WallAutomorphism::label_power(std::int64_t e) const {
    auto it = powers_.find(e);
    if (it != powers_.end()) return it->second;
    TruncatedSeries p = series_pow(wall_->label, e);
    return powers_.emplace(e, std::move(p)).first->second;
}

TruncatedSeries WallAutomorphism::apply(const TruncatedSeries& f) const {
    std::map<std::int64_t, TruncatedSeries> buckets;
    for (const auto& [m, c] : f.terms()) {
        std::int64_t e = dot(m.z, normal_);
        auto it = buckets.try_emplace(e, f.order()).first;
        it->second.add_term(m, c);
    }
    TruncatedSeries out(f.order());
    for (const auto& [e, part] : buckets) {
        if (e == 0) {
            out += part;
        } else {
            out += label_power(e) * part;
        }
    }
    return out;
}

TruncatedSeries wall_automorphism_apply(const Wall& wall, const TruncatedSeries& f) {
    return WallAutomorphism(wall).apply(f);
}

std::vector<const Wall*> crossing_order(const ScatteringDiagram& diagram) {
    std::vector<const Wall*> order;
    order.reserve(diagram.size());
    for (const auto& w : diagram.walls()) order.push_back(&w);
    std::stable_sort(order.begin(), order.end(),
                     [](const Wall* a, const Wall* b) { return angle_less(a->direction, b->direction); });
    return order;
}

TruncatedSeries apply_monodromy(const ScatteringDiagram& diagram, const TruncatedSeries& f) {
    TruncatedSeries g = f;
    for (const Wall* w : crossing_order(diagram)) {
        g = WallAutomorphism(*w).apply(g);
    }
    return g;
}

std::pair<TruncatedSeries, TruncatedSeries> total_monodromy(const ScatteringDiagram& diagram) {
    const int K = diagram.order();
    auto x = TruncatedSeries::monomial(K, Rational(1), {1, 0}, 0);
    auto y = TruncatedSeries::monomial(K, Rational(1), {0, 1}, 0);
    auto order = crossing_order(diagram);
    for (const Wall* w : order) {
        WallAutomorphism theta(*w);
        x = theta.apply(x);
        y = theta.apply(y);
    }
    return {std::move(x), std::move(y)};
}

} // namespace sesqui::scattering
