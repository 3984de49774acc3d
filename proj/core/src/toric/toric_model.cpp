#include "sesqui/toric/toric_model.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "sesqui/exact/errors.hpp"

namespace sesqui::toric {

ToricModel make_model(std::vector<LatticeVector> blowup_vectors, std::vector<LatticeVector> fan_rays) {
    if (blowup_vectors.empty()) throw DomainError("toric model needs at least one blowup vector");
    for (auto v : blowup_vectors) {
        if (!is_primitive(v)) throw DomainError("blowup vector " + v.str() + " is not primitive");
    }
    for (auto v : fan_rays) {
        if (!is_primitive(v)) throw DomainError("fan ray " + v.str() + " is not primitive");
    }
    return ToricModel{std::move(blowup_vectors), std::move(fan_rays)};
}

LatticeVector half_shear(LatticeVector v, LatticeVector w) {
    if (!is_primitive(v)) throw DomainError("half_shear: " + v.str() + " is not primitive");
    return w + std::max<std::int64_t>(wedge(w, v), 0) * v;
}

namespace {

std::vector<LatticeVector> shear_all(const std::vector<LatticeVector>& vs, LatticeVector v) {
    std::vector<LatticeVector> out;
    out.reserve(vs.size());
    for (auto w : vs) out.push_back(half_shear(v, w));
    return out;
}

} // namespace

std::vector<LatticeVector> elementary_transform_fan(const std::vector<LatticeVector>& fan, std::size_t i) {
    if (i < 1 || i > fan.size()) throw DomainError("elementary_transform_fan: index out of range");
    const LatticeVector v = fan[i - 1];
    if (std::find(fan.begin(), fan.end(), -v) == fan.end()) {
        throw DomainError("elementary_transform_fan: -" + v.str() + " is not a fan ray");
    }
    return shear_all(fan, v);
}

ToricModel mutate(const ToricModel& model, std::size_t i) {
    if (i < 1 || i > model.size()) {
        throw DomainError("mutate: index " + std::to_string(i) + " out of range 1.." + std::to_string(model.size()));
    }
    const LatticeVector mi = model.blowup_vectors[i - 1];
    ToricModel out;
    out.blowup_vectors = shear_all(model.blowup_vectors, mi);
    out.blowup_vectors[i - 1] = -mi;
    if (!model.fan_rays.empty()) out.fan_rays = shear_all(model.fan_rays, mi);
    return out;
}

ToricModel mutate_word(const ToricModel& model, const std::vector<std::size_t>& word) {
    ToricModel out = model;
    for (auto i : word) out = mutate(out, i);
    return out;
}

namespace {

// Integer A with A u = x, A w = y for independent u, w; nullopt if not in GL(2,Z).
std::optional<IntMatrix2> solve(LatticeVector u, LatticeVector w, LatticeVector x, LatticeVector y) {
    const std::int64_t det = wedge(u, w);
    // A = [x y] adj([u w]) / det
    IntMatrix2 xy = IntMatrix2::from_columns(x, y);
    IntMatrix2 adj{w.b, -w.a, -u.b, u.a};
    IntMatrix2 num = xy * adj;
    if (num.m00 % det || num.m01 % det || num.m10 % det || num.m11 % det) return std::nullopt;
    IntMatrix2 a{num.m00 / det, num.m01 / det, num.m10 / det, num.m11 / det};
    if (a.det() != 1 && a.det() != -1) return std::nullopt;
    return a;
}

// Unimodular A with A u = v, for primitive u, v.
IntMatrix2 extend_primitive(LatticeVector u, LatticeVector v) {
    auto complement = [](LatticeVector p) {
        // Bezout: p.a * s - p.b * r = 1 gives [p (r, s)] with det 1.
        std::int64_t old_r = p.a, r = p.b, old_s = 1, s = 0, old_t = 0, t = 1;
        while (r != 0) {
            std::int64_t qt = old_r / r;
            std::tie(old_r, r) = std::make_pair(r, old_r - qt * r);
            std::tie(old_s, s) = std::make_pair(s, old_s - qt * s);
            std::tie(old_t, t) = std::make_pair(t, old_t - qt * t);
        }
        // old_s * p.a + old_t * p.b = old_r = +-1
        LatticeVector c{-old_t * old_r, old_s * old_r};
        return IntMatrix2::from_columns(p, c);
    };
    IntMatrix2 bu = complement(u);
    IntMatrix2 bv = complement(v);
    // bu has det 1, so its inverse is its adjugate.
    IntMatrix2 bu_inv{bu.m11, -bu.m01, -bu.m10, bu.m00};
    return bv * bu_inv;
}

bool maps_onto(const IntMatrix2& a, const ToricModel& src, const ToricModel& dst, bool ordered) {
    std::vector<LatticeVector> img;
    img.reserve(src.size());
    for (auto v : src.blowup_vectors) img.push_back(a.apply(v));
    if (ordered) return img == dst.blowup_vectors;
    std::vector<LatticeVector> target = dst.blowup_vectors;
    std::sort(img.begin(), img.end());
    std::sort(target.begin(), target.end());
    return img == target;
}

} // namespace

std::optional<IntMatrix2> gl2z_equivalent(const ToricModel& a, const ToricModel& b, bool ordered) {
    if (a.size() != b.size() || a.size() == 0) return std::nullopt;
    const auto& va = a.blowup_vectors;
    const auto& vb = b.blowup_vectors;
    const std::size_t n = va.size();

    std::optional<std::size_t> j;
    for (std::size_t s = 1; s < n; ++s) {
        if (wedge(va[0], va[s]) != 0) {
            j = s;
            break;
        }
    }

    if (j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (ordered && k != 0) break;
            for (std::size_t l = 0; l < n; ++l) {
                if (l == k) continue;
                if (ordered && l != *j) continue;
                auto m = solve(va[0], va[*j], vb[k], vb[l]);
                if (m && maps_onto(*m, a, b, ordered)) return m;
            }
        }
        return std::nullopt;
    }

    // All of a lies on one line through va[0], which is primitive.
    for (std::size_t k = 0; k < n; ++k) {
        if (ordered && k != 0) break;
        if (!is_primitive(vb[k])) continue;
        IntMatrix2 m = extend_primitive(va[0], vb[k]);
        if (maps_onto(m, a, b, ordered)) return m;
    }
    return std::nullopt;
}

std::optional<std::size_t> find_in_orbit(const MutationOrbit& orbit, const ToricModel& model) {
    for (std::size_t i = 0; i < orbit.nodes.size(); ++i) {
        if (gl2z_equivalent(orbit.nodes[i].model, model, false)) return i;
    }
    return std::nullopt;
}

MutationOrbit mutation_orbit(const ToricModel& model, int depth) {
    if (depth < 0) throw DomainError("mutation_orbit: depth must be nonnegative");
    MutationOrbit orbit;
    orbit.nodes.push_back({model, {}, 0});
    std::deque<std::size_t> frontier{0};
    while (!frontier.empty()) {
        std::size_t cur = frontier.front();
        frontier.pop_front();
        if (orbit.nodes[cur].depth >= depth) continue;
        for (std::size_t i = 1; i <= model.size(); ++i) {
            ToricModel child = mutate(orbit.nodes[cur].model, i);
            std::size_t target;
            if (auto found = find_in_orbit(orbit, child)) {
                target = *found;
            } else {
                auto word = orbit.nodes[cur].word;
                word.push_back(i);
                orbit.nodes.push_back({std::move(child), std::move(word), orbit.nodes[cur].depth + 1});
                target = orbit.nodes.size() - 1;
                frontier.push_back(target);
            }
            orbit.edges.push_back({cur, target, i});
        }
    }
    return orbit;
}

} // namespace sesqui::toric
