#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "random.hpp"
#include "sesqui/exact/errors.hpp"
#include "sesqui/scattering/completion.hpp"
#include "sesqui/scattering/diagram_io.hpp"
#include "sesqui/scattering/diagram_ops.hpp"
#include "sesqui/scattering/monodromy.hpp"

using namespace sesqui;
using namespace sesqui::scattering;

namespace {

ScatteringDiagram D(int K, int k1, int k2, LatticeVector m1 = {1, 0}, LatticeVector m2 = {0, 1}) {
    std::vector<LatticeVector> gens{m1, m2};
    std::vector<int> exps{k1, k2};
    return incoming_diagram(K, gens, exps);
}

TruncatedSeries S(const char* text, int K) { return parse_series(text, K); }

Wall out(LatticeVector d, TruncatedSeries label) { return Wall{d, Orientation::Outgoing, std::move(label)}; }

oracle::NaiveWall naive(const Wall& w) { return {w.direction.a, w.direction.b, oracle::from_library(w.label)}; }

const ScatteringDiagram& d33() {
    static const ScatteringDiagram s = ks_complete(D(8, 3, 3));
    return s;
}

} // namespace

TEST(Monodromy, EmptyDiagramIsIdentity) {
    auto [x, y] = total_monodromy(ScatteringDiagram(5));
    EXPECT_EQ(x, S("x", 5));
    EXPECT_EQ(y, S("y", 5));
}

TEST(Monodromy, NormalOfDirection23) {
    WallAutomorphism theta(out({2, 3}, S("1 + t*x^2*y^3", 3)));
    EXPECT_EQ(theta.normal(), (LatticeVector{-3, 2}));
}

TEST(Monodromy, WallAutomorphismMatchesSubstitutionOracle) {
    std::mt19937_64 rng(3);
    const std::vector<LatticeVector> dirs{{1, 0}, {0, 1}, {1, 1}, {2, -1}, {-1, -3}, {1, 2}};
    for (int i = 0; i < 60; ++i) {
        const int K = 2 + int(rng() % 3);
        LatticeVector d = dirs[rng() % dirs.size()];
        Wall w = out(d, TruncatedSeries::binomial(K, oracle::random_rational(rng), d, 1 + int(rng() % (K - 1))));
        auto f = oracle::random_series(rng, K, 3);
        EXPECT_TRUE(oracle::same(oracle::theta(naive(w), oracle::from_library(f)), wall_automorphism_apply(w, f)));
    }
}

TEST(Monodromy, TotalMonodromyMatchesBruteForce) {
    const int K = 4;
    ScatteringDiagram d = D(K, 1, 1);
    d.add_wall(out({1, 0}, S("1 + t*x", K)));
    d.add_wall(out({0, 1}, S("1 + t*y", K)));
    d.add_wall(out({2, 1}, S("1 - 1/2*t^3*x^2*y", K)));
    std::vector<oracle::NaiveWall> walls;
    for (const auto& w : d.walls()) walls.push_back(naive(w));
    auto [nx, ny] = oracle::monodromy(walls, K);
    auto [x, y] = total_monodromy(d);
    EXPECT_TRUE(oracle::same(nx, x));
    EXPECT_TRUE(oracle::same(ny, y));
}

TEST(Monodromy, SameRayWallsCommute) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const int K = 3 + int(rng() % 3);
        LatticeVector d{1 + std::int64_t(rng() % 3), 1};
        Wall w1 = out(d, TruncatedSeries::binomial(K, oracle::random_rational(rng), d, 1));
        Wall w2 = out(d, TruncatedSeries::binomial(K, oracle::random_rational(rng), 2 * d, 2));
        auto f = oracle::random_series(rng, K);
        EXPECT_EQ(wall_automorphism_apply(w1, wall_automorphism_apply(w2, f)),
                  wall_automorphism_apply(w2, wall_automorphism_apply(w1, f)));
    }
}

TEST(Completion, PentagonHasExactlyThreeAddedWalls) {
    ScatteringDiagram s = ks_complete(D(10, 1, 1));
    std::vector<Wall> added;
    for (const auto& w : s.walls()) {
        if (w.orientation == Orientation::Outgoing) added.push_back(w);
    }
    ASSERT_EQ(added.size(), 3u);
    EXPECT_EQ(added[0], out({1, 0}, S("1 + t*x", 10)));
    EXPECT_EQ(added[1], out({1, 1}, S("1 + t^2*x*y", 10)));
    EXPECT_EQ(added[2], out({0, 1}, S("1 + t*y", 10)));
    EXPECT_TRUE(has_trivial_monodromy(s));
}

TEST(Completion, D22Labels) {
    const int K = 9;
    ScatteringDiagram s = ks_complete(D(K, 2, 2));
    EXPECT_EQ(outgoing_label(s, {1, 1}), series_pow(S("1 - t^2*x*y", K), -4));
    EXPECT_EQ(outgoing_label(s, {1, 2}), series_pow(S("1 + t^3*x*y^2", K), 2));
    EXPECT_EQ(outgoing_label(s, {2, 1}), series_pow(S("1 + t^3*x^2*y", K), 2));
    EXPECT_EQ(outgoing_label(s, {2, 3}), series_pow(S("1 + t^5*x^2*y^3", K), 2));
}

TEST(Completion, DefectAfterOrderOneRepair) {
    ScatteringDiagram d = D(4, 1, 1);
    d.add_wall(out({1, 0}, S("1 + t*x", 4)));
    d.add_wall(out({0, 1}, S("1 + t*y", 4)));
    EXPECT_TRUE(defect_at_order(d, 1).empty());
    DefectReport r = defect_at_order(d, 2);
    ASSERT_EQ(r.terms.size(), 1u);
    EXPECT_EQ(r.terms.begin()->first, (LatticeVector{1, 1}));
    EXPECT_EQ(r.terms.begin()->second, Rational(-1));
}

TEST(Completion, CompletedDiagramHasNoDefect) {
    ScatteringDiagram s = ks_complete(D(6, 2, 1));
    for (int k = 1; k < 6; ++k) EXPECT_TRUE(defect_at_order(s, k).empty());
    EXPECT_THROW(defect_at_order(s, 6), DomainError);
}

TEST(Completion, OnlyOutgoingWallsAreAdded) {
    ScatteringDiagram in = canonicalize(D(6, 2, 3));
    ScatteringDiagram s = ks_complete(in);
    std::vector<Wall> incoming;
    for (const auto& w : s.walls()) {
        if (w.orientation == Orientation::Incoming) incoming.push_back(w);
    }
    EXPECT_EQ(incoming, in.walls());
}

TEST(Completion, Idempotent) {
    ScatteringDiagram s = ks_complete(D(7, 2, 2));
    ScatteringDiagram only_in(7);
    for (const auto& w : s.walls()) {
        if (w.orientation == Orientation::Incoming) only_in.add_wall(w);
    }
    EXPECT_EQ(ks_complete(only_in), s);
    EXPECT_THROW(ks_complete(s), DomainError);
}

TEST(Completion, GradingHoldsOnEveryTerm) {
    for (const auto& s : {d33(), ks_complete(D(7, 1, 2, {-1, -3}, {1, 0}))}) {
        for (const auto& w : s.walls()) {
            for (const auto& [m, c] : w.label.terms()) {
                if (m.t_degree == 0) {
                    EXPECT_TRUE(m.z.is_zero());
                    continue;
                }
                EXPECT_FALSE(m.z.is_zero());
            }
        }
    }
    for (const auto& w : d33().walls()) {
        for (const auto& [m, c] : w.label.terms()) {
            EXPECT_GE(m.z.a, 0);
            EXPECT_GE(m.z.b, 0);
            EXPECT_EQ(m.z.a + m.z.b, m.t_degree);
        }
    }
}

TEST(Completion, SwapSymmetry) {
    const ScatteringDiagram& s = d33();
    auto swap = [](LatticeVector v) { return LatticeVector{v.b, v.a}; };
    ScatteringDiagram mirrored(s.order());
    for (const auto& w : s.walls()) {
        TruncatedSeries label(s.order());
        for (const auto& [m, c] : w.label.terms()) label.add_term({swap(m.z), m.t_degree}, c);
        mirrored.add_wall(Wall{swap(w.direction), w.orientation, label});
    }
    EXPECT_EQ(canonicalize(mirrored), s);
}

TEST(Completion, TermCap) {
    CompletionOptions opts;
    opts.term_cap = 10;
    EXPECT_THROW(ks_complete(D(8, 3, 3), opts), TermCapExceeded);
}

TEST(Canonicalize, Examples) {
    ScatteringDiagram d(4);
    d.add_wall(out({1, 0}, S("1 + t*x", 4)));
    d.add_wall(out({1, 0}, S("1 + t*x", 4)));
    ScatteringDiagram c = canonicalize(d);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c.walls()[0].label, S("1 + 2*t*x + t^2*x^2", 4));

    ScatteringDiagram trivial(4);
    trivial.add_wall(out({1, 0}, TruncatedSeries::one(4)));
    EXPECT_TRUE(canonicalize(trivial).empty());

    EXPECT_EQ(canonicalize(c), c);
    EXPECT_EQ(canonicalize(d33()), d33());
}

TEST(ChangeOfLattice, Examples) {
    ScatteringDiagram s = ks_complete(D(6, 1, 1));
    EXPECT_EQ(change_of_lattice(s, {1, 0}, {0, 1}), s);
    EXPECT_EQ(pull_back_direction({0, -1}, {-1, -3}, {1, 0}), (LatticeVector{1, 1}));
    ScatteringDiagram moved = change_of_lattice(s, {-1, -3}, {1, 0});
    EXPECT_TRUE(outgoing_label(moved, {0, -1}).has_value());
    EXPECT_THROW(change_of_lattice(s, {1, 0}, {2, 0}), DomainError);
    EXPECT_THROW(change_of_lattice(s, {2, 0}, {0, 1}), DomainError);
}

TEST(LogCoefficient, Examples) {
    ScatteringDiagram p = ks_complete(D(8, 1, 1));
    EXPECT_EQ(log_coefficient(p, {1, 1}, 1), Rational(1));
    EXPECT_EQ(log_coefficient(p, {2, 1}, 1), Rational(0));
    EXPECT_EQ(log_coefficient(p, {2, 1}, 2), Rational(0));
    ScatteringDiagram s = ks_complete(D(6, 2, 2));
    EXPECT_EQ(log_coefficient(s, {1, 1}, 1), Rational(4));
    EXPECT_EQ(log_coefficient(s, {1, 1}, 2), Rational(2));
    EXPECT_THROW(log_coefficient(s, {1, 1}, 3), TruncationTooLow);
    EXPECT_THROW(log_coefficient(s, {2, 2}, 1), DomainError);
}

TEST(RaySpectrum, Examples) {
    auto rays = ray_spectrum(ks_complete(D(6, 1, 1)));
    ASSERT_EQ(rays.size(), 3u);
    EXPECT_EQ(rays[0].direction, (LatticeVector{1, 0}));
    EXPECT_EQ(rays[0].t_order, 1);
    EXPECT_EQ(rays[1].direction, (LatticeVector{1, 1}));
    EXPECT_EQ(rays[1].t_order, 2);
    EXPECT_EQ(rays[1].coefficient, Rational(1));
    EXPECT_EQ(rays[2].direction, (LatticeVector{0, 1}));

    bool found = false;
    for (const auto& e : ray_spectrum(ks_complete(D(6, 2, 2)))) {
        if (e.direction == LatticeVector{1, 2}) {
            found = true;
            EXPECT_EQ(e.t_order, 3);
            EXPECT_EQ(e.coefficient, Rational(2));
        }
    }
    EXPECT_TRUE(found);
    EXPECT_TRUE(ray_spectrum(ScatteringDiagram(4)).empty());
}

TEST(DiagramIo, JsonRoundTrip) {
    const ScatteringDiagram& s = d33();
    auto j = diagram_to_json(s);
    EXPECT_EQ(diagram_from_json(nlohmann::ordered_json::parse(j.dump())), s);
    EXPECT_THROW(diagram_from_json(nlohmann::ordered_json::parse(R"({"K": 3})")), ParseError);
}

TEST(DiagramIo, SvgCarriesProvenance) {
    std::string svg = diagram_to_svg(ks_complete(D(4, 1, 1)), {"truncation order K = 4"});
    EXPECT_NE(svg.find("<svg"), std::string::npos);
    EXPECT_NE(svg.find("truncation order K = 4"), std::string::npos);
}
