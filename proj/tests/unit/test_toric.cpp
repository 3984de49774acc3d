#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "sesqui/exact/errors.hpp"
#include "sesqui/toric/orbit_io.hpp"
#include "sesqui/toric/toric_model.hpp"
#include "sesqui/toric/w_map.hpp"

using namespace sesqui;
using namespace sesqui::toric;

namespace {

const ToricModel T0 = make_model({{-1, -3}, {1, 0}});

LatticeVector random_primitive(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> c(-6, 6);
    for (;;) {
        LatticeVector v{c(rng), c(rng)};
        if (is_primitive(v)) return v;
    }
}

} // namespace

TEST(HalfShear, Examples) {
    EXPECT_EQ(half_shear({1, 0}, {2, -3}), (LatticeVector{5, -3}));
    EXPECT_EQ(half_shear({1, 0}, {2, 3}), (LatticeVector{2, 3}));
    EXPECT_EQ(half_shear({2, 5}, {2, 5}), (LatticeVector{2, 5}));
}

TEST(HalfShear, FixesHalfPlaneAndIsInjective) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 50; ++i) {
        LatticeVector v = random_primitive(rng);
        std::set<LatticeVector> image;
        for (int a = -8; a <= 8; ++a) {
            for (int b = -8; b <= 8; ++b) {
                LatticeVector w{a, b};
                LatticeVector s = half_shear(v, w);
                if (wedge(w, v) <= 0) EXPECT_EQ(s, w);
                image.insert(s);
            }
        }
        EXPECT_EQ(image.size(), 17u * 17u);
    }
}

TEST(ElementaryTransform, HirzebruchExample) {
    std::vector<LatticeVector> f0{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    auto f1 = elementary_transform_fan(f0, 3);
    EXPECT_EQ(f1, (std::vector<LatticeVector>{{1, 1}, {-1, 0}, {0, 1}, {0, -1}}));
    EXPECT_EQ(f1[2], f0[2]);
    EXPECT_EQ(f1[3], f0[3]);
    EXPECT_THROW(elementary_transform_fan({{1, 0}, {0, 1}}, 1), DomainError);
    EXPECT_THROW(elementary_transform_fan(f0, 5), DomainError);
}

TEST(Mutate, Examples) {
    ToricModel m1 = mutate(T0, 1);
    EXPECT_EQ(m1.blowup_vectors, (std::vector<LatticeVector>{{1, 3}, {1, 0}}));
    ToricModel m21 = mutate(m1, 2);
    EXPECT_EQ(m21.blowup_vectors, (std::vector<LatticeVector>{{1, 3}, {-1, 0}}));
    EXPECT_EQ(mutate_word(T0, {1, 2}), m21);
    EXPECT_THROW(mutate(T0, 0), DomainError);
    EXPECT_THROW(mutate(T0, 3), DomainError);
}

TEST(Gl2z, Examples) {
    auto a = gl2z_equivalent(T0, mutate_word(T0, {1, 2}), true);
    ASSERT_TRUE(a.has_value());
    EXPECT_EQ(*a, (IntMatrix2{-1, 0, 0, -1}));
    EXPECT_TRUE(gl2z_equivalent(T0, mutate_word(T0, {2, 1}), true).has_value());
    EXPECT_FALSE(gl2z_equivalent(T0, mutate(T0, 1), true).has_value());
    EXPECT_FALSE(gl2z_equivalent(T0, mutate(T0, 2), true).has_value());
    EXPECT_EQ(gl2z_equivalent(T0, T0, true), IntMatrix2::identity());
}

TEST(Gl2z, DoubleMutationReturnsToModel) {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 100; ++i) {
        std::vector<LatticeVector> vs;
        const int n = 2 + int(rng() % 3);
        for (int j = 0; j < n; ++j) vs.push_back(random_primitive(rng));
        ToricModel m = make_model(vs);
        const std::size_t idx = 1 + rng() % vs.size();
        EXPECT_TRUE(gl2z_equivalent(m, mutate(mutate(m, idx), idx), false).has_value()) << m.str();
    }
}

TEST(Orbit, Examples) {
    auto o0 = mutation_orbit(T0, 0);
    ASSERT_EQ(o0.nodes.size(), 1u);
    EXPECT_EQ(o0.nodes[0].model, T0);
    auto o2 = mutation_orbit(T0, 2);
    EXPECT_TRUE(find_in_orbit(o2, mutate_word(T0, {1, 2})).has_value());
    EXPECT_TRUE(find_in_orbit(o2, mutate(T0, 1)).has_value());
    EXPECT_EQ(*find_in_orbit(o2, mutate_word(T0, {1, 2})), 0u);
}

TEST(Orbit, Export) {
    auto o = mutation_orbit(T0, 2);
    auto j = orbit_to_json(o);
    EXPECT_EQ(j["nodes"].size(), o.nodes.size());
    EXPECT_EQ(j["edges"].size(), o.edges.size());
    std::string dot = orbit_to_dot(o, {"command: test"});
    EXPECT_EQ(dot.rfind("// command: test", 0), 0u);
    EXPECT_NE(dot.find("digraph"), std::string::npos);
    EXPECT_EQ(format_word({}), "");
    EXPECT_EQ(format_word({1, 2, 1}), "1,2,1");
}

TEST(WMap, Examples) {
    EXPECT_EQ(w_t0(2, 1), (LatticeVector{-1, -3}));
    EXPECT_EQ(w_t0(1, 2), (LatticeVector{1, 0}));
    EXPECT_EQ(w_t0(1, 1), (LatticeVector{0, -1}));
    EXPECT_EQ(w_t0_inverse({-1, -3}), (std::pair<std::int64_t, std::int64_t>{2, 1}));
    EXPECT_EQ(w_t0_inverse({-1, 0}), (std::pair<std::int64_t, std::int64_t>{5, 1}));
}

TEST(WMap, RoundTripInjectiveGcd) {
    std::set<LatticeVector> seen;
    for (std::int64_t p = 0; p <= 40; ++p) {
        for (std::int64_t q = 0; q <= 40; ++q) {
            if (p == 0 && q == 0) continue;
            LatticeVector w = w_t0(p, q);
            EXPECT_EQ(std::gcd(std::abs(w.a), std::abs(w.b)), std::gcd(p, q));
            auto [pp, qq] = w_t0_inverse(w);
            if (p == 0) {
                // (0,q) ~ (q,0)
                EXPECT_EQ(w, w_t0(q, 0));
                EXPECT_EQ(pp, q);
                EXPECT_EQ(qq, 0);
                continue;
            }
            EXPECT_TRUE(seen.insert(w).second) << p << "," << q;
            EXPECT_EQ(pp, p);
            EXPECT_EQ(qq, q);
        }
    }
}

TEST(WMap, BranchAgreement) {
    const auto& br = w_t0_branches();
    for (std::int64_t q = 1; q <= 30; ++q) {
        EXPECT_EQ(br[0].matrix.apply({2 * q, q}), br[1].matrix.apply({2 * q, q}));
        EXPECT_EQ(br[1].matrix.apply({q, 2 * q}), br[2].matrix.apply({q, 2 * q}));
    }
}

TEST(WMap, LatticeImageIffDivisibleByThree) {
    // span{(-1,-3),(1,0)} = {(a,b) : 3 | b}
    for (std::int64_t p = 0; p <= 30; ++p) {
        for (std::int64_t q = 0; q <= 30; ++q) {
            if (p == 0 && q == 0) continue;
            EXPECT_EQ(w_t0(p, q).b % 3 == 0, (p + q) % 3 == 0) << p << "," << q;
        }
    }
}
