#include "oracles.hpp"

#include <affchar/rootsys.hpp>

#include <gtest/gtest.h>

using namespace affchar;

namespace {

const char* kAllTypes[] = {"A1", "A2", "A3", "A4", "A8", "B2", "B3", "B4", "C2", "C3", "C4",
                           "D4", "D5", "D6", "E6", "E7", "E8", "F4", "G2"};

LatticeVec vec(std::initializer_list<int> c)
{
    LatticeVec v{};
    std::size_t i = 0;
    for (int x : c) v[i++] = x;
    return v;
}

} // namespace

TEST(TypeLabel, ParsesCaseInsensitively)
{
    EXPECT_EQ(TypeLabel::parse("e8").str(), "E8");
    EXPECT_EQ(TypeLabel::parse("D_4").str(), "D4");
    EXPECT_THROW(TypeLabel::parse("D3"), usage_error);
    EXPECT_THROW(TypeLabel::parse("B1"), usage_error);
    EXPECT_THROW(TypeLabel::parse("E9"), usage_error);
    EXPECT_THROW(TypeLabel::parse("H3"), usage_error);
    EXPECT_THROW(TypeLabel::parse("A"), usage_error);
    EXPECT_THROW(TypeLabel::parse("A2x"), usage_error);
}

TEST(RootSystem, SmallTypes)
{
    auto a1 = RootSystem::build("A1");
    EXPECT_EQ(a1.positive_roots().size(), 1u);
    EXPECT_EQ(a1.dual_coxeter(), 2);
    auto a2 = RootSystem::build("A2");
    EXPECT_EQ(a2.positive_roots().size(), 3u);
    EXPECT_EQ(a2.dual_coxeter(), 3);
    EXPECT_EQ(a2.lacity(), 1);
    auto g2 = RootSystem::build("G2");
    EXPECT_EQ(g2.positive_roots().size(), 6u);
    EXPECT_EQ(g2.lacity(), 3);
}

TEST(RootSystem, InvariantsForEveryType)
{
    for (const char* t : kAllTypes) {
        SCOPED_TRACE(t);
        auto rs = RootSystem::build(t);
        auto roots = oracle::roots_by_reflection(rs);
        EXPECT_EQ(roots.size(), 2 * rs.positive_roots().size());
        for (const auto& r : rs.positive_roots()) {
            EXPECT_TRUE(roots.count(r));
            EXPECT_TRUE(roots.count(-r));
        }
        EXPECT_EQ(rs.inner(rs.highest_root(), rs.highest_root()), Rational(2));
        EXPECT_EQ(rs.weyl_dimension(LatticeVec{}), 1);
        EXPECT_EQ(rs.weyl_dimension(rs.highest_root()), static_cast<std::int64_t>(rs.dimension()));
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            // (rho, alpha_i^vee) = 1 and (rho^vee, alpha_i) = 1.
            Weight ai = rs.weight(rs.simple_root(i));
            Rational len = rs.inner(ai, ai);
            EXPECT_EQ(Rational(2) * rs.inner(rs.rho(), ai) / len, Rational(1));
            EXPECT_EQ(rs.inner(rs.rho_check(), ai), Rational(1));
        }
        // h^vee = 1 + (rho, theta); lacity from root lengths.
        EXPECT_EQ(Rational(rs.dual_coxeter()), Rational(1) + rs.inner(rs.rho_lattice(), rs.highest_root()));
        Rational shortest(2);
        for (const auto& r : rs.positive_roots()) shortest = std::min(shortest, rs.inner(r, r));
        EXPECT_EQ(Rational(rs.lacity()), Rational(2) / shortest);
        if (rs.type().simply_laced()) {
            EXPECT_EQ(rs.rho(), rs.rho_check());
            EXPECT_EQ(rs.lacity(), 1);
        }
    }
}

TEST(RootSystem, DualCoxeterTable)
{
    std::map<std::string, int> expected{{"A1", 2}, {"A4", 5}, {"B3", 5}, {"C3", 4}, {"D5", 8}, {"E6", 12},
                                        {"E7", 18}, {"E8", 30}, {"F4", 9}, {"G2", 4}};
    for (const auto& [t, h] : expected) EXPECT_EQ(RootSystem::build(t).dual_coxeter(), h) << t;
}

TEST(RootSystem, WeylOrderMatchesOrbitOfRegularWeight)
{
    for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"}) {
        auto rs = RootSystem::build(t);
        EXPECT_EQ(static_cast<std::int64_t>(oracle::signed_orbit(rs, rs.rho_lattice()).size()), rs.weyl_order()) << t;
    }
    EXPECT_EQ(RootSystem::build("E8").weyl_order(), 696729600);
}

TEST(RootSystem, InnerProducts)
{
    auto a1 = RootSystem::build("A1");
    Weight alpha = a1.weight(a1.simple_root(0));
    EXPECT_EQ(a1.inner(alpha, alpha), Rational(2));
    EXPECT_EQ(a1.inner(a1.rho(), a1.rho()), Rational(1, 2));
    auto a2 = RootSystem::build("A2");
    EXPECT_EQ(a2.inner(a2.weight(a2.simple_root(0)), a2.weight(a2.simple_root(1))), Rational(-1));
    EXPECT_THROW(a1.inner(alpha, a2.rho()), usage_error);
}

TEST(RootSystem, LanglandsDual)
{
    EXPECT_EQ(RootSystem::build("A2").langlands_dual().label(), "A2");
    auto b2 = RootSystem::build("B2");
    auto c2 = b2.langlands_dual();
    EXPECT_EQ(c2.label(), "C2");
    EXPECT_EQ(c2.cartan_matrix(), RootSystem::build("C2").cartan_matrix());
    EXPECT_EQ(c2.langlands_dual().cartan_matrix(), b2.cartan_matrix());
    auto g2 = RootSystem::build("G2");
    auto g2d = g2.langlands_dual();
    EXPECT_EQ(g2d.label(), "G2");
    EXPECT_EQ(g2d.half_length(0), Rational(1));
    EXPECT_EQ(g2d.half_length(1), Rational(1, 3));
    for (const char* t : {"B3", "C4", "F4", "E6"}) {
        auto rs = RootSystem::build(t);
        EXPECT_EQ(rs.langlands_dual().langlands_dual().cartan_matrix(), rs.cartan_matrix()) << t;
        EXPECT_EQ(rs.langlands_dual().dimension(), rs.dimension()) << t;
    }
}

TEST(RootSystem, OrbitsAndStar)
{
    auto a2 = RootSystem::build("A2");
    EXPECT_EQ(a2.weyl_orbit(vec({1, 0})).size(), 3u);
    EXPECT_EQ(a2.weyl_orbit(LatticeVec{}).size(), 1u);
    EXPECT_THROW(a2.weyl_orbit(vec({1, -1})), usage_error);
    auto a1 = RootSystem::build("A1");
    auto o = a1.weyl_orbit(vec({1}));
    ASSERT_EQ(o.size(), 2u);
    EXPECT_EQ(o[0].weight, vec({1}));
    EXPECT_EQ(o[0].sign, 1);
    EXPECT_EQ(o[1].weight, vec({-1}));
    EXPECT_EQ(o[1].sign, -1);

    EXPECT_EQ(a1.star(vec({3})), vec({3}));
    EXPECT_EQ(a2.star(vec({1, 0})), vec({0, 1}));
    auto d4 = RootSystem::build("D4");
    EXPECT_EQ(d4.star(vec({1, 0, 0, 0})), vec({1, 0, 0, 0}));
    auto e6 = RootSystem::build("E6");
    EXPECT_EQ(e6.star(vec({1, 0, 0, 0, 0, 0})), vec({0, 0, 0, 0, 0, 1}));
    EXPECT_THROW(a2.star(vec({-1, 0})), usage_error);
}

TEST(RootSystem, OrbitsMatchBruteForce)
{
    for (const char* t : {"A3", "B3", "C3", "G2", "D4", "F4"}) {
        auto rs = RootSystem::build(t);
        for (const auto& lam : {rs.rho_lattice(), rs.highest_root(), LatticeVec{} + rs.simple_root(0) + rs.simple_root(0)}) {
            auto dom = rs.dominantize(lam).first;
            auto ref = oracle::signed_orbit(rs, dom);
            auto got = rs.weyl_orbit(dom);
            ASSERT_EQ(got.size(), ref.size()) << t;
            EXPECT_EQ(rs.weyl_order() % static_cast<std::int64_t>(got.size()), 0) << t;
            for (const auto& e : got) {
                ASSERT_TRUE(ref.count(e.weight));
                if (dom == rs.rho_lattice()) EXPECT_EQ(e.sign, ref[e.weight]);
            }
            LatticeVec s = rs.star(dom);
            EXPECT_EQ(rs.star(s), dom);
            EXPECT_EQ(rs.inner(s, s), rs.inner(dom, dom));
            EXPECT_EQ(rs.in_root_lattice(s), rs.in_root_lattice(dom));
        }
    }
}

TEST(RootSystem, DominantWeightsInQ)
{
    auto a1 = RootSystem::build("A1");
    auto w0 = a1.dominant_weights_in_Q(Rational(0));
    ASSERT_EQ(w0.size(), 1u);
    EXPECT_EQ(w0[0], LatticeVec{});
    auto w1 = a1.dominant_weights_in_Q(Rational(1));
    ASSERT_EQ(w1.size(), 2u);
    EXPECT_EQ(w1[1], vec({2}));
    auto a2 = RootSystem::build("A2");
    auto v1 = a2.dominant_weights_in_Q(Rational(1));
    ASSERT_EQ(v1.size(), 2u);
    EXPECT_EQ(v1[1], vec({1, 1}));

    // Brute force over a coordinate box.
    auto b2 = RootSystem::build("B2");
    std::vector<LatticeVec> ref;
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= 8; ++b) {
            LatticeVec v = vec({a, b});
            if (b2.in_root_lattice(v) && b2.inner(v, v) <= Rational(8)) ref.push_back(v);
        }
    auto got = b2.dominant_weights_in_Q(Rational(4));
    EXPECT_EQ(got.size(), ref.size());
    for (std::size_t i = 1; i < got.size(); ++i)
        EXPECT_LE(b2.inner(got[i - 1], got[i - 1]), b2.inner(got[i], got[i]));
}

TEST(RootSystem, RootLatticeBallCountsA1)
{
    auto a1 = RootSystem::build("A1");
    // m alpha has (m alpha, m alpha)/2 = m^2.
    EXPECT_EQ(a1.root_lattice_ball(Rational(4)).size(), 5u);
    EXPECT_EQ(a1.root_lattice_ball(Rational(3)).size(), 3u);
    auto a2 = RootSystem::build("A2");
    // Hexagonal lattice: 1 + 6 vectors of norm 1 + 6 of norm 3 + 6 of norm 4.
    EXPECT_EQ(a2.root_lattice_ball(Rational(4)).size(), 19u);
}

TEST(RootSystem, ExponentsAndOrders)
{
    EXPECT_EQ(RootSystem::build("E6").exponents(), (std::vector<int>{1, 4, 5, 7, 8, 11}));
    EXPECT_EQ(RootSystem::build("G2").weyl_order(), 12);
    EXPECT_EQ(RootSystem::build("F4").weyl_order(), 1152);
    EXPECT_EQ(RootSystem::build("B4").weyl_order(), 384);
}
