#include "oracles.hpp"

#include <affchar/identities.hpp>
#include <affchar/levels.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace affchar;

namespace {

Rational random_rational(std::mt19937& rng)
{
    std::uniform_int_distribution<int> n(-40, 40), d(1, 13);
    return Rational(n(rng), d(rng));
}

} // namespace

TEST(Levels, FeiginFrenkelExamples)
{
    auto a1 = RootSystem::build("A1");
    EXPECT_EQ(ff_dual_level(a1, level(a1, Rational(0))).kappa, Rational(-3, 2));
    auto b2 = RootSystem::build("B2");
    // kappa + h^vee = 1 gives kappa-check + h-check^vee = 1/2.
    auto kc = ff_dual_level(b2, level(b2, Rational(1 - b2.dual_coxeter())));
    EXPECT_EQ(kc.system, "C2");
    EXPECT_EQ(kc.kappa + Rational(b2.langlands_dual().dual_coxeter()), Rational(1, 2));
    EXPECT_THROW(ff_dual_level(a1, level(a1, Rational(-2))), usage_error);
    EXPECT_THROW(ff_dual_level(a1, level(b2, Rational(0))), usage_error);
}

TEST(Levels, FeiginFrenkelInvolution)
{
    std::mt19937 rng(3);
    for (const char* t : {"A1", "A2", "B2", "C3", "G2", "F4", "D4"}) {
        auto rs = RootSystem::build(t);
        auto dual = rs.langlands_dual();
        for (int i = 0; i < 10; ++i) {
            LevelValue k = level(rs, random_rational(rng));
            if (k.shifted(rs).is_zero()) continue;
            LevelValue kc = ff_dual_level(rs, k);
            EXPECT_EQ(Rational(rs.lacity()) * k.shifted(rs) * kc.shifted(dual), Rational(1));
            LevelValue back = ff_dual_level(dual, kc);
            EXPECT_EQ(back.kappa, k.kappa);
            EXPECT_EQ(back.system, rs.label());
        }
    }
}

TEST(Levels, KernelPartner)
{
    auto a2 = RootSystem::build("A2");
    // kappa + h^vee = 2 -> 2 and 3 -> 3/2 at n = 1.
    EXPECT_EQ(kernel_partner_level(a2, level(a2, Rational(-1)), 1).shifted(a2), Rational(2));
    EXPECT_EQ(kernel_partner_level(a2, level(a2, Rational(0)), 1).shifted(a2), Rational(3, 2));
    EXPECT_THROW(kernel_partner_level(a2, level(a2, Rational(-2)), 1), usage_error);
    EXPECT_THROW(kernel_partner_level(a2, level(a2, Rational(-3)), 1), usage_error);
    std::mt19937 rng(9);
    for (const char* t : {"A1", "B2", "G2"}) {
        auto rs = RootSystem::build(t);
        for (int n = 1; n <= 3; ++n)
            for (int i = 0; i < 10; ++i) {
                LevelValue k = level(rs, random_rational(rng));
                Rational s = k.shifted(rs);
                if (s.is_zero() || s.inverse() == Rational(rs.lacity() * n)) continue;
                LevelValue p = kernel_partner_level(rs, k, n);
                EXPECT_EQ(s.inverse() + p.shifted(rs).inverse(), Rational(rs.lacity() * n));
                EXPECT_EQ(kernel_partner_level(rs, p, n).kappa, k.kappa);
            }
    }
}

TEST(Levels, Gluing)
{
    auto a1 = RootSystem::build("A1");
    auto [k, vk] = gluing_levels(a1, level(a1, Rational(-1)), 1);
    EXPECT_EQ(k.shifted(a1), Rational(1));
    EXPECT_EQ(vk.shifted(a1), Rational(1, 2));
    LevelValue ks = kernel_partner_level(a1, k, 0);
    EXPECT_EQ(ks.shifted(a1), Rational(-1));
    EXPECT_EQ(ks.shifted(a1).inverse() + vk.shifted(a1).inverse(), Rational(1));

    std::mt19937 rng(21);
    for (const char* t : {"A1", "A3", "B2", "C2", "G2"}) {
        auto rs = RootSystem::build(t);
        auto dual = rs.langlands_dual();
        for (std::int64_t n = 0; n <= 3; ++n)
            for (int i = 0; i < 10; ++i) {
                LevelValue kc = level(dual, random_rational(rng));
                Rational s = kc.shifted(dual);
                if (s.is_zero() || (s + Rational(n)).is_zero()) continue;
                auto [kk, vv] = gluing_levels(rs, kc, n);
                Rational r(rs.lacity());
                EXPECT_EQ(r * kk.shifted(rs) * s, Rational(1));
                EXPECT_EQ(r * (s + Rational(n)) * vv.shifted(rs), Rational(1));
                LevelValue star = kernel_partner_level(rs, kk, 0);
                EXPECT_EQ(star.shifted(rs).inverse() + vv.shifted(rs).inverse(), r * Rational(n));
                // Solving back from kappa recovers kappa-check.
                EXPECT_EQ(ff_dual_level(rs, kk).kappa, kc.kappa);
            }
    }
}

TEST(ConformalWeight, ExamplesAndAgreement)
{
    auto a2 = RootSystem::build("A2");
    EXPECT_EQ(conformal_weight_closed(a2, a2.zero(), 1), Rational(0));
    EXPECT_EQ(conformal_weight_closed(a2, a2.weight(a2.highest_root()), 1), Rational(1));
    auto b2 = RootSystem::build("B2");
    Weight theta = b2.weight(b2.highest_root());
    LevelValue k = level(b2, Rational(5 - b2.dual_coxeter()));
    EXPECT_EQ(conformal_weight(b2, theta, k, 1), conformal_weight_closed(b2, theta, 1));
    EXPECT_THROW(conformal_weight_closed(a2, a2.weight(LatticeVec{1, 0}), 1), usage_error);

    std::mt19937 rng(4);
    for (const char* t : {"A1", "A2", "A3", "B2", "D4", "G2"}) {
        auto rs = RootSystem::build(t);
        for (int n = 1; n <= 3; ++n) {
            for (const auto& lam : rs.dominant_weights_in_Q(Rational(4))) {
                Weight w = rs.weight(lam);
                Rational closed = conformal_weight_closed(rs, w, n);
                if (!(lam == LatticeVec{})) {
                    EXPECT_GT(closed, Rational(0)) << t;
                }
                for (int i = 0; i < 5; ++i) {
                    LevelValue kv = level(rs, random_rational(rng));
                    Rational s = kv.shifted(rs);
                    if (s.is_zero() || s.inverse() == Rational(rs.lacity() * n)) continue;
                    EXPECT_EQ(conformal_weight(rs, w, kv, n), closed) << t;
                }
            }
        }
    }
}

TEST(Gko, A1OrderZeroAndOne)
{
    auto a1 = RootSystem::build("A1");
    auto r0 = verify_gko(a1, Rational(0), Specialization::full(a1));
    EXPECT_TRUE(r0.pass);
    auto rhs1 = gko_rhs(a1, Rational(1), Specialization::trivial());
    EXPECT_EQ(rhs1.coeff(Rational(1)), GroupRingElt::constant(6));
    auto r1 = verify_gko(a1, Rational(1), Specialization::trivial());
    EXPECT_TRUE(r1.pass);
    EXPECT_FALSE(r1.first_mismatch.has_value());
}

TEST(Gko, PassesAndIsKappaIndependent)
{
    for (auto [t, order] : {std::pair{"A1", 6}, std::pair{"A2", 4}}) {
        auto rs = RootSystem::build(t);
        for (const auto& spec : {Specialization::full(rs), Specialization::trivial(), Specialization::ray(rs, rs.rho_check())}) {
            auto rep = verify_gko(rs, Rational(order), spec, {Rational(7, 3), Rational(11, 5), Rational(-5, 2)});
            EXPECT_TRUE(rep.pass) << t << " " << spec.name() << " " << rep.to_json().dump();
            EXPECT_TRUE(rep.details["kappa_independent"].get<bool>());
        }
    }
}

TEST(Gko, LhsMatchesForDifferentSamples)
{
    auto a2 = RootSystem::build("A2");
    auto spec = Specialization::full(a2);
    auto l1 = gko_lhs(a2, level(a2, Rational(7, 3) - Rational(3)), Rational(3), spec);
    auto l2 = gko_lhs(a2, level(a2, Rational(13, 4) - Rational(3)), Rational(3), spec, 4);
    EXPECT_EQ(l1.canonical(), l2.canonical());
}

TEST(Gko, Preconditions)
{
    auto b2 = RootSystem::build("B2");
    EXPECT_THROW(verify_gko(b2, Rational(2), Specialization::trivial()), usage_error);
    auto a1 = RootSystem::build("A1");
    EXPECT_THROW(verify_gko(a1, Rational(-1), Specialization::trivial()), usage_error);
    EXPECT_THROW(verify_gko(a1, Rational(2), Specialization::trivial(), {Rational(1)}), usage_error);
    auto e6 = RootSystem::build("E6");
    EXPECT_THROW(verify_gko(e6, Rational(1), Specialization::full(e6)), usage_error);
}

TEST(Gko, DetectsBrokenAssembly)
{
    // Dropping one summand must produce a mismatch at q^{(theta, theta)/2} = q^1.
    auto a1 = RootSystem::build("A1");
    auto spec = Specialization::full(a1);
    auto lhs = gko_lhs(a1, level(a1, Rational(1, 3)), Rational(2), spec);
    auto kappa = level(a1, Rational(1, 3));
    auto partner = kernel_partner_level(a1, kappa, 1);
    auto theta = a1.highest_root();
    auto broken = lhs - (weyl_module_char(a1, theta, kappa, Rational(3), spec) *
                         t_module_char(a1, a1.star(theta), partner, Rational(3)))
                            .truncated(Rational(2));
    auto mm = first_mismatch(broken, gko_rhs(a1, Rational(2), spec));
    ASSERT_TRUE(mm.has_value());
    EXPECT_EQ(mm->exponent, Rational(1));
}

TEST(Kw, Passes)
{
    for (auto [t, order] : {std::pair{"A1", 8}, std::pair{"A2", 6}, std::pair{"B2", 0}}) {
        auto rs = RootSystem::build(t);
        if (!rs.type().simply_laced()) {
            EXPECT_THROW(verify_kw(rs, Rational(order), Specialization::full(rs)), usage_error);
            continue;
        }
        auto rep = verify_kw(rs, Rational(order), Specialization::full(rs));
        EXPECT_TRUE(rep.pass) << rep.to_json().dump();
    }
    auto d4 = RootSystem::build("D4");
    EXPECT_TRUE(verify_kw(d4, Rational(2), Specialization::ray(d4, d4.rho_check())).pass);
    EXPECT_TRUE(verify_kw(d4, Rational(0), Specialization::full(d4)).pass);
}
