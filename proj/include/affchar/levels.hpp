#pragma once

// Level arithmetic: Feigin-Frenkel duality, kernel partners, gluing levels
// and the conformal weights h(lambda) of the summands of the kernel algebras.

#include <affchar/characters.hpp>
#include <affchar/rootsys.hpp>

#include <string>
#include <utility>

namespace affchar {

struct LevelRelation {
    enum class Kind { ff_dual, gluing_first, gluing_second, kernel };

    Kind kind;
    std::int64_t n = 0;
    LevelValue input;
    LevelValue output;

    static std::string kind_name(Kind k)
    {
        switch (k) {
        case Kind::ff_dual:
            return "ff_dual";
        case Kind::gluing_first:
            return "gluing_first";
        case Kind::gluing_second:
            return "gluing_second";
        case Kind::kernel:
            return "kernel";
        }
        return "";
    }
};

namespace detail {

inline Rational noncritical_shift(const RootSystem& rs, const LevelValue& k, const char* what)
{
    Rational s = k.shifted(rs);
    if (s.is_zero()) throw usage_error(std::string("affchar: critical level in ") + what);
    return s;
}

} // namespace detail

/// kappa-check on the Langlands dual with r^vee (kappa + h^vee)(kappa-check + h-check^vee) = 1.
inline LevelValue ff_dual_level(const RootSystem& rs, const LevelValue& kappa)
{
    Rational s = detail::noncritical_shift(rs, kappa, "ff_dual_level");
    RootSystem dual = rs.langlands_dual();
    Rational r(rs.lacity());
    return level(dual, (r * s).inverse() - Rational(dual.dual_coxeter()));
}

/// kappa* with 1/(kappa + h^vee) + 1/(kappa* + h^vee) = r^vee n.
inline LevelValue kernel_partner_level(const RootSystem& rs, const LevelValue& kappa, std::int64_t n)
{
    if (n < 0) throw usage_error("affchar: kernel_partner_level needs n >= 0");
    Rational s = detail::noncritical_shift(rs, kappa, "kernel_partner_level");
    Rational inv = Rational(rs.lacity()) * Rational(n) - s.inverse();
    if (inv.is_zero())
        throw usage_error("affchar: degenerate level " + kappa.kappa.str() + ": 1/(kappa+h^vee) = r^vee n has no partner");
    return level(rs, inv.inverse() - Rational(rs.dual_coxeter()));
}

/// From kappa-check on the dual algebra: kappa and varkappa with
/// r^vee (kappa + h^vee)(kappa-check + h-check^vee) = 1 and
/// r^vee (kappa-check + n + h-check^vee)(varkappa + h^vee) = 1.
inline std::pair<LevelValue, LevelValue> gluing_levels(const RootSystem& rs, const LevelValue& kappa_check,
                                                       std::int64_t n)
{
    if (n < 0) throw usage_error("affchar: gluing_levels needs n >= 0");
    RootSystem dual = rs.langlands_dual();
    Rational s = detail::noncritical_shift(dual, kappa_check, "gluing_levels");
    Rational sn = s + Rational(n);
    if (sn.is_zero()) throw usage_error("affchar: gluing_levels: kappa-check + n is critical");
    Rational r(rs.lacity());
    Rational h(rs.dual_coxeter());
    return {level(rs, (r * s).inverse() - h), level(rs, (r * sn).inverse() - h)};
}

namespace detail {

inline void require_q_plus(const RootSystem& rs, const Weight& lambda)
{
    rs.check(lambda);
    if (!lambda.is_integral() || !rs.is_dominant(lambda) || !rs.in_root_lattice(lambda))
        throw usage_error("affchar: conformal weight needs lambda in Q^+");
}

} // namespace detail

/// (lambda, lambda+2rho)/(2(kappa+h^vee)) + (lambda, lambda+2rho)/(2(kappa*+h^vee)) - (lambda, rho^vee)
/// with kappa* the kernel partner of kappa for n.
inline Rational conformal_weight(const RootSystem& rs, const Weight& lambda, const LevelValue& kappa, std::int64_t n)
{
    detail::require_q_plus(rs, lambda);
    LevelValue partner = kernel_partner_level(rs, kappa, n);
    Rational s = kappa.shifted(rs);
    Rational s_star = detail::noncritical_shift(rs, partner, "conformal_weight");
    Rational c = casimir(rs, lambda.to_lattice());
    return c / (Rational(2) * s) + c / (Rational(2) * s_star) - rs.inner(lambda, rs.rho_check());
}

/// (lambda, lambda) r^vee n / 2 + (lambda, n r^vee rho - rho^vee).
inline Rational conformal_weight_closed(const RootSystem& rs, const Weight& lambda, std::int64_t n)
{
    detail::require_q_plus(rs, lambda);
    Rational rn = Rational(rs.lacity()) * Rational(n);
    return rs.inner(lambda, lambda) * rn / Rational(2) + rn * rs.inner(lambda, rs.rho()) -
           rs.inner(lambda, rs.rho_check());
}

} // namespace affchar
