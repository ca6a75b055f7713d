#pragma once

// Verifiers for the coset character identity
//   sum_{lambda in Q^+} ch V^kappa_lambda ch T^{kappa*}_{lambda*,0} = ch V^{kappa-1}(g) ch L_1(g)
// and for the lattice identity
//   sum_{lambda in Q^+} q^{(lambda,lambda)/2} ch L_lambda sum_w eps(w) q^{(lambda+rho-w(lambda+rho),rho)} = Theta_Q.

#include <affchar/characters.hpp>
#include <affchar/levels.hpp>
#include <affchar/parallel.hpp>
#include <affchar/rootsys.hpp>
#include <affchar/series.hpp>

#include <nlohmann/json.hpp>

#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace affchar {

struct Mismatch {
    Rational exponent;
    nlohmann::json lhs;
    nlohmann::json rhs;
};

struct IdentityReport {
    std::string identity;
    std::string type_label;
    Rational order;
    std::string specialization;
    bool pass = false;
    std::optional<Mismatch> first_mismatch;
    std::int64_t elapsed_ms = 0;
    nlohmann::json details = nlohmann::json::object();

    nlohmann::json to_json() const
    {
        nlohmann::json j = {{"identity", identity},
                            {"type", type_label},
                            {"order", order.str()},
                            {"specialization", specialization},
                            {"status", pass ? "pass" : "fail"},
                            {"elapsed_ms", elapsed_ms},
                            {"details", details}};
        if (first_mismatch)
            j["first_mismatch"] = {{"exponent", first_mismatch->exponent.str()},
                                   {"lhs", first_mismatch->lhs},
                                   {"rhs", first_mismatch->rhs}};
        else
            j["first_mismatch"] = nullptr;
        return j;
    }
};

/// Smallest exponent at which the two series differ (up to the smaller order).
inline std::optional<Mismatch> first_mismatch(const GradedCharacter& a, const GradedCharacter& b)
{
    Rational top = std::min(a.order(), b.order());
    std::set<Rational> exps;
    for (const auto& [e, g] : a.terms()) exps.insert(e);
    for (const auto& [e, g] : b.terms()) exps.insert(e);
    for (const auto& e : exps) {
        if (e > top) break;
        GroupRingElt ga = a.coeff(e), gb = b.coeff(e);
        if (!(ga == gb)) return Mismatch{e, a.coefficient_json(ga), b.coefficient_json(gb)};
    }
    return std::nullopt;
}

namespace detail {

inline void require_identity_inputs(const RootSystem& rs, const Rational& order, const Specialization& spec)
{
    if (!rs.type().simply_laced())
        throw usage_error("affchar: non-simply-laced type " + rs.label() + " (the identity needs type ADE)");
    if (order.sign() < 0) throw usage_error("affchar: truncation order must be >= 0");
    if (spec.mode() == Specialization::Mode::full && rs.rank() > 4)
        throw usage_error("affchar: full multivariate check limited to rank <= 4; use --spec trivial or ray");
}

inline std::int64_t elapsed_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace detail

/// Generic shifted levels kappa + h^vee used when none are supplied.
inline std::vector<Rational> default_gko_shifted_levels() { return {Rational(7, 3), Rational(11, 5)}; }

/// Sum over lambda in Q^+ of ch V^kappa_lambda * ch T^{kappa*}_{lambda*,0}, with
/// kappa* the n = 1 kernel partner of kappa, truncated at `order`.
inline GradedCharacter gko_lhs(const RootSystem& rs, const LevelValue& kappa, const Rational& order,
                               const Specialization& spec, unsigned threads = 1)
{
    detail::require_identity_inputs(rs, order, spec);
    const LevelValue partner = kernel_partner_level(rs, kappa, 1);
    // Every summand starts at q^{(lambda,lambda)/2}.
    const auto lambdas = rs.dominant_weights_in_Q(order);

    struct Plan {
        LatticeVec lambda, star;
        Rational order_w, order_t;
    };
    std::vector<Plan> plans;
    Rational need(0);
    for (const auto& lam : lambdas) {
        Plan p{lam, rs.star(lam), order, order};
        Rational lo = t_module_lowest_exponent(rs, p.star, partner);
        Rational h = weyl_top_weight(rs, lam, kappa);
        p.order_w = order - std::min(Rational(0), lo);
        p.order_t = order - std::min(Rational(0), h);
        need = std::max(need, p.order_w - h);
        plans.push_back(p);
    }
    const GradedCharacter inv_d = inverse_denominator(rs, need, spec);

    auto summands = parallel_map(plans.size(), threads, [&](std::size_t i) {
        const Plan& p = plans[i];
        GradedCharacter w = weyl_module_char(rs, p.lambda, kappa, p.order_w, spec, &inv_d);
        GradedCharacter t = t_module_char(rs, p.star, partner, p.order_t);
        GradedCharacter prod = w * t;
        if (prod.order() < order) throw std::logic_error("affchar: summand truncated below the requested order");
        return prod.truncated(order);
    });

    GradedCharacter lhs(spec.key_dim(), order, spec.weight_den());
    for (const auto& s : summands) lhs = lhs + s;
    lhs.normalize();
    return lhs;
}

/// ch V^{kappa-1}(g) ch L_1(g) = (1/D) Theta_Q / (q;q)^rank.
inline GradedCharacter gko_rhs(const RootSystem& rs, const Rational& order, const Specialization& spec)
{
    detail::require_identity_inputs(rs, order, spec);
    GradedCharacter rhs = inverse_denominator(rs, order, spec) * level_one_char(rs, order, spec);
    rhs.normalize();
    return rhs;
}

/// Checks the coset identity at each sampled shifted level kappa + h^vee and
/// that the assembled left side does not depend on the sample.
inline IdentityReport verify_gko(const RootSystem& rs, const Rational& order, const Specialization& spec,
                                 std::vector<Rational> shifted_levels = default_gko_shifted_levels(),
                                 unsigned threads = 1)
{
    auto t0 = std::chrono::steady_clock::now();
    detail::require_identity_inputs(rs, order, spec);
    if (shifted_levels.empty()) throw usage_error("affchar: verify_gko needs at least one kappa sample");
    for (const auto& s : shifted_levels) {
        if (s.is_zero() || s == Rational(1))
            throw usage_error("affchar: kappa + h^vee = " + s.str() + " is degenerate (critical or partner critical)");
    }

    IdentityReport rep;
    rep.identity = "gko";
    rep.type_label = rs.label();
    rep.order = order;
    rep.specialization = spec.name();

    GradedCharacter rhs = gko_rhs(rs, order, spec);
    nlohmann::json samples = nlohmann::json::array();
    std::optional<GradedCharacter> first_lhs;
    bool independent = true;
    for (const auto& s : shifted_levels) {
        LevelValue kappa = level(rs, s - Rational(rs.dual_coxeter()));
        LevelValue partner = kernel_partner_level(rs, kappa, 1);
        GradedCharacter lhs = gko_lhs(rs, kappa, order, spec, threads);
        auto mm = first_mismatch(lhs, rhs);
        samples.push_back({{"kappa", kappa.kappa.str()}, {"kappa_star", partner.kappa.str()},
                           {"status", mm ? "fail" : "pass"}});
        if (mm && !rep.first_mismatch) rep.first_mismatch = mm;
        if (!first_lhs) {
            first_lhs = lhs;
        } else if (lhs.canonical() != first_lhs->canonical()) {
            independent = false;
            if (!rep.first_mismatch) rep.first_mismatch = first_mismatch(*first_lhs, lhs);
        }
    }
    rep.pass = !rep.first_mismatch.has_value();
    rep.details = {{"kappa_samples", samples},
                   {"kappa_independent", independent},
                   {"series_terms", rhs.raw_terms().size()}};
    rep.elapsed_ms = detail::elapsed_since(t0);
    return rep;
}

/// Left side of the lattice identity.
inline GradedCharacter kw_lhs(const RootSystem& rs, const Rational& order, const Specialization& spec,
                              unsigned threads = 1)
{
    detail::require_identity_inputs(rs, order, spec);
    const LatticeVec rho = rs.rho_lattice();
    const auto lambdas = rs.dominant_weights_in_Q(order);
    auto summands = parallel_map(lambdas.size(), threads, [&](std::size_t i) {
        const LatticeVec& lam = lambdas[i];
        GradedCharacter f(spec.key_dim(), order, spec.weight_den());
        GroupRingElt top = spec.apply(finite_char(rs, lam).multiplicities);
        Rational base = rs.inner(lam, lam) / Rational(2);
        LatticeVec v = lam + rho;
        Rational vr = rs.inner(v, rho);
        for (const auto& o : rs.weyl_orbit(v)) f.add_term(base + vr - rs.inner(o.weight, rho), top.scaled(o.sign));
        return f;
    });
    GradedCharacter lhs(spec.key_dim(), order, spec.weight_den());
    for (const auto& s : summands) lhs = lhs + s;
    lhs.normalize();
    return lhs;
}

inline IdentityReport verify_kw(const RootSystem& rs, const Rational& order, const Specialization& spec,
                                unsigned threads = 1)
{
    auto t0 = std::chrono::steady_clock::now();
    detail::require_identity_inputs(rs, order, spec);
    IdentityReport rep;
    rep.identity = "kw";
    rep.type_label = rs.label();
    rep.order = order;
    rep.specialization = spec.name();
    GradedCharacter lhs = kw_lhs(rs, order, spec, threads);
    GradedCharacter rhs = root_lattice_theta(rs, order, spec);
    rhs.normalize();
    rep.first_mismatch = first_mismatch(lhs, rhs);
    rep.pass = !rep.first_mismatch.has_value();
    rep.details = {{"series_terms", rhs.raw_terms().size()}};
    rep.elapsed_ms = detail::elapsed_since(t0);
    return rep;
}

} // namespace affchar
