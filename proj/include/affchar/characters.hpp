#pragma once

// Characters of finite irreducibles, affine Weyl modules, principal
// W-algebra modules T_{lambda,0}, the affine denominator and the level-one
// lattice vertex algebra of a simply-laced type.

#include <affchar/rootsys.hpp>
#include <affchar/series.hpp>

#include <algorithm>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

namespace affchar {

/// Level kappa attached to a root system (exact rational).
struct LevelValue {
    Rational kappa;
    std::string system;

    Rational shifted(const RootSystem& rs) const
    {
        if (system != rs.label()) throw usage_error("affchar: level of " + system + " used with " + rs.label());
        return kappa + Rational(rs.dual_coxeter());
    }

    friend bool operator==(const LevelValue&, const LevelValue&) = default;
};

inline LevelValue level(const RootSystem& rs, const Rational& kappa) { return LevelValue{kappa, rs.label()}; }

struct FiniteCharacter {
    LatticeVec highest_weight;
    GroupRingElt multiplicities;

    std::int64_t dimension() const { return multiplicities.augmentation(); }
};

/// Casimir eigenvalue (lambda, lambda + 2 rho).
inline Rational casimir(const RootSystem& rs, const LatticeVec& lambda)
{
    LatticeVec two_rho = 2 * rs.rho_lattice();
    return rs.inner(lambda, lambda + two_rho);
}

/// Dominant weights of L_lambda: dominant mu with lambda - mu in Q^+.
inline std::vector<LatticeVec> dominant_weights_below(const RootSystem& rs, const LatticeVec& lambda)
{
    std::unordered_set<LatticeVec, LatticeVecHash> seen{lambda};
    std::vector<LatticeVec> stack{lambda};
    while (!stack.empty()) {
        LatticeVec mu = stack.back();
        stack.pop_back();
        for (const auto& a : rs.positive_roots()) {
            LatticeVec nu = mu - a;
            if (rs.is_dominant(nu) && seen.insert(nu).second) stack.push_back(nu);
        }
    }
    return {seen.begin(), seen.end()};
}

/// Dominant-weight multiplicities of L_lambda by Freudenthal's recursion.
inline std::map<LatticeVec, std::int64_t> dominant_multiplicities(const RootSystem& rs, const LatticeVec& lambda)
{
    if (!rs.is_dominant(lambda)) throw usage_error("affchar: finite_char needs a dominant weight");
    const LatticeVec rho = rs.rho_lattice();
    std::vector<std::pair<std::int64_t, LatticeVec>> order;
    for (const auto& mu : dominant_weights_below(rs, lambda)) order.emplace_back(rs.inner_scaled(mu + rho, mu + rho), mu);
    // |mu + rho|^2 strictly decreases down the dominance order on dominant weights.
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    std::map<LatticeVec, std::int64_t> mult;
    const std::int64_t top = rs.inner_scaled(lambda + rho, lambda + rho);
    for (const auto& [norm, mu] : order) {
        if (mu == lambda) {
            mult[mu] = 1;
            continue;
        }
        std::int64_t acc = 0;
        for (const auto& a : rs.positive_roots()) {
            for (LatticeVec nu = mu + a;; nu = nu + a) {
                auto it = mult.find(rs.dominantize(nu).first);
                if (it == mult.end()) break;
                acc = detail::checked_add(acc, detail::checked_mul(it->second, rs.inner_scaled(nu, a)));
            }
        }
        std::int64_t den = top - norm;
        if ((2 * acc) % den != 0) throw std::logic_error("affchar: Freudenthal recursion produced a non-integer");
        std::int64_t m = 2 * acc / den;
        if (m > 0) mult[mu] = m;
    }
    return mult;
}

inline FiniteCharacter finite_char(const RootSystem& rs, const LatticeVec& lambda)
{
    std::vector<GroupRingElt::Term> terms;
    for (const auto& [mu, m] : dominant_multiplicities(rs, lambda))
        for (const auto& o : rs.weyl_orbit(mu)) terms.emplace_back(o.weight, m);
    return FiniteCharacter{lambda, GroupRingElt::from_terms(std::move(terms))};
}

inline FiniteCharacter finite_char(const RootSystem& rs, const Weight& lambda)
{
    rs.check(lambda);
    if (!lambda.is_integral() || !rs.is_dominant(lambda)) throw usage_error("affchar: finite_char needs lambda in P^+");
    return finite_char(rs, lambda.to_lattice());
}

/// Signed orbit sum sum_w eps(w) e^{w v} for a dominant weight v.
inline GroupRingElt alternating_sum(const RootSystem& rs, const LatticeVec& v)
{
    std::vector<GroupRingElt::Term> terms;
    for (const auto& o : rs.weyl_orbit(v)) terms.emplace_back(o.weight, o.sign);
    return GroupRingElt::from_terms(std::move(terms));
}

/// Decomposes a W-invariant element of Z[P] into irreducible characters by
/// repeatedly removing the character of a maximal dominant weight.
inline std::vector<std::pair<LatticeVec, std::int64_t>> decompose(const RootSystem& rs, GroupRingElt g)
{
    std::vector<std::pair<LatticeVec, std::int64_t>> out;
    const LatticeVec rho = rs.rho_lattice();
    while (!g.empty()) {
        const GroupRingElt::Term* best = nullptr;
        std::int64_t best_norm = 0;
        for (const auto& t : g.terms()) {
            if (!rs.is_dominant(t.first)) continue;
            std::int64_t n = rs.inner_scaled(t.first + rho, t.first + rho);
            if (!best || n > best_norm) {
                best = &t;
                best_norm = n;
            }
        }
        if (!best) throw usage_error("affchar: decompose needs a W-invariant element");
        auto [mu, m] = *best;
        out.emplace_back(mu, m);
        g = GroupRingElt::axpy(g, finite_char(rs, mu).multiplicities, -m);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

inline GroupRingElt halve(const GroupRingElt& g)
{
    std::vector<GroupRingElt::Term> t;
    for (const auto& [v, c] : g.terms()) {
        if (c % 2 != 0) throw std::logic_error("affchar: symmetric power character is not integral");
        t.emplace_back(v, c / 2);
    }
    return GroupRingElt::from_terms(std::move(t));
}

} // namespace detail

/// Character of the exterior square of L_lambda.
inline GroupRingElt alt2_char(const RootSystem& rs, const LatticeVec& lambda)
{
    GroupRingElt chi = finite_char(rs, lambda).multiplicities;
    return detail::halve(chi * chi - chi.frobenius2());
}

/// Character of the symmetric square of L_lambda.
inline GroupRingElt sym2_char(const RootSystem& rs, const LatticeVec& lambda)
{
    GroupRingElt chi = finite_char(rs, lambda).multiplicities;
    return detail::halve(chi * chi + chi.frobenius2());
}

inline std::vector<std::pair<LatticeVec, std::int64_t>> alt2_decompose(const RootSystem& rs, const LatticeVec& lambda)
{
    return decompose(rs, alt2_char(rs, lambda));
}

inline std::vector<std::pair<LatticeVec, std::int64_t>> sym2_decompose(const RootSystem& rs, const LatticeVec& lambda)
{
    return decompose(rs, sym2_char(rs, lambda));
}

/// 1 / (q;q)_inf^power as a weight-free series.
inline GradedCharacter euler_inverse_power(std::size_t power, const Rational& order)
{
    GradedCharacter f = GradedCharacter::one(0, order);
    for (std::int64_t p = 1; Rational(p) <= order; ++p)
        for (std::size_t i = 0; i < power; ++i) f.divide_by_one_minus(LatticeVec{}, Rational(p));
    return f;
}

namespace detail {

template <class Step>
GradedCharacter denominator_product(const RootSystem& rs, const Rational& order, const Specialization& spec, Step step)
{
    GradedCharacter f = spec.one(order);
    for (std::int64_t p = 1; Rational(p) <= order; ++p) {
        for (std::size_t i = 0; i < rs.rank(); ++i) step(f, LatticeVec{}, Rational(p));
        for (const auto& a : rs.positive_roots()) {
            step(f, spec.key(a), Rational(p));
            step(f, spec.key(-a), Rational(p));
        }
    }
    return f;
}

/// Series that vanishes identically up to the given (possibly negative) order.
inline GradedCharacter zero_series(const Specialization& spec, const Rational& order)
{
    return GradedCharacter(spec.key_dim(), order, spec.weight_den());
}

} // namespace detail

/// D = (q;q)^rank prod_{alpha > 0} (e^alpha q, e^-alpha q; q)_inf.
inline GradedCharacter denominator_D(const RootSystem& rs, const Rational& order, const Specialization& spec)
{
    return detail::denominator_product(rs, order, spec, [](GradedCharacter& f, const LatticeVec& mu, const Rational& s) {
        f.multiply_by_one_minus(mu, s);
    });
}

/// 1/D, computed factor by factor (no series inversion).
inline GradedCharacter inverse_denominator(const RootSystem& rs, const Rational& order, const Specialization& spec)
{
    if (order.sign() < 0) return detail::zero_series(spec, order);
    return detail::denominator_product(rs, order, spec, [](GradedCharacter& f, const LatticeVec& mu, const Rational& s) {
        f.divide_by_one_minus(mu, s);
    });
}

/// Conformal weight of the top space of the Weyl module: C(lambda) / (2 (kappa + h^vee)).
inline Rational weyl_top_weight(const RootSystem& rs, const LatticeVec& lambda, const LevelValue& kappa)
{
    Rational s = kappa.shifted(rs);
    if (s.is_zero()) throw usage_error("affchar: critical level kappa = -h^vee");
    return casimir(rs, lambda) / (Rational(2) * s);
}

/// ch V^kappa_lambda = q^{h_kappa(lambda)} ch L_lambda / D.
/// `inverse_d`, when given, must be 1/D in the same specialization with
/// order at least order - h_kappa(lambda).
inline GradedCharacter weyl_module_char(const RootSystem& rs, const LatticeVec& lambda, const LevelValue& kappa,
                                        const Rational& order, const Specialization& spec,
                                        const GradedCharacter* inverse_d = nullptr)
{
    if (!rs.is_dominant(lambda)) throw usage_error("affchar: weyl_module_char needs lambda in P^+");
    Rational h = weyl_top_weight(rs, lambda, kappa);
    Rational inner_order = order - h;
    if (inner_order.sign() < 0) return detail::zero_series(spec, order);
    GradedCharacter inv = inverse_d ? inverse_d->truncated(inner_order) : inverse_denominator(rs, inner_order, spec);
    if (inv.order() != inner_order) throw usage_error("affchar: supplied 1/D is truncated too low");
    GroupRingElt top = spec.apply(finite_char(rs, lambda).multiplicities);
    return inv.scaled(top).shifted(h);
}

/// Lowest q-exponent of ch T^kappa_{lambda,0}:
/// C(lambda)/(2 (kappa + h^vee)) + (rho, rho) - (lambda + rho, rho).
inline Rational t_module_lowest_exponent(const RootSystem& rs, const LatticeVec& lambda, const LevelValue& kappa)
{
    const LatticeVec rho = rs.rho_lattice();
    return weyl_top_weight(rs, lambda, kappa) + rs.inner(rho, rho) - rs.inner(lambda + rho, rho);
}

/// ch T^kappa_{lambda,0} = q^{C(lambda)/(2(kappa+h^vee)) + (rho,rho)} (q;q)^{-rank}
///                          sum_w eps(w) q^{-(w(lambda+rho), rho)}   (weight-free).
inline GradedCharacter t_module_char(const RootSystem& rs, const LatticeVec& lambda, const LevelValue& kappa,
                                     const Rational& order)
{
    if (!rs.is_dominant(lambda)) throw usage_error("affchar: t_module_char needs lambda in P^+");
    const LatticeVec rho = rs.rho_lattice();
    const LatticeVec shifted = lambda + rho;
    const Rational lowest = t_module_lowest_exponent(rs, lambda, kappa);
    const Rational inner_order = order - lowest;
    if (inner_order.sign() < 0) return GradedCharacter(0, order);
    // Alternating sum normalized to start at q^0: exponents (lambda+rho - w(lambda+rho), rho) >= 0.
    GradedCharacter alt(0, inner_order);
    const Rational top = rs.inner(shifted, rho);
    for (const auto& o : rs.weyl_orbit(shifted))
        alt.add_term(top - rs.inner(o.weight, rho), GroupRingElt::constant(o.sign));
    return (alt * euler_inverse_power(rs.rank(), inner_order)).shifted(lowest);
}

/// Theta function of the root lattice, sum_{lambda in Q} q^{(lambda,lambda)/2} e^lambda.
inline GradedCharacter root_lattice_theta(const RootSystem& rs, const Rational& order, const Specialization& spec)
{
    GradedCharacter theta(spec.key_dim(), order, spec.weight_den());
    if (order.sign() < 0) return theta;
    for (const auto& v : rs.root_lattice_ball(order))
        theta.add_term(rs.inner(v, v) / Rational(2), GroupRingElt::monomial(spec.key(v)));
    return theta;
}

/// ch L_1(g) = Theta_Q / (q;q)^rank for simply-laced g.
inline GradedCharacter level_one_char(const RootSystem& rs, const Rational& order, const Specialization& spec)
{
    if (!rs.type().simply_laced())
        throw usage_error("affchar: level_one_char needs a simply-laced (ADE) type, got " + rs.label());
    if (order.sign() < 0) throw usage_error("affchar: truncation order must be >= 0");
    return root_lattice_theta(rs, order, spec) * euler_inverse_power(rs.rank(), order);
}

} // namespace affchar
