#pragma once

// Truncated formal series in q (rational exponents) with coefficients in the
// integral group ring Z[L] of a lattice L.
//
// A GradedCharacter knows every coefficient with exponent <= order(); terms
// above the order are discarded. Exponents are stored as integer numerators
// over a common denominator so that all arithmetic stays exact.

#include <affchar/lattice.hpp>
#include <affchar/rational.hpp>
#include <affchar/rootsys.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace affchar {

/// Finite Z-linear combination of formal exponentials e^v, sorted by v.
class GroupRingElt {
public:
    using Term = std::pair<LatticeVec, std::int64_t>;

    GroupRingElt() = default;

    static GroupRingElt monomial(const LatticeVec& v, std::int64_t c = 1)
    {
        GroupRingElt g;
        if (c != 0) g.terms_.emplace_back(v, c);
        return g;
    }
    static GroupRingElt constant(std::int64_t c) { return monomial(LatticeVec{}, c); }

    /// Sums duplicate keys and drops zeros.
    static GroupRingElt from_terms(std::vector<Term> terms)
    {
        std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
        GroupRingElt g;
        for (auto& [k, c] : terms) {
            if (!g.terms_.empty() && g.terms_.back().first == k)
                g.terms_.back().second = detail::checked_add(g.terms_.back().second, c);
            else
                g.terms_.emplace_back(k, c);
            if (g.terms_.back().second == 0) g.terms_.pop_back();
        }
        return g;
    }

    static GroupRingElt from_map(const std::unordered_map<LatticeVec, std::int64_t, LatticeVecHash>& m)
    {
        GroupRingElt g;
        g.terms_.reserve(m.size());
        for (const auto& [k, c] : m)
            if (c != 0) g.terms_.emplace_back(k, c);
        std::sort(g.terms_.begin(), g.terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
        return g;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    std::int64_t coeff(const LatticeVec& v) const
    {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                                   [](const Term& t, const LatticeVec& key) { return t.first < key; });
        return (it != terms_.end() && it->first == v) ? it->second : 0;
    }

    /// Sum of all coefficients (the image under e^v -> 1).
    std::int64_t augmentation() const
    {
        std::int64_t s = 0;
        for (const auto& t : terms_) s = detail::checked_add(s, t.second);
        return s;
    }

    GroupRingElt shifted(const LatticeVec& v) const
    {
        GroupRingElt g = *this;
        for (auto& t : g.terms_) t.first = t.first + v; // translation preserves the order
        return g;
    }

    GroupRingElt scaled(std::int64_t c) const
    {
        if (c == 0) return {};
        GroupRingElt g = *this;
        for (auto& t : g.terms_) t.second = detail::checked_mul(t.second, c);
        return g;
    }

    /// a + c * b
    static GroupRingElt axpy(const GroupRingElt& a, const GroupRingElt& b, std::int64_t c = 1)
    {
        GroupRingElt out;
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
                out.terms_.emplace_back(b.terms_[j].first, detail::checked_mul(c, b.terms_[j].second));
                ++j;
            } else {
                std::int64_t v = detail::checked_add(a.terms_[i].second, detail::checked_mul(c, b.terms_[j].second));
                if (v != 0) out.terms_.emplace_back(a.terms_[i].first, v);
                ++i;
                ++j;
            }
        }
        return out;
    }

    /// acc += a * b, accumulated in a hash map.
    static void multiply_into(std::unordered_map<LatticeVec, std::int64_t, LatticeVecHash>& acc, const GroupRingElt& a,
                              const GroupRingElt& b)
    {
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                auto& slot = acc[ka + kb];
                slot = detail::checked_add(slot, detail::checked_mul(ca, cb));
            }
    }

    friend GroupRingElt operator+(const GroupRingElt& a, const GroupRingElt& b) { return axpy(a, b, 1); }
    friend GroupRingElt operator-(const GroupRingElt& a, const GroupRingElt& b) { return axpy(a, b, -1); }
    friend GroupRingElt operator*(const GroupRingElt& a, const GroupRingElt& b)
    {
        std::unordered_map<LatticeVec, std::int64_t, LatticeVecHash> acc;
        multiply_into(acc, a, b);
        return from_map(acc);
    }
    friend bool operator==(const GroupRingElt&, const GroupRingElt&) = default;

    /// e^v -> e^{2v}.
    GroupRingElt frobenius2() const
    {
        GroupRingElt g = *this;
        for (auto& t : g.terms_) t.first = 2 * t.first;
        return g;
    }

private:
    std::vector<Term> terms_;
};

/// Truncated series sum_d q^d g_d, g_d in Z[L].
///
/// key_dim is the dimension of L (the rank for full characters, 1 for a ray
/// specialization, 0 for weight-free series); a weight-free series acts as a
/// scalar on any other. weight_den records that lattice coordinates stand for
/// coordinate / weight_den (used by ray specializations).
class GradedCharacter {
public:
    GradedCharacter() = default;
    GradedCharacter(std::size_t key_dim, Rational order, std::int64_t weight_den = 1)
        : key_dim_(key_dim), weight_den_(weight_den), order_(order)
    {
    }

    /// The multiplicative identity truncated at the given order.
    static GradedCharacter one(std::size_t key_dim, const Rational& order, std::int64_t weight_den = 1)
    {
        if (order.sign() < 0) throw usage_error("affchar: truncation order must be >= 0");
        GradedCharacter f(key_dim, order, weight_den);
        f.terms_[0] = GroupRingElt::constant(1);
        return f;
    }

    /// q^exponent * g (dropped when above the order).
    static GradedCharacter monomial(std::size_t key_dim, const Rational& order, const Rational& exponent,
                                    const GroupRingElt& g, std::int64_t weight_den = 1)
    {
        GradedCharacter f(key_dim, order, weight_den);
        f.add_term(exponent, g);
        return f;
    }

    std::size_t key_dim() const { return key_dim_; }
    std::int64_t weight_den() const { return weight_den_; }
    const Rational& order() const { return order_; }
    std::int64_t exponent_denominator() const { return den_; }
    const std::map<std::int64_t, GroupRingElt>& raw_terms() const { return terms_; }

    /// Terms as (exponent, coefficient) in increasing exponent order.
    std::vector<std::pair<Rational, GroupRingElt>> terms() const
    {
        std::vector<std::pair<Rational, GroupRingElt>> out;
        for (const auto& [k, g] : terms_) out.emplace_back(Rational(k, den_), g);
        return out;
    }

    GroupRingElt coeff(const Rational& exponent) const
    {
        if (exponent > order_) throw usage_error("affchar: coefficient above truncation order requested");
        std::int64_t l = detail::lcm_checked(den_, exponent.den());
        if (l != den_) return {};
        auto it = terms_.find((exponent * Rational(den_)).to_integer());
        return it == terms_.end() ? GroupRingElt{} : it->second;
    }

    /// Smallest exponent present, if any.
    std::optional<Rational> lowest_exponent() const
    {
        if (terms_.empty()) return std::nullopt;
        return Rational(terms_.begin()->first, den_);
    }

    /// A lower bound for the valuation: the lowest exponent if present, the
    /// order otherwise (the series vanishes up to its order).
    Rational valuation_bound() const
    {
        auto lo = lowest_exponent();
        return lo ? *lo : order_;
    }

    void add_term(const Rational& exponent, const GroupRingElt& g)
    {
        if (g.empty() || exponent > order_) return;
        rescale(detail::lcm_checked(den_, exponent.den()));
        std::int64_t k = (exponent * Rational(den_)).to_integer();
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, g);
        } else {
            it->second = it->second + g;
            if (it->second.empty()) terms_.erase(it);
        }
    }

    /// Lowers the truncation order, dropping terms above it.
    GradedCharacter truncated(const Rational& order) const
    {
        GradedCharacter f = *this;
        if (order >= order_) return f;
        f.order_ = order;
        for (auto it = f.terms_.begin(); it != f.terms_.end();)
            it = Rational(it->first, f.den_) > order ? f.terms_.erase(it) : std::next(it);
        return f;
    }

    /// Reduces the exponent denominator to the smallest one that represents
    /// all exponents present.
    void normalize()
    {
        std::int64_t g = den_;
        for (const auto& [k, v] : terms_) g = std::gcd(g, k);
        if (g <= 1) return;
        std::map<std::int64_t, GroupRingElt> t;
        for (auto& [k, v] : terms_) t.emplace(k / g, std::move(v));
        terms_ = std::move(t);
        den_ /= g;
    }

    /// q^exponent * f; the order moves with the series.
    GradedCharacter shifted(const Rational& exponent) const
    {
        GradedCharacter f(key_dim_, order_ + exponent, weight_den_);
        for (const auto& [k, g] : terms_) f.add_term(Rational(k, den_) + exponent, g);
        return f;
    }

    GradedCharacter scaled(std::int64_t c) const
    {
        GradedCharacter f(key_dim_, order_, weight_den_);
        if (c == 0) return f;
        f.den_ = den_;
        for (const auto& [k, g] : terms_) f.terms_.emplace(k, g.scaled(c));
        return f;
    }

    /// Multiplication by a rational scalar; the result must stay integral.
    GradedCharacter scaled(const Rational& c) const
    {
        GradedCharacter f = scaled(c.num());
        if (c.den() == 1) return f;
        for (auto& [k, g] : f.terms_) {
            std::vector<GroupRingElt::Term> t;
            for (const auto& [v, x] : g.terms()) {
                if (x % c.den() != 0) throw usage_error("affchar: scaling leaves the integral group ring");
                t.emplace_back(v, x / c.den());
            }
            g = GroupRingElt::from_terms(std::move(t));
        }
        return f;
    }

    /// Multiplication by a group-ring element.
    GradedCharacter scaled(const GroupRingElt& c) const
    {
        GradedCharacter f(key_dim_, order_, weight_den_);
        f.den_ = den_;
        for (const auto& [k, g] : terms_) {
            GroupRingElt p = g * c;
            if (!p.empty()) f.terms_.emplace(k, std::move(p));
        }
        return f;
    }

    friend GradedCharacter operator+(const GradedCharacter& a, const GradedCharacter& b)
    {
        GradedCharacter f(merged_dim(a, b), std::min(a.order_, b.order_), merged_den(a, b));
        for (const auto& [k, g] : a.terms_) f.add_term(Rational(k, a.den_), g);
        for (const auto& [k, g] : b.terms_) f.add_term(Rational(k, b.den_), g);
        return f;
    }

    friend GradedCharacter operator-(const GradedCharacter& a, const GradedCharacter& b) { return a + b.scaled(-1); }

    /// Product. The result order is min(N_a + min(0, v_b), N_b + min(0, v_a))
    /// with v the valuation bounds; for series supported in exponents >= 0
    /// this is min(N_a, N_b).
    friend GradedCharacter operator*(const GradedCharacter& a, const GradedCharacter& b)
    {
        Rational va = std::min(Rational(0), a.valuation_bound());
        Rational vb = std::min(Rational(0), b.valuation_bound());
        Rational order = std::min(a.order_ + vb, b.order_ + va);
        std::int64_t den = detail::lcm_checked(detail::lcm_checked(a.den_, b.den_), order.den());
        std::int64_t sa = den / a.den_, sb = den / b.den_;
        std::int64_t top = (order * Rational(den)).floor();
        GradedCharacter f(merged_dim(a, b), order, merged_den(a, b));
        f.den_ = den;
        std::map<std::int64_t, std::unordered_map<LatticeVec, std::int64_t, LatticeVecHash>> acc;
        for (const auto& [ka, ga] : a.terms_)
            for (const auto& [kb, gb] : b.terms_) {
                std::int64_t k = ka * sa + kb * sb;
                if (k > top) continue;
                GroupRingElt::multiply_into(acc[k], ga, gb);
            }
        for (auto& [k, m] : acc) {
            GroupRingElt g = GroupRingElt::from_map(m);
            if (!g.empty()) f.terms_.emplace(k, std::move(g));
        }
        return f;
    }

    /// In-place division by (1 - e^mu q^s), s > 0.
    void divide_by_one_minus(const LatticeVec& mu, const Rational& s)
    {
        if (s.sign() <= 0) throw usage_error("affchar: (1 - e^mu q^s)^-1 needs s > 0");
        rescale(detail::lcm_checked(den_, s.den()));
        std::int64_t step = (s * Rational(den_)).to_integer();
        std::int64_t top = (order_ * Rational(den_)).floor();
        // g = f + e^mu q^s g, solved in increasing exponent order.
        for (auto it = terms_.begin(); it != terms_.end(); ++it) {
            std::int64_t k = it->first + step;
            if (k > top) continue;
            GroupRingElt add = it->second.shifted(mu);
            auto jt = terms_.find(k);
            if (jt == terms_.end()) {
                terms_.emplace(k, std::move(add));
            } else {
                jt->second = jt->second + add;
                if (jt->second.empty()) terms_.erase(jt);
            }
        }
    }

    /// In-place multiplication by (1 - e^mu q^s), s > 0.
    void multiply_by_one_minus(const LatticeVec& mu, const Rational& s)
    {
        if (s.sign() <= 0) throw usage_error("affchar: factor (1 - e^mu q^s) needs s > 0");
        rescale(detail::lcm_checked(den_, s.den()));
        std::int64_t step = (s * Rational(den_)).to_integer();
        std::int64_t top = (order_ * Rational(den_)).floor();
        std::vector<std::pair<std::int64_t, GroupRingElt>> snapshot(terms_.begin(), terms_.end());
        for (const auto& [k0, g] : snapshot) {
            std::int64_t k = k0 + step;
            if (k > top) continue;
            auto jt = terms_.find(k);
            GroupRingElt sub = g.shifted(mu);
            if (jt == terms_.end()) {
                terms_.emplace(k, sub.scaled(-1));
            } else {
                jt->second = jt->second - sub;
                if (jt->second.empty()) terms_.erase(jt);
            }
        }
    }

    /// Exact equality of the truncations (order and all coefficients).
    friend bool operator==(const GradedCharacter& a, const GradedCharacter& b)
    {
        if (a.order_ != b.order_ || a.terms_.size() != b.terms_.size()) return false;
        auto ta = a.terms(), tb = b.terms();
        return ta == tb;
    }

    /// Canonical JSON: terms sorted by exponent, coefficients by weight.
    nlohmann::json to_json() const
    {
        nlohmann::json series = nlohmann::json::array();
        for (const auto& [k, g] : terms_)
            series.push_back({{"exponent", Rational(k, den_).str()}, {"terms", coefficient_json(g)}});
        return {{"truncation_order", order_.str()}, {"series", series}};
    }

    std::string canonical() const { return to_json().dump(); }

    /// A group-ring coefficient of this series as [{weight, coeff}, ...].
    nlohmann::json coefficient_json(const GroupRingElt& g) const
    {
        nlohmann::json ts = nlohmann::json::array();
        for (const auto& [v, c] : g.terms()) {
            nlohmann::json w = nlohmann::json::array();
            for (std::size_t i = 0; i < key_dim_; ++i) {
                if (weight_den_ == 1)
                    w.push_back(v[i]);
                else
                    w.push_back(Rational(v[i], weight_den_).str());
            }
            ts.push_back({{"weight", w}, {"coeff", c}});
        }
        return ts;
    }

private:
    static std::size_t merged_dim(const GradedCharacter& a, const GradedCharacter& b)
    {
        if (a.key_dim_ != 0 && b.key_dim_ != 0 && (a.key_dim_ != b.key_dim_ || a.weight_den_ != b.weight_den_))
            throw usage_error("affchar: series over different lattices combined");
        return std::max(a.key_dim_, b.key_dim_);
    }
    static std::int64_t merged_den(const GradedCharacter& a, const GradedCharacter& b)
    {
        return a.key_dim_ != 0 ? a.weight_den_ : b.weight_den_;
    }

    void rescale(std::int64_t new_den)
    {
        if (new_den == den_) return;
        std::int64_t f = new_den / den_;
        std::map<std::int64_t, GroupRingElt> t;
        for (auto& [k, g] : terms_) t.emplace(detail::checked_mul(k, f), std::move(g));
        terms_ = std::move(t);
        den_ = new_den;
    }

    std::size_t key_dim_ = 0;
    std::int64_t weight_den_ = 1;
    Rational order_{0};
    std::int64_t den_ = 1;
    std::map<std::int64_t, GroupRingElt> terms_;
};

/// prod_{p >= 0} (1 - e^mu q^{s+p})^{-1}, truncated at the order.
inline GradedCharacter pochhammer_inverse(std::size_t key_dim, const LatticeVec& mu, const Rational& shift,
                                          const Rational& order)
{
    if (shift.sign() <= 0) throw usage_error("affchar: pochhammer_inverse needs shift > 0");
    GradedCharacter f = GradedCharacter::one(key_dim, order);
    for (Rational s = shift; s <= order; s += Rational(1)) f.divide_by_one_minus(mu, s);
    return f;
}

/// Maps full-rank weights into the lattice of a (possibly specialized) series.
class Specialization {
public:
    enum class Mode { full, trivial, ray };

    static Specialization full(const RootSystem& rs) { return Specialization(Mode::full, rs.rank(), 1, {}); }
    static Specialization trivial() { return Specialization(Mode::trivial, 0, 1, {}); }

    /// e^lambda -> z^{(lambda, xi)} for a rational weight xi.
    static Specialization ray(const RootSystem& rs, const Weight& xi)
    {
        rs.check(xi);
        std::vector<Rational> pair(rs.rank());
        std::int64_t den = 1;
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            pair[i] = rs.inner(rs.fundamental_weight(i), xi);
            den = detail::lcm_checked(den, pair[i].den());
        }
        std::vector<std::int64_t> scaled(rs.rank());
        for (std::size_t i = 0; i < rs.rank(); ++i) scaled[i] = (pair[i] * Rational(den)).to_integer();
        return Specialization(Mode::ray, 1, den, std::move(scaled));
    }

    static Specialization parse(std::string_view mode, const RootSystem& rs)
    {
        if (mode == "full") return full(rs);
        if (mode == "trivial") return trivial();
        if (mode == "ray") return ray(rs, rs.rho_check());
        throw usage_error("affchar: unknown specialization '" + std::string(mode) + "' (full|trivial|ray)");
    }

    Mode mode() const { return mode_; }
    std::string name() const { return mode_ == Mode::full ? "full" : mode_ == Mode::trivial ? "trivial" : "ray"; }
    std::size_t key_dim() const { return key_dim_; }
    std::int64_t weight_den() const { return den_; }

    LatticeVec key(const LatticeVec& lambda) const
    {
        switch (mode_) {
        case Mode::full:
            return lambda;
        case Mode::trivial:
            return LatticeVec{};
        case Mode::ray: {
            LatticeVec k{};
            std::int64_t z = 0;
            for (std::size_t i = 0; i < pairing_.size(); ++i) z += pairing_[i] * lambda[i];
            k[0] = static_cast<std::int32_t>(z);
            return k;
        }
        }
        return lambda;
    }

    GroupRingElt apply(const GroupRingElt& g) const
    {
        if (mode_ == Mode::full) return g;
        std::vector<GroupRingElt::Term> t;
        t.reserve(g.size());
        for (const auto& [v, c] : g.terms()) t.emplace_back(key(v), c);
        return GroupRingElt::from_terms(std::move(t));
    }

    GradedCharacter apply(const GradedCharacter& f) const
    {
        if (mode_ == Mode::full) return f;
        if (f.key_dim() == 0) return f;
        GradedCharacter out(key_dim_, f.order(), den_);
        for (const auto& [e, g] : f.terms()) out.add_term(e, apply(g));
        return out;
    }

    GradedCharacter one(const Rational& order) const { return GradedCharacter::one(key_dim_, order, den_); }

private:
    Specialization(Mode m, std::size_t dim, std::int64_t den, std::vector<std::int64_t> pairing)
        : mode_(m), key_dim_(dim), den_(den), pairing_(std::move(pairing))
    {
    }

    Mode mode_;
    std::size_t key_dim_;
    std::int64_t den_;
    std::vector<std::int64_t> pairing_;
};

} // namespace affchar
