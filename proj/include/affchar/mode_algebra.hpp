#pragma once

// Degree-two computation in the mode algebra of two commuting affine sl_2
// factors a, b at formal levels k1, k2: annihilation of
// x = alpha e^a_{-1}e^a_{-1}|0> + beta e^a_{-1}e^b_{-1}|0> + gamma e^b_{-1}e^b_{-1}|0>
// by f^c_1 f^d_1, with root vectors rescaled e -> s e, f -> t f.

#include <affchar/rational.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace affchar {

/// Polynomial in k1, k2 with rational coefficients.
class Poly2 {
public:
    using Exponents = std::pair<int, int>;

    Poly2() = default;
    Poly2(const Rational& c) // NOLINT: implicit by intent
    {
        if (!c.is_zero()) terms_[{0, 0}] = c;
    }
    static Poly2 monomial(int i, int j, const Rational& c = Rational(1))
    {
        Poly2 p;
        if (!c.is_zero()) p.terms_[{i, j}] = c;
        return p;
    }
    static Poly2 k1() { return monomial(1, 0); }
    static Poly2 k2() { return monomial(0, 1); }

    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(int i, int j) const
    {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend Poly2 operator+(Poly2 x, const Poly2& y)
    {
        for (const auto& [e, c] : y.terms_) x.add(e, c);
        return x;
    }
    friend Poly2 operator-(Poly2 x, const Poly2& y)
    {
        for (const auto& [e, c] : y.terms_) x.add(e, -c);
        return x;
    }
    friend Poly2 operator*(const Poly2& x, const Poly2& y)
    {
        Poly2 out;
        for (const auto& [ex, cx] : x.terms_)
            for (const auto& [ey, cy] : y.terms_) out.add({ex.first + ey.first, ex.second + ey.second}, cx * cy);
        return out;
    }
    Poly2& operator+=(const Poly2& y) { return *this = *this + y; }
    friend bool operator==(const Poly2& x, const Poly2& y) = default;

    Rational evaluate(const Rational& a, const Rational& b) const
    {
        Rational s;
        for (const auto& [e, c] : terms_) {
            Rational m = c;
            for (int i = 0; i < e.first; ++i) m *= a;
            for (int j = 0; j < e.second; ++j) m *= b;
            s += m;
        }
        return s;
    }

    /// Largest monomial k1^i k2^j dividing the polynomial.
    Exponents monomial_content() const
    {
        if (terms_.empty()) return {0, 0};
        Exponents m = terms_.begin()->first;
        for (const auto& [e, c] : terms_) m = {std::min(m.first, e.first), std::min(m.second, e.second)};
        return m;
    }

    Poly2 divide_monomial(Exponents m) const
    {
        Poly2 out;
        for (const auto& [e, c] : terms_) out.terms_[{e.first - m.first, e.second - m.second}] = c;
        return out;
    }

    /// "3/2*k1^2*k2 - k1" style text.
    std::string str() const
    {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational a = c;
            if (s.empty()) {
                if (a < Rational(0)) s += "-", a = -a;
            } else {
                s += a < Rational(0) ? " - " : " + ";
                if (a < Rational(0)) a = -a;
            }
            std::string mon;
            auto var = [&mon](const char* v, int p) {
                if (p == 0) return;
                if (!mon.empty()) mon += "*";
                mon += v;
                if (p > 1) mon += "^" + std::to_string(p);
            };
            var("k1", e.first);
            var("k2", e.second);
            if (mon.empty()) s += a.str();
            else if (a == Rational(1)) s += mon;
            else s += a.str() + "*" + mon;
        }
        return s;
    }

private:
    void add(Exponents e, const Rational& c)
    {
        if (c.is_zero()) return;
        Rational& slot = terms_[e];
        slot += c;
        if (slot.is_zero()) terms_.erase(e);
    }

    std::map<Exponents, Rational> terms_;
};

namespace detail {

/// Rational roots with multiplicity of a univariate polynomial c[0] + c[1] x + ...
/// Returns the roots and the leftover factor without rational roots.
inline std::pair<std::vector<Rational>, std::vector<Rational>> rational_roots(std::vector<Rational> c)
{
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    std::vector<Rational> roots;
    auto divisors = [](std::int64_t n) {
        std::vector<std::int64_t> d;
        n = n < 0 ? -n : n;
        for (std::int64_t k = 1; k * k <= n; ++k)
            if (n % k == 0) {
                d.push_back(k);
                if (k != n / k) d.push_back(n / k);
            }
        return d;
    };
    bool found = true;
    while (found && c.size() > 1) {
        found = false;
        if (c.front().is_zero()) {
            roots.emplace_back(0);
            c.erase(c.begin());
            found = true;
            continue;
        }
        std::int64_t l = 1;
        for (const auto& x : c) l = std::lcm(l, x.den());
        std::vector<std::int64_t> z;
        for (const auto& x : c) z.push_back((x * Rational(l)).num());
        for (std::int64_t p : divisors(z.front())) {
            for (std::int64_t q : divisors(z.back())) {
                for (int sgn : {1, -1}) {
                    Rational r(sgn * p, q);
                    Rational v;
                    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * r + *it;
                    if (!v.is_zero()) continue;
                    // Synthetic division by (x - r).
                    std::vector<Rational> quo(c.size() - 1);
                    Rational carry;
                    for (std::size_t k = c.size() - 1; k-- > 0;) {
                        carry = c[k + 1] + carry * r;
                        quo[k] = carry;
                    }
                    c = std::move(quo);
                    roots.push_back(r);
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (found) break;
        }
    }
    std::sort(roots.begin(), roots.end());
    return {roots, c};
}

} // namespace detail

struct ConstraintPolynomial {
    std::string annihilator; // "f^a_1 f^a_1" etc.
    std::string coefficient; // alpha, beta or gamma
    Poly2 polynomial;
    Rational constant;                // leading constant of the factorization
    Poly2::Exponents content{0, 0};   // k1^i k2^j factor
    std::vector<Rational> k1_roots;   // with multiplicity, content included
    std::vector<Rational> k2_roots;
    bool factors_over_q = false;

    /// Distinct roots in one variable.
    static std::vector<Rational> distinct(std::vector<Rational> v)
    {
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    }

    std::string factored() const
    {
        if (polynomial.is_zero()) return "0";
        const bool bare = !k1_roots.empty() || !k2_roots.empty();
        std::string s = bare && constant == Rational(1) ? "" : bare && constant == Rational(-1) ? "-" : constant.str();
        auto lin = [&s](const char* v, const Rational& r) {
            if (!s.empty() && s != "-") s += "*";
            if (r.is_zero()) s += v;
            else s += std::string("(") + v + (r < Rational(0) ? " + " + (-r).str() : " - " + r.str()) + ")";
        };
        for (const auto& r : k1_roots) lin("k1", r);
        for (const auto& r : k2_roots) lin("k2", r);
        return s;
    }

    nlohmann::json to_json() const
    {
        auto strs = [](const std::vector<Rational>& v) {
            nlohmann::json a = nlohmann::json::array();
            for (const auto& r : distinct(v)) a.push_back(r.str());
            return a;
        };
        nlohmann::json terms = nlohmann::json::array();
        for (const auto& [e, c] : polynomial.terms()) terms.push_back({{"k1", e.first}, {"k2", e.second}, {"coeff", c.str()}});
        return {{"annihilator", annihilator},
                {"coefficient", coefficient},
                {"polynomial", polynomial.str()},
                {"terms", terms},
                {"factored", factored()},
                {"factors_over_q", factors_over_q},
                {"k1_roots", strs(k1_roots)},
                {"k2_roots", strs(k2_roots)}};
    }
};

/// Factors p = constant * prod (k1 - r) * prod (k2 - r') when possible over Q.
inline void factor_constraint(ConstraintPolynomial& c)
{
    const Poly2& p = c.polynomial;
    c.k1_roots.clear();
    c.k2_roots.clear();
    if (p.is_zero()) {
        c.factors_over_q = true;
        return;
    }
    c.content = p.monomial_content();
    Poly2 rest = p.divide_monomial(c.content);
    bool only_k1 = true, only_k2 = true;
    int deg1 = 0, deg2 = 0;
    for (const auto& [e, v] : rest.terms()) {
        if (e.second != 0) only_k1 = false;
        if (e.first != 0) only_k2 = false;
        deg1 = std::max(deg1, e.first);
        deg2 = std::max(deg2, e.second);
    }
    c.k1_roots.assign(static_cast<std::size_t>(c.content.first), Rational(0));
    c.k2_roots.assign(static_cast<std::size_t>(c.content.second), Rational(0));
    if (!only_k1 && !only_k2) {
        c.factors_over_q = false;
        c.constant = Rational(0);
        return;
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(only_k1 ? deg1 : deg2) + 1);
    for (const auto& [e, v] : rest.terms()) coeffs[static_cast<std::size_t>(only_k1 ? e.first : e.second)] = v;
    auto [roots, leftover] = detail::rational_roots(coeffs);
    auto& target = only_k1 ? c.k1_roots : c.k2_roots;
    target.insert(target.end(), roots.begin(), roots.end());
    std::sort(c.k1_roots.begin(), c.k1_roots.end());
    std::sort(c.k2_roots.begin(), c.k2_roots.end());
    c.factors_over_q = leftover.size() == 1;
    c.constant = leftover.back();
}

namespace detail {

/// Generator x^factor_{mode} with x in {e, h, f} of sl_2.
struct ModeGen {
    int factor; // 0 = a, 1 = b
    char kind;  // 'e', 'h', 'f'
    int mode;
    auto operator<=>(const ModeGen&) const = default;
};

using ModeWord = std::vector<ModeGen>; // applied right to left on |0>
using ModeState = std::map<ModeWord, Poly2>;

class Sl2PairModes {
public:
    Sl2PairModes(const Rational& s, const Rational& t) : s_(s), t_(t) {}

    /// g . (word |0>) as a combination of words.
    ModeState apply(const ModeGen& g, const ModeWord& word) const
    {
        ModeState out;
        if (word.empty()) {
            if (g.mode < 0) out[{g}] = Poly2(Rational(1));
            return out;
        }
        if (g.mode < 0) {
            ModeWord w{g};
            w.insert(w.end(), word.begin(), word.end());
            out[w] = Poly2(Rational(1));
            return out;
        }
        // g w0 rest = w0 (g rest) + [g, w0] rest.
        const ModeGen& w0 = word.front();
        ModeWord rest(word.begin() + 1, word.end());
        for (const auto& [w, c] : apply(g, rest)) add(out, apply(w0, w), c);
        auto [gens, central] = bracket(g, w0);
        for (const auto& [x, c] : gens) add(out, apply(x, rest), Poly2(c));
        if (!central.is_zero()) add(out, ModeState{{rest, Poly2(Rational(1))}}, central);
        return out;
    }

    ModeState apply(const ModeGen& g, const ModeState& state) const
    {
        ModeState out;
        for (const auto& [w, c] : state) add(out, apply(g, w), c);
        return out;
    }

private:
    static void add(ModeState& into, const ModeState& from, const Poly2& scale)
    {
        for (const auto& [w, c] : from) {
            Poly2 v = into[w] + c * scale;
            if (v.is_zero()) into.erase(w);
            else into[w] = v;
        }
    }

    /// [x_m, y_n] = [x, y]_{m+n} + m k <x, y> delta_{m+n,0}.
    std::pair<std::vector<std::pair<ModeGen, Rational>>, Poly2> bracket(const ModeGen& x, const ModeGen& y) const
    {
        std::vector<std::pair<ModeGen, Rational>> gens;
        Poly2 central;
        if (x.factor != y.factor) return {gens, central};
        const int m = x.mode + y.mode;
        const Rational st = s_ * t_;
        auto gen = [&](char k) { return ModeGen{x.factor, k, m}; };
        Rational form;
        if (x.kind == 'h' && y.kind == 'e') gens.emplace_back(gen('e'), Rational(2));
        if (x.kind == 'e' && y.kind == 'h') gens.emplace_back(gen('e'), Rational(-2));
        if (x.kind == 'h' && y.kind == 'f') gens.emplace_back(gen('f'), Rational(-2));
        if (x.kind == 'f' && y.kind == 'h') gens.emplace_back(gen('f'), Rational(2));
        if (x.kind == 'e' && y.kind == 'f') gens.emplace_back(gen('h'), st);
        if (x.kind == 'f' && y.kind == 'e') gens.emplace_back(gen('h'), -st);
        if ((x.kind == 'e' && y.kind == 'f') || (x.kind == 'f' && y.kind == 'e')) form = st;
        if (x.kind == 'h' && y.kind == 'h') form = Rational(2);
        if (m == 0 && !form.is_zero()) {
            Poly2 level = x.factor == 0 ? Poly2::k1() : Poly2::k2();
            central = level * Poly2(Rational(x.mode) * form);
        }
        return {gens, central};
    }

    Rational s_, t_;
};

} // namespace detail

/// The three constraints f^a_1 f^a_1 x, f^b_1 f^b_1 x, f^a_1 f^b_1 x, each the
/// coefficient of |0> per singular-vector coefficient alpha, beta, gamma.
/// Only the nonzero (annihilator, coefficient) pairs are returned, in the order
/// (a,a; alpha), (b,b; gamma), (a,b; beta).
inline std::vector<ConstraintPolynomial> singular_constraints(const Rational& s = Rational(1),
                                                              const Rational& t = Rational(1))
{
    if (s.is_zero() || t.is_zero()) throw usage_error("affchar: root-vector normalization must be nonzero");
    using detail::ModeGen;
    detail::Sl2PairModes modes(s, t);
    const ModeGen ea{0, 'e', -1}, eb{1, 'e', -1}, fa{0, 'f', 1}, fb{1, 'f', 1};
    const std::vector<std::pair<std::string, detail::ModeWord>> vectors = {
        {"alpha", {ea, ea}}, {"beta", {ea, eb}}, {"gamma", {eb, eb}}};
    const std::vector<std::pair<std::string, std::pair<ModeGen, ModeGen>>> annihilators = {
        {"f^a_1 f^a_1", {fa, fa}}, {"f^b_1 f^b_1", {fb, fb}}, {"f^a_1 f^b_1", {fa, fb}}};

    std::vector<ConstraintPolynomial> out;
    for (const auto& [name, ops] : annihilators) {
        for (const auto& [coef, word] : vectors) {
            detail::ModeState st{{word, Poly2(Rational(1))}};
            st = modes.apply(ops.first, modes.apply(ops.second, st));
            Poly2 vac;
            for (const auto& [w, c] : st) {
                if (!w.empty()) throw std::logic_error("affchar: degree-zero result is not a vacuum multiple");
                vac = c;
            }
            if (vac.is_zero()) continue;
            ConstraintPolynomial c;
            c.annihilator = name;
            c.coefficient = coef;
            c.polynomial = vac;
            factor_constraint(c);
            out.push_back(std::move(c));
        }
    }
    return out;
}

} // namespace affchar
