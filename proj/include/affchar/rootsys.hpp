#pragma once

// Root systems of finite type and their weight lattices.
//
// Conventions:
//  * Weights are written in the basis of fundamental weights (Dynkin labels).
//  * cartan(i, j) = <alpha_i^vee, alpha_j>, so column j of the Cartan matrix
//    is alpha_j in fundamental-weight coordinates.
//  * The invariant form is normalized by (theta, theta) = 2, i.e. long roots
//    have squared length 2.

#include <affchar/lattice.hpp>
#include <affchar/linalg.hpp>
#include <affchar/rational.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace affchar {

struct TypeLabel {
    char series = 'A';
    int rank = 1;

    std::string str() const { return std::string(1, series) + std::to_string(rank); }
    bool simply_laced() const { return series == 'A' || series == 'D' || series == 'E'; }

    friend bool operator==(const TypeLabel&, const TypeLabel&) = default;

    /// Accepts "A2", "d4", "E_8", ... and validates the rank range of the series.
    static TypeLabel parse(std::string_view text)
    {
        auto bad = [&](const std::string& why) {
            return usage_error("affchar: unknown type label '" + std::string(text) + "'" + (why.empty() ? "" : ": " + why));
        };
        std::string s;
        for (char c : text)
            if (c != '_' && !std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
        if (s.size() < 2) throw bad("");
        TypeLabel t;
        t.series = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
        for (std::size_t i = 1; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad("");
        if (s.size() > 3) throw bad("rank too large");
        t.rank = std::stoi(s.substr(1));
        switch (t.series) {
        case 'A':
            if (t.rank < 1 || t.rank > 8) throw bad("A_n needs 1 <= n <= 8");
            break;
        case 'B':
        case 'C':
            if (t.rank < 2 || t.rank > 8) throw bad("B_n/C_n need 2 <= n <= 8");
            break;
        case 'D':
            if (t.rank < 4 || t.rank > 8) throw bad("D_n needs 4 <= n <= 8");
            break;
        case 'E':
            if (t.rank < 6 || t.rank > 8) throw bad("E_n needs n in {6,7,8}");
            break;
        case 'F':
            if (t.rank != 4) throw bad("only F4 exists");
            break;
        case 'G':
            if (t.rank != 2) throw bad("only G2 exists");
            break;
        default:
            throw bad("unknown series");
        }
        return t;
    }
};

/// A weight with exact rational coordinates in the fundamental-weight basis,
/// tagged with the type of its root system.
struct Weight {
    std::string system;
    std::vector<Rational> coords;

    bool is_integral() const
    {
        return std::all_of(coords.begin(), coords.end(), [](const Rational& c) { return c.is_integer(); });
    }

    LatticeVec to_lattice() const
    {
        if (!is_integral()) throw usage_error("affchar: weight is not integral");
        LatticeVec v{};
        for (std::size_t i = 0; i < coords.size(); ++i) v[i] = static_cast<std::int32_t>(coords[i].to_integer());
        return v;
    }

    friend bool operator==(const Weight&, const Weight&) = default;
};

/// One element of a Weyl orbit with the parity of a shortest Weyl group
/// element producing it from the dominant representative.
struct OrbitElement {
    LatticeVec weight;
    int sign;
};

class RootSystem {
public:
    static RootSystem build(std::string_view label) { return build(TypeLabel::parse(label)); }

    static RootSystem build(const TypeLabel& t)
    {
        const int n = t.rank;
        std::vector<Rational> d(n, Rational(1));
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        switch (t.series) {
        case 'A':
            break;
        case 'B':
            d[n - 1] = Rational(1, 2);
            break;
        case 'C':
            for (int i = 0; i + 1 < n; ++i) d[i] = Rational(1, 2);
            break;
        case 'D':
            edges.back() = {n - 3, n - 1};
            break;
        case 'E':
            // Bourbaki: 1-3-4-5-6-7-8 with node 2 attached to node 4.
            edges.clear();
            edges.emplace_back(0, 2);
            edges.emplace_back(2, 3);
            edges.emplace_back(1, 3);
            for (int i = 3; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case 'F':
            d[2] = d[3] = Rational(1, 2);
            break;
        case 'G':
            d[0] = Rational(1, 3);
            break;
        default:
            throw usage_error("affchar: unknown series");
        }
        // Bond inner products: (alpha_i, alpha_j) = -max(d_i, d_j) for joined nodes.
        std::vector<std::vector<int>> cartan(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) cartan[i][i] = 2;
        for (auto [i, j] : edges) {
            Rational b = -std::max(d[i], d[j]);
            cartan[i][j] = static_cast<int>((b / d[i]).to_integer());
            cartan[j][i] = static_cast<int>((b / d[j]).to_integer());
        }
        return from_cartan(t, std::move(cartan));
    }

    /// Constructs the root system of a Cartan matrix of finite type.
    static RootSystem from_cartan(const TypeLabel& label, std::vector<std::vector<int>> cartan)
    {
        RootSystem rs;
        rs.label_ = label;
        rs.rank_ = cartan.size();
        if (rs.rank_ == 0 || rs.rank_ > kMaxRank) throw usage_error("affchar: unsupported rank");
        rs.cartan_ = std::move(cartan);
        rs.init();
        return rs;
    }

    const TypeLabel& type() const { return label_; }
    std::string label() const { return label_.str(); }
    std::size_t rank() const { return rank_; }
    int cartan(std::size_t i, std::size_t j) const { return cartan_[i][j]; }
    const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

    /// (alpha_i, alpha_i) / 2.
    const Rational& half_length(std::size_t i) const { return d_[i]; }
    /// Gram matrix of the fundamental weights.
    const DenseMatrix<Rational>& fundamental_gram() const { return gram_; }
    /// Gram matrix of the simple roots.
    const DenseMatrix<Rational>& root_gram() const { return root_gram_; }

    std::size_t dimension() const { return rank_ + 2 * positive_roots_.size(); }
    const std::vector<LatticeVec>& positive_roots() const { return positive_roots_; }
    /// Positive roots in simple-root coordinates (same order as positive_roots()).
    const std::vector<LatticeVec>& positive_roots_simple() const { return positive_roots_simple_; }
    const LatticeVec& simple_root(std::size_t i) const { return simple_roots_[i]; }
    const LatticeVec& highest_root() const { return positive_roots_.back(); }
    int height(std::size_t root_index) const { return heights_[root_index]; }

    int dual_coxeter() const { return dual_coxeter_; }
    int lacity() const { return lacity_; }
    const std::vector<int>& exponents() const { return exponents_; }
    std::int64_t weyl_order() const { return weyl_order_; }

    Weight weight(std::vector<Rational> coords) const
    {
        if (coords.size() != rank_) throw usage_error("affchar: weight has wrong rank for " + label());
        return Weight{label(), std::move(coords)};
    }
    Weight weight(const LatticeVec& v) const
    {
        std::vector<Rational> c(rank_);
        for (std::size_t i = 0; i < rank_; ++i) c[i] = v[i];
        return Weight{label(), std::move(c)};
    }
    Weight fundamental_weight(std::size_t i) const
    {
        LatticeVec v{};
        v.at(i) = 1;
        return weight(v);
    }
    Weight zero() const { return weight(LatticeVec{}); }
    const Weight& rho() const { return rho_; }
    const Weight& rho_check() const { return rho_check_; }
    LatticeVec rho_lattice() const
    {
        LatticeVec v{};
        for (std::size_t i = 0; i < rank_; ++i) v[i] = 1;
        return v;
    }

    Rational inner(const Weight& a, const Weight& b) const
    {
        check(a);
        check(b);
        Rational s;
        for (std::size_t i = 0; i < rank_; ++i) {
            if (a.coords[i].is_zero()) continue;
            for (std::size_t j = 0; j < rank_; ++j) s += a.coords[i] * gram_(i, j) * b.coords[j];
        }
        return s;
    }

    Rational inner(const LatticeVec& a, const LatticeVec& b) const { return Rational(inner_scaled(a, b), gram_den_); }

    /// gram_denominator() * (a, b), an exact integer.
    std::int64_t inner_scaled(const LatticeVec& a, const LatticeVec& b) const
    {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < rank_; ++i) {
            if (a[i] == 0) continue;
            std::int64_t row = 0;
            for (std::size_t j = 0; j < rank_; ++j) row += gram_scaled_[i * rank_ + j] * b[j];
            s += a[i] * row;
        }
        return s;
    }
    std::int64_t gram_denominator() const { return gram_den_; }

    bool is_dominant(const LatticeVec& v) const
    {
        for (std::size_t i = 0; i < rank_; ++i)
            if (v[i] < 0) return false;
        return true;
    }
    bool is_dominant(const Weight& w) const
    {
        check(w);
        return std::all_of(w.coords.begin(), w.coords.end(), [](const Rational& c) { return c.sign() >= 0; });
    }

    /// Coordinates of a weight in the simple-root basis.
    std::vector<Rational> root_coordinates(const Weight& w) const
    {
        check(w);
        std::vector<Rational> c(rank_);
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t j = 0; j < rank_; ++j) c[i] += cartan_inverse_(i, j) * w.coords[j];
        return c;
    }

    bool in_root_lattice(const Weight& w) const
    {
        auto c = root_coordinates(w);
        return std::all_of(c.begin(), c.end(), [](const Rational& x) { return x.is_integer(); });
    }
    bool in_root_lattice(const LatticeVec& v) const { return in_root_lattice(weight(v)); }

    /// Simple-root coordinates -> fundamental-weight coordinates.
    LatticeVec from_root_coordinates(const LatticeVec& c) const
    {
        LatticeVec v{};
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t j = 0; j < rank_; ++j) v[i] += cartan_[i][j] * c[j];
        return v;
    }

    LatticeVec reflect(std::size_t i, const LatticeVec& v) const
    {
        LatticeVec r = v;
        std::int32_t k = v[i];
        if (k == 0) return r;
        for (std::size_t j = 0; j < rank_; ++j) r[j] -= k * cartan_[j][i];
        return r;
    }

    /// The dominant element of the orbit of v and the parity of the number
    /// of simple reflections used to reach it.
    std::pair<LatticeVec, int> dominantize(LatticeVec v) const
    {
        int sign = 1;
        for (;;) {
            std::size_t i = 0;
            while (i < rank_ && v[i] >= 0) ++i;
            if (i == rank_) return {v, sign};
            v = reflect(i, v);
            sign = -sign;
        }
    }

    /// Full Weyl orbit of a dominant integral weight, each element once.
    /// Elements are produced in order of increasing length of the minimal
    /// Weyl group element reaching them; the sign is (-1)^length.
    std::vector<OrbitElement> weyl_orbit(const LatticeVec& dominant) const
    {
        if (!is_dominant(dominant)) throw usage_error("affchar: weyl_orbit needs a dominant weight");
        std::vector<OrbitElement> out{{dominant, 1}};
        std::vector<LatticeVec> level{dominant};
        int sign = 1;
        while (!level.empty()) {
            sign = -sign;
            std::unordered_set<LatticeVec, LatticeVecHash> next;
            for (const auto& mu : level)
                for (std::size_t i = 0; i < rank_; ++i)
                    if (mu[i] > 0) next.insert(reflect(i, mu));
            level.assign(next.begin(), next.end());
            std::sort(level.begin(), level.end());
            for (const auto& mu : level) out.push_back({mu, sign});
        }
        return out;
    }

    std::vector<OrbitElement> weyl_orbit(const Weight& dominant) const
    {
        check(dominant);
        if (!is_dominant(dominant)) throw usage_error("affchar: weyl_orbit needs a dominant weight");
        return weyl_orbit(dominant.to_lattice());
    }

    /// Highest weight of the dual representation, -w_0(lambda).
    LatticeVec star(const LatticeVec& lambda) const
    {
        if (!is_dominant(lambda)) throw usage_error("affchar: star needs a dominant weight");
        return dominantize(-lambda).first;
    }
    Weight star(const Weight& lambda) const
    {
        check(lambda);
        if (!is_dominant(lambda)) throw usage_error("affchar: star needs a dominant weight");
        return weight(star(lambda.to_lattice()));
    }

    /// Weyl dimension formula.
    std::int64_t weyl_dimension(const LatticeVec& lambda) const
    {
        if (!is_dominant(lambda)) throw usage_error("affchar: weyl_dimension needs a dominant weight");
        LatticeVec shifted = lambda + rho_lattice();
        LatticeVec rho = rho_lattice();
        Rational dim(1);
        for (const auto& a : positive_roots_) dim *= Rational(inner_scaled(shifted, a), inner_scaled(rho, a));
        return dim.to_integer();
    }

    /// All x in the lattice with integer coordinates such that x^T gram x <= bound.
    static std::vector<LatticeVec> enumerate_ball(const DenseMatrix<Rational>& gram, const Rational& bound)
    {
        const std::size_t n = gram.rows();
        std::vector<LatticeVec> out;
        if (bound.sign() < 0) return out;
        // LDL^T: q(x) = sum_i diag_i (x_i + sum_{j>i} l(j,i) x_j)^2, eliminating from the last index.
        DenseMatrix<Rational> l(n, n);
        std::vector<Rational> diag(n);
        {
            DenseMatrix<Rational> a = gram;
            for (std::size_t i = 0; i < n; ++i) {
                diag[i] = a(i, i);
                if (diag[i].sign() <= 0) throw usage_error("affchar: Gram matrix is not positive definite");
                for (std::size_t j = i + 1; j < n; ++j) l(j, i) = a(i, j) / diag[i];
                for (std::size_t j = i + 1; j < n; ++j)
                    for (std::size_t k = i + 1; k < n; ++k) a(j, k) -= l(j, i) * diag[i] * l(k, i);
            }
        }
        std::vector<double> dd(n), ld(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            dd[i] = static_cast<double>(diag[i].num()) / static_cast<double>(diag[i].den());
            for (std::size_t j = 0; j < n; ++j)
                ld[j * n + i] = static_cast<double>(l(j, i).num()) / static_cast<double>(l(j, i).den());
        }
        const double budget0 = static_cast<double>(bound.num()) / static_cast<double>(bound.den());
        LatticeVec x{};
        auto exact_norm = [&](const LatticeVec& v) {
            Rational s;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (v[i] != 0 && v[j] != 0) s += gram(i, j) * Rational(std::int64_t{v[i]} * v[j]);
            return s;
        };
        auto rec = [&](auto&& self, std::size_t level, double budget) -> void {
            // level counts down from n to 1; index = level - 1
            std::size_t i = level - 1;
            double center = 0;
            for (std::size_t j = i + 1; j < n; ++j) center -= ld[j * n + i] * x[j];
            double radius = std::sqrt(std::max(0.0, budget) / dd[i]) + 1e-7;
            auto lo = static_cast<std::int32_t>(std::ceil(center - radius));
            auto hi = static_cast<std::int32_t>(std::floor(center + radius));
            for (std::int32_t v = lo; v <= hi; ++v) {
                x[i] = v;
                double t = v - center;
                double rest = budget - dd[i] * t * t;
                if (rest < -1e-7) continue;
                if (i == 0) {
                    if (exact_norm(x) <= bound) out.push_back(x);
                } else {
                    self(self, level - 1, rest);
                }
            }
            x[i] = 0;
        };
        rec(rec, n, budget0 + 1e-7);
        return out;
    }

    /// All lambda in Q^+ with (lambda, lambda)/2 <= bound, sorted by norm then
    /// lexicographically.
    std::vector<LatticeVec> dominant_weights_in_Q(const Rational& bound) const
    {
        std::vector<LatticeVec> out;
        for (const auto& v : enumerate_ball(gram_, bound * 2))
            if (is_dominant(v) && in_root_lattice(v)) out.push_back(v);
        sort_by_norm(out);
        return out;
    }

    /// All lambda in Q with (lambda, lambda)/2 <= bound, in fundamental-weight
    /// coordinates, sorted by norm then lexicographically.
    std::vector<LatticeVec> root_lattice_ball(const Rational& bound) const
    {
        std::vector<LatticeVec> out;
        for (const auto& c : enumerate_ball(root_gram_, bound * 2)) out.push_back(from_root_coordinates(c));
        sort_by_norm(out);
        return out;
    }

    /// Langlands dual: transposed Cartan matrix (B_n <-> C_n, others fixed).
    RootSystem langlands_dual() const
    {
        TypeLabel t = label_;
        if (t.series == 'B') t.series = 'C';
        else if (t.series == 'C') t.series = 'B';
        std::vector<std::vector<int>> tr(rank_, std::vector<int>(rank_));
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t j = 0; j < rank_; ++j) tr[i][j] = cartan_[j][i];
        return from_cartan(t, std::move(tr));
    }

    void check(const Weight& w) const
    {
        if (w.system != label() || w.coords.size() != rank_)
            throw usage_error("affchar: weight of " + w.system + " used with root system " + label());
    }

private:
    RootSystem() = default;

    void sort_by_norm(std::vector<LatticeVec>& v) const
    {
        std::vector<std::pair<std::int64_t, LatticeVec>> keyed;
        keyed.reserve(v.size());
        for (const auto& x : v) keyed.emplace_back(inner_scaled(x, x), x);
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = keyed[i].second;
    }

    void init()
    {
        const std::size_t n = rank_;
        for (std::size_t i = 0; i < n; ++i) {
            if (cartan_[i].size() != n) throw usage_error("affchar: Cartan matrix is not square");
            if (cartan_[i][i] != 2) throw usage_error("affchar: Cartan diagonal must be 2");
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                if (cartan_[i][j] > 0) throw usage_error("affchar: positive off-diagonal Cartan entry");
                if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
                    throw usage_error("affchar: Cartan matrix zero pattern is not symmetric");
            }
        }
        // Symmetrizer: d_i A_ij = d_j A_ji along a spanning tree.
        std::vector<Rational> d(n);
        std::vector<bool> seen(n, false);
        std::vector<std::size_t> stack{0};
        d[0] = Rational(1);
        seen[0] = true;
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < n; ++j)
                if (!seen[j] && cartan_[i][j] != 0) {
                    d[j] = d[i] * Rational(cartan_[i][j]) / Rational(cartan_[j][i]);
                    seen[j] = true;
                    stack.push_back(j);
                }
        }
        if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
            throw usage_error("affchar: Dynkin diagram is not connected");
        Rational dmax = *std::max_element(d.begin(), d.end());
        for (auto& x : d) x /= dmax;
        d_ = d;

        root_gram_ = DenseMatrix<Rational>(n, n);
        DenseMatrix<Rational> a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                root_gram_(i, j) = d_[i] * Rational(cartan_[i][j]);
                a(i, j) = Rational(cartan_[i][j]);
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (root_gram_(i, j) != root_gram_(j, i)) throw usage_error("affchar: Cartan matrix not symmetrizable");
        cartan_inverse_ = a.inverse();
        // G A = diag(d), hence G = diag(d) A^{-1}.
        gram_ = DenseMatrix<Rational>(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) gram_(i, j) = d_[i] * cartan_inverse_(i, j);
        gram_den_ = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) gram_den_ = detail::lcm_checked(gram_den_, gram_(i, j).den());
        gram_scaled_.assign(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (gram_(i, j) != gram_(j, i)) throw usage_error("affchar: fundamental Gram not symmetric");
                gram_scaled_[i * n + j] = (gram_(i, j) * Rational(gram_den_)).to_integer();
            }
        // Positive definiteness (finite type).
        enumerate_ball(root_gram_, Rational(0));

        simple_roots_.assign(n, LatticeVec{});
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) simple_roots_[j][i] = cartan_[i][j];

        build_positive_roots();

        rho_ = weight(rho_lattice());
        std::vector<Rational> rc(n);
        for (std::size_t i = 0; i < n; ++i) rc[i] = d_[i].inverse();
        rho_check_ = weight(std::move(rc));

        // h^vee = 1 + (rho, theta^vee), theta long so theta^vee = theta.
        dual_coxeter_ = static_cast<int>((Rational(1) + inner(rho_lattice(), highest_root())).to_integer());
        Rational dmin = *std::min_element(d_.begin(), d_.end());
        lacity_ = static_cast<int>(dmin.inverse().to_integer());

        // Exponents are the dual partition of the height distribution.
        int maxh = *std::max_element(heights_.begin(), heights_.end());
        std::vector<int> count(maxh + 2, 0);
        for (int h : heights_) ++count[h];
        exponents_.clear();
        for (int k = 1; k <= maxh; ++k)
            for (int t = 0; t < count[k] - count[k + 1]; ++t) exponents_.push_back(k);
        weyl_order_ = 1;
        for (int m : exponents_) weyl_order_ = detail::checked_mul(weyl_order_, m + 1);
    }

    void build_positive_roots()
    {
        const std::size_t n = rank_;
        std::unordered_set<LatticeVec, LatticeVecHash> all;
        std::vector<LatticeVec> level;
        for (std::size_t i = 0; i < n; ++i) {
            LatticeVec c{};
            c[i] = 1;
            level.push_back(c);
        }
        int h = 1;
        positive_roots_simple_.clear();
        heights_.clear();
        while (!level.empty()) {
            std::sort(level.begin(), level.end());
            for (const auto& c : level) {
                all.insert(c);
                positive_roots_simple_.push_back(c);
                heights_.push_back(h);
            }
            std::unordered_set<LatticeVec, LatticeVecHash> next;
            for (const auto& c : level)
                for (std::size_t i = 0; i < n; ++i) {
                    LatticeVec ai{};
                    ai[i] = 1;
                    if (c == ai) continue;
                    int p = 0;
                    for (LatticeVec down = c - ai; all.count(down); down = down - ai) ++p;
                    int pairing = 0; // <beta, alpha_i^vee>
                    for (std::size_t j = 0; j < n; ++j) pairing += c[j] * cartan_[i][j];
                    if (p - pairing > 0) next.insert(c + ai);
                }
            level.assign(next.begin(), next.end());
            ++h;
        }
        positive_roots_.clear();
        for (const auto& c : positive_roots_simple_) positive_roots_.push_back(from_root_coordinates(c));
    }

    TypeLabel label_;
    std::size_t rank_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<Rational> d_;
    DenseMatrix<Rational> root_gram_;
    DenseMatrix<Rational> cartan_inverse_;
    DenseMatrix<Rational> gram_;
    std::int64_t gram_den_ = 1;
    std::vector<std::int64_t> gram_scaled_;
    std::vector<LatticeVec> simple_roots_;
    std::vector<LatticeVec> positive_roots_;
    std::vector<LatticeVec> positive_roots_simple_;
    std::vector<int> heights_;
    Weight rho_;
    Weight rho_check_;
    int dual_coxeter_ = 0;
    int lacity_ = 1;
    std::vector<int> exponents_;
    std::int64_t weyl_order_ = 1;
};

} // namespace affchar
