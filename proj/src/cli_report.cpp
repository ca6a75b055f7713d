#include "cli_report.hpp"

#include <affchar/characters.hpp>
#include <affchar/finite_lie.hpp>
#include <affchar/identities.hpp>
#include <affchar/levels.hpp>
#include <affchar/mode_algebra.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#ifndef AFFCHAR_VERSION
#define AFFCHAR_VERSION "0.0.0"
#endif

namespace affchar::cli {

namespace {

nlohmann::json rationals(const std::vector<Rational>& v)
{
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : v) a.push_back(r.str());
    return a;
}

nlohmann::json weight_json(const RootSystem& rs, const LatticeVec& v)
{
    nlohmann::json a = nlohmann::json::array();
    for (std::size_t i = 0; i < rs.rank(); ++i) a.push_back(v[i]);
    return a;
}

IdentityReport base_report(const std::string& identity, const std::string& type, const Rational& order = Rational(0),
                           const std::string& spec = "none")
{
    IdentityReport r;
    r.identity = identity;
    r.type_label = type;
    r.order = order;
    r.specialization = spec;
    r.pass = true;
    return r;
}

Rational random_level(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-60, 60), den(1, 17);
    return Rational(num(rng), den(rng));
}

const Rational& single_kappa(const RunConfig& c)
{
    if (c.kappas.size() != 1) throw usage_error("affchar: this command needs exactly one --kappa");
    return c.kappas.front();
}

using Reports = std::vector<IdentityReport>;

Reports cmd_verify_gko(const RunConfig& c, std::vector<std::string>& summary)
{
    auto rs = RootSystem::build(c.type_label);
    auto spec = Specialization::parse(c.spec, rs);
    std::vector<Rational> shifted;
    for (const auto& k : c.kappas) shifted.push_back(k + Rational(rs.dual_coxeter()));
    if (shifted.empty()) shifted = default_gko_shifted_levels();
    auto rep = verify_gko(rs, c.order, spec, shifted, c.threads);
    summary.push_back("gko " + rs.label() + " order " + c.order.str() + " " + spec.name() + ": " +
                      (rep.pass ? "pass" : "fail"));
    return {rep};
}

Reports cmd_verify_kw(const RunConfig& c, std::vector<std::string>& summary)
{
    auto rs = RootSystem::build(c.type_label);
    auto spec = Specialization::parse(c.spec, rs);
    auto rep = verify_kw(rs, c.order, spec, c.threads);
    summary.push_back("kw " + rs.label() + " order " + c.order.str() + " " + spec.name() + ": " +
                      (rep.pass ? "pass" : "fail"));
    return {rep};
}

Reports cmd_weights(const RunConfig& c, std::vector<std::string>& summary)
{
    auto rs = RootSystem::build(c.type_label);
    if (c.n < 1) throw usage_error("affchar: weights needs n >= 1");
    std::vector<Rational> kappas = c.kappas;
    std::mt19937_64 rng(c.seed);
    for (std::size_t i = 0; i < c.samples;) {
        Rational k = random_level(rng);
        Rational s = k + Rational(rs.dual_coxeter());
        if (s.is_zero() || s.inverse() == Rational(rs.lacity() * c.n)) continue;
        kappas.push_back(k);
        ++i;
    }
    auto rep = base_report("conformal_weight", rs.label());
    nlohmann::json table = nlohmann::json::array();
    std::size_t checked = 0;
    for (const auto& lam : rs.dominant_weights_in_Q(c.max_norm)) {
        if (is_zero(lam)) continue;
        Weight w = rs.weight(lam);
        Rational h = conformal_weight_closed(rs, w, c.n);
        if (!(h > Rational(0))) rep.pass = false;
        bool agree = true;
        for (const auto& k : kappas) {
            ++checked;
            if (conformal_weight(rs, w, level(rs, k), c.n) != h) agree = false;
        }
        if (!agree) rep.pass = false;
        table.push_back({{"lambda", weight_json(rs, lam)},
                         {"norm", rs.inner(lam, lam).str()},
                         {"h", h.str()},
                         {"two_term_agrees", agree}});
        summary.push_back("lambda " + table.back()["lambda"].dump() + " h = " + h.str());
    }
    rep.details = {{"n", c.n},
                   {"max_half_norm", c.max_norm.str()},
                   {"kappa_samples", rationals(kappas)},
                   {"two_term_checks", checked},
                   {"table", table}};
    return {rep};
}

Reports cmd_levels(const RunConfig& c, std::vector<std::string>& summary)
{
    auto rs = RootSystem::build(c.type_label);
    const Rational& k = single_kappa(c);
    const Rational r(rs.lacity());
    auto rep = base_report("levels_" + c.op, rs.label());
    if (c.op == "ff-dual") {
        LevelValue kc = ff_dual_level(rs, level(rs, k));
        auto dual = rs.langlands_dual();
        bool relation = r * (k + Rational(rs.dual_coxeter())) * kc.shifted(dual) == Rational(1);
        bool involution = ff_dual_level(dual, kc).kappa == k;
        rep.pass = relation && involution;
        rep.details = {{"kappa", k.str()},
                       {"kappa_check", kc.kappa.str()},
                       {"dual_type", kc.system},
                       {"relation", relation},
                       {"involution", involution}};
        summary.push_back("kappa_check = " + kc.kappa.str() + " (" + kc.system + ")");
    } else if (c.op == "kernel") {
        LevelValue ks = kernel_partner_level(rs, level(rs, k), c.n);
        Rational h(rs.dual_coxeter());
        bool relation = (k + h).inverse() + ks.shifted(rs).inverse() == r * Rational(c.n);
        bool involution = kernel_partner_level(rs, ks, c.n).kappa == k;
        rep.pass = relation && involution;
        rep.details = {{"kappa", k.str()},
                       {"n", c.n},
                       {"kappa_star", ks.kappa.str()},
                       {"relation", relation},
                       {"involution", involution}};
        summary.push_back("kappa_star = " + ks.kappa.str());
    } else if (c.op == "gluing") {
        auto dual = rs.langlands_dual();
        auto [kk, vk] = gluing_levels(rs, level(dual, k), c.n);
        LevelValue star = kernel_partner_level(rs, kk, 0);
        bool relation = star.shifted(rs).inverse() + vk.shifted(rs).inverse() == r * Rational(c.n);
        rep.pass = relation;
        rep.details = {{"kappa_check", k.str()},
                       {"dual_type", dual.label()},
                       {"n", c.n},
                       {"kappa", kk.kappa.str()},
                       {"varkappa", vk.kappa.str()},
                       {"kappa_star", star.kappa.str()},
                       {"relation", relation}};
        summary.push_back("kappa = " + kk.kappa.str() + ", varkappa = " + vk.kappa.str());
    } else {
        throw usage_error("affchar: unknown --op '" + c.op + "' (ff-dual|kernel|gluing)");
    }
    return {rep};
}

Reports cmd_takiff_forms(const RunConfig& c, std::vector<std::string>& summary)
{
    auto rs = RootSystem::build(c.type_label);
    auto g = chevalley_structure(rs);
    auto tg = takiff(g);
    auto bg = invariant_forms(g);
    auto bt = invariant_forms(tg);
    const std::size_t n = g.dimension();
    bool block_zero = true;
    for (const auto& b : bt.basis)
        for (std::size_t i = n; i < 2 * n; ++i)
            for (std::size_t j = n; j < 2 * n; ++j)
                if (!b(i, j).is_zero()) block_zero = false;
    bool jacobi = g.check_jacobi().ok() && tg.check_jacobi().ok();
    auto rep = base_report("takiff_forms", rs.label());
    rep.pass = bg.dimension() == 1 && bt.dimension() == 2 && block_zero && jacobi;
    rep.details = {{"dim_g", n},
                   {"dim_forms_g", bg.dimension()},
                   {"dim_forms_takiff", bt.dimension()},
                   {"tt_block_zero", block_zero},
                   {"jacobi", jacobi}};
    summary.push_back("dim B(g) = " + std::to_string(bg.dimension()) + ", dim B(T(g)) = " +
                      std::to_string(bt.dimension()));
    return {rep};
}

Reports cmd_hom_dim(const RunConfig& c, std::vector<std::string>& summary)
{
    auto rs = RootSystem::build(c.type_label);
    auto g = chevalley_structure(rs);
    auto from = named_rep(g, c.rep_from);
    auto to = named_rep(g, c.rep_to);
    std::size_t d = equivariant_hom_dim(from, to);
    auto rep = base_report("hom_dim", rs.label());
    rep.details = {{"from", from.name}, {"to", to.name}, {"dim_from", from.dim}, {"dim_to", to.dim}, {"hom_dim", d}};
    summary.push_back("dim Hom(" + from.name + ", " + to.name + ") = " + std::to_string(d));
    return {rep};
}

Reports cmd_classify_ext(const RunConfig& c, std::vector<std::string>& summary)
{
    if (c.alpha.size() != c.beta.size()) throw usage_error("affchar: --alpha and --beta must be given in pairs");
    std::vector<std::pair<Rational, Rational>> pairs;
    for (std::size_t i = 0; i < c.alpha.size(); ++i) pairs.emplace_back(c.alpha[i], c.beta[i]);
    std::mt19937_64 rng(c.seed);
    for (std::size_t i = 0; i < c.random_pairs; ++i) {
        Rational b = random_level(rng);
        pairs.emplace_back(random_level(rng), b);
        pairs.emplace_back(-b * b / Rational(4), b);
    }
    if (pairs.empty()) throw usage_error("affchar: classify-ext needs --alpha/--beta or --random");
    Reports out;
    for (const auto& [a, b] : pairs) {
        auto cls = classify_extension(a, b, c.base);
        auto rep = base_report("classify_extension", cls.base);
        rep.pass = cls.ok();
        rep.details = cls.to_json();
        summary.push_back("alpha = " + a.str() + ", beta = " + b.str() + ": " + cls.kind_name() + " " +
                          (rep.pass ? "pass" : "fail"));
        out.push_back(std::move(rep));
    }
    return out;
}

Reports cmd_singular(const RunConfig& c, std::vector<std::string>& summary)
{
    auto cs = singular_constraints(c.scale_s, c.scale_t);
    auto rep = base_report("singular_constraints", "A1+A1");
    nlohmann::json list = nlohmann::json::array();
    for (const auto& p : cs) {
        list.push_back(p.to_json());
        summary.push_back(p.annihilator + " on " + p.coefficient + ": " + p.factored());
    }
    using R = std::vector<Rational>;
    auto find = [&](const std::string& coef) -> const ConstraintPolynomial* {
        for (const auto& p : cs)
            if (p.coefficient == coef) return &p;
        return nullptr;
    };
    const auto* aa = find("alpha");
    const auto* bb = find("gamma");
    const auto* ab = find("beta");
    const R zero_one{Rational(0), Rational(1)};
    bool shape = cs.size() == 3 && aa && bb && ab;
    shape = shape && aa->factors_over_q && ConstraintPolynomial::distinct(aa->k1_roots) == zero_one && aa->k2_roots.empty();
    shape = shape && bb->factors_over_q && ConstraintPolynomial::distinct(bb->k2_roots) == zero_one && bb->k1_roots.empty();
    shape = shape && ab->factors_over_q && ab->k1_roots == R{Rational(0)} && ab->k2_roots == R{Rational(0)};
    rep.pass = shape;
    rep.details = {{"scale_e", c.scale_s.str()}, {"scale_f", c.scale_t.str()}, {"constraints", list}};
    return {rep};
}

Reports cmd_char(const RunConfig& c, std::vector<std::string>& summary)
{
    auto rs = RootSystem::build(c.type_label);
    auto spec = Specialization::parse(c.spec, rs);
    if (c.order.sign() < 0) throw usage_error("affchar: truncation order must be >= 0");
    auto lam = [&]() {
        if (c.lambda.empty()) return LatticeVec{};
        if (c.lambda.size() != rs.rank()) throw usage_error("affchar: --lambda needs " + std::to_string(rs.rank()) + " coordinates");
        LatticeVec v{};
        for (std::size_t i = 0; i < rs.rank(); ++i) v[i] = static_cast<std::int32_t>(c.lambda[i]);
        return v;
    };
    GradedCharacter f;
    std::string weight_free;
    if (c.which == "level-one") f = level_one_char(rs, c.order, spec);
    else if (c.which == "theta") f = root_lattice_theta(rs, c.order, spec);
    else if (c.which == "denominator") f = denominator_D(rs, c.order, spec);
    else if (c.which == "inverse-denominator") f = inverse_denominator(rs, c.order, spec);
    else if (c.which == "weyl") f = weyl_module_char(rs, lam(), level(rs, single_kappa(c)), c.order, spec);
    else if (c.which == "t-module") f = t_module_char(rs, lam(), level(rs, single_kappa(c)), c.order), weight_free = "yes";
    else if (c.which == "gko-lhs") f = gko_lhs(rs, level(rs, single_kappa(c)), c.order, spec, c.threads);
    else if (c.which == "gko-rhs") f = gko_rhs(rs, c.order, spec);
    else if (c.which == "kw-lhs") f = kw_lhs(rs, c.order, spec, c.threads);
    else
        throw usage_error("affchar: unknown --which '" + c.which +
                          "' (level-one|theta|denominator|inverse-denominator|weyl|t-module|gko-lhs|gko-rhs|kw-lhs)");
    f.normalize();
    auto rep = base_report("char_" + c.which, rs.label(), c.order, weight_free.empty() ? spec.name() : "weight_free");
    rep.details = {{"series", f.to_json()}};
    summary.push_back(f.canonical());
    return {rep};
}

const std::map<std::string, std::function<Reports(const RunConfig&, std::vector<std::string>&)>>& commands()
{
    static const std::map<std::string, std::function<Reports(const RunConfig&, std::vector<std::string>&)>> table = {
        {"verify-gko", cmd_verify_gko},     {"verify-kw", cmd_verify_kw},   {"weights", cmd_weights},
        {"levels", cmd_levels},             {"takiff-forms", cmd_takiff_forms}, {"hom-dim", cmd_hom_dim},
        {"classify-ext", cmd_classify_ext}, {"singular", cmd_singular},     {"char", cmd_char}};
    return table;
}

} // namespace

const char* version() { return AFFCHAR_VERSION; }

nlohmann::json RunConfig::to_json() const
{
    nlohmann::json j = {{"command", command}};
    auto typed = [&] { j["type"] = type_label; };
    if (command == "verify-gko" || command == "verify-kw" || command == "char") {
        typed();
        j["order"] = order.str();
        j["spec"] = spec;
    }
    if (command == "verify-gko" || command == "levels" || command == "weights" || command == "char")
        j["kappa"] = rationals(kappas);
    if (command == "weights" || command == "levels") {
        typed();
        j["n"] = n;
    }
    if (command == "weights") {
        j["max_norm"] = max_norm.str();
        j["samples"] = samples;
        j["seed"] = seed;
    }
    if (command == "levels") j["op"] = op;
    if (command == "takiff-forms" || command == "hom-dim") typed();
    if (command == "hom-dim") {
        j["from"] = rep_from;
        j["to"] = rep_to;
    }
    if (command == "classify-ext") {
        j["alpha"] = rationals(alpha);
        j["beta"] = rationals(beta);
        j["base"] = base;
        j["random"] = random_pairs;
        j["seed"] = seed;
    }
    if (command == "singular") {
        j["scale_e"] = scale_s.str();
        j["scale_f"] = scale_t.str();
    }
    if (command == "char") {
        j["which"] = which;
        j["lambda"] = lambda;
    }
    j["timing"] = timing;
    return j;
}

RunResult run(const RunConfig& config)
{
    RunResult result;
    const auto t0 = std::chrono::steady_clock::now();
    auto it = commands().find(config.command);
    if (it == commands().end()) {
        result.exit_code = exit_usage;
        result.error = "affchar: unknown command '" + config.command + "'";
        return result;
    }
    Reports reports;
    try {
        reports = it->second(config, result.summary);
    } catch (const usage_error& e) {
        result.exit_code = exit_usage;
        result.error = e.what();
        return result;
    } catch (const std::overflow_error& e) {
        result.exit_code = exit_usage;
        result.error = std::string("affchar: exact arithmetic overflow (reduce the order): ") + e.what();
        return result;
    } catch (const std::domain_error& e) {
        result.exit_code = exit_usage;
        result.error = e.what();
        return result;
    }
    nlohmann::json list = nlohmann::json::array();
    bool pass = true;
    for (auto& r : reports) {
        if (!config.timing) r.elapsed_ms = 0;
        pass = pass && r.pass;
        list.push_back(r.to_json());
    }
    std::int64_t elapsed = 0;
    if (config.timing)
        elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    result.report = {{"schema", kSchema},
                     {"version", version()},
                     {"command", config.command},
                     {"config", config.to_json()},
                     {"reports", list},
                     {"elapsed_ms", elapsed}};
    result.exit_code = pass ? exit_pass : exit_mismatch;
    return result;
}

void write_atomically(const std::string& path, const std::string& text)
{
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << text;
        out.flush();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

} // namespace affchar::cli
