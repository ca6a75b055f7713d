#include "cli_report.hpp"

#include <affchar/parallel.hpp>

#include <CLI11.hpp>

#include <iostream>

namespace {

using affchar::Rational;
using affchar::cli::RunConfig;

/// Adds an option whose values are exact rationals ("p/q", integers or decimals).
CLI::Option* rational_option(CLI::App* app, const std::string& name, Rational& target, const std::string& help)
{
    return app->add_option_function<std::string>(
        name, [&target](const std::string& s) { target = Rational::parse(s); }, help);
}

CLI::Option* rational_list(CLI::App* app, const std::string& name, std::vector<Rational>& target, const std::string& help)
{
    return app->add_option_function<std::vector<std::string>>(
        name,
        [&target](const std::vector<std::string>& v) {
            for (const auto& s : v) target.push_back(Rational::parse(s));
        },
        help);
}

void common(CLI::App* sub, RunConfig& c)
{
    sub->add_option("-o,--output", c.output, "Write the JSON report here (atomically)");
    sub->add_flag("--timing", c.timing, "Record wall-clock times in the report");
}

void type_option(CLI::App* sub, RunConfig& c, const std::string& def)
{
    c.type_label = def;
    sub->add_option("-t,--type", c.type_label, "Cartan type, e.g. A2, B2, D4")->capture_default_str();
}

void series_options(CLI::App* sub, RunConfig& c)
{
    rational_option(sub, "--order", c.order, "Truncation order in q (default 6)");
    sub->add_option("--spec", c.spec, "Specialization: full, trivial or ray")->capture_default_str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact characters and identity checks for affine Lie algebras and W-algebras"};
    app.set_version_flag("--version", std::string(affchar::cli::version()));
    app.require_subcommand(1);
    RunConfig c;

    auto* gko = app.add_subcommand("verify-gko", "Check the coset character identity");
    type_option(gko, c, "A1");
    series_options(gko, c);
    rational_list(gko, "--kappa", c.kappas, "Levels kappa to sample (repeatable; default shifted 7/3 and 11/5)");
    common(gko, c);

    auto* kw = app.add_subcommand("verify-kw", "Check the lattice identity");
    type_option(kw, c, "A1");
    series_options(kw, c);
    common(kw, c);

    auto* weights = app.add_subcommand("weights", "Table of conformal weights h(lambda) on Q+");
    type_option(weights, c, "A1");
    weights->add_option("--n", c.n, "Positive integer n")->capture_default_str();
    rational_option(weights, "--max-norm", c.max_norm, "Bound on (lambda, lambda)/2 (default 4)");
    rational_list(weights, "--kappa", c.kappas, "Levels for the two-term formula");
    weights->add_option("--samples", c.samples, "Random levels for the two-term formula");
    weights->add_option("--seed", c.seed, "Seed for random levels")->capture_default_str();
    common(weights, c);

    auto* levels = app.add_subcommand("levels", "Level relations");
    type_option(levels, c, "A1");
    rational_list(levels, "--kappa", c.kappas, "Input level (kappa-check on the dual for gluing)")->required();
    levels->add_option("--op", c.op, "ff-dual, kernel or gluing")->capture_default_str();
    levels->add_option("--n", c.n, "Non-negative integer n")->capture_default_str();
    common(levels, c);

    auto* takiff = app.add_subcommand("takiff-forms", "Invariant forms of g and of its Takiff algebra");
    type_option(takiff, c, "A1");
    common(takiff, c);

    auto* hom = app.add_subcommand("hom-dim", "Dimension of an intertwiner space");
    type_option(hom, c, "A1");
    hom->add_option("--from", c.rep_from, "adjoint, trivial, alt2 or sym2")->capture_default_str();
    hom->add_option("--to", c.rep_to, "adjoint, trivial, alt2 or sym2")->capture_default_str();
    common(hom, c);

    auto* ext = app.add_subcommand("classify-ext", "Classify g (x) F[t]/(t^2 - beta t - alpha)");
    rational_list(ext, "--alpha", c.alpha, "Values of alpha (repeatable, paired with --beta)");
    rational_list(ext, "--beta", c.beta, "Values of beta (repeatable, paired with --alpha)");
    ext->add_option("--base", c.base, "Base algebra A1 (sl_2) or A2 (sl_3)")->capture_default_str();
    ext->add_option("--random", c.random_pairs, "Random pairs per branch");
    ext->add_option("--seed", c.seed, "Seed for random pairs")->capture_default_str();
    common(ext, c);

    auto* sing = app.add_subcommand("singular", "Singular-vector constraints in degree two");
    rational_option(sing, "--scale-e", c.scale_s, "Rescaling of the root vector e (default 1)");
    rational_option(sing, "--scale-f", c.scale_t, "Rescaling of the root vector f (default 1)");
    common(sing, c);

    auto* ch = app.add_subcommand("char", "Dump a character series as canonical JSON");
    type_option(ch, c, "A1");
    series_options(ch, c);
    ch->add_option("--which", c.which,
                   "level-one, theta, denominator, inverse-denominator, weyl, t-module, gko-lhs, gko-rhs or kw-lhs")
        ->capture_default_str();
    ch->add_option("--lambda", c.lambda, "Highest weight in fundamental-weight coordinates")->delimiter(',');
    rational_list(ch, "--kappa", c.kappas, "Level for weyl, t-module and gko-lhs");
    common(ch, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : affchar::cli::exit_usage;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return affchar::cli::exit_usage;
    }

    c.command = app.get_subcommands().front()->get_name();
    c.threads = affchar::threads_from_env();
    auto result = affchar::cli::run(c);
    if (result.exit_code == affchar::cli::exit_usage) {
        std::cerr << result.error << "\n";
        return result.exit_code;
    }
    const std::string text = result.report.dump(2) + "\n";
    if (c.output.empty()) {
        std::cout << text;
    } else {
        try {
            affchar::cli::write_atomically(c.output, text);
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return affchar::cli::exit_usage;
        }
        for (const auto& line : result.summary) std::cout << line << "\n";
        std::cout << "status: " << (result.exit_code == 0 ? "pass" : "fail") << "\n";
    }
    return result.exit_code;
}
