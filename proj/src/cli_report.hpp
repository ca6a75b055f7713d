#pragma once

// Command dispatch and JSON report assembly for the affchar command line.

#include <affchar/rational.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace affchar::cli {

inline constexpr int kSchema = 1;

enum ExitCode : int { exit_pass = 0, exit_mismatch = 1, exit_usage = 2 };

struct RunConfig {
    std::string command;
    std::string type_label = "A1";
    Rational order = Rational(6);
    std::string spec = "full";
    std::vector<Rational> kappas;
    std::int64_t n = 1;
    std::string output;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    bool timing = false;

    // levels
    std::string op = "ff-dual";
    // weights
    Rational max_norm = Rational(4);
    std::size_t samples = 0;
    // hom-dim
    std::string rep_from = "alt2";
    std::string rep_to = "adjoint";
    // classify-ext
    std::vector<Rational> alpha;
    std::vector<Rational> beta;
    std::string base = "A1";
    std::size_t random_pairs = 0;
    // singular
    Rational scale_s = Rational(1);
    Rational scale_t = Rational(1);
    // char
    std::string which = "level-one";
    std::vector<std::int64_t> lambda;

    nlohmann::json to_json() const;
};

struct RunResult {
    int exit_code = exit_pass;
    nlohmann::json report;
    std::vector<std::string> summary;
    std::string error;
};

/// Runs one command. Usage problems are reported through exit_usage, never thrown.
RunResult run(const RunConfig& config);

/// Writes `text` to `path` through a temporary file and rename.
void write_atomically(const std::string& path, const std::string& text);

const char* version();

} // namespace affchar::cli
