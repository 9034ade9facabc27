// SPDX-License-Identifier: Apache-2.0
//
// Configuration loading and report-producing commands behind the
// command-line tool. Every command returns a JSON report and an exit code;
// the schema is documented in docs/report_schema.md.

#ifndef CDALG_CLI_HPP
#define CDALG_CLI_HPP

#include "cdalg/algebra.hpp"

#include "json.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cdalg::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_verdict_failed = 1;
inline constexpr int exit_usage = 2;

inline constexpr int schema_version = 1;
inline constexpr std::uint64_t default_seed = 20240601;

/// Malformed configuration or parameters (exit code 2).
class UsageError : public Error {
public:
    using Error::Error;
};

struct AlgebraConfig {
    std::int64_t d = 0;
    /// X^3 + f[2] X^2 + f[1] X + f[0].
    std::array<Rat, 3> f;
    /// Derived from f when absent.
    std::optional<std::array<Rat, 3>> g;
    /// Coordinates in the integral basis {1, omega} of o_E.
    std::array<Rat, 2> a;
    std::array<Rat, 3> b;
    bool division_asserted = false;
};

/// d = 3, f = X^3 - 13X + 13, a = zeta_3, b = 1.
AlgebraConfig example_config();

/// Throws UsageError on unknown keys, missing keys or non-exact numbers.
AlgebraConfig parse_config(const nlohmann::json& j);
AlgebraConfig load_config(const std::string& path);
nlohmann::json config_json(const AlgebraConfig& cfg);

/// Converts a to {1, sqrt(-d)} coordinates and derives g when absent.
/// Throws Error when g cannot be derived.
AlgebraDef to_def(const AlgebraConfig& cfg);

struct Options {
    /// Height bound; 0 selects the suite default.
    int height = 0;
    int p = 5;
    int n = 1;
    std::uint64_t seed = default_seed;
    int samples = 200;
    /// Prime set for s-scan; empty selects defaults.
    std::vector<std::int64_t> primes;
    /// Size guard for finite-field enumeration (p^{6n}).
    double limit = 1e9;
    unsigned threads = 0;
    /// Adds wall-clock timings; reports are otherwise byte-reproducible.
    bool timings = false;
};

struct Report {
    nlohmann::json doc;
    int exit_code = exit_pass;
};

const std::vector<std::string>& suite_names();

Report cmd_validate(const AlgebraConfig& cfg, const Options& opt = {});
Report cmd_verify(const AlgebraConfig& cfg, const std::string& suite, const Options& opt = {});
Report cmd_primes(const AlgebraConfig& cfg, const std::vector<std::int64_t>& primes, const Options& opt = {});
Report cmd_report_example(const Options& opt = {});

/// Plain-text rendering: one line per verdict and a final status line.
std::string render_text(const Report& report);

/// Exit-code-2 report carrying `message`.
Report usage_report(const std::string& command, const std::string& message);

/// Runs `body`, turning any exception into usage_report(command, what()).
template <class F>
Report guarded(const std::string& command, F&& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        return usage_report(command, e.what());
    }
}

}  // namespace cdalg::cli

#endif  // CDALG_CLI_HPP
