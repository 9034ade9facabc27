// SPDX-License-Identifier: Apache-2.0
//
// cdalg: validate, verify, primes and example commands. Exit codes:
// 0 all verdicts pass, 1 a verdict failed, 2 usage or configuration error.

#include "cdalg/cli.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

using namespace cdalg::cli;

namespace {

AlgebraConfig config_or_example(const std::string& path) {
    return path.empty() ? example_config() : load_config(path);
}

int emit(const Report& r, const std::string& json_path) {
    std::cout << render_text(r);
    if (json_path == "-") {
        std::cout << r.doc.dump(2) << "\n";
    } else if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "cannot write " << json_path << "\n";
            return exit_usage;
        }
        out << r.doc.dump(2) << "\n";
    }
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cyclic algebras of degree three with an involution of the second kind"};
    app.require_subcommand(1);

    std::string config, json_path, suite;
    std::vector<std::int64_t> primes;
    Options opt;

    auto* validate = app.add_subcommand("validate", "Check the algebra data and integrality");
    validate->add_option("--config", config, "Algebra configuration (JSON); built-in example if omitted");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--config", config, "Algebra configuration (JSON); built-in example if omitted");
    verify->add_option("--height", opt.height, "Height bound (0 = suite default)")->check(CLI::Range(0, 6));
    verify->add_option("--p", opt.p, "Characteristic for lemma suites");
    verify->add_option("--n", opt.n, "Base field degree for lemma suites");
    verify->add_option("--seed", opt.seed, "Seed for sampled suites");
    verify->add_option("--samples", opt.samples, "Sample count for sampled suites")->check(CLI::PositiveNumber);
    verify->add_option("--primes", opt.primes, "Prime set S for s-scan")->delimiter(',');
    verify->add_option("--limit", opt.limit, "Size guard p^(6n) for lemma suites");
    verify->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");

    auto* primes_cmd = app.add_subcommand("primes", "Classify primes");
    primes_cmd->add_option("--config", config, "Algebra configuration (JSON); built-in example if omitted");
    primes_cmd->add_option("--list", primes, "Primes, comma separated")->required()->delimiter(',');

    auto* example = app.add_subcommand("example", "Full pipeline on the built-in example");

    for (auto* sub : {validate, verify, primes_cmd, example}) {
        sub->add_option("--json", json_path, "Write the JSON report to PATH ('-' for stdout)");
        sub->add_flag("--timings", opt.timings, "Include wall-clock timings");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    Report r;
    if (validate->parsed()) {
        r = guarded("validate", [&] { return cmd_validate(config_or_example(config), opt); });
    } else if (verify->parsed()) {
        r = guarded("verify", [&] { return cmd_verify(config_or_example(config), suite, opt); });
    } else if (primes_cmd->parsed()) {
        r = guarded("primes", [&] { return cmd_primes(config_or_example(config), primes, opt); });
    } else {
        r = guarded("example", [&] { return cmd_report_example(opt); });
    }
    return emit(r, json_path);
}
