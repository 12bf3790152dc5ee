// Command-line front end: constructs, extends and certifies separated sets
// in spaces described by JSON documents.

#include <sepset/cli.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{"maximal delta-separated sets over exact distance oracles"};
    app.require_subcommand(1);

    sepset::cli::RunConfig cfg;
    std::uint32_t corrupt_case = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--space", cfg.space_path, "space document (JSON)");
        sub->add_option("--delta", cfg.delta, "separation threshold, a rational like 3/2");
        sub->add_option("--mode", cfg.mode, "strict | nonstrict");
        sub->add_option("--horizon", cfg.horizon,
                        "dense enumeration horizon (default: the whole dense set)");
        sub->add_option("--max-size", cfg.max_size, "stop the construction after this many picks");
        sub->add_option("--steps", cfg.steps, "refinement steps for choose-closed");
        sub->add_option("--seed", cfg.seed_spec, "seed set: a JSON file or 'canonical'");
        sub->add_option("--out", cfg.out_path, "write the result document here (default stdout)");
        sub->add_option("--rng-seed", cfg.rng_seed, "seed for random space generation");
        return sub;
    };

    add_common(app.add_subcommand("build-strict",
                                  "grow a maximal strictly separated set from scratch"));
    add_common(app.add_subcommand("extend-excision",
                                  "extend a strict seed by excising its closed balls"));
    auto* nonstrict = add_common(app.add_subcommand(
        "extend-nonstrict", "extend a nonstrict seed in a complete space"));
    nonstrict->add_option("--enum-limit", cfg.enum_limit,
                          "dense prefix scanned for residual witnesses");
    auto* choose = add_common(app.add_subcommand(
        "choose-closed", "locate a point of a closed set via the dense enumeration"));
    choose->add_option("--closed-set", cfg.closed_set_path, "closed-set document (JSON)");
    auto* oracle = add_common(app.add_subcommand(
        "oracle", "exhaustively catalogue maximal sets of a finite space"));
    oracle->add_option("--result", cfg.result_path, "cross-check this result document");
    oracle->add_option("--random-n", cfg.random_n, "use a random metric space of this size");
    auto* fcheck = add_common(app.add_subcommand(
        "fixture-check", "audit axioms and exact identities of a fixture space"));
    fcheck->add_option("--bound", cfg.bound, "sample cap for identity sweeps");
    fcheck->add_option("--audit-horizon", cfg.audit_horizon,
                       "dense prefix materialized for the axiom audit");
    auto* corrupt =
        fcheck->add_option("--corrupt-case", corrupt_case,
                           "tamper with this metric case before checking (negative control)");
    auto* extract = add_common(app.add_subcommand(
        "extract-choice", "read one label per set out of a maximal separated set"));
    extract->add_option("--result", cfg.result_path, "result document holding the set");

    CLI11_PARSE(app, argc, argv);

    if (corrupt->count() > 0) cfg.corrupt_case = corrupt_case;
    cfg.command = app.get_subcommands().front()->get_name();
    return sepset::cli::run(cfg, std::cout, std::cerr);
}
