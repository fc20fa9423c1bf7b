#include "psilab/parse.hpp"
#include "psilab_cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace psilab;
using namespace psilab::cli;

namespace {

void common_flags(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--n", cfg.n, "number of variables");
    sub->add_option("--d", cfg.d, "degree of f");
    sub->add_option("--seed", cfg.seed, "sampling seed");
    sub->add_option("--bound", cfg.bound, "coefficient bound for sampling");
    sub->add_option("--field", cfg.field, "q or fp:<p>");
    sub->add_option("--cap", cfg.cap, "degree cap for A (default d+n)");
    sub->add_option("--max-i", cfg.max_i, "homological cutoff for golod-check");
    sub->add_flag("--json", cfg.json, "JSON report on stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"psilab: principal symmetric ideals"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::map<std::string, CLI::App*> subs;
    for (const auto& name : command_names()) {
        auto* sub = app.add_subcommand(name);
        common_flags(sub, cfg);
        subs[name] = sub;
    }
    for (const char* name : {"orbit-dim", "inverse", "classify", "betti", "golod-check", "equivariant"})
        subs[name]->add_option("--poly", cfg.poly, "polynomial file (text or JSON)");
    subs["inverse"]->add_option("--degree", cfg.degree, "j in (I^perp)_{-j}");
    subs["equivariant"]->add_option("--i", cfg.i, "homological degree");
    subs["equivariant"]->add_option("--j", cfg.j, "internal degree");
    subs["restrict"]->add_option("--schur", cfg.schur, "partition lambda")->required();
    auto* betti = subs["betti"];
    auto* mode = betti->add_option_group("mode");
    mode->add_flag_callback("--oracle", [&] { cfg.betti_mode = "oracle"; });
    mode->add_flag_callback("--formula", [&] { cfg.betti_mode = "formula"; });
    mode->add_flag_callback("--both", [&] { cfg.betti_mode = "both"; });
    mode->require_option(0, 1);
    subs["linrel"]->add_option("--t", cfg.t_json, "JSON object partition -> value");
    subs["linrel"]->add_flag("--t-zero", cfg.t_zero, "use t = 0");
    subs["linrel"]->add_option("--t-seed", cfg.t_seed, "seed for random t");
    subs["verify-paper"]->add_option("--suite", cfg.suite, "all, a criterion name, or ids like 1,4");
    subs["verify-paper"]->add_flag("--stretch", cfg.stretch, "also run the d=4, n=8 check");

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();
    try {
        Report rep = run(command, cfg);
        if (cfg.json)
            std::cout << rep.to_json().dump(2) << "\n";
        else
            std::cout << rep.to_text();
        return rep.exit_code();
    } catch (const ConfigError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
