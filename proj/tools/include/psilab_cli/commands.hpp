#pragma once

#include "psilab_cli/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace psilab::cli {

struct RunConfig {
    std::optional<int> n;
    std::optional<int> d;
    std::uint64_t seed = 1;
    int bound = 5;
    std::string field = "q";
    int cap = -1;
    int max_i = 4;
    bool json = false;

    std::string poly;                 // polynomial file
    std::optional<int> degree;        // inverse
    std::optional<int> i, j;          // equivariant
    std::string schur;                // restrict
    std::string betti_mode = "both";  // oracle | formula | both
    std::string t_json;               // linrel
    bool t_zero = false;
    std::optional<std::uint64_t> t_seed;
    std::string suite = "all";        // verify-paper
    bool stretch = false;
};

const std::vector<std::string>& command_names();

// Throws ConfigError / ParseError on bad input.
Report run(const std::string& command, const RunConfig& cfg);

}  // namespace psilab::cli
