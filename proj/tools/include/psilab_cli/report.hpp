#pragma once

#include "psilab_cli/json_io.hpp"

#include <string>
#include <vector>

namespace psilab::cli {

struct Verdict {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::string command;
    json inputs = json::object();
    json results = json::object();  // each section carries a "source" tag
    std::vector<Verdict> verdicts;
    std::vector<std::string> lines;  // text rendering
    std::string status = "ok";
    double seconds = 0;

    void check(const std::string& name, bool pass, const std::string& detail = {});
    void say(const std::string& line) { lines.push_back(line); }
    bool all_pass() const;
    int exit_code() const { return all_pass() ? 0 : 1; }

    json to_json() const;
    std::string to_text() const;
};

}  // namespace psilab::cli
