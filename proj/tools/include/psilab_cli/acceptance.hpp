#pragma once

#include <string>
#include <vector>

namespace psilab::cli {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::vector<std::string> notes;
    double seconds = 0;
};

std::vector<int> criteria_for_suite(const std::string& suite);
CriterionResult run_criterion(int id);
// d=4, n=8 formula vs oracle over a prime field; slow.
CriterionResult run_stretch();

std::string format_line(const CriterionResult& r);

}  // namespace psilab::cli
