#include "psilab_cli/report.hpp"

#include <iomanip>
#include <sstream>

namespace psilab::cli {

void Report::check(const std::string& name, bool pass, const std::string& detail) {
    verdicts.push_back({name, pass, detail});
}

bool Report::all_pass() const {
    if (status != "ok") return false;
    for (const auto& v : verdicts)
        if (!v.pass) return false;
    return true;
}

json Report::to_json() const {
    json v = json::array();
    for (const auto& x : verdicts) v.push_back({{"check", x.name}, {"pass", x.pass}, {"detail", x.detail}});
    return {{"command", command}, {"inputs", inputs},   {"results", results},
            {"verdicts", v},      {"status", status},   {"seconds", seconds}};
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& l : lines) os << l << (l.empty() || l.back() != '\n' ? "\n" : "");
    for (const auto& v : verdicts) {
        os << (v.pass ? "[pass] " : "[FAIL] ") << v.name;
        if (!v.detail.empty()) os << ": " << v.detail;
        os << "\n";
    }
    if (status != "ok") os << "status: " << status << "\n";
    os << std::fixed << std::setprecision(2) << "time: " << seconds << " s\n";
    return os.str();
}

}  // namespace psilab::cli
