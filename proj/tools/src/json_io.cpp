#include "psilab_cli/json_io.hpp"

#include "psilab/parse.hpp"

#include <fstream>
#include <sstream>

namespace psilab::cli {

namespace {

template <FormKind K>
json form_to_json(const SparseForm<K>& f) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) terms.push_back({{"coeff", to_string(c)}, {"exps", m.exps()}});
    return {{"n", f.nvars()}, {"terms", terms}};
}

template <FormKind K>
SparseForm<K> form_from_json(const json& j) {
    const std::size_t n = j.at("n").get<std::size_t>();
    SparseForm<K> f(n);
    for (const auto& t : j.at("terms")) {
        auto exps = t.at("exps").get<std::vector<int>>();
        if (exps.size() != n) throw ParseError("exponent vector length differs from n");
        for (int e : exps)
            if (e < 0) throw ParseError("negative exponent");
        const auto& c = t.at("coeff");
        Rational q = c.is_string() ? parse_rational(c.get<std::string>()) : Rational(c.get<long>());
        f.add_term(Monomial(exps), q);
    }
    return f;
}

}  // namespace

json to_json(const Polynomial& f) { return form_to_json(f); }
json to_json(const DualElement& g) { return form_to_json(g); }
Polynomial polynomial_from_json(const json& j) { return form_from_json<FormKind::polynomial>(j); }
DualElement dual_from_json(const json& j) { return form_from_json<FormKind::dual>(j); }

json to_json(const Partition& p) { return p.parts(); }

Partition partition_from_json(const json& j) { return Partition::from_decreasing(j.get<std::vector<int>>()); }

Partition parse_partition(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (ch != '[' && ch != ']' && ch != '(' && ch != ')' && ch != ' ') s += ch;
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            parts.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("bad partition '" + text + "'");
        }
    }
    if (!Partition::is_partition(parts)) throw ParseError("'" + text + "' is not weakly decreasing and nonnegative");
    return Partition(parts);
}

json to_json(const BettiTable& t) {
    json out = json::array();
    for (const auto& [ij, b] : t.entries()) out.push_back({{"i", ij.first}, {"j", ij.second}, {"beta", b}});
    return out;
}

json to_json(const SpechtDecomposition& d) {
    json out = json::array();
    for (auto it = d.mult.rbegin(); it != d.mult.rend(); ++it)
        out.push_back({{"partition", it->first.parts()}, {"multiplicity", it->second}});
    return out;
}

Polynomial load_polynomial(const std::string& path, std::optional<std::size_t> n) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open polynomial file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        auto f = polynomial_from_json(json::parse(text));
        if (n && *n != f.nvars()) throw ConfigError("--n disagrees with the polynomial file");
        return f;
    }
    // drop comment lines
    std::string body;
    std::stringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        auto p = line.find('#');
        if (p != std::string::npos) line = line.substr(0, p);
        body += line + " ";
    }
    return parse_polynomial(body, n);
}

}  // namespace psilab::cli
