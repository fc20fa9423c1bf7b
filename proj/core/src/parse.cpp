#include "psilab/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace psilab {

namespace {

struct RawTerm {
    Rational coeff{1};
    std::vector<std::pair<std::size_t, int>> powers;  // (1-based index, exponent)
};

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

void parse_factor(const std::string& f, char var, RawTerm& term) {
    if (f.empty()) throw ParseError("empty factor");
    if (std::isdigit(static_cast<unsigned char>(f[0]))) {
        term.coeff *= parse_rational(f);
        return;
    }
    if (f[0] != var) throw ParseError(std::string("expected variable '") + var + "' in factor '" + f + "'");
    std::size_t caret = f.find('^');
    std::string idx = f.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
    if (!all_digits(idx) || std::stoul(idx) == 0) throw ParseError("bad variable index in '" + f + "'");
    int e = 1;
    if (caret != std::string::npos) {
        std::string ex = f.substr(caret + 1);
        if (ex.size() >= 2 && ex.front() == '(' && ex.back() == ')') ex = ex.substr(1, ex.size() - 2);
        if (!all_digits(ex)) throw ParseError("bad exponent in '" + f + "'");
        e = std::stoi(ex);
    }
    term.powers.emplace_back(std::stoul(idx), e);
}

std::vector<RawTerm> parse_terms(const std::string& text, char var) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty input");
    std::vector<RawTerm> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            if (s[pos] == '-') sign = -sign;
            ++pos;
        }
        std::size_t end = pos;
        int depth = 0;
        while (end < s.size()) {
            char c = s[end];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (depth == 0 && (c == '+' || c == '-') && end > pos && s[end - 1] != '^') break;
            ++end;
        }
        std::string body = s.substr(pos, end - pos);
        if (body.empty()) throw ParseError("dangling sign in '" + text + "'");
        RawTerm term;
        std::stringstream ss(body);
        std::string factor;
        while (std::getline(ss, factor, '*')) parse_factor(factor, var, term);
        if (sign < 0) term.coeff = -term.coeff;
        out.push_back(std::move(term));
        pos = end;
    }
    return out;
}

template <FormKind K>
SparseForm<K> build(const std::vector<RawTerm>& raw, std::optional<std::size_t> n) {
    std::size_t need = 0;
    for (const auto& t : raw)
        for (const auto& [i, e] : t.powers) need = std::max(need, i);
    std::size_t nv = n.value_or(need);
    if (need > nv) throw ParseError("variable index " + std::to_string(need) + " exceeds n = " + std::to_string(nv));
    SparseForm<K> out(nv);
    for (const auto& t : raw) {
        std::vector<int> e(nv, 0);
        for (const auto& [i, p] : t.powers) e[i - 1] += p;
        out.add_term(Monomial(std::move(e)), t.coeff);
    }
    return out;
}

template <FormKind K>
std::string format_form(const SparseForm<K>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    // highest degree first, then x1-heavy first
    std::vector<std::pair<Monomial, Rational>> terms(f.terms().begin(), f.terms().end());
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto& a, const auto& b) { return a.first.degree() > b.first.degree(); });
    for (const auto& [m, c] : terms) {
        Rational a = abs(c);
        if (first) {
            if (sgn(c) < 0) out += "-";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < m.nvars(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            if constexpr (K == FormKind::polynomial) {
                mono += "x" + std::to_string(i + 1);
                if (m[i] > 1) mono += "^" + std::to_string(m[i]);
            } else {
                mono += "y" + std::to_string(i + 1);
                if (m[i] > 1) mono += "^(" + std::to_string(m[i]) + ")";
            }
        }
        if (mono.empty())
            out += to_string(a);
        else if (a == 1)
            out += mono;
        else
            out += to_string(a) + "*" + mono;
    }
    return out;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, std::optional<std::size_t> n) {
    return build<FormKind::polynomial>(parse_terms(text, 'x'), n);
}

DualElement parse_dual(const std::string& text, std::optional<std::size_t> n) {
    return build<FormKind::dual>(parse_terms(text, 'y'), n);
}

std::string format(const Polynomial& f) { return format_form(f); }
std::string format(const DualElement& g) { return format_form(g); }

}  // namespace psilab
