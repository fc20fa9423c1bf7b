#include "psilab/psi_ideal.hpp"

#include <algorithm>
#include <random>

namespace psilab {

Polynomial sample_general_f(std::size_t n, int d, std::uint64_t seed, int bound) {
    if (n < 1 || d < 1) throw std::invalid_argument("sample_general_f needs n >= 1 and d >= 1");
    if (bound < 1) throw std::invalid_argument("coefficient bound must be positive");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, 2 * bound);
    const auto monos = monomials_of_degree(n, d);
    for (;;) {
        Polynomial f(n);
        Rational pure = 0;
        for (const auto& m : monos) {
            int k = pick(rng);
            int c = k <= bound ? -k : k - bound;
            f.add_term(m, c);
            if (type_of(m).length() == 1) pure += c;
        }
        if (sgn(pure) != 0) return f;
    }
}

namespace {
std::vector<std::pair<Partition, Partition>> construction_pairs(int d) {
    std::vector<std::pair<Partition, Partition>> out;
    auto lambdas = enumerate_partitions(d);
    std::reverse(lambdas.begin(), lambdas.end());
    for (const auto& lambda : lambdas) {
        if (lambda.length() == 1) continue;
        auto subs = subpartitions_with_T(lambda);
        std::stable_sort(subs.begin(), subs.end(), [](const Subpartition& a, const Subpartition& b) {
            if (a.gamma.length() != b.gamma.length()) return a.gamma.length() < b.gamma.length();
            return b.gamma < a.gamma;
        });
        for (const auto& s : subs)
            if (!s.is_whole) out.emplace_back(lambda, s.gamma);
    }
    return out;
}
}  // namespace

std::size_t construction_min_n(int d) {
    if (d < 2) throw std::invalid_argument("construction needs d >= 2");
    std::size_t n = 1;
    for (const auto& [lambda, gamma] : construction_pairs(d)) n += 2 * lambda.length() - gamma.length();
    return n;
}

Construction build_construction_f(int d, std::size_t n) {
    Construction c;
    c.min_n = construction_min_n(d);
    if (n == 0) n = c.min_n;
    if (n < c.min_n)
        throw std::invalid_argument("construction for d = " + std::to_string(d) + " needs at least " +
                                    std::to_string(c.min_n) + " variables, got " + std::to_string(n));
    c.f = Polynomial(n, Monomial::var(n, 0, d));
    std::size_t next = 1;
    for (const auto& [lambda, gamma] : construction_pairs(d)) {
        auto T = T_of(lambda, gamma);
        const int s = lambda.length();
        std::vector<std::size_t> left(s), right(s);
        for (int k = 0; k < s; ++k) left[k] = next++;
        for (int k = 0; k < s; ++k) {
            bool shared = std::find(T.begin(), T.end(), k + 1) != T.end();
            right[k] = shared ? left[k] : next++;
        }
        std::vector<int> a(n, 0), b(n, 0);
        for (int k = 0; k < s; ++k) {
            a[left[k]] = lambda[k];
            b[right[k]] = lambda[k];
        }
        Polynomial bin(n);
        bin.add_term(Monomial(a), 1);
        bin.add_term(Monomial(b), -1);
        c.f += bin;
        c.terms.push_back({lambda, gamma, std::move(bin)});
    }
    return c;
}

TParams extract_params(const Polynomial& f) {
    TParams p;
    p.d = f.degree();
    for (const auto& lambda : enumerate_partitions(p.d)) p.alpha[lambda] = 0;
    for (const auto& [m, c] : f.terms()) p.alpha[type_of(m)] += c;
    const Partition top{p.d};
    const Rational a = p.alpha.at(top);
    if (sgn(a) == 0) throw std::domain_error("t undefined: the coefficients of type (d) sum to zero");
    for (const auto& [lambda, v] : p.alpha)
        if (lambda != top) p.t[lambda] = v / a;
    return p;
}

}  // namespace psilab
