#include "psilab/equivariant.hpp"

namespace psilab {

std::map<std::pair<int, int>, SpechtDecomposition> decompose_all(const TorCharacters& chars) {
    std::map<std::pair<int, int>, SpechtDecomposition> out;
    for (const auto& [ij, chi] : chars) out.emplace(ij, specht_decompose(chi));
    return out;
}

bool dimensions_match(const std::map<std::pair<int, int>, SpechtDecomposition>& decs, const BettiTable& betti) {
    for (const auto& [ij, dec] : decs)
        if (dec.dimension() != betti.get(ij.first, ij.second)) return false;
    for (const auto& [ij, b] : betti.entries())
        if (!decs.count(ij)) return false;
    return true;
}

bool equivariant_duality_check(const TorCharacters& A, const TorCharacters& dual, int n) {
    const ClassFunction sgn_n = sign_character(n);
    auto matches = [&](const TorCharacters& X, const TorCharacters& Y) {
        for (const auto& [ij, chi] : X) {
            auto it = Y.find({n - ij.first, n - ij.second});
            if (it == Y.end() || chi != it->second * sgn_n) return false;
        }
        return true;
    };
    return A.size() == dual.size() && matches(A, dual) && matches(dual, A);
}

SpechtDecomposition koszul_residue_prediction(int n, int i) {
    SpechtDecomposition d;
    d.n = n;
    std::vector<int> a{n - i}, b{n - i + 1};
    for (int k = 0; k < i; ++k) a.push_back(1);
    for (int k = 0; k + 1 < i; ++k) b.push_back(1);
    if (i >= 0) d.add_sequence(a, 1);
    if (i >= 1) d.add_sequence(b, 1);
    return d;
}

SpechtDecomposition power_ideal_prediction(int n, int d, int i) {
    return restriction_decomposition(hook(d, i), n);
}

namespace {

std::vector<int> hook_seq(int a, int i) {
    std::vector<int> s{a};
    for (int k = 0; k < i; ++k) s.push_back(1);
    return s;
}

std::vector<int> seq(int a, int two, int ones) {
    // (a, 2^two, 1^ones); a negative count of ones makes the sequence invalid
    std::vector<int> s{a};
    for (int k = 0; k < two; ++k) s.push_back(2);
    if (ones < 0) return {-1};
    for (int k = 0; k < ones; ++k) s.push_back(1);
    return s;
}

SpechtDecomposition sign_multiple(int n, long m) {
    SpechtDecomposition d;
    d.n = n;
    if (m != 0) d.add(Partition(std::vector<int>(n, 1)), m);
    return d;
}

}  // namespace

TorDecompositions predicted_equivariant_tors(int n, int d) {
    if (n < 2 || d < 2) throw std::invalid_argument("prediction needs n >= 2 and d >= 2");
    const long a = static_cast<long>(partition_count(d)) - 1;
    const long ell = static_cast<long>(partition_count(d)) - static_cast<long>(partition_count(d - 1)) - 1;
    TorDecompositions out;
    SpechtDecomposition triv;
    triv.n = n;
    triv.add(Partition{n}, 1);
    out[{0, 0}] = triv;
    for (int i = 0; i <= n - 2; ++i) {
        auto dec = restriction_decomposition(hook(d, i), n);
        dec.add_sequence(hook_seq(n - i, i), -a);
        if (i >= 1) dec.add_sequence(hook_seq(n - i + 1, i - 1), -a);
        out[{i + 1, i + d}] = dec;
    }
    auto last = restriction_decomposition(hook(d, n - 1), n);
    last.add_sequence(hook_seq(2, n - 2), -a);
    last.add_sequence(std::vector<int>(n, 1), -(a - ell));
    out[{n, n - 1 + d}] = last;
    out[{n - 1, n - 1 + d}] = sign_multiple(n, ell);
    out[{n, n + d}] = sign_multiple(n, a);
    for (auto it = out.begin(); it != out.end();)
        it = it->second.mult.empty() ? out.erase(it) : std::next(it);
    return out;
}

TorDecompositions literal_equivariant_tors(int n, int d) {
    if (n < 2 || d < 2) throw std::invalid_argument("prediction needs n >= 2 and d >= 2");
    const long a = static_cast<long>(partition_count(d)) - 1;
    const long ell = static_cast<long>(partition_count(d)) - static_cast<long>(partition_count(d - 1)) - 1;
    const long pd1 = static_cast<long>(partition_count(d - 1));
    TorDecompositions out;
    for (int i = 1; i <= n - 1; ++i) {
        auto dec = restriction_decomposition(hook(d, i), n);
        dec.add_sequence(hook_seq(n - i + 1, i - 1), -a);
        dec.add_sequence(hook_seq(n - i, i), -a);
        out[{i, i + d - 1}] = dec;
    }
    out[{n - 1, n - 1 + d}] = sign_multiple(n, ell);
    auto last = restriction_decomposition(hook(d, n - 1), n);
    last.add_sequence(std::vector<int>(n, 1), pd1 + 1);
    last.add_sequence(hook_seq(2, n - 2), -a);
    out[{n, n - 1 + d}] = last;
    out[{n, n + d}] = sign_multiple(n, a);
    return out;
}

SpechtDecomposition quadratic_display(int n, int i) {
    SpechtDecomposition d;
    d.n = n;
    d.add_sequence(seq(n - i, 1, i - 2), 1);
    d.add_sequence(seq(n - i, 0, i), 2);
    d.add_sequence(seq(n - i - 1, 1, i - 1), 2);
    d.add_sequence(seq(n - i - 1, 0, i + 1), 2);
    d.add_sequence(seq(n - i - 2, 1, i), 1);
    return d;
}

std::map<int, SpechtDecomposition> literal_quadratic_tors(int n) {
    std::map<int, SpechtDecomposition> out;
    for (int i = 0; i < n; ++i) out[i] = quadratic_display(n, i);
    SpechtDecomposition last;
    last.n = n;
    last.add_sequence(std::vector<int>(n, 1), 1);
    last.add_sequence(hook_seq(2, n - 2), 1);
    out[n] = last;
    return out;
}

std::vector<std::string> decomposition_diff(const SpechtDecomposition& got, const SpechtDecomposition& want) {
    std::vector<std::string> out;
    const auto delta = got - want;
    for (const auto& [lam, m] : delta.mult)
        out.push_back("Sp" + lam.str() + ": " + std::to_string(got.get(lam)) + " vs " + std::to_string(want.get(lam)));
    return out;
}

}  // namespace psilab
