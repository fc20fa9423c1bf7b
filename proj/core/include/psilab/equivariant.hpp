#pragma once

#include "psilab/characters.hpp"
#include "psilab/koszul.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace psilab {

// H_i of the Koszul complex of M in internal degree j, with bases of cycles
// and boundaries kept so that traces of permutations can be read off.
template <class F>
class TorTrace {
public:
    using Elem = typename F::Elem;

    TorTrace(const KoszulComplex<F>& K, int i, int j) : K_(K), i_(i), j_(j) {
        const F& field = K.module().field();
        out_ = K.differential(i, j);
        const Matrix<F> in = K.differential(i + 1, j);
        const std::size_t dim = K.chain_dim(i, j);
        RowSpace<F> rel(field, dim);
        for (std::size_t r = 0; r < out_.rows() && !rel.full(); ++r) rel.insert(out_.row(r));
        cycle_cols_ = rel.free_columns();
        cycles_ = rel.orthogonal_complement();
        boundaries_ = image(field, in);
    }

    int i() const { return i_; }
    int j() const { return j_; }
    std::size_t dim() const { return cycles_.size() - boundaries_.rank(); }

    // trace of sigma on cycles minus trace on boundaries
    Elem trace(const Permutation& sigma, bool validate = true) const {
        const F& field = K_.module().field();
        if (dim() == 0) return field.zero();
        const Matrix<F> P = K_.action(sigma, i_, j_);
        Elem t = field.zero();
        for (std::size_t k = 0; k < cycles_.size(); ++k) {
            const Vec<F> img = apply(field, P, cycles_[k]);
            if (validate && !is_zero_vec(field, apply(field, out_, img)))
                throw std::invalid_argument("action does not commute with the Koszul differential");
            t = field.add(t, img[cycle_cols_[k]]);
        }
        for (std::size_t c : boundaries_.pivots()) {
            const Vec<F> img = apply(field, P, boundaries_.row_for_pivot(c));
            if (validate && !boundaries_.contains(img))
                throw std::invalid_argument("action does not preserve the Koszul boundaries");
            t = field.sub(t, img[c]);
        }
        return t;
    }

private:
    const KoszulComplex<F>& K_;
    int i_, j_;
    Matrix<F> out_;
    std::vector<std::size_t> cycle_cols_;
    std::vector<Vec<F>> cycles_;
    RowSpace<F> boundaries_;
};

// Character of S_n on Tor_i(M, k)_j, one canonical permutation per cycle type.
template <class F>
ClassFunction tor_character(const KoszulComplex<F>& K, int i, int j) {
    const int n = static_cast<int>(K.module().nvars());
    const F& field = K.module().field();
    TorTrace<F> T(K, i, j);
    ClassFunction chi(n);
    for (auto& [mu, v] : chi.values) v = field.to_rational(T.trace(Permutation::of_cycle_type(mu.parts(), n)));
    return chi;
}

template <class F>
ClassFunction tor_character(const GradedModule<F>& M, int i, int j) {
    KoszulComplex<F> K(M);
    return tor_character(K, i, j);
}

using TorCharacters = std::map<std::pair<int, int>, ClassFunction>;

// Characters of every nonzero Tor_i(M, k)_j.
template <class F>
TorCharacters all_tor_characters(const GradedModule<F>& M) {
    if (!M.has_action()) throw std::invalid_argument("module carries no symmetric group action");
    if (auto err = M.validate(); !err.empty()) throw std::invalid_argument("inconsistent module: " + err);
    KoszulComplex<F> K(M);
    const int n = static_cast<int>(M.nvars());
    const F& field = M.field();
    TorCharacters out;
    for (int j = M.min_degree(); j <= M.max_degree() + n; ++j)
        for (int i = 0; i <= n; ++i) {
            if (K.chain_dim(i, j) == 0) continue;
            TorTrace<F> T(K, i, j);
            if (T.dim() == 0) continue;
            ClassFunction chi(n);
            for (auto& [mu, v] : chi.values) v = field.to_rational(T.trace(Permutation::of_cycle_type(mu.parts(), n)));
            out.emplace(std::make_pair(i, j), std::move(chi));
        }
    return out;
}

// R_{>=d} cut off above degree cap, with S_n permuting monomials. Its Tor_i
// in degree i+d agrees with that of m^d as long as cap >= d+1.
template <class F>
GradedModule<F> truncated_power_module(const F& field, std::size_t n, int d, int cap) {
    if (cap < d + 1) throw std::invalid_argument("truncation cap must be at least d+1");
    std::vector<std::size_t> dims;
    for (int j = d; j <= cap; ++j) dims.push_back(dim_R(n, j));
    GradedModule<F> M(field, n, d, dims);
    for (int j = d; j < cap; ++j) {
        MonomialIndex lo(n, j), hi(n, j + 1);
        for (std::size_t k = 0; k < n; ++k) {
            auto& X = M.x(k, j);
            const Monomial xk = Monomial::var(n, k);
            for (std::size_t c = 0; c < lo.size(); ++c) X(hi.index(lo[c] * xk), c) = field.one();
        }
    }
    M.set_action([field, n](const Permutation& s, int j) {
        MonomialIndex idx(n, j);
        Matrix<F> P(field, idx.size(), idx.size());
        for (std::size_t c = 0; c < idx.size(); ++c) P(idx.index(permute(s, idx[c])), c) = field.one();
        return P;
    });
    return M;
}

std::map<std::pair<int, int>, SpechtDecomposition> decompose_all(const TorCharacters& chars);

// sum of mult * dim over each bidegree equals the betti number
bool dimensions_match(const std::map<std::pair<int, int>, SpechtDecomposition>& decs, const BettiTable& betti);

// char Tor_i(A)_j (mu) = sign(mu) * char Tor_{n-i}(I^perp)_{n-j} (mu)
bool equivariant_duality_check(const TorCharacters& A, const TorCharacters& dual, int n);

// Tor_i(k, k) = Sp_(n-i,1^i) + Sp_(n-i+1,1^{i-1})
SpechtDecomposition koszul_residue_prediction(int n, int i);

// Tor_i(m^d)_{i+d} = Res S_(d,1^i)
SpechtDecomposition power_ideal_prediction(int n, int d, int i);

using TorDecompositions = std::map<std::pair<int, int>, SpechtDecomposition>;

// Equivariant Tor_i(R/I) for a general principal symmetric ideal in degree d,
// obtained from 0 -> I -> m^d -> k^a(-d) -> 0:
//   Tor_{i+1}(A)_{i+d} = Res S_(d,1^i) - a Sp_(n-i,1^i) - a Sp_(n-i+1,1^{i-1}),  0 <= i <= n-2
//   Tor_n(A)_{n-1+d}   = Res S_(d,1^{n-1}) - a Sp_(2,1^{n-2}) - (a - l) Sp_(1^n)
//   Tor_{n-1}(A)_{n-1+d} = l Sp_(1^n),  Tor_n(A)_{n+d} = a Sp_(1^n)
TorDecompositions predicted_equivariant_tors(int n, int d);

// Literal variant: Tor_i(A)_{i+d-1} = Res S_(d,1^i) - a Sp_(n-i+1,1^{i-1}) - a Sp_(n-i,1^i)
// for 1 <= i <= n-1, and Sp_(1^n) corrected by +P(d-1)+1 in the Tor_n(A)_{n-1+d} line.
TorDecompositions literal_equivariant_tors(int n, int d);

// Quadratic literal variant keyed by homological degree (all internal degrees
// together): quadratic_display(n, i) for i < n, Sp_(1^n) + Sp_(2,1^{n-2}) for i = n.
std::map<int, SpechtDecomposition> literal_quadratic_tors(int n);
// Sp_(n-i,2,1^{i-2}) + 2 Sp_(n-i,1^i) + 2 Sp_(n-i-1,2,1^{i-1}) + 2 Sp_(n-i-1,1^{i+1}) + Sp_(n-i-2,2,1^i)
SpechtDecomposition quadratic_display(int n, int i);

// Human readable list of differing multiplicities.
std::vector<std::string> decomposition_diff(const SpechtDecomposition& got, const SpechtDecomposition& want);

}  // namespace psilab
