#pragma once

#include "psilab/betti.hpp"
#include "psilab/graded_module.hpp"
#include "psilab/linalg.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace psilab {

// i-element subsets of {0..n-1} as bitmasks, in increasing numeric order.
std::vector<std::uint32_t> subsets_of_size(std::size_t n, int i);

// Chains (Lambda^i k^n) (x) M_{j-i} of the Koszul complex on M.
template <class F>
class KoszulComplex {
public:
    explicit KoszulComplex(const GradedModule<F>& M) : M_(M) {
        const std::size_t n = M.nvars();
        if (n > 30) throw std::invalid_argument("Koszul complex limited to 30 variables");
        for (int i = 0; i <= static_cast<int>(n); ++i) {
            subsets_.push_back(subsets_of_size(n, i));
            std::unordered_map<std::uint32_t, std::size_t> pos;
            for (std::size_t k = 0; k < subsets_.back().size(); ++k) pos[subsets_.back()[k]] = k;
            position_.push_back(std::move(pos));
        }
    }

    const GradedModule<F>& module() const { return M_; }
    std::size_t chain_dim(int i, int j) const {
        if (i < 0 || i > static_cast<int>(M_.nvars())) return 0;
        return subsets_[i].size() * M_.dim(j - i);
    }

    // d : C_{i,j} -> C_{i-1,j}
    Matrix<F> differential(int i, int j) const {
        const F& field = M_.field();
        const std::size_t src = chain_dim(i, j), tgt = chain_dim(i - 1, j);
        Matrix<F> D(field, tgt, src);
        if (src == 0 || tgt == 0) return D;
        const int a = j - i;
        const std::size_t ma = M_.dim(a), mb = M_.dim(a + 1);
        for (std::size_t s = 0; s < subsets_[i].size(); ++s) {
            const std::uint32_t S = subsets_[i][s];
            int t = 0;
            for (std::size_t v = 0; v < M_.nvars(); ++v) {
                if (!(S >> v & 1U)) continue;
                const bool negative = t % 2 == 1;
                ++t;
                const std::size_t s2 = position_[i - 1].at(S & ~(1U << v));
                const auto& X = M_.x(v, a);
                for (std::size_t b = 0; b < ma; ++b)
                    for (std::size_t b2 = 0; b2 < mb; ++b2) {
                        const auto& e = X(b2, b);
                        if (field.is_zero(e)) continue;
                        auto& cell = D(s2 * mb + b2, s * ma + b);
                        cell = negative ? field.sub(cell, e) : field.add(cell, e);
                    }
            }
        }
        return D;
    }

    // sigma on C_{i,j}: e_S (x) m -> sign * e_{sigma(S)} (x) sigma m
    Matrix<F> action(const Permutation& sigma, int i, int j) const {
        const F& field = M_.field();
        const std::size_t dim = chain_dim(i, j);
        Matrix<F> P(field, dim, dim);
        if (dim == 0) return P;
        const int a = j - i;
        const std::size_t ma = M_.dim(a);
        const Matrix<F> Ma = M_.act(sigma, a);
        const std::size_t n = M_.nvars();
        for (std::size_t s = 0; s < subsets_[i].size(); ++s) {
            const std::uint32_t S = subsets_[i][s];
            std::vector<int> img;
            for (std::size_t v = 0; v < n; ++v)
                if (S >> v & 1U) img.push_back(sigma(v));
            // sign of the sort of img
            int inversions = 0;
            std::uint32_t T = 0;
            for (std::size_t x = 0; x < img.size(); ++x) {
                T |= 1U << img[x];
                for (std::size_t y = x + 1; y < img.size(); ++y)
                    if (img[x] > img[y]) ++inversions;
            }
            const std::size_t s2 = position_[i].at(T);
            for (std::size_t b = 0; b < ma; ++b)
                for (std::size_t b2 = 0; b2 < ma; ++b2) {
                    const auto& e = Ma(b2, b);
                    if (field.is_zero(e)) continue;
                    P(s2 * ma + b2, s * ma + b) = inversions % 2 ? field.neg(e) : e;
                }
        }
        return P;
    }

private:
    const GradedModule<F>& M_;
    std::vector<std::vector<std::uint32_t>> subsets_;
    std::vector<std::unordered_map<std::uint32_t, std::size_t>> position_;
};

template <class F>
BettiTable koszul_betti(const GradedModule<F>& M) {
    if (auto err = M.validate(); !err.empty()) throw std::invalid_argument("inconsistent module: " + err);
    const F& field = M.field();
    KoszulComplex<F> K(M);
    const int n = static_cast<int>(M.nvars());
    BettiTable T(M.nvars());
    for (int j = M.min_degree(); j <= M.max_degree() + n; ++j) {
        // rank of d_{i,j} for i = 0..n+1
        std::vector<std::size_t> r(n + 2, 0);
        for (int i = 1; i <= n; ++i) r[i] = rank(field, K.differential(i, j));
        for (int i = 0; i <= n; ++i) {
            const long dim = static_cast<long>(K.chain_dim(i, j));
            if (dim == 0) continue;
            T.set(i, j, dim - static_cast<long>(r[i]) - static_cast<long>(r[i + 1]));
        }
    }
    return T;
}

// beta_{i,j}(A) == beta_{n-i,n-j}(A^vee)
inline bool boij_duality_check(const BettiTable& A, const BettiTable& dual, std::size_t n) {
    const int nn = static_cast<int>(n);
    for (const auto& [k, v] : A.entries())
        if (dual.get(nn - k.first, nn - k.second) != v) return false;
    for (const auto& [k, v] : dual.entries())
        if (A.get(nn - k.first, nn - k.second) != v) return false;
    return true;
}

}  // namespace psilab
