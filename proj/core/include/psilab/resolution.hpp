#pragma once

#include "psilab/betti.hpp"
#include "psilab/quotient.hpp"

#include <map>
#include <string>
#include <vector>

namespace psilab {

struct KResolution {
    BettiTable betti;        // beta^A_{i,j}(k)
    int computed_i = 0;      // last homological degree fully computed
    bool complete = true;    // false when the size guard stopped the run
    std::string status;
    std::vector<long> totals() const {
        std::vector<long> t;
        for (int i = 0; i <= computed_i; ++i) t.push_back(betti.total(i));
        return t;
    }
};

namespace detail {

// Graded free A-module with generators in the given degrees.
template <class F>
class FreeModule {
public:
    FreeModule(const GradedModule<F>& A, std::vector<int> gens) : A_(&A), gens_(std::move(gens)) {}

    const std::vector<int>& gens() const { return gens_; }
    std::size_t dim(int j) const {
        std::size_t s = 0;
        for (int e : gens_) s += A_->dim(j - e);
        return s;
    }
    // offset of generator g inside degree j
    std::size_t offset(std::size_t g, int j) const {
        std::size_t s = 0;
        for (std::size_t h = 0; h < g; ++h) s += A_->dim(j - gens_[h]);
        return s;
    }
    int min_degree() const { return gens_.empty() ? 0 : *std::min_element(gens_.begin(), gens_.end()); }
    int max_degree() const {
        return gens_.empty() ? -1 : *std::max_element(gens_.begin(), gens_.end()) + A_->max_degree();
    }

    // x_k on an element of degree j
    Vec<F> times_var(std::size_t k, int j, const Vec<F>& v) const {
        const F& field = A_->field();
        Vec<F> out(dim(j + 1), field.zero());
        std::size_t src = 0, dst = 0;
        for (int e : gens_) {
            const std::size_t a = A_->dim(j - e), b = A_->dim(j + 1 - e);
            if (a && b) {
                const auto& X = A_->x(k, j - e);
                for (std::size_t c = 0; c < a; ++c) {
                    if (field.is_zero(v[src + c])) continue;
                    for (std::size_t r = 0; r < b; ++r)
                        if (!field.is_zero(X(r, c))) out[dst + r] = field.add(out[dst + r], field.mul(X(r, c), v[src + c]));
                }
            }
            src += a;
            dst += b;
        }
        return out;
    }

private:
    const GradedModule<F>* A_;
    std::vector<int> gens_;
};

}  // namespace detail

// Minimal graded free resolution of k over a finite dimensional A, by
// degree-wise kernels; reports beta^A_{i,j}(k) for i <= max_i.
template <class F>
KResolution resolve_k_over_A(const QuotientAlgebra<F>& Aq, int max_i, std::size_t budget = 40000) {
    using detail::FreeModule;
    const F& field = Aq.field();
    const GradedModule<F> A = Aq.as_module();
    const std::size_t n = A.nvars();
    const int top = A.max_degree();

    // variable words for the monomial basis of A
    std::vector<std::vector<std::vector<std::size_t>>> words(top + 1);
    for (int m = 0; m <= top; ++m)
        for (const auto& mono : Aq.basis(m)) {
            std::vector<std::size_t> w;
            for (std::size_t k = 0; k < n; ++k)
                for (int p = 0; p < mono[k]; ++p) w.push_back(k);
            words[m].push_back(std::move(w));
        }

    KResolution res;
    res.betti = BettiTable(n);
    res.betti.set(0, 0, 1);

    FreeModule<F> Fi(A, {0});
    // kernel of the current map, per degree
    std::map<int, std::vector<Vec<F>>> K;
    for (int j = 1; j <= top; ++j) {
        std::vector<Vec<F>> basis;
        for (std::size_t c = 0; c < A.dim(j); ++c) {
            Vec<F> v(A.dim(j), field.zero());
            v[c] = field.one();
            basis.push_back(std::move(v));
        }
        K[j] = std::move(basis);
    }

    for (int i = 0; i < max_i; ++i) {
        // minimal generators of K = ker(F_i -> F_{i-1})
        std::vector<int> new_gens;
        std::vector<Vec<F>> images;  // in F_i
        for (const auto& [j, basis] : K) {
            if (basis.empty()) continue;
            RowSpace<F> rs(field, Fi.dim(j));
            auto prev = K.find(j - 1);
            if (prev != K.end())
                for (const auto& v : prev->second)
                    for (std::size_t k = 0; k < n; ++k) rs.insert(Fi.times_var(k, j - 1, v));
            for (const auto& v : basis)
                if (rs.insert(v)) {
                    new_gens.push_back(j);
                    images.push_back(v);
                }
        }
        for (int e : new_gens) res.betti.set(i + 1, e, res.betti.get(i + 1, e) + 1);
        res.computed_i = i + 1;
        if (i + 1 == max_i) break;

        FreeModule<F> Fn(A, new_gens);
        std::map<int, std::vector<Vec<F>>> Knext;
        for (int j = Fn.min_degree(); j <= Fn.max_degree(); ++j) {
            const std::size_t cols = Fn.dim(j), rows = Fi.dim(j);
            if (cols == 0) continue;
            if (cols > budget || rows > budget) {
                res.complete = false;
                res.status = "size guard: degree " + std::to_string(j) + " of step " + std::to_string(i + 2) +
                             " needs " + std::to_string(cols) + " columns";
                return res;
            }
            Matrix<F> D(field, rows, cols);
            std::size_t col = 0;
            for (std::size_t g = 0; g < new_gens.size(); ++g) {
                const int m = j - new_gens[g];
                if (m < 0 || m > top) continue;
                for (const auto& w : words[m]) {
                    Vec<F> v = images[g];
                    int deg = new_gens[g];
                    for (std::size_t k : w) v = Fi.times_var(k, deg++, v);
                    for (std::size_t r = 0; r < rows; ++r) D(r, col) = v[r];
                    ++col;
                }
            }
            Knext[j] = kernel(field, D);
        }
        K = std::move(Knext);
        Fi = std::move(Fn);
    }
    return res;
}

}  // namespace psilab
