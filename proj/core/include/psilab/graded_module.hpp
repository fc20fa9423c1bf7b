#pragma once

#include "psilab/linalg.hpp"
#include "psilab/polynomial.hpp"

#include <functional>
#include <string>
#include <vector>

namespace psilab {

// Finite length graded module over k[x_1..x_n]: a basis size per degree and
// the multiplication maps x_k : M_a -> M_{a+1}.
template <class F>
class GradedModule {
public:
    using Action = std::function<Matrix<F>(const Permutation&, int)>;

    GradedModule() = default;
    GradedModule(const F& field, std::size_t nvars, int min_degree, std::vector<std::size_t> dims)
        : field_(field), n_(nvars), min_(min_degree), dims_(std::move(dims)) {
        mult_.resize(dims_.size());
        for (std::size_t k = 0; k < dims_.size(); ++k) {
            const std::size_t target = k + 1 < dims_.size() ? dims_[k + 1] : 0;
            mult_[k].assign(n_, Matrix<F>(field_, target, dims_[k]));
        }
    }

    const F& field() const { return field_; }
    std::size_t nvars() const { return n_; }
    int min_degree() const { return min_; }
    int max_degree() const { return min_ + static_cast<int>(dims_.size()) - 1; }
    std::size_t dim(int a) const {
        if (a < min_ || a > max_degree()) return 0;
        return dims_[a - min_];
    }
    std::size_t total_dim() const {
        std::size_t s = 0;
        for (auto x : dims_) s += x;
        return s;
    }

    // x_k : M_a -> M_{a+1}; a must lie in [min_degree, max_degree].
    const Matrix<F>& x(std::size_t k, int a) const { return mult_.at(a - min_).at(k); }
    Matrix<F>& x(std::size_t k, int a) { return mult_.at(a - min_).at(k); }

    bool has_action() const { return static_cast<bool>(action_); }
    void set_action(Action act) { action_ = std::move(act); }
    // Matrix of sigma on M_a.
    Matrix<F> act(const Permutation& sigma, int a) const {
        if (!action_) throw std::logic_error("module carries no symmetric group action");
        return action_(sigma, a);
    }

    // Checks shapes and x_k x_l = x_l x_k; returns a description of the first failure.
    std::string validate() const {
        for (int a = min_; a <= max_degree(); ++a)
            for (std::size_t k = 0; k < n_; ++k) {
                const auto& m = x(k, a);
                if (m.cols() != dim(a) || m.rows() != dim(a + 1))
                    return "shape of x" + std::to_string(k + 1) + " in degree " + std::to_string(a);
            }
        for (int a = min_; a + 1 <= max_degree(); ++a)
            for (std::size_t k = 0; k < n_; ++k)
                for (std::size_t l = k + 1; l < n_; ++l) {
                    auto p = multiply(field_, x(l, a + 1), x(k, a));
                    auto q = multiply(field_, x(k, a + 1), x(l, a));
                    if (!equal(field_, p, q))
                        return "x" + std::to_string(k + 1) + " and x" + std::to_string(l + 1) +
                               " do not commute in degree " + std::to_string(a);
                }
        return {};
    }

    // Residue field k in degree 0 with the trivial action.
    static GradedModule residue_field(const F& field, std::size_t nvars) {
        GradedModule m(field, nvars, 0, {1});
        m.set_action([field](const Permutation&, int) {
            Matrix<F> id(field, 1, 1);
            id(0, 0) = field.one();
            return id;
        });
        return m;
    }

private:
    F field_{};
    std::size_t n_ = 0;
    int min_ = 0;
    std::vector<std::size_t> dims_;
    std::vector<std::vector<Matrix<F>>> mult_;
    Action action_;
};

}  // namespace psilab
