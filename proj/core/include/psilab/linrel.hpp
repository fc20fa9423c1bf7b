#pragma once

#include "psilab/linalg.hpp"
#include "psilab/partition.hpp"
#include "psilab/psi_ideal.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace psilab {

// c + sum_lambda coeff[lambda] * t_lambda
struct AffineExpr {
    Rational constant{0};
    std::map<Partition, Rational> coeff;

    AffineExpr& operator+=(const AffineExpr& o);
    bool is_zero() const;
    Rational eval(const std::map<Partition, Rational>& t) const;
    std::string str() const;
};

// Columns of the linear systems: lambda |- d, lambda != (d), increasing lex.
std::vector<Partition> linrel_columns(int d);

// t_lambda uniform in [1, 1000] per seed.
TParams random_t(int d, std::uint64_t seed);
TParams zero_t(int d);

// {m_lambda - t_lambda m_(d)} in column order.
std::vector<DualElement> W_family(const TParams& t, std::size_t n);

struct SymmetricSystem {
    std::size_t n = 0;
    int d = 0;
    std::vector<Partition> rows;  // q |- d-1, increasing lex; (d-1) last
    std::vector<Partition> cols;  // lambda |- d, lambda != (d)
    std::vector<std::vector<AffineExpr>> entries;
};

SymmetricSystem build_symmetric_matrix(std::size_t n, int d);

template <class F>
Matrix<F> specialize(const F& field, const SymmetricSystem& S, const std::map<Partition, Rational>& t) {
    Matrix<F> m(field, S.rows.size(), S.cols.size());
    for (std::size_t r = 0; r < S.rows.size(); ++r)
        for (std::size_t c = 0; c < S.cols.size(); ++c) m(r, c) = field.from(S.entries[r][c].eval(t));
    return m;
}

// Columns lambda whose last part is 1, in the order of the rows they match.
std::vector<std::size_t> aprime_columns(const SymmetricSystem& S);

template <class F>
Matrix<F> specialize_aprime(const F& field, const SymmetricSystem& S, const std::map<Partition, Rational>& t) {
    auto full = specialize(field, S, t);
    auto cols = aprime_columns(S);
    Matrix<F> m(field, S.rows.size(), cols.size());
    for (std::size_t r = 0; r < S.rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = full(r, cols[c]);
    return m;
}

// (n-1) * prod_{q |- d-1, q != (d-1)} (n - #q)
Rational aprime_det_at_zero(std::size_t n, int d);

// Full system on unknowns c_{i,lambda}, column index k*n + i with k the
// position of lambda in linrel_columns(d); rows are alpha with |alpha| = d-1.
template <class F>
Matrix<F> build_full_system(const F& field, const TParams& t, std::size_t n, int d) {
    auto cols = linrel_columns(d);
    MonomialIndex rows(n, d - 1);
    Matrix<F> m(field, rows.size(), n * cols.size());
    std::map<Partition, std::size_t> colpos;
    for (std::size_t k = 0; k < cols.size(); ++k) colpos[cols[k]] = k;
    const Partition top{d - 1};
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& alpha = rows[r].exps();
        const Partition q(alpha);
        if (q == top) {
            std::size_t kvar = 0;
            while (alpha[kvar] == 0) ++kvar;
            const std::size_t c1 = colpos.at(Partition{d - 1, 1});
            for (std::size_t i = 0; i < n; ++i)
                if (i != kvar) m(r, c1 * n + i) = field.add(m(r, c1 * n + i), field.one());
            for (std::size_t k = 0; k < cols.size(); ++k) {
                auto it = t.t.find(cols[k]);
                const Rational tv = it == t.t.end() ? Rational(0) : it->second;
                m(r, k * n + kvar) = field.sub(m(r, k * n + kvar), field.from(tv));
            }
            continue;
        }
        const auto diff = diff_alpha(alpha);
        for (std::size_t i = 0; i < n; ++i) {
            const Partition lam = alpha[i] == 0 ? p_up(q, q.length() + 1) : p_up(q, diff.at(static_cast<int>(i)));
            const std::size_t c = colpos.at(lam) * n + i;
            m(r, c) = field.add(m(r, c), field.one());
        }
    }
    return m;
}

struct AprimeReport {
    std::size_t n = 0;
    int d = 0;
    Rational det_at_zero{0};
    Rational predicted_det_at_zero{0};
    bool det_matches = false;
    bool det_affine_in_t = false;
    std::size_t rank_A = 0;
    std::size_t solution_dim = 0;
    std::size_t expected_rank = 0;  // P(d-1)
};

// Exact determinant checks over the rationals; rank of A at the given t.
AprimeReport analyze_Aprime(std::size_t n, int d, const TParams& t, std::uint64_t seed = 1);

}  // namespace psilab
