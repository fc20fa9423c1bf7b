#pragma once

#include "psilab/field.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace psilab {

template <class F>
using Vec = std::vector<typename F::Elem>;

// Dense row-major matrix; column k is the image of source basis vector k.
template <class F>
class Matrix {
public:
    using Elem = typename F::Elem;

    Matrix() = default;
    Matrix(const F& field, std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Elem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Elem& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec<F> row(std::size_t i) const { return Vec<F>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
    Vec<F> col(std::size_t j) const {
        Vec<F> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> a_;
};

template <class F>
Vec<F> apply(const F& field, const Matrix<F>& m, const Vec<F>& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("matrix-vector size mismatch");
    Vec<F> out(m.rows(), field.zero());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (field.is_zero(v[j])) continue;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!field.is_zero(m(i, j))) out[i] = field.add(out[i], field.mul(m(i, j), v[j]));
    }
    return out;
}

template <class F>
Matrix<F> multiply(const F& field, const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product size mismatch");
    Matrix<F> c(field, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (field.is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!field.is_zero(b(k, j))) c(i, j) = field.add(c(i, j), field.mul(a(i, k), b(k, j)));
        }
    return c;
}

template <class F>
bool equal(const F& field, const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!field.equal(a(i, j), b(i, j))) return false;
    return true;
}

template <class F>
bool is_zero_vec(const F& field, const Vec<F>& v) {
    for (const auto& x : v)
        if (!field.is_zero(x)) return false;
    return true;
}

// Span of vectors in k^N kept in fully reduced row-echelon form. Rows are
// stored dense; each row is the identity on pivot columns, so reduction only
// touches the free columns.
template <class F>
class RowSpace {
public:
    using Elem = typename F::Elem;

    RowSpace() = default;
    RowSpace(const F& field, std::size_t ambient)
        : field_(field), n_(ambient), row_of_col_(ambient, -1), free_(ambient) {
        for (std::size_t c = 0; c < ambient; ++c) free_[c] = c;
    }

    const F& field() const { return field_; }
    std::size_t ambient_dim() const { return n_; }
    std::size_t rank() const { return rows_.size(); }
    bool full() const { return rows_.size() == n_; }

    Vec<F> reduce(Vec<F> v) const {
        check(v);
        for (std::size_t c = 0; c < n_; ++c) {
            int r = row_of_col_[c];
            if (r < 0 || field_.is_zero(v[c])) continue;
            const Elem a = v[c];
            const auto& row = rows_[r];
            for (std::size_t f : free_)
                if (!field_.is_zero(row[f])) field_.sub_mul(v[f], a, row[f]);
            v[c] = field_.zero();
        }
        return v;
    }

    bool contains(const Vec<F>& v) const { return is_zero_vec(field_, reduce(v)); }

    // Returns true when v was independent of the current span.
    bool insert(Vec<F> v) {
        v = reduce(std::move(v));
        auto it = std::find_if(free_.begin(), free_.end(), [&](std::size_t f) { return !field_.is_zero(v[f]); });
        if (it == free_.end()) return false;
        const std::size_t c = *it;
        const Elem s = field_.inv(v[c]);
        for (std::size_t f : free_)
            if (!field_.is_zero(v[f])) v[f] = field_.mul(v[f], s);
        free_.erase(it);
        for (auto& row : rows_) {
            if (field_.is_zero(row[c])) continue;
            const Elem a = row[c];
            for (std::size_t f : free_)
                if (!field_.is_zero(v[f])) field_.sub_mul(row[f], a, v[f]);
            row[c] = field_.zero();
        }
        row_of_col_[c] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        return true;
    }

    std::vector<std::size_t> pivots() const {
        std::vector<std::size_t> p;
        for (std::size_t c = 0; c < n_; ++c)
            if (row_of_col_[c] >= 0) p.push_back(c);
        return p;
    }
    const std::vector<std::size_t>& free_columns() const { return free_; }
    bool is_pivot(std::size_t c) const { return row_of_col_[c] >= 0; }
    const Vec<F>& row_for_pivot(std::size_t c) const { return rows_.at(row_of_col_.at(c)); }

    // Basis rows ordered by strictly increasing pivot column.
    std::vector<Vec<F>> basis() const {
        std::vector<Vec<F>> out;
        for (std::size_t c : pivots()) out.push_back(rows_[row_of_col_[c]]);
        return out;
    }

    // Coordinates of a member of the span with respect to basis().
    Vec<F> coordinates(const Vec<F>& v) const {
        check(v);
        Vec<F> out;
        for (std::size_t c : pivots()) out.push_back(v[c]);
        return out;
    }

    // Basis of {w : <row, w> = 0 for every row}, one vector per free column
    // (in increasing order), with a 1 in that column.
    std::vector<Vec<F>> orthogonal_complement() const {
        std::vector<Vec<F>> out;
        out.reserve(free_.size());
        for (std::size_t f : free_) {
            Vec<F> w(n_, field_.zero());
            w[f] = field_.one();
            for (std::size_t c = 0; c < n_; ++c) {
                int r = row_of_col_[c];
                if (r >= 0) w[c] = field_.neg(rows_[r][f]);
            }
            out.push_back(std::move(w));
        }
        return out;
    }

private:
    void check(const Vec<F>& v) const {
        if (v.size() != n_) throw std::invalid_argument("vector length differs from ambient dimension");
    }

    F field_{};
    std::size_t n_ = 0;
    std::vector<Vec<F>> rows_;
    std::vector<int> row_of_col_;
    std::vector<std::size_t> free_;
};

template <class F>
RowSpace<F> row_space(const F& field, std::size_t ambient, const std::vector<Vec<F>>& vectors) {
    RowSpace<F> rs(field, ambient);
    for (const auto& v : vectors) rs.insert(v);
    return rs;
}

// Rank by forward elimination, consuming a copy of the rows.
template <class F>
std::size_t rank_of_rows(const F& field, std::vector<Vec<F>> rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && field.is_zero(rows[p][c])) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        const auto inv = field.inv(rows[r][c]);
        for (std::size_t j = c; j < ncols; ++j)
            if (!field.is_zero(rows[r][j])) rows[r][j] = field.mul(rows[r][j], inv);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (field.is_zero(rows[i][c])) continue;
            const auto a = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j)
                if (!field.is_zero(rows[r][j])) field.sub_mul(rows[i][j], a, rows[r][j]);
        }
        ++r;
    }
    return r;
}

template <class F>
std::size_t rank(const F& field, const Matrix<F>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    // eliminate along the shorter side
    std::vector<Vec<F>> rows;
    if (m.rows() <= m.cols()) {
        for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    } else {
        for (std::size_t j = 0; j < m.cols(); ++j) rows.push_back(m.col(j));
    }
    return rank_of_rows(field, std::move(rows));
}

// Kernel {v : m v = 0} as a row space in the source coordinates.
template <class F>
std::vector<Vec<F>> kernel(const F& field, const Matrix<F>& m) {
    RowSpace<F> rs(field, m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        rs.insert(m.row(i));
        if (rs.full()) break;
    }
    return rs.orthogonal_complement();
}

// Column span of m as a row space in the target coordinates.
template <class F>
RowSpace<F> image(const F& field, const Matrix<F>& m) {
    RowSpace<F> rs(field, m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        rs.insert(m.col(j));
        if (rs.full()) break;
    }
    return rs;
}

template <class F>
typename F::Elem determinant(const F& field, Matrix<F> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    auto det = field.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && field.is_zero(m(p, c))) ++p;
        if (p == n) return field.zero();
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = field.neg(det);
        }
        det = field.mul(det, m(c, c));
        const auto inv = field.inv(m(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (field.is_zero(m(i, c))) continue;
            const auto a = field.mul(m(i, c), inv);
            for (std::size_t j = c; j < n; ++j) field.sub_mul(m(i, j), a, m(c, j));
        }
    }
    return det;
}

}  // namespace psilab
