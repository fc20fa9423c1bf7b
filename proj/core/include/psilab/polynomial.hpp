#pragma once

#include "psilab/field.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace psilab {

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps);
    static Monomial one(std::size_t n) { return Monomial(std::vector<int>(n, 0)); }
    static Monomial var(std::size_t n, std::size_t i, int power = 1);

    std::size_t nvars() const { return e_.size(); }
    int degree() const { return deg_; }
    int operator[](std::size_t i) const { return e_[i]; }
    const std::vector<int>& exps() const { return e_; }

    Monomial operator*(const Monomial& o) const;
    // componentwise e - o; valid only when divides(o, *this)
    Monomial operator/(const Monomial& o) const;
    bool divides(const Monomial& o) const;  // this | o

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }
    // graded, then lex with x1 largest; used for canonical term order
    friend bool operator<(const Monomial& a, const Monomial& b);

private:
    std::vector<int> e_;
    int deg_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

// All monomials of degree j in n variables, x1^j first.
std::vector<Monomial> monomials_of_degree(std::size_t n, int j);
std::size_t binomial(long a, long b);
std::size_t dim_R(std::size_t n, int j);

// Ordered basis of R_j (or S_{-j}) with reverse lookup.
class MonomialIndex {
public:
    MonomialIndex() = default;
    MonomialIndex(std::size_t n, int j);

    std::size_t nvars() const { return n_; }
    int degree() const { return j_; }
    std::size_t size() const { return basis_.size(); }
    const Monomial& operator[](std::size_t k) const { return basis_[k]; }
    const std::vector<Monomial>& basis() const { return basis_; }
    std::size_t index(const Monomial& m) const;
    bool contains(const Monomial& m) const { return pos_.count(m) != 0; }

private:
    std::size_t n_ = 0;
    int j_ = 0;
    std::vector<Monomial> basis_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> pos_;
};

// sigma[i] is the image of variable i (0-based).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(std::size_t n);
    static Permutation transposition(std::size_t n, std::size_t a, std::size_t b);
    // canonical representative of a cycle type, cycles filled left to right
    static Permutation of_cycle_type(const std::vector<int>& parts, std::size_t n);

    std::size_t size() const { return img_.size(); }
    int operator()(std::size_t i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }
    Permutation operator*(const Permutation& o) const;  // (this * o)(i) = this(o(i))
    Permutation inverse() const;
    std::vector<int> cycle_type() const;
    int sign() const;

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }

private:
    std::vector<int> img_;
};

Monomial permute(const Permutation& sigma, const Monomial& m);

enum class FormKind { polynomial, dual };

// Sparse homogeneous-or-not form with rational coefficients. Polynomials in x,
// dual elements in divided powers y^(e); the latter have degree -|e|.
template <FormKind K>
class SparseForm {
public:
    using Terms = std::map<Monomial, Rational>;

    SparseForm() = default;
    explicit SparseForm(std::size_t n) : n_(n) {}
    SparseForm(std::size_t n, const Monomial& m, const Rational& c = 1) : n_(n) { add_term(m, c); }

    std::size_t nvars() const { return n_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Rational& c);
    Rational coeff(const Monomial& m) const;

    bool is_homogeneous() const;
    // signed degree: |e| for polynomials, -|e| for dual elements; throws when not homogeneous or zero
    int degree() const;

    SparseForm operator+(const SparseForm& o) const;
    SparseForm operator-(const SparseForm& o) const;
    SparseForm operator-() const;
    SparseForm& operator+=(const SparseForm& o);
    SparseForm& operator-=(const SparseForm& o);
    SparseForm scaled(const Rational& c) const;

    friend bool operator==(const SparseForm& a, const SparseForm& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }
    friend bool operator!=(const SparseForm& a, const SparseForm& b) { return !(a == b); }

private:
    void check_same(const SparseForm& o) const;
    std::size_t n_ = 0;
    Terms terms_;
};

using Polynomial = SparseForm<FormKind::polynomial>;
using DualElement = SparseForm<FormKind::dual>;

Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial variable(std::size_t n, std::size_t i);

DualElement contract(const Polynomial& f, const DualElement& g);
Polynomial permute(const Permutation& sigma, const Polynomial& f);
DualElement permute(const Permutation& sigma, const DualElement& g);

// Coordinates in a monomial basis of matching degree; converts into field F.
template <class F, FormKind K>
std::vector<typename F::Elem> to_vector(const F& field, const SparseForm<K>& v, const MonomialIndex& idx) {
    std::vector<typename F::Elem> out(idx.size(), field.zero());
    for (const auto& [m, c] : v.terms()) out[idx.index(m)] = field.from(c);
    return out;
}

template <class F, FormKind K>
SparseForm<K> from_vector(const F& field, const std::vector<typename F::Elem>& v, const MonomialIndex& idx) {
    SparseForm<K> out(idx.nvars());
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!field.is_zero(v[k])) out.add_term(idx[k], field.to_rational(v[k]));
    return out;
}

}  // namespace psilab
