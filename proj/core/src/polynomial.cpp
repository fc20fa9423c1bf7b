#include "psilab/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace psilab {

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int x : e_) {
        if (x < 0) throw std::invalid_argument("negative exponent");
        deg_ += x;
    }
}

Monomial Monomial::var(std::size_t n, std::size_t i, int power) {
    if (i >= n) throw std::out_of_range("variable index out of range");
    std::vector<int> e(n, 0);
    e[i] = power;
    return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (o.nvars() != nvars()) throw ConfigError("variable count mismatch");
    std::vector<int> e(e_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.e_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::operator/(const Monomial& o) const {
    std::vector<int> e(e_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= o.e_[i];
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

bool operator<(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_;
    // within a degree, x1^j sorts first
    return a.e_ > b.e_;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : m.exps()) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

namespace {
void fill_monomials(std::size_t n, std::size_t i, int left, std::vector<int>& cur, std::vector<Monomial>& out) {
    if (i + 1 == n) {
        cur[i] = left;
        out.emplace_back(cur);
        return;
    }
    for (int a = left; a >= 0; --a) {
        cur[i] = a;
        fill_monomials(n, i + 1, left - a, cur, out);
    }
    cur[i] = 0;
}
}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, int j) {
    std::vector<Monomial> out;
    if (j < 0) return out;
    if (n == 0) {
        if (j == 0) out.emplace_back(std::vector<int>{});
        return out;
    }
    std::vector<int> cur(n, 0);
    fill_monomials(n, 0, j, cur, out);
    return out;
}

std::size_t binomial(long a, long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    b = std::min(b, a - b);
    unsigned long long r = 1;
    for (long k = 1; k <= b; ++k) r = r * static_cast<unsigned long long>(a - b + k) / static_cast<unsigned long long>(k);
    return static_cast<std::size_t>(r);
}

std::size_t dim_R(std::size_t n, int j) {
    if (j < 0) return 0;
    if (n == 0) return j == 0 ? 1 : 0;
    return binomial(static_cast<long>(n) + j - 1, j);
}

MonomialIndex::MonomialIndex(std::size_t n, int j) : n_(n), j_(j), basis_(monomials_of_degree(n, j)) {
    pos_.reserve(basis_.size());
    for (std::size_t k = 0; k < basis_.size(); ++k) pos_.emplace(basis_[k], k);
}

std::size_t MonomialIndex::index(const Monomial& m) const {
    auto it = pos_.find(m);
    if (it == pos_.end()) throw std::out_of_range("monomial not in basis of degree " + std::to_string(j_));
    return it->second;
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int x : img_) {
        if (x < 0 || static_cast<std::size_t>(x) >= img_.size() || seen[x]) throw std::invalid_argument("not a permutation");
        seen[x] = 1;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

Permutation Permutation::transposition(std::size_t n, std::size_t a, std::size_t b) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::swap(v.at(a), v.at(b));
    return Permutation(std::move(v));
}

Permutation Permutation::of_cycle_type(const std::vector<int>& parts, std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    std::size_t start = 0;
    for (int len : parts) {
        if (len <= 0 || start + static_cast<std::size_t>(len) > n) throw std::invalid_argument("cycle type does not fit");
        for (int k = 0; k < len; ++k) v[start + k] = static_cast<int>(start + (k + 1) % len);
        start += len;
    }
    if (start != n) throw std::invalid_argument("cycle type must sum to n");
    return Permutation(std::move(v));
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (o.size() != size()) throw ConfigError("permutation length mismatch");
    std::vector<int> v(size());
    for (std::size_t i = 0; i < size(); ++i) v[i] = img_[o.img_[i]];
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> v(size());
    for (std::size_t i = 0; i < size(); ++i) v[img_[i]] = static_cast<int>(i);
    return Permutation(std::move(v));
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> out;
    std::vector<char> seen(size(), 0);
    for (std::size_t i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = img_[j]) {
            seen[j] = 1;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

int Permutation::sign() const {
    int s = 1;
    for (int len : cycle_type())
        if (len % 2 == 0) s = -s;
    return s;
}

Monomial permute(const Permutation& sigma, const Monomial& m) {
    if (sigma.size() != m.nvars()) throw ConfigError("permutation length differs from variable count");
    std::vector<int> e(m.nvars(), 0);
    for (std::size_t i = 0; i < m.nvars(); ++i) e[sigma(i)] = m[i];
    return Monomial(std::move(e));
}

template <FormKind K>
void SparseForm<K>::add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != n_) throw ConfigError("variable count mismatch");
    if (sgn(c) == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

template <FormKind K>
Rational SparseForm<K>::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

template <FormKind K>
bool SparseForm<K>::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& t : terms_)
        if (t.first.degree() != d) return false;
    return true;
}

template <FormKind K>
int SparseForm<K>::degree() const {
    if (terms_.empty()) throw std::invalid_argument("degree of zero form");
    if (!is_homogeneous()) throw std::invalid_argument("form is not homogeneous");
    int d = terms_.begin()->first.degree();
    return K == FormKind::polynomial ? d : -d;
}

template <FormKind K>
void SparseForm<K>::check_same(const SparseForm& o) const {
    if (o.n_ != n_) throw ConfigError("variable count mismatch");
}

template <FormKind K>
SparseForm<K>& SparseForm<K>::operator+=(const SparseForm& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

template <FormKind K>
SparseForm<K>& SparseForm<K>::operator-=(const SparseForm& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

template <FormKind K>
SparseForm<K> SparseForm<K>::operator+(const SparseForm& o) const {
    SparseForm r(*this);
    r += o;
    return r;
}

template <FormKind K>
SparseForm<K> SparseForm<K>::operator-(const SparseForm& o) const {
    SparseForm r(*this);
    r -= o;
    return r;
}

template <FormKind K>
SparseForm<K> SparseForm<K>::operator-() const {
    SparseForm r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

template <FormKind K>
SparseForm<K> SparseForm<K>::scaled(const Rational& c) const {
    SparseForm r(n_);
    if (sgn(c) == 0) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

template class SparseForm<FormKind::polynomial>;
template class SparseForm<FormKind::dual>;

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars()) throw ConfigError("variable count mismatch");
    Polynomial r(a.nvars());
    for (const auto& [m1, c1] : a.terms())
        for (const auto& [m2, c2] : b.terms()) r.add_term(m1 * m2, c1 * c2);
    return r;
}

Polynomial variable(std::size_t n, std::size_t i) { return Polynomial(n, Monomial::var(n, i)); }

DualElement contract(const Polynomial& f, const DualElement& g) {
    if (f.nvars() != g.nvars()) throw ConfigError("contraction: variable count mismatch");
    DualElement r(g.nvars());
    for (const auto& [a, ca] : f.terms())
        for (const auto& [b, cb] : g.terms())
            if (a.divides(b)) r.add_term(b / a, ca * cb);
    return r;
}

Polynomial permute(const Permutation& sigma, const Polynomial& f) {
    Polynomial r(f.nvars());
    for (const auto& [m, c] : f.terms()) r.add_term(permute(sigma, m), c);
    return r;
}

DualElement permute(const Permutation& sigma, const DualElement& g) {
    DualElement r(g.nvars());
    for (const auto& [m, c] : g.terms()) r.add_term(permute(sigma, m), c);
    return r;
}

}  // namespace psilab
