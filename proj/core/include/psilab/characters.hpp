#pragma once

#include "psilab/field.hpp"
#include "psilab/partition.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace psilab {

// Function on the conjugacy classes of S_n, keyed by cycle type.
struct ClassFunction {
    int n = 0;
    std::map<Partition, Rational> values;

    ClassFunction() = default;
    explicit ClassFunction(int n_);  // zero on every class

    const Rational& at(const Partition& mu) const { return values.at(mu); }
    Rational& operator[](const Partition& mu) { return values.at(mu); }
    Rational degree() const;  // value at the identity

    ClassFunction& operator+=(const ClassFunction& o);
    ClassFunction& operator-=(const ClassFunction& o);
    ClassFunction scaled(const Rational& c) const;
    friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
    friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
    friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);  // pointwise
    friend bool operator==(const ClassFunction& a, const ClassFunction& b) { return a.n == b.n && a.values == b.values; }
    friend bool operator!=(const ClassFunction& a, const ClassFunction& b) { return !(a == b); }
    std::string str() const;
};

// Multiplicities of Specht modules. Multiplicities may be negative when the
// object is a virtual (predicted) one; genuine() tells them apart.
struct SpechtDecomposition {
    int n = 0;
    std::map<Partition, long> mult;

    long get(const Partition& lambda) const;
    void add(const Partition& lambda, long m);
    // Adds m copies of Sp_seq; a sequence that is not a partition of n contributes 0.
    void add_sequence(const std::vector<int>& seq, long m);
    bool genuine() const;
    long dimension() const;
    ClassFunction character() const;
    std::string str() const;
    friend SpechtDecomposition operator-(const SpechtDecomposition& a, const SpechtDecomposition& b);
    friend bool operator==(const SpechtDecomposition& a, const SpechtDecomposition& b);
    friend bool operator!=(const SpechtDecomposition& a, const SpechtDecomposition& b) { return !(a == b); }
};

struct NotACharacter : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// z_mu = prod_k k^{m_k} m_k!
Rational centralizer_order(const Partition& mu);
Rational class_size(const Partition& mu);

// chi^lambda(mu), Murnaghan-Nakayama.
long irreducible_character(const Partition& lambda, const Partition& mu);
ClassFunction irreducible_character(const Partition& lambda);

Rational inner_product(const ClassFunction& a, const ClassFunction& b);

// Throws NotACharacter on a non-integral or negative multiplicity.
SpechtDecomposition specht_decompose(const ClassFunction& chi);
// Same, but negative integers are kept.
SpechtDecomposition virtual_decompose(const ClassFunction& chi);

// Hook length formula.
long dim_specht(const Partition& lambda);

ClassFunction trivial_character(int n);
ClassFunction sign_character(int n);
ClassFunction permutation_character(int n);
// Lambda^i of the permutation representation k^n.
ClassFunction exterior_power_character(int n, int i);
// Lambda^i of the standard representation Sp_(n-1,1).
ClassFunction standard_exterior_character(int n, int i);

// p_k at a permutation of cycle type mu: number of fixed points of sigma^k.
long power_sum_at(const Partition& mu, int k);

// dim S_lambda(k^n) = prod over boxes (n + content) / hook
long schur_dimension(const Partition& lambda, int n);

// s_lambda evaluated at the eigenvalues of each permutation matrix in S_n.
ClassFunction schur_character(const Partition& lambda, int n);

// nu(n) = (n - |nu|, nu_1, ...) when nu_1 + |nu| <= n.
std::optional<Partition> padded(const Partition& nu, int n);

// Multiplicity of Sp_{nu_n} in Res S_lambda; nu_n must be a partition of n.
long restriction_multiplicity(const Partition& lambda, const Partition& nu_n);
SpechtDecomposition restriction_decomposition(const Partition& lambda, int n);

// Partitions obtained from lambda by removing one box and then adding one.
std::vector<Partition> remove_add_box(const Partition& lambda);
// Sp_lambda (x) Sp_(n-1,1) by the remove/add rule.
SpechtDecomposition tensor_with_standard(const Partition& lambda);

// (a, 1^i)
Partition hook(int a, int i);

}  // namespace psilab
