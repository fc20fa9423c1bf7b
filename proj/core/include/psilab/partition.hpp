#pragma once

#include "psilab/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace psilab {

class Partition {
public:
    Partition() = default;
    // Sorts, drops zeros. Negative parts are rejected.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    // Accepts only an already weakly decreasing sequence of positive integers.
    static Partition from_decreasing(const std::vector<int>& parts);
    static bool is_partition(const std::vector<int>& seq);  // weakly decreasing, nonnegative entries

    int size() const { return size_; }                                      // |p|
    int length() const { return static_cast<int>(parts_.size()); }         // #p
    int operator[](std::size_t i) const { return parts_[i]; }               // 0-based
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    int distinct_parts() const;
    std::string str() const;

    // Lex order: p < q when at the first differing position p has the smaller part.
    friend bool operator<(const Partition& a, const Partition& b);
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return a.parts_ != b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// All partitions of d in increasing lex order.
std::vector<Partition> enumerate_partitions(int d);
std::size_t partition_count(int d);

Partition type_of(const Monomial& m);
Partition type_of(const std::vector<int>& exps);

struct Subpartition {
    Partition gamma;
    std::vector<int> T;  // 1-based indices into lambda
    bool is_whole = false;
};

// Every gamma contained in lambda as a multiset of parts; T(lambda, gamma) by
// the smallest-available-index rule.
std::vector<Subpartition> subpartitions_with_T(const Partition& lambda);
std::vector<int> T_of(const Partition& lambda, const Partition& gamma);

// p with p_i raised by one (1-based i <= #p), or a new part 1 appended (i = #p+1).
Partition p_up(const Partition& p, int i);
// For i in Supp(alpha) (0-based variable index), the 1-based position where
// part(alpha) and part(alpha + e_i) differ.
std::map<int, int> diff_alpha(const std::vector<int>& alpha);

// Number of exponent vectors in n variables having the given type.
std::size_t type_count(const Partition& lambda, std::size_t n);
// Sum of all dual monomials of type lambda in n variables.
DualElement monomial_symmetric(const Partition& lambda, std::size_t n);

}  // namespace psilab
