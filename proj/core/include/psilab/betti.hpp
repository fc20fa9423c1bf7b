#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace psilab {

class BettiTable {
public:
    BettiTable() = default;
    explicit BettiTable(std::size_t n) : n_(n) {}

    std::size_t nvars() const { return n_; }
    long get(int i, int j) const;
    void set(int i, int j, long v);
    long total(int i) const;
    int max_i() const;
    const std::map<std::pair<int, int>, long>& entries() const { return e_; }

    // Columns i, rows j - i, "." for zero, total row on top.
    std::string render() const;
    // Entries present in one table and absent or different in the other.
    std::vector<std::string> diff(const BettiTable& other) const;

    friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.e_ == b.e_; }
    friend bool operator!=(const BettiTable& a, const BettiTable& b) { return !(a == b); }

private:
    std::size_t n_ = 0;
    std::map<std::pair<int, int>, long> e_;  // nonzero entries only
};

struct ClosedForm {
    long a = 0, ell = 0, b = 0;
    long b_variant = 0;     // the variant with +P(d-1)
    std::vector<long> u;    // u_1..u_n
    BettiTable table;
};

// Two-row table of a general principal symmetric ideal quotient.
ClosedForm closed_form_betti(std::size_t n, int d);

// beta_i(m^d) = C(n+d-1, d+i) * C(d+i-1, i)
long betti_power_of_max_ideal(std::size_t n, int d, int i);

// First `terms` coefficients of (1+t)^n / (1 - t * sum_{i>=1} totals[i] t^i).
std::vector<long> golod_series(std::size_t n, const std::vector<long>& totals, int terms);

}  // namespace psilab
