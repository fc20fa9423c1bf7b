#include "psilab/betti.hpp"

#include "psilab/partition.hpp"
#include "psilab/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace psilab {

long BettiTable::get(int i, int j) const {
    auto it = e_.find({i, j});
    return it == e_.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, long v) {
    if (v < 0) throw std::invalid_argument("negative betti number");
    if (v == 0)
        e_.erase({i, j});
    else
        e_[{i, j}] = v;
}

long BettiTable::total(int i) const {
    long s = 0;
    for (const auto& [k, v] : e_)
        if (k.first == i) s += v;
    return s;
}

int BettiTable::max_i() const {
    int m = 0;
    for (const auto& [k, v] : e_) m = std::max(m, k.first);
    return m;
}

std::string BettiTable::render() const {
    if (e_.empty()) return "(zero)\n";
    int rmin = 0, rmax = 0, imax = std::max<int>(max_i(), 0);
    bool first = true;
    for (const auto& [k, v] : e_) {
        int r = k.second - k.first;
        if (first) {
            rmin = rmax = r;
            first = false;
        }
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }
    rmin = std::min(rmin, 0);
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{""};
    for (int i = 0; i <= imax; ++i) head.push_back(std::to_string(i));
    cells.push_back(head);
    std::vector<std::string> tot{"total:"};
    for (int i = 0; i <= imax; ++i) tot.push_back(std::to_string(total(i)));
    cells.push_back(tot);
    for (int r = rmin; r <= rmax; ++r) {
        std::vector<std::string> row{std::to_string(r) + ":"};
        for (int i = 0; i <= imax; ++i) {
            long v = get(i, i + r);
            row.push_back(v ? std::to_string(v) : ".");
        }
        cells.push_back(row);
    }
    std::vector<std::size_t> w(imax + 2, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c) w[c] = std::max(w[c], row[c].size());
    std::ostringstream os;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) os << ' ';
            os << std::string(w[c] - row[c].size(), ' ') << row[c];
        }
        os << '\n';
    }
    return os.str();
}

std::vector<std::string> BettiTable::diff(const BettiTable& other) const {
    std::vector<std::string> out;
    std::map<std::pair<int, int>, std::pair<long, long>> all;
    for (const auto& [k, v] : e_) all[k].first = v;
    for (const auto& [k, v] : other.e_) all[k].second = v;
    for (const auto& [k, v] : all)
        if (v.first != v.second)
            out.push_back("beta_{" + std::to_string(k.first) + "," + std::to_string(k.second) +
                          "}: " + std::to_string(v.first) + " vs " + std::to_string(v.second));
    return out;
}

long betti_power_of_max_ideal(std::size_t n, int d, int i) {
    return static_cast<long>(binomial(static_cast<long>(n) + d - 1, d + i) * binomial(d + i - 1, i));
}

ClosedForm closed_form_betti(std::size_t n, int d) {
    if (n < 1 || d < 2) throw std::invalid_argument("closed form needs n >= 1, d >= 2");
    ClosedForm c;
    const long Pd = static_cast<long>(partition_count(d));
    const long Pd1 = static_cast<long>(partition_count(d - 1));
    const long nn = static_cast<long>(n);
    c.a = Pd - 1;
    c.ell = Pd - Pd1 - 1;
    const long Rd1 = static_cast<long>(dim_R(n, d - 1));
    c.b = Rd1 - (Pd - 1) * (nn - 1) - Pd1;
    c.b_variant = Rd1 - (Pd - 1) * (nn - 1) + Pd1;
    for (int i = 0; i < static_cast<int>(n); ++i)
        c.u.push_back(betti_power_of_max_ideal(n, d, i) - c.a * static_cast<long>(binomial(nn, i)));
    c.table = BettiTable(n);
    c.table.set(0, 0, 1);
    for (int i = 1; i + 1 <= static_cast<int>(n); ++i) c.table.set(i, i + d - 1, std::max(0L, c.u[i - 1]));
    if (n >= 2) c.table.set(static_cast<int>(n) - 1, static_cast<int>(n) - 1 + d, std::max(0L, c.ell));
    c.table.set(static_cast<int>(n), static_cast<int>(n) + d - 1, std::max(0L, c.b));
    c.table.set(static_cast<int>(n), static_cast<int>(n) + d, std::max(0L, c.a));
    return c;
}

std::vector<long> golod_series(std::size_t n, const std::vector<long>& totals, int terms) {
    std::vector<long> out(std::max(terms, 0), 0);
    for (int k = 0; k < terms; ++k) {
        long v = k <= static_cast<int>(n) ? static_cast<long>(binomial(static_cast<long>(n), k)) : 0;
        // denominator term totals[i] t^{i+1}
        for (int i = 1; i < static_cast<int>(totals.size()) && i + 1 <= k; ++i) v += totals[i] * out[k - i - 1];
        out[k] = v;
    }
    return out;
}

}  // namespace psilab
