#include "psilab/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace psilab {

Partition::Partition(std::vector<int> parts) {
    for (int x : parts)
        if (x < 0) throw std::invalid_argument("negative part");
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    std::sort(parts.rbegin(), parts.rend());
    parts_ = std::move(parts);
    for (int x : parts_) size_ += x;
}

bool Partition::is_partition(const std::vector<int>& seq) {
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] < 0) return false;
        if (i > 0 && seq[i] > seq[i - 1]) return false;
    }
    return true;
}

Partition Partition::from_decreasing(const std::vector<int>& parts) {
    if (!is_partition(parts)) throw std::invalid_argument("sequence is not weakly decreasing");
    return Partition(parts);
}

int Partition::distinct_parts() const {
    int k = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        if (i == 0 || parts_[i] != parts_[i - 1]) ++k;
    return k;
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

bool operator<(const Partition& a, const Partition& b) {
    std::size_t k = std::max(a.parts_.size(), b.parts_.size());
    for (std::size_t i = 0; i < k; ++i) {
        int x = a.part(i), y = b.part(i);
        if (x != y) return x < y;
    }
    return false;
}

std::vector<Partition> enumerate_partitions(int d) {
    if (d < 0) throw std::invalid_argument("negative size");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(d, d);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t partition_count(int d) {
    if (d < 0) return 0;
    std::vector<std::size_t> p(d + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= d; ++k)
        for (int s = k; s <= d; ++s) p[s] += p[s - k];
    return p[d];
}

Partition type_of(const std::vector<int>& exps) { return Partition(exps); }
Partition type_of(const Monomial& m) { return Partition(m.exps()); }

std::vector<int> T_of(const Partition& lambda, const Partition& gamma) {
    std::vector<char> used(lambda.length(), 0);
    std::vector<int> T;
    for (int g : gamma.parts()) {
        int k = 0;
        while (k < lambda.length() && (used[k] || lambda[k] != g)) ++k;
        if (k == lambda.length()) throw std::invalid_argument(gamma.str() + " is not contained in " + lambda.str());
        used[k] = 1;
        T.push_back(k + 1);
    }
    std::sort(T.begin(), T.end());
    return T;
}

std::vector<Subpartition> subpartitions_with_T(const Partition& lambda) {
    // distinct values with multiplicities
    std::vector<std::pair<int, int>> vals;
    for (int x : lambda.parts()) {
        if (vals.empty() || vals.back().first != x)
            vals.emplace_back(x, 1);
        else
            ++vals.back().second;
    }
    std::vector<Subpartition> out;
    std::vector<int> take(vals.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == vals.size()) {
            std::vector<int> g;
            for (std::size_t v = 0; v < vals.size(); ++v)
                for (int c = 0; c < take[v]; ++c) g.push_back(vals[v].first);
            Partition gamma(g);
            out.push_back({gamma, T_of(lambda, gamma), gamma == lambda});
            return;
        }
        for (int c = 0; c <= vals[k].second; ++c) {
            take[k] = c;
            rec(k + 1);
        }
        take[k] = 0;
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const Subpartition& a, const Subpartition& b) { return a.gamma < b.gamma; });
    return out;
}

Partition p_up(const Partition& p, int i) {
    if (i < 1 || i > p.length() + 1) throw std::out_of_range("p_up index out of range");
    std::vector<int> v = p.parts();
    if (i == p.length() + 1)
        v.push_back(1);
    else
        v[i - 1] += 1;
    return Partition(v);
}

std::map<int, int> diff_alpha(const std::vector<int>& alpha) {
    std::map<int, int> out;
    Partition p(alpha);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] == 0) continue;
        std::vector<int> beta(alpha);
        beta[i] += 1;
        Partition q(beta);
        int pos = 0;
        for (int k = 0; k < q.length(); ++k)
            if (p.part(k) != q.part(k)) {
                pos = k + 1;
                break;
            }
        out[static_cast<int>(i)] = pos;
    }
    return out;
}

std::size_t type_count(const Partition& lambda, std::size_t n) {
    if (static_cast<std::size_t>(lambda.length()) > n) return 0;
    // n! / ((n - #lambda)! * prod mult!)
    std::size_t result = 1;
    std::size_t remaining = n;
    std::vector<int> mults;
    for (std::size_t i = 0; i < static_cast<std::size_t>(lambda.length()); ++i) {
        if (i == 0 || lambda[i] != lambda[i - 1])
            mults.push_back(1);
        else
            ++mults.back();
    }
    mults.push_back(static_cast<int>(n) - lambda.length());
    for (int m : mults) {
        result *= binomial(static_cast<long>(remaining), m);
        remaining -= m;
    }
    return result;
}

DualElement monomial_symmetric(const Partition& lambda, std::size_t n) {
    if (static_cast<std::size_t>(lambda.length()) > n)
        throw std::invalid_argument("partition " + lambda.str() + " has more parts than n = " + std::to_string(n));
    std::vector<int> e(n, 0);
    for (int i = 0; i < lambda.length(); ++i) e[i] = lambda[i];
    std::sort(e.begin(), e.end());
    DualElement out(n);
    do {
        out.add_term(Monomial(e), 1);
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

}  // namespace psilab
