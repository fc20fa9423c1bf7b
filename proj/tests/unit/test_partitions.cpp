#include <doctest.h>

#include "psilab/partition.hpp"

#include <set>

using namespace psilab;

namespace {

// Euler's pentagonal recurrence
std::vector<long> pentagonal_counts(int upto) {
    std::vector<long> p(upto + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= upto; ++m)
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const long sgn = k % 2 ? 1 : -1;
            p[m] += sgn * p[m - g1];
            if (g2 <= m) p[m] += sgn * p[m - g2];
        }
    return p;
}

}  // namespace

TEST_CASE("partition counts") {
    const auto p = pentagonal_counts(25);
    for (int d = 0; d <= 25; ++d) CHECK(partition_count(d) == static_cast<std::size_t>(p[d]));
    CHECK(partition_count(3) == 3);
    CHECK(partition_count(5) == 7);
}

TEST_CASE("enumeration is increasing lex and complete") {
    for (int d = 1; d <= 10; ++d) {
        auto all = enumerate_partitions(d);
        CHECK(all.size() == partition_count(d));
        for (std::size_t k = 1; k < all.size(); ++k) CHECK(all[k - 1] < all[k]);
        std::set<Partition> uniq(all.begin(), all.end());
        CHECK(uniq.size() == all.size());
        for (const auto& lam : all) CHECK(lam.size() == d);
        CHECK(all.front() == Partition(std::vector<int>(d, 1)));
        CHECK(all.back() == Partition{d});
    }
}

TEST_CASE("partition normalisation and accessors") {
    Partition p({1, 3, 0, 2, 3});
    CHECK(p.parts() == std::vector<int>{3, 3, 2, 1});
    CHECK(p.size() == 9);
    CHECK(p.length() == 4);
    CHECK(p.distinct_parts() == 3);
    CHECK(p.part(7) == 0);
    CHECK_THROWS(Partition({2, -1}));
    CHECK_THROWS(Partition::from_decreasing({1, 2}));
    CHECK(Partition::is_partition({3, 3, 1, 0}));
    CHECK_FALSE(Partition::is_partition({1, 2}));
}

TEST_CASE("type counts match direct enumeration") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (int d = 1; d <= 5; ++d) {
            std::map<Partition, std::size_t> seen;
            for (const auto& m : monomials_of_degree(n, d)) ++seen[type_of(m)];
            for (const auto& lam : enumerate_partitions(d)) {
                const std::size_t want = seen.count(lam) ? seen[lam] : 0;
                CHECK(type_count(lam, n) == want);
                if (lam.length() <= static_cast<int>(n)) CHECK(monomial_symmetric(lam, n).size() == want);
            }
        }
}

TEST_CASE("raising a part") {
    CHECK(p_up(Partition{2, 1}, 1) == Partition{3, 1});
    CHECK(p_up(Partition{2, 1}, 2) == Partition{2, 2});
    CHECK(p_up(Partition{2, 1}, 3) == Partition{2, 1, 1});
    CHECK(p_up(Partition{1, 1}, 2) == Partition{2, 1});
}

TEST_CASE("diff positions") {
    // alpha = (2,1,1,0): raising x1 gives (3,1,1), which differs at position 1;
    // raising x2 gives (2,2,1), position 2; raising x3 likewise; x4 is outside Supp
    auto m = diff_alpha({2, 1, 1, 0});
    CHECK(m.at(0) == 1);
    CHECK(m.at(1) == 2);
    CHECK(m.at(2) == 2);
    CHECK(m.count(3) == 0);
}

TEST_CASE("sub-partitions and their index sets") {
    const Partition lam{2, 2, 1};
    auto subs = subpartitions_with_T(lam);
    std::set<Partition> gammas;
    for (const auto& s : subs) {
        gammas.insert(s.gamma);
        CHECK(static_cast<int>(s.T.size()) == s.gamma.length());
        for (std::size_t k = 0; k < s.T.size(); ++k) CHECK(lam[s.T[k] - 1] == s.gamma[k]);
    }
    // multisets of {2,2,1} with at least one part
    const std::set<Partition> want = {Partition{2, 2, 1}, Partition{2, 2}, Partition{2, 1}, Partition{2}, Partition{1}};
    for (const auto& g : want) CHECK(gammas.count(g) == 1);
    CHECK(T_of(lam, Partition{2, 1}) == std::vector<int>{1, 3});
}
