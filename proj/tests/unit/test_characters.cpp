#include <doctest.h>

#include "psilab/characters.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace psilab;

namespace {

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Trace of sigma on Lambda^i k^n from the basis of i-subsets.
long wedge_trace(const Permutation& s, int n, int i) {
    long tr = 0;
    std::vector<int> pick(n, 0);
    std::fill(pick.end() - i, pick.end(), 1);
    do {
        std::vector<int> subset;
        for (int k = 0; k < n; ++k)
            if (pick[k]) subset.push_back(k);
        std::vector<int> img;
        for (int k : subset) img.push_back(s(k));
        auto sorted = img;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != subset) continue;
        int inv = 0;
        for (std::size_t a = 0; a < img.size(); ++a)
            for (std::size_t b = a + 1; b < img.size(); ++b)
                if (img[a] > img[b]) ++inv;
        tr += inv % 2 ? -1 : 1;
    } while (std::next_permutation(pick.begin(), pick.end()));
    return tr;
}

}  // namespace

TEST_CASE("class sizes add up to n!") {
    for (int n = 1; n <= 8; ++n) {
        Rational total = 0;
        for (const auto& mu : enumerate_partitions(n)) total += class_size(mu);
        CHECK(total == factorial(n));
    }
}

TEST_CASE("character table orthogonality") {
    for (int n = 1; n <= 7; ++n) {
        auto parts = enumerate_partitions(n);
        for (const auto& a : parts)
            for (const auto& b : parts)
                CHECK(inner_product(irreducible_character(a), irreducible_character(b)) == (a == b ? 1 : 0));
    }
}

TEST_CASE("degrees from hooks and from the identity column agree") {
    for (int n = 1; n <= 9; ++n) {
        long sumsq = 0;
        for (const auto& lam : enumerate_partitions(n)) {
            const long dim = dim_specht(lam);
            CHECK(irreducible_character(lam, Partition(std::vector<int>(n, 1))) == dim);
            sumsq += dim * dim;
        }
        CHECK(sumsq == factorial(n));
    }
}

TEST_CASE("small character values") {
    CHECK(irreducible_character(Partition{2, 1}, Partition{3}) == -1);
    CHECK(irreducible_character(Partition{2, 1}, Partition{2, 1}) == 0);
    CHECK(irreducible_character(Partition{3, 1}, Partition{2, 1, 1}) == 1);
    CHECK(irreducible_character(Partition{2, 2}, Partition{2, 2}) == 2);
    CHECK(sign_character(4) == irreducible_character(Partition{1, 1, 1, 1}));
    CHECK(trivial_character(4) == irreducible_character(Partition{4}));
}

TEST_CASE("exterior powers against direct traces") {
    for (int n = 2; n <= 6; ++n)
        for (int i = 0; i <= n; ++i) {
            auto chi = exterior_power_character(n, i);
            for (const auto& mu : enumerate_partitions(n))
                CHECK(chi.at(mu) == wedge_trace(Permutation::of_cycle_type(mu.parts(), n), n, i));
            // Lambda^i of the standard module is the hook (n-i, 1^i)
            if (i < n) CHECK(standard_exterior_character(n, i) == irreducible_character(hook(n - i, i)));
        }
}

TEST_CASE("decomposition of the permutation module") {
    auto d = specht_decompose(permutation_character(5));
    CHECK(d.get(Partition{5}) == 1);
    CHECK(d.get(Partition{4, 1}) == 1);
    CHECK(d.mult.size() == 2);
    CHECK(d.dimension() == 5);
    CHECK(d.character() == permutation_character(5));
    ClassFunction half = permutation_character(3).scaled(Rational(1, 2));
    CHECK_THROWS_AS(specht_decompose(half), NotACharacter);
    auto v = virtual_decompose(trivial_character(3) - sign_character(3));
    CHECK(v.get(Partition{1, 1, 1}) == -1);
    CHECK_FALSE(v.genuine());
}

TEST_CASE("Schur dimensions") {
    // S_lambda(k^n) dimension from the character at the identity
    for (int n = 1; n <= 6; ++n)
        for (int s = 1; s <= 4; ++s)
            for (const auto& lam : enumerate_partitions(s)) {
                auto chi = schur_character(lam, n);
                CHECK(chi.degree() == schur_dimension(lam, n));
            }
    // Sym^2 and Lambda^2 of k^4
    CHECK(schur_dimension(Partition{2}, 4) == 10);
    CHECK(schur_dimension(Partition{1, 1}, 4) == 6);
    CHECK(schur_dimension(Partition{1, 1, 1, 1, 1}, 4) == 0);
}

TEST_CASE("Schur characters of rows and columns") {
    // S_(1^i) k^n = Lambda^i k^n
    for (int n = 2; n <= 6; ++n)
        for (int i = 1; i <= n; ++i) CHECK(schur_character(Partition(std::vector<int>(i, 1)), n) == exterior_power_character(n, i));
    // Res S_(1) = permutation module
    CHECK(restriction_decomposition(Partition{1}, 6).character() == permutation_character(6));
}

TEST_CASE("restriction of a Schur functor is a character of the right dimension") {
    for (int n = 3; n <= 7; ++n)
        for (int s = 1; s <= 4; ++s)
            for (const auto& lam : enumerate_partitions(s)) {
                auto dec = restriction_decomposition(lam, n);
                CHECK(dec.genuine());
                CHECK(dec.dimension() == schur_dimension(lam, n));
                CHECK(dec.character() == schur_character(lam, n));
            }
}

TEST_CASE("padding") {
    CHECK(padded(Partition{2, 1}, 6) == Partition{3, 2, 1});
    CHECK_FALSE(padded(Partition{3}, 5).has_value());
    CHECK(padded(Partition{}, 4) == Partition{4});
}

TEST_CASE("remove then add a box") {
    auto out = remove_add_box(Partition{2, 1});
    // (2,1) -> remove -> (2),(1,1) -> add: (3),(2,1),(1,1,1) without repeats
    CHECK(out.size() == 3);
    auto dec = tensor_with_standard(Partition{2, 1});
    CHECK(dec.get(Partition{3}) == 1);
    CHECK(dec.get(Partition{2, 1}) == 1);
    CHECK(dec.get(Partition{1, 1, 1}) == 1);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 15; ++k) {
        const int n = std::uniform_int_distribution<int>(2, 7)(rng);
        auto all = enumerate_partitions(n);
        auto lam = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
        CHECK(tensor_with_standard(lam).character() == irreducible_character(lam) * irreducible_character(Partition{n - 1, 1}));
    }
}

TEST_CASE("power sums at permutations") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& mu : enumerate_partitions(n)) {
            auto s = Permutation::of_cycle_type(mu.parts(), n);
            for (int k = 1; k <= 6; ++k) {
                // fixed points of s^k, counted directly
                long fixed = 0;
                for (int x = 0; x < n; ++x) {
                    int y = x;
                    for (int r = 0; r < k; ++r) y = s(y);
                    if (y == x) ++fixed;
                }
                CHECK(power_sum_at(mu, k) == fixed);
            }
        }
}
