#include <doctest.h>

#include "psilab/equivariant.hpp"
#include "psilab/parse.hpp"
#include "psilab/quotient.hpp"

#include <random>

using namespace psilab;

namespace {

using QA = QuotientAlgebra<RationalField>;

QA sample(int n, int d, std::uint64_t seed) {
    RationalField Q;
    auto I = make_psi_ideal(Q, sample_general_f(n, d, seed, 5));
    return QA(Q, n, d, I.degree_d);
}

GradedModule<RationalField> residue_field(std::size_t n) {
    RationalField Q;
    GradedModule<RationalField> k(Q, n, 0, {1});
    k.set_action([Q](const Permutation&, int) {
        Matrix<RationalField> m(Q, 1, 1);
        m(0, 0) = 1;
        return m;
    });
    return k;
}

Rational trace(const Matrix<RationalField>& m) {
    Rational t = 0;
    for (std::size_t k = 0; k < m.rows(); ++k) t += m(k, k);
    return t;
}

}  // namespace

TEST_CASE("Tor of the residue field is the exterior algebra") {
    for (std::size_t n = 1; n <= 5; ++n) {
        auto chars = all_tor_characters(residue_field(n));
        for (int i = 0; i <= static_cast<int>(n); ++i) {
            CHECK(chars.at({i, i}) == exterior_power_character(n, i));
            CHECK(specht_decompose(chars.at({i, i})) == koszul_residue_prediction(n, i));
        }
    }
}

TEST_CASE("traces do not depend on the representative") {
    auto A = sample(4, 2, 1);
    auto M = A.as_module();
    KoszulComplex<RationalField> K(M);
    std::mt19937_64 rng(8);
    for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {4, 6}}) {
        TorTrace<RationalField> T(K, i, j);
        for (const auto& mu : enumerate_partitions(4)) {
            auto s = Permutation::of_cycle_type(mu.parts(), 4);
            std::vector<int> p{0, 1, 2, 3};
            std::shuffle(p.begin(), p.end(), rng);
            Permutation g(p);
            // g s g^-1
            std::vector<int> img(4);
            for (int x = 0; x < 4; ++x) img[p[x]] = p[s(x)];
            CHECK(T.trace(Permutation(img)) == T.trace(s));
        }
    }
}

TEST_CASE("equivariant Euler characteristic") {
    // sum_i (-1)^i char Tor_i(A)_j = sum_k (-1)^k char Lambda^k k^n * char A_{j-k}
    for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}}) {
        auto A = sample(n, d, 1);
        REQUIRE(A.artinian());
        auto chars = all_tor_characters(A.as_module());
        for (int j = 0; j <= A.top_degree() + n; ++j)
            for (const auto& mu : enumerate_partitions(n)) {
                auto s = Permutation::of_cycle_type(mu.parts(), n);
                Rational lhs = 0, rhs = 0;
                for (int i = 0; i <= n; ++i)
                    if (auto it = chars.find({i, j}); it != chars.end()) lhs += (i % 2 ? -1 : 1) * it->second.at(mu);
                for (int k = 0; k <= n; ++k) {
                    const int a = j - k;
                    if (a < 0 || a > A.top_degree()) continue;
                    rhs += (k % 2 ? -1 : 1) * exterior_power_character(n, k).at(mu) * trace(A.action_matrix(s, a));
                }
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("characters are genuine and match the betti table") {
    auto A = sample(4, 2, 3);
    auto M = A.as_module();
    auto decs = decompose_all(all_tor_characters(M));
    CHECK(dimensions_match(decs, koszul_betti(M)));
    for (const auto& [ij, dec] : decs) CHECK(dec.genuine());
}

TEST_CASE("Tor of a power of the maximal ideal") {
    RationalField Q;
    for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {3, 3}}) {
        auto M = truncated_power_module(Q, n, d, d + 1);
        KoszulComplex<RationalField> K(M);
        for (int i = 0; i < n; ++i) {
            auto chi = tor_character(K, i, i + d);
            CHECK(specht_decompose(chi) == power_ideal_prediction(n, d, i));
        }
    }
    // a higher cap gives the same characters in these bidegrees
    auto lo = truncated_power_module(Q, 3, 2, 3), hi = truncated_power_module(Q, 3, 2, 6);
    for (int i = 0; i < 3; ++i) CHECK(tor_character(lo, i, i + 2) == tor_character(hi, i, i + 2));
    CHECK_THROWS(truncated_power_module(Q, 3, 2, 2));
}

TEST_CASE("predicted equivariant Tor of general quotients") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {5, 3}}) {
        auto A = sample(n, d, 1);
        auto decs = decompose_all(all_tor_characters(A.as_module()));
        auto pred = predicted_equivariant_tors(n, d);
        CHECK(decs.size() == pred.size());
        for (const auto& [ij, dec] : pred) CHECK(decs.at(ij) == dec);
    }
}

TEST_CASE("equivariant duality with a sign twist") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}}) {
        auto A = sample(n, d, 2);
        auto a = all_tor_characters(A.as_module());
        auto b = all_tor_characters(A.dual_module());
        CHECK(equivariant_duality_check(a, b, n));
        // without the twist the identity fails somewhere
        bool plain = a.size() == b.size();
        for (const auto& [ij, chi] : a)
            if (auto it = b.find({n - ij.first, n - ij.second}); it == b.end() || it->second != chi) plain = false;
        CHECK_FALSE(plain);
    }
}

TEST_CASE("x1^3 - x2^3 + ... at n=5 top degree") {
    RationalField Q;
    auto I = make_psi_ideal(Q, parse_polynomial("x1^3-x2^3+x1^2*x3+x2*x3*x4-x2*x3*x5", 5));
    QA A(Q, 5, 3, I.degree_d);
    auto chi = tor_character(A.as_module(), 5, 8);
    auto dec = specht_decompose(chi);
    CHECK(dec.get(Partition{1, 1, 1, 1, 1}) == 2);
    CHECK(dec.dimension() == 2);
}
