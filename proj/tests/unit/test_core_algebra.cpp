#include <doctest.h>

#include "psilab/linalg.hpp"
#include "psilab/parse.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

using namespace psilab;

namespace {

// Leibniz expansion, fine for tiny matrices
Rational leibniz(const std::vector<std::vector<Rational>>& a) {
    const std::size_t n = a.size();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    Rational det = 0;
    do {
        int inv = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inv;
        Rational t = inv % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) t *= a[i][p[i]];
        det += t;
    } while (std::next_permutation(p.begin(), p.end()));
    return det;
}

}  // namespace

TEST_CASE("prime field inverse agrees with brute force") {
    PrimeField F(101);
    for (std::uint64_t a = 1; a < 101; ++a) {
        std::uint64_t b = 1;
        while ((a * b) % 101 != 1) ++b;
        CHECK(F.inv(a) == b);
    }
    CHECK(F.from(Rational(1, 2)) == 51);
    CHECK(F.from(Rational(-3)) == 98);
    // lifts are symmetric around 0
    CHECK(F.to_rational(98) == -3);
}

TEST_CASE("prime field guard") {
    CHECK_THROWS_AS(PrimeField(100), ConfigError);
    CHECK_THROWS_AS(check_field_for(FieldSpec::parse("fp:7"), 3, 3), ConfigError);
    CHECK_NOTHROW(check_field_for(FieldSpec::parse("fp:11"), 3, 3));
    CHECK(FieldSpec::parse("q").is_rational());
}

TEST_CASE("parse and format round trip") {
    const std::string text = "x1^3 - x2^3 + x1^2*x3 + x2*x3*x4 - x2*x3*x5";
    auto f = parse_polynomial(text, 5);
    CHECK(f.size() == 5);
    CHECK(f.degree() == 3);
    CHECK(parse_polynomial(format(f), 5) == f);
    auto g = parse_polynomial("1/2*x1*x2 - 3/4*x3^2");
    CHECK(g.nvars() == 3);
    CHECK(g.coeff(Monomial({1, 1, 0})) == Rational(1, 2));
    CHECK_THROWS_AS(parse_polynomial("x1^^2"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x0"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x4", 3), ParseError);
}

TEST_CASE("contraction of divided powers") {
    // x1 o y1^(2) y2 = y1 y2 ; x1^2 o y1^(2) = 1 ; x2 o y1^(2) = 0
    auto g = parse_dual("y1^(2)*y2", 2);
    CHECK(contract(parse_polynomial("x1", 2), g) == parse_dual("y1*y2", 2));
    CHECK(contract(parse_polynomial("x1^2*x2", 2), g) == parse_dual("1", 2));
    CHECK(contract(parse_polynomial("x2^2", 2), g).is_zero());
    // pairing of degree d forms is the coefficient dot product in the divided power basis
    auto f = parse_polynomial("2*x1^2 + 3*x1*x2", 2);
    auto h = parse_dual("5*y1^(2) + 7*y1*y2", 2);
    CHECK(contract(f, h) == parse_dual("31", 2));
}

TEST_CASE("permutations act on variables") {
    Permutation s({1, 2, 0});
    auto f = parse_polynomial("x1^2*x2", 3);
    CHECK(permute(s, f) == parse_polynomial("x2^2*x3", 3));
    CHECK(Permutation::of_cycle_type({2, 2, 1}, 5).cycle_type() == std::vector<int>{2, 2, 1});
    CHECK(Permutation::transposition(4, 0, 1).sign() == -1);
}

TEST_CASE("monomial index sizes are binomials") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (int j = 0; j <= 5; ++j) {
            MonomialIndex idx(n, j);
            // stars and bars, counted directly
            std::size_t count = 0;
            std::vector<int> e(n, 0);
            std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
                if (k + 1 == n) {
                    ++count;
                    return;
                }
                for (int a = 0; a <= left; ++a) rec(k + 1, left - a);
            };
            rec(0, j);
            CHECK(idx.size() == count);
            CHECK(dim_R(n, j) == count);
            for (std::size_t k = 0; k < idx.size(); ++k) CHECK(idx.index(idx[k]) == k);
        }
}

TEST_CASE("rank, kernel and determinant over Q") {
    RationalField Q;
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t r = 1 + trial % 5, c = 1 + (trial * 7) % 6;
        Matrix<RationalField> m(Q, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = coef(rng);
        auto ker = kernel(Q, m);
        CHECK(ker.size() + rank(Q, m) == c);
        for (const auto& v : ker) CHECK(is_zero_vec(Q, apply(Q, m, v)));
        if (r == c) {
            std::vector<std::vector<Rational>> a(r, std::vector<Rational>(c));
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j) a[i][j] = m(i, j);
            CHECK(determinant(Q, m) == leibniz(a));
        }
    }
}

TEST_CASE("row space reduces to its own span") {
    PrimeField F(7);
    RowSpace<PrimeField> rs(F, 3);
    CHECK(rs.insert({1, 2, 3}));
    CHECK(rs.insert({0, 1, 1}));
    CHECK_FALSE(rs.insert({1, 3, 4}));
    CHECK(rs.rank() == 2);
    CHECK(rs.contains({2, 4, 6}));
    CHECK(rs.free_columns().size() == 1);
    for (const auto& v : rs.orthogonal_complement())
        for (const auto& row : rs.basis()) {
            std::uint64_t dot = 0;
            for (std::size_t k = 0; k < 3; ++k) dot = F.add(dot, F.mul(row[k], v[k]));
            CHECK(dot == 0);
        }
}
