#include <doctest.h>

#include "psilab/linrel.hpp"
#include "psilab/quotient.hpp"

using namespace psilab;

TEST_CASE("dimension of the linear relations") {
    RationalField Q;
    for (int d = 3; d <= 5; ++d) {
        const std::size_t ell = partition_count(d) - partition_count(d - 1) - 1;
        for (std::size_t n : {static_cast<std::size_t>(d), static_cast<std::size_t>(d + 1), std::size_t{8}})
            for (std::uint64_t s = 1; s <= 3; ++s) {
                auto t = random_t(d, s);
                const auto dim = linear_relations(Q, W_family(t, n)).dim();
                // the dimension jumps exactly where det A'(t) vanishes
                const auto det = determinant(Q, specialize_aprime(Q, build_symmetric_matrix(n, d), t.t));
                if (det == 0)
                    CHECK(dim > ell);
                else
                    CHECK(dim == ell);
            }
    }
    CHECK(partition_count(3) - partition_count(2) - 1 == 0);
    CHECK(partition_count(4) - partition_count(3) - 1 == 1);
}

TEST_CASE("a t on the exceptional hyperplane") {
    // d=3, n=4: det A'(t) = 2(3 - t_(2,1)) + 2 t_(1,1,1)
    RationalField Q;
    auto t = zero_t(3);
    t.t[Partition{2, 1}] = 10;
    t.t[Partition{1, 1, 1}] = 7;
    t.alpha = t.t;
    t.alpha[Partition{3}] = 1;
    CHECK(determinant(Q, specialize_aprime(Q, build_symmetric_matrix(4, 3), t.t)) == 0);
    CHECK(linear_relations(Q, W_family(t, 4)).dim() == 1);
    t.t[Partition{1, 1, 1}] = 8;
    CHECK(linear_relations(Q, W_family(t, 4)).dim() == 0);
}

TEST_CASE("explicit system has the same kernel dimension as the contraction system") {
    RationalField Q;
    for (int d = 3; d <= 5; ++d)
        for (std::size_t n : {std::size_t{5}, std::size_t{7}}) {
            auto t = random_t(d, 9);
            auto M = build_full_system(Q, t, n, d);
            CHECK(kernel(Q, M).size() == linear_relations(Q, W_family(t, n)).dim());
        }
}

TEST_CASE("symmetric matrix specialises to a consistent rank") {
    RationalField Q;
    for (int d = 3; d <= 5; ++d) {
        auto S = build_symmetric_matrix(8, d);
        CHECK(S.rows.size() == partition_count(d - 1));
        CHECK(S.cols.size() == partition_count(d) - 1);
        CHECK(S.cols == linrel_columns(d));
        auto t = random_t(d, 4);
        const auto r = rank(Q, specialize(Q, S, t.t));
        CHECK(r == partition_count(d - 1));
        auto ap = analyze_Aprime(8, d, t);
        CHECK(ap.rank_A == r);
    }
}

TEST_CASE("determinant of A' at t = 0") {
    RationalField Q;
    for (std::size_t n : {5, 6, 7, 10}) {
        const Rational want = Rational(static_cast<long>((n - 4) * (n - 3))) * (n - 2) * (n - 2) * (n - 1);
        CHECK(aprime_det_at_zero(n, 5) == want);
        auto S = build_symmetric_matrix(n, 5);
        CHECK(determinant(Q, specialize_aprime(Q, S, zero_t(5).t)) == want);
    }
    // d=3: rows (2),(1,1) -> (n-1)(n-2)
    CHECK(aprime_det_at_zero(6, 3) == 20);
}

TEST_CASE("affine expressions") {
    AffineExpr e;
    e.constant = 2;
    e.coeff[Partition{2, 1}] = 3;
    CHECK(e.eval({{Partition{2, 1}, Rational(1, 3)}}) == 3);
    CHECK_FALSE(e.is_zero());
    AffineExpr z;
    CHECK(z.is_zero());
}
