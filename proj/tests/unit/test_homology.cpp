#include <doctest.h>

#include "psilab/koszul.hpp"
#include "psilab/parse.hpp"
#include "psilab/resolution.hpp"

using namespace psilab;

namespace {

using QA = QuotientAlgebra<RationalField>;

long choose(long a, long b) {
    if (b < 0 || a < b) return 0;
    long r = 1;
    for (long k = 1; k <= b; ++k) r = r * (a - b + k) / k;
    return r;
}

QA power_of_max(std::size_t n, int d) {
    RationalField Q;
    RowSpace<RationalField> all(Q, dim_R(n, d));
    for (std::size_t k = 0; k < dim_R(n, d); ++k) {
        Vec<RationalField> e(dim_R(n, d), 0);
        e[k] = 1;
        all.insert(e);
    }
    return QA(Q, n, d, all);
}

// sum_i (-1)^i beta_{i,j} = [t^j] H_A(t) (1-t)^n
void check_euler(const QA& A, const BettiTable& B) {
    const int n = static_cast<int>(A.nvars());
    auto h = A.hilbert_function();
    for (int j = 0; j <= A.top_degree() + n; ++j) {
        long rhs = 0;
        for (int k = 0; k <= n; ++k) {
            const int a = j - k;
            if (a >= 0 && a < static_cast<int>(h.size())) rhs += (k % 2 ? -1 : 1) * choose(n, k) * static_cast<long>(h[a]);
        }
        long lhs = 0;
        for (int i = 0; i <= n; ++i) lhs += (i % 2 ? -1 : 1) * B.get(i, j);
        CHECK(lhs == rhs);
    }
}

}  // namespace

TEST_CASE("Koszul homology of the residue field") {
    for (std::size_t n = 1; n <= 6; ++n) {
        auto B = koszul_betti(power_of_max(n, 1).as_module());
        for (int i = 0; i <= static_cast<int>(n); ++i) CHECK(B.get(i, i) == choose(n, i));
        CHECK(B.entries().size() == n + 1);
    }
}

TEST_CASE("powers of the maximal ideal are linear") {
    for (std::size_t n = 2; n <= 4; ++n)
        for (int d = 2; d <= 3; ++d) {
            auto A = power_of_max(n, d);
            auto B = koszul_betti(A.as_module());
            check_euler(A, B);
            for (int i = 1; i <= static_cast<int>(n); ++i) {
                // Eagon-Northcott: beta_{i,i+d-1}(R/m^d) = C(n+d-1, d+i-1) C(d+i-2, i-1)
                const long want = choose(n + d - 1, d + i - 1) * choose(d + i - 2, i - 1);
                CHECK(B.get(i, i + d - 1) == want);
                CHECK(betti_power_of_max_ideal(n, d, i - 1) == want);
            }
        }
}

TEST_CASE("Euler characteristic of sampled quotients") {
    RationalField Q;
    for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}, {5, 3}, {4, 4}}) {
        auto I = make_psi_ideal(Q, sample_general_f(n, d, 1, 5));
        QA A(Q, n, d, I.degree_d);
        REQUIRE(A.artinian());
        check_euler(A, koszul_betti(A.as_module()));
    }
}

TEST_CASE("golden cubic table") {
    RationalField Q;
    auto I = make_psi_ideal(Q, parse_polynomial("x1^3-x2^3+x1^2*x3+x2*x3*x4-x2*x3*x5", 5));
    QA A(Q, 5, 3, I.degree_d);
    auto B = koszul_betti(A.as_module());
    CHECK(B.get(1, 3) == 33);
    CHECK(B.get(2, 4) == 95);
    CHECK(B.get(3, 5) == 106);
    CHECK(B.get(4, 6) == 50);
    CHECK(B.get(5, 7) == 5);
    CHECK(B.get(5, 8) == 2);
    CHECK(B.entries().size() == 7);
}

TEST_CASE("closed form against the oracle, both fields") {
    for (auto [n, d] : std::vector<std::pair<int, int>>{{3, 2}, {5, 2}, {5, 3}, {6, 3}}) {
        const auto cf = closed_form_betti(n, d);
        with_field(FieldSpec::parse("fp:32003"), [&](const auto& field) {
            auto I = make_psi_ideal(field, sample_general_f(n, d, 2, 5));
            QuotientAlgebra<std::decay_t<decltype(field)>> A(field, n, d, I.degree_d);
            REQUIRE(A.artinian());
            CHECK(koszul_betti(A.as_module()) == cf.table);
        });
    }
    auto cf = closed_form_betti(5, 3);
    CHECK(cf.a == 2);
    CHECK(cf.ell == 0);
    CHECK(cf.b == 5);
}

TEST_CASE("betti duality with the inverse system") {
    RationalField Q;
    auto I = make_psi_ideal(Q, sample_general_f(4, 3, 1, 5));
    QA A(Q, 4, 3, I.degree_d);
    CHECK(boij_duality_check(koszul_betti(A.as_module()), koszul_betti(A.dual_module()), 4));
}

TEST_CASE("rendering") {
    BettiTable T(2);
    T.set(0, 0, 1);
    T.set(1, 2, 3);
    T.set(2, 3, 2);
    const std::string want =
        "       0 1 2\n"
        "total: 1 3 2\n"
        "    0: 1 . .\n"
        "    1: . 3 2\n";
    CHECK(T.render() == want);
    CHECK(T.total(1) == 3);
    CHECK(T.max_i() == 2);
}

TEST_CASE("residue field resolutions") {
    // k[x]/(x^2): one generator in every degree
    auto A1 = power_of_max(1, 2);
    auto r1 = resolve_k_over_A(A1, 6);
    CHECK(r1.totals() == std::vector<long>{1, 1, 1, 1, 1, 1, 1});
    // k[x,y]/m^2: 1/(1-2t)
    auto A2 = power_of_max(2, 2);
    auto r2 = resolve_k_over_A(A2, 6);
    CHECK(r2.totals() == std::vector<long>{1, 2, 4, 8, 16, 32, 64});
    auto B = koszul_betti(A2.as_module());
    CHECK(golod_series(2, {1, B.total(1), B.total(2)}, 7) == r2.totals());
}

TEST_CASE("golod series coefficients") {
    // (1+t)/(1 - t^2) = 1 + t + t^2 + ...
    CHECK(golod_series(1, {1, 1}, 5) == std::vector<long>{1, 1, 1, 1, 1});
    // no relations: (1+t)^3
    CHECK(golod_series(3, {1}, 5) == std::vector<long>{1, 3, 3, 1, 0});
}
