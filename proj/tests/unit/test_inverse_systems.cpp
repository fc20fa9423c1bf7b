#include <doctest.h>

#include "psilab/parse.hpp"
#include "psilab/quotient.hpp"

using namespace psilab;

namespace {

QuotientAlgebra<RationalField> quotient(const std::string& f, std::size_t n) {
    RationalField Q;
    auto I = make_psi_ideal(Q, parse_polynomial(f, n));
    return QuotientAlgebra<RationalField>(Q, n, I.d, I.degree_d);
}

}  // namespace

TEST_CASE("inverse system is annihilated by the ideal") {
    RationalField Q;
    auto f = sample_general_f(4, 3, 2, 5);
    auto I = make_psi_ideal(Q, f);
    QuotientAlgebra<RationalField> A(Q, 4, 3, I.degree_d);
    REQUIRE(A.artinian());
    for (int j = 0; j <= A.computed_degree(); ++j) {
        auto inv = A.inverse_component(j);
        CHECK(inv.size() == A.hilbert(j));
        for (const auto& row : A.ideal_piece(j).basis()) {
            auto g = from_vector<RationalField, FormKind::polynomial>(Q, row, A.monomials(j));
            for (const auto& h : inv) CHECK(contract(g, h).is_zero());
        }
    }
}

TEST_CASE("inverse system of x1^2 - x2^2 + x1*x2") {
    for (std::size_t n = 2; n <= 6; ++n) {
        auto A = quotient("x1^2-x2^2+x1*x2", n);
        REQUIRE(A.artinian());
        auto inv = A.inverse_component(2);
        REQUIRE(inv.size() == 1);
        // proportional to sum y_i^(2)
        auto want = monomial_symmetric(Partition{2}, n);
        const Rational c = inv[0].terms().begin()->second;
        CHECK(inv[0] == want.scaled(c));
        CHECK(A.hilbert_function() == std::vector<std::size_t>{1, n, 1, 0});
    }
}

TEST_CASE("dual module is closed under contraction") {
    auto A = quotient("x1^3-x2^3+x1^2*x3+x2*x3*x4-x2*x3*x5", 5);
    auto D = A.dual_module();
    CHECK(D.validate().empty());
    CHECK(D.min_degree() == -A.top_degree());
    for (int j = 0; j <= A.top_degree(); ++j) CHECK(D.dim(-j) == A.hilbert(j));
}

TEST_CASE("socle by brute force kernel of all multiplications") {
    RationalField Q;
    auto f = sample_general_f(5, 3, 1, 5);
    auto I = make_psi_ideal(Q, f);
    QuotientAlgebra<RationalField> A(Q, 5, 3, I.degree_d);
    for (int i = 0; i <= A.top_degree(); ++i) {
        // stack the x_k into one matrix and take its kernel
        Matrix<RationalField> big(Q, 5 * A.hilbert(i + 1), A.hilbert(i));
        for (std::size_t k = 0; k < 5; ++k) {
            auto m = A.mult_matrix(k, i);
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c) big(k * m.rows() + r, c) = m(r, c);
        }
        CHECK(kernel(Q, big).size() == A.socle_dim(i));
    }
}

TEST_CASE("classification of x1^2 - x2^2 + x1*x2") {
    auto A = quotient("x1^2-x2^2+x1*x2", 4);
    auto c = classify(A);
    CHECK(c.narrow);
    CHECK(c.extremely_narrow);
    CHECK(c.gorenstein);
    CHECK(c.compressed);
    CHECK(c.summary.t == 2);
    CHECK(c.summary.s == 2);
}

TEST_CASE("general cubic samples are compressed and level only in the top two degrees") {
    RationalField Q;
    auto f = sample_general_f(5, 3, 1, 5);
    auto I = make_psi_ideal(Q, f);
    QuotientAlgebra<RationalField> A(Q, 5, 3, I.degree_d);
    auto c = classify(A);
    CHECK(c.summary.hilbert == std::vector<std::size_t>{1, 5, 15, 2});
    CHECK(c.summary.socle == std::vector<std::size_t>{0, 0, 5, 2});
    CHECK(c.compressed);
    CHECK_FALSE(c.gorenstein);
    CHECK(c.summary.st_bound);
}

TEST_CASE("truncation is reported") {
    RationalField Q;
    // x1^2 alone never kills x2^j
    auto I = make_psi_ideal(Q, parse_polynomial("x1^2 - x1*x2", 2));
    QuotientAlgebra<RationalField> A(Q, 2, 2, I.degree_d, 6);
    if (!A.artinian()) CHECK_THROWS(A.as_module());
}
