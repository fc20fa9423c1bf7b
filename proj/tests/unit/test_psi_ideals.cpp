#include <doctest.h>

#include "psilab/parse.hpp"
#include "psilab/psi_ideal.hpp"

#include <algorithm>
#include <numeric>

using namespace psilab;

namespace {

// Span of sigma f over all n! permutations.
template <class F>
std::size_t full_orbit_rank(const F& field, const Polynomial& f) {
    const std::size_t n = f.nvars();
    MonomialIndex idx(n, f.degree());
    RowSpace<F> rs(field, idx.size());
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do rs.insert(to_vector(field, permute(Permutation(p), f), idx));
    while (std::next_permutation(p.begin(), p.end()));
    return rs.rank();
}

}  // namespace

TEST_CASE("orbit span equals the span of the full orbit") {
    RationalField Q;
    for (std::size_t n = 2; n <= 4; ++n)
        for (int d = 2; d <= 3; ++d)
            for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                auto f = sample_general_f(n, d, seed, 3);
                auto I = make_psi_ideal(Q, f);
                CHECK(I.degree_d.rank() == full_orbit_rank(Q, f));
                CHECK(is_symmetric_span(I.degree_d, I.index));
            }
    auto g = parse_polynomial("x1^2*x2 - x3^3", 4);
    CHECK(make_psi_ideal(Q, g).degree_d.rank() == full_orbit_rank(Q, g));
}

TEST_CASE("orbit span of a symmetric polynomial is one dimensional") {
    RationalField Q;
    auto e2 = parse_polynomial("x1*x2 + x1*x3 + x2*x3", 3);
    CHECK(make_psi_ideal(Q, e2).degree_d.rank() == 1);
}

TEST_CASE("x1^2 - x2^2 + x1*x2 has codimension one in degree two") {
    RationalField Q;
    for (std::size_t n = 2; n <= 7; ++n) {
        auto I = make_psi_ideal(Q, parse_polynomial("x1^2-x2^2+x1*x2", n));
        CHECK(I.degree_d.rank() == dim_R(n, 2) - 1);
    }
}

TEST_CASE("sampling is seeded and bounded") {
    auto f = sample_general_f(4, 3, 11, 2);
    CHECK(f == sample_general_f(4, 3, 11, 2));
    CHECK(f != sample_general_f(4, 3, 12, 2));
    CHECK(f.size() == dim_R(4, 3));
    for (const auto& [m, c] : f.terms()) {
        CHECK(c != 0);
        CHECK(abs(c) <= 2);
        CHECK(c.get_den() == 1);
    }
}

TEST_CASE("construction polynomial") {
    for (int d = 2; d <= 4; ++d) {
        auto c = build_construction_f(d);
        CHECK(c.f.nvars() == c.min_n);
        CHECK(c.min_n == construction_min_n(d));
        CHECK(c.f.degree() == d);
        // the summands account for every partition except (d)
        CHECK(c.terms.size() + 1 >= partition_count(d) - 1);
        for (const auto& t : c.terms) {
            CHECK(t.binomial.degree() == d);
            CHECK(t.lambda.size() == d);
        }
    }
    CHECK(construction_min_n(3) == 26);
    CHECK_THROWS(build_construction_f(3, 5));
}

TEST_CASE("construction ideal has the expected codimension over a prime field") {
    PrimeField P(10007);
    auto c = build_construction_f(2, 9);
    auto I = make_psi_ideal(P, c.f);
    CHECK(I.degree_d.rank() == dim_R(9, 2) - (partition_count(2) - 1));
}

TEST_CASE("parameters read off f") {
    auto t = extract_params(parse_polynomial("x1^3 + 2*x1^2*x2 - x1*x2*x3 + 5*x2^3", 3));
    CHECK(t.d == 3);
    CHECK(t.alpha.at(Partition{3}) == 6);
    CHECK(t.alpha.at(Partition{2, 1}) == 2);
    CHECK(t.alpha.at(Partition{1, 1, 1}) == -1);
}
