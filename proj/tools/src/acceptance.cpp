#include "psilab_cli/acceptance.hpp"

#include "psilab/equivariant.hpp"
#include "psilab/linrel.hpp"
#include "psilab/parse.hpp"
#include "psilab/quotient.hpp"
#include "psilab/resolution.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace psilab::cli {

namespace {

using Clock = std::chrono::steady_clock;
using QA = QuotientAlgebra<RationalField>;

std::string join(const std::vector<long>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return "(" + s + ")";
}

std::string coeff_vector(const Polynomial& f) {
    std::string s;
    for (const auto& [m, c] : f.terms()) s += (s.empty() ? "" : ",") + to_string(c);
    return "[" + s + "]";
}

// a zero coefficient sum puts (1,...,1) in the zero set of every permuted f
std::string locus_hint(const Polynomial& f) {
    Rational sum = 0;
    for (const auto& [m, c] : f.terms()) sum += c;
    return sum == 0 ? " (f(1,...,1) = 0)" : "";
}

BettiTable table_of(int n, std::initializer_list<std::tuple<int, int, long>> entries) {
    BettiTable t(n);
    for (const auto& [i, j, b] : entries) t.set(i, j, b);
    return t;
}

CriterionResult start(int id, std::string title) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    return r;
}

std::string tag(int d, int n) { return "(d,n)=(" + std::to_string(d) + "," + std::to_string(n) + ")"; }

// Sample, build A, and hand it over; returns false if A looks non-artinian.
bool with_sample(int n, int d, std::uint64_t seed, const std::function<void(const Polynomial&, const QA&)>& fn) {
    RationalField Q;
    auto f = sample_general_f(n, d, seed, 5);
    auto I = make_psi_ideal(Q, f);
    QA A(Q, n, d, I.degree_d);
    if (!A.artinian()) return false;
    fn(f, A);
    return true;
}

CriterionResult c1() {
    CriterionResult r = start(1, "golden cubic table at n=5");
    RationalField Q;
    auto f = parse_polynomial("x1^3-x2^3+x1^2*x3+x2*x3*x4-x2*x3*x5", 5);
    auto I = make_psi_ideal(Q, f);
    QA A(Q, 5, 3, I.degree_d);
    const auto t0 = Clock::now();
    auto B = koszul_betti(A.as_module());
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    const auto want = table_of(5, {{0, 0, 1}, {1, 3, 33}, {2, 4, 95}, {3, 5, 106}, {4, 6, 50}, {5, 7, 5}, {5, 8, 2}});
    for (const auto& s : B.diff(want)) r.notes.push_back("diff " + s);
    r.notes.push_back("koszul_betti " + std::to_string(secs) + " s");
    r.pass = B == want && secs < 60;
    return r;
}

CriterionResult c2() {
    CriterionResult r = start(2, "closed form equals Koszul homology on seeded samples");
    r.pass = true;
    const std::vector<std::pair<int, int>> cases = {{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 6}};
    for (const auto& [d, n] : cases) {
        const auto cf = closed_form_betti(n, d);
        int agree = 0;
        std::uint64_t seed = 1;
        // 5 seeds; seeds on the exceptional locus are reported and replaced, at most 3 times
        for (; agree < 5 && seed <= 8; ++seed) {
            bool ok = false;
            std::string why = "non-artinian";
            with_sample(n, d, seed, [&](const Polynomial&, const QA& A) {
                auto B = koszul_betti(A.as_module());
                ok = B == cf.table;
                why.clear();
                for (const auto& s : B.diff(cf.table)) why += (why.empty() ? "" : "; ") + s;
            });
            if (ok)
                ++agree;
            else
                r.notes.push_back(tag(d, n) + " seed " + std::to_string(seed) + " differs (" + why + "), coefficients " +
                                  coeff_vector(sample_general_f(n, d, seed, 5)) +
                                  locus_hint(sample_general_f(n, d, seed, 5)));
        }
        r.notes.push_back(tag(d, n) + ": " + std::to_string(agree) + " seeds agree out of " + std::to_string(seed - 1));
        if (agree < 5) r.pass = false;
    }
    return r;
}

CriterionResult c3() {
    CriterionResult r = start(3, "cubic tables for n=1..4");
    const std::map<int, BettiTable> want = {
        {1, table_of(1, {{0, 0, 1}, {1, 3, 1}})},
        {2, table_of(2, {{0, 0, 1}, {1, 3, 2}, {2, 6, 1}})},
        {3, table_of(3, {{0, 0, 1}, {1, 3, 6}, {2, 4, 4}, {2, 5, 3}, {3, 6, 1}, {3, 7, 1}})},
        {4, table_of(4, {{0, 0, 1}, {1, 3, 15}, {2, 4, 26}, {3, 5, 10}, {3, 6, 4}, {4, 7, 1}, {4, 8, 1}})}};
    r.pass = true;
    for (const auto& [n, t] : want) {
        int hits = 0;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            bool ok = false;
            const bool art = with_sample(n, 3, seed, [&](const Polynomial&, const QA& A) { ok = koszul_betti(A.as_module()) == t; });
            if (ok) ++hits;
            else
                r.notes.push_back("n=" + std::to_string(n) + " seed " + std::to_string(seed) + (art ? " table differs" : " non-artinian") +
                                  ", f = " + format(sample_general_f(n, 3, seed, 5)) +
                                  locus_hint(sample_general_f(n, 3, seed, 5)));
        }
        r.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(hits) + "/5");
        if (hits < 4) r.pass = false;
    }
    return r;
}

CriterionResult c4() {
    CriterionResult r = start(4, "Hilbert function and socle of general samples");
    r.pass = true;
    const std::vector<std::pair<int, int>> cases = {{2, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 6}, {3, 7}};
    for (const auto& [d, n] : cases) {
        const auto cf = closed_form_betti(n, d);
        if (d == 3 && cf.b != static_cast<long>(n) * (n - 3) / 2) {
            r.pass = false;
            r.notes.push_back(tag(d, n) + " closed-form b " + std::to_string(cf.b) + " != n(n-3)/2");
        }
        std::vector<long> hf;
        for (int k = 0; k < d; ++k) hf.push_back(static_cast<long>(dim_R(n, k)));
        hf.push_back(cf.a);
        std::vector<long> soc(d + 1, 0);
        soc[d - 1] = cf.b;
        soc[d] = cf.a;
        // three artinian seeds; non-artinian ones are reported and skipped
        int used = 0;
        for (std::uint64_t seed = 1; used < 3 && seed <= 6; ++seed) {
            const bool art = with_sample(n, d, seed, [&](const Polynomial&, const QA& A) {
                auto S = hilbert_and_socle(A);
                std::vector<long> h(S.hilbert.begin(), S.hilbert.end()), e(S.socle.begin(), S.socle.end());
                if (h != hf || e != soc) {
                    r.pass = false;
                    r.notes.push_back(tag(d, n) + " seed " + std::to_string(seed) + " HF " + join(h) + " socle " + join(e));
                }
            });
            if (art)
                ++used;
            else
                r.notes.push_back(tag(d, n) + " seed " + std::to_string(seed) + " non-artinian, skipped" +
                                  locus_hint(sample_general_f(n, d, seed, 5)));
        }
        if (used < 3) r.pass = false;
        r.notes.push_back(tag(d, n) + " HF " + join(hf) + " socle " + join(soc));
    }
    return r;
}

// (I^perp)_{-d} spanned by the m_lambda, lambda != (d), and dim I_d = dim R_d - (P(d)-1)
template <class F>
bool construction_holds(const F& field, int d, std::size_t n, CriterionResult& r) {
    auto c = build_construction_f(d, n);
    auto I = make_psi_ideal(field, c.f);
    bool ok = true;
    const std::size_t expect = dim_R(n, d) - (partition_count(d) - 1);
    if (I.degree_d.rank() != expect) ok = false;
    for (const auto& t : c.terms)
        if (!I.degree_d.contains(to_vector(field, t.binomial, I.index))) ok = false;
    QuotientAlgebra<F> A(field, n, d, I.degree_d, d);
    RowSpace<F> sym(field, I.index.size());
    for (const auto& lam : enumerate_partitions(d))
        if (lam != Partition{d}) sym.insert(to_vector(field, monomial_symmetric(lam, n), I.index));
    auto inv = A.inverse_vectors(d);
    if (inv.size() != sym.rank()) ok = false;
    for (const auto& v : inv)
        if (!sym.contains(v)) ok = false;
    r.notes.push_back("d=" + std::to_string(d) + " n=" + std::to_string(n) + " over " + field.name() + ": dim I_d " +
                      std::to_string(I.degree_d.rank()) + " (want " + std::to_string(expect) + "), dim (I^perp)_{-d} " +
                      std::to_string(inv.size()));
    return ok;
}

CriterionResult c5() {
    CriterionResult r = start(5, "inverse systems");
    r.pass = true;
    RationalField Q;
    for (std::size_t n = 2; n <= 8; ++n) {
        auto f = parse_polynomial("x1^2-x2^2+x1*x2", n);
        auto I = make_psi_ideal(Q, f);
        QA A(Q, n, 2, I.degree_d);
        auto inv = A.inverse_vectors(2);
        RowSpace<RationalField> want(Q, I.index.size());
        want.insert(to_vector(Q, monomial_symmetric(Partition{2}, n), I.index));
        const bool ok = inv.size() == 1 && want.contains(inv.front());
        if (!ok) {
            r.pass = false;
            r.notes.push_back("n=" + std::to_string(n) + ": (I^perp)_{-2} is not spanned by sum y_i^(2)");
        }
    }
    r.notes.push_back("x1^2-x2^2+x1*x2 checked for n=2..8");
    if (!construction_holds(Q, 2, 8, r)) r.pass = false;
    const auto t0 = Clock::now();
    if (!construction_holds(PrimeField(1000003), 3, 26, r)) r.pass = false;
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    r.notes.push_back("n=26 run " + std::to_string(secs) + " s");
    if (secs > 600) r.pass = false;
    return r;
}

CriterionResult c6() {
    CriterionResult r = start(6, "linear relations of W(t)");
    r.pass = true;
    RationalField Q;
    for (int d : {3, 4, 5}) {
        const long ell = static_cast<long>(partition_count(d)) - static_cast<long>(partition_count(d - 1)) - 1;
        for (int n : {d, d + 2, 10}) {
            for (int s = 0; s <= 5; ++s) {
                const TParams t = s == 0 ? zero_t(d) : random_t(d, s);
                auto L = linear_relations(Q, W_family(t, n));
                bool sym = true;
                for (const auto& v : component_span(Q, L).basis())
                    for (std::size_t i = 1; i < v.size(); ++i)
                        if (v[i] != v[0]) sym = false;
                if (static_cast<long>(L.dim()) != ell || !sym) {
                    r.pass = false;
                    r.notes.push_back(tag(d, n) + (s ? " t seed " + std::to_string(s) : " t=0") + ": dim L " +
                                      std::to_string(L.dim()) + " (want " + std::to_string(ell) + ")" +
                                      (sym ? "" : ", components not symmetric"));
                }
            }
            auto ap = analyze_Aprime(n, d, zero_t(d));
            if (!ap.det_matches) {
                r.pass = false;
                r.notes.push_back(tag(d, n) + " det A'(0) = " + to_string(ap.det_at_zero) + " vs " + to_string(ap.predicted_det_at_zero));
            }
        }
        r.notes.push_back("d=" + std::to_string(d) + ": dim L = " + std::to_string(ell) + " expected");
    }
    for (int n : {5, 6, 7, 10}) {
        const Rational want = Rational((n - 4) * (n - 3)) * (n - 2) * (n - 2) * (n - 1);
        auto ap = analyze_Aprime(n, 5, zero_t(5));
        if (ap.det_at_zero != want || aprime_det_at_zero(n, 5) != want) {
            r.pass = false;
            r.notes.push_back("d=5 n=" + std::to_string(n) + ": det A'(0) = " + to_string(ap.det_at_zero) + ", want " + to_string(want));
        }
    }
    return r;
}

CriterionResult c7() {
    CriterionResult r = start(7, "betti duality between A and its inverse system");
    r.pass = true;
    auto check = [&](const std::string& label, const QA& A) {
        const bool ok = boij_duality_check(koszul_betti(A.as_module()), koszul_betti(A.dual_module()), A.nvars());
        r.notes.push_back(label + (ok ? " ok" : " FAILS"));
        if (!ok) r.pass = false;
    };
    for (const auto& [d, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {3, 5}})
        with_sample(n, d, 1, [&](const Polynomial&, const QA& A) { check(tag(d, n) + " seed 1", A); });
    RationalField Q;
    for (std::size_t n : {3, 5}) {
        auto I = make_psi_ideal(Q, parse_polynomial("x1^2-x2^2+x1*x2", n));
        QA A(Q, n, 2, I.degree_d);
        check("x1^2-x2^2+x1*x2, n=" + std::to_string(n), A);
    }
    return r;
}

CriterionResult c8() {
    CriterionResult r = start(8, "Golod (d=3,n=5) and Koszul (d=2,n=3) residue field resolutions");
    bool golod = false, koszul = false;
    with_sample(5, 3, 1, [&](const Polynomial&, const QA& A) {
        auto res = resolve_k_over_A(A, 4);
        auto got = res.totals();
        std::vector<long> binoms;
        for (int i = 0; i <= 5; ++i) binoms.push_back(static_cast<long>(binomial(5, i)));
        auto literal = golod_series(5, binoms, 5);
        auto B = koszul_betti(A.as_module());
        std::vector<long> totals;
        for (int i = 0; i <= B.max_i(); ++i) totals.push_back(B.total(i));
        auto bound = golod_series(5, totals, 5);
        golod = res.complete && got == literal;
        r.notes.push_back("d=3 n=5: beta_i(k) " + join(got) + ", (1+t)^5/(1-t((1+t)^5-1)) gives " + join(literal));
        r.notes.push_back("d=3 n=5: (1+t)^5/(1-t(P_A(t)-1)) with the betti totals of A gives " + join(bound) +
                          (got == bound ? ", equal: A is Golod" : ", different"));
    });
    with_sample(3, 2, 1, [&](const Polynomial&, const QA& A) {
        auto res = resolve_k_over_A(A, 5);
        bool linear = true;
        for (const auto& [ij, b] : res.betti.entries())
            if (ij.first != ij.second) linear = false;
        auto got = res.totals();
        got.resize(std::min<std::size_t>(got.size(), 5));
        koszul = res.complete && linear && got == std::vector<long>{1, 3, 8, 21, 55};
        r.notes.push_back("d=2 n=3: beta_i(k) " + join(res.totals()) + (linear ? ", linear" : ", not linear"));
    });
    r.pass = golod && koszul;
    return r;
}

GradedModule<RationalField> residue_field_module(std::size_t n) {
    RationalField Q;
    GradedModule<RationalField> k(Q, n, 0, {1});
    k.set_action([Q](const Permutation&, int) {
        Matrix<RationalField> m(Q, 1, 1);
        m(0, 0) = Q.one();
        return m;
    });
    return k;
}

CriterionResult c9() {
    CriterionResult r = start(9, "equivariant Tor");
    bool a = true, b = true, c = true, dd = true;

    for (std::size_t n = 1; n <= 6; ++n) {
        auto chars = all_tor_characters(residue_field_module(n));
        for (int i = 0; i <= static_cast<int>(n); ++i) {
            auto it = chars.find({i, i});
            const auto got = it == chars.end() ? SpechtDecomposition{static_cast<int>(n), {}} : specht_decompose(it->second);
            if (got != koszul_residue_prediction(n, i)) {
                a = false;
                r.notes.push_back("(a) n=" + std::to_string(n) + " i=" + std::to_string(i) + ": " + got.str());
            }
        }
        if (chars.size() != n + 1) a = false;
    }
    r.notes.push_back(std::string("(a) Tor_i(k,k), n<=6: ") + (a ? "ok" : "FAILS"));

    for (int n : {3, 4, 5}) {
        with_sample(n, 2, 1, [&](const Polynomial&, const QA& A) {
            auto M = A.as_module();
            auto chars = all_tor_characters(M);
            std::map<std::pair<int, int>, SpechtDecomposition> decs;
            try {
                decs = decompose_all(chars);
            } catch (const NotACharacter& e) {
                b = false;
                r.notes.push_back("(b) n=" + std::to_string(n) + ": " + e.what());
                return;
            }
            if (!dimensions_match(decs, koszul_betti(M))) {
                b = false;
                r.notes.push_back("(b) n=" + std::to_string(n) + ": dimensions disagree with the betti table");
            }
            // Tor_i(I) = Tor_{i+1}(A), all internal degrees together
            auto literal = literal_quadratic_tors(n);
            for (int i = 0; i <= n; ++i) {
                SpechtDecomposition got;
                got.n = n;
                for (const auto& [ij, dec] : decs)
                    if (ij.first == i + 1)
                        for (const auto& [lam, m] : dec.mult) got.add(lam, m);
                auto diff = decomposition_diff(got, literal.at(i));
                const bool interior = i >= 1 && i <= n - 2;
                std::string line = "(b) n=" + std::to_string(n) + " Tor_" + std::to_string(i) + "(I) ";
                if (diff.empty()) {
                    line += "matches";
                } else {
                    line += interior ? "DIFFERS:" : "boundary diff (reported only):";
                    for (const auto& s : diff) line += " " + s;
                    if (interior) b = false;
                }
                r.notes.push_back(line);
            }
        });
    }

    with_sample(5, 3, 1, [&](const Polynomial&, const QA& A) {
        auto M = A.as_module();
        auto decs = decompose_all(all_tor_characters(M));
        auto get = [&](int i, int j) {
            auto it = decs.find({i, j});
            return it == decs.end() ? SpechtDecomposition{5, {}} : it->second;
        };
        SpechtDecomposition sgn2{5, {}};
        sgn2.add(Partition{1, 1, 1, 1, 1}, 2);
        const bool z = get(4, 7).mult.empty();
        const bool top = get(5, 8) == sgn2;
        auto pred = predicted_equivariant_tors(5, 3);
        const bool mid = get(5, 7) == pred.at({5, 7});
        c = z && top && mid;
        r.notes.push_back(std::string("(c) Tor_4(A)_7 = 0: ") + (z ? "ok" : "FAILS") + "; Tor_5(A)_8 = 2 Sp(1^5): " + (top ? "ok" : "FAILS"));
        r.notes.push_back("(c) Tor_5(A)_7 = " + get(5, 7).str() + ", with the (mult - a) reading " + (mid ? "ok" : "FAILS"));
        std::string lit;
        for (const auto& s : decomposition_diff(get(5, 7), literal_equivariant_tors(5, 3).at({5, 7}))) lit += " " + s;
        if (!lit.empty()) r.notes.push_back("(c) literal +P(d-1)+1 sign multiplicity differs (reported only):" + lit);
    });

    for (const auto& [d, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 5}})
        with_sample(n, d, 1, [&](const Polynomial&, const QA& A) {
            const bool ok = equivariant_duality_check(all_tor_characters(A.as_module()), all_tor_characters(A.dual_module()), n);
            r.notes.push_back("(d) " + tag(d, n) + (ok ? " ok" : " FAILS"));
            if (!ok) dd = false;
        });

    r.pass = a && b && c && dd;
    return r;
}

std::vector<Partition> partitions_upto(int k) {
    std::vector<Partition> out;
    for (int s = 0; s <= k; ++s)
        for (const auto& p : enumerate_partitions(s)) out.push_back(p);
    return out;
}

CriterionResult c10() {
    CriterionResult r = start(10, "restriction coefficients and the tensor rule");
    r.pass = true;
    int checked = 0;
    for (int n : {8, 10})
        for (const auto& lam : partitions_upto(3))
            for (const auto& nu : enumerate_partitions(lam.size())) {
                auto nun = padded(nu, n);
                if (!nun) continue;
                const long want = lam == nu ? 1 : 0;
                const long got = restriction_multiplicity(lam, *nun);
                ++checked;
                if (got != want) {
                    r.pass = false;
                    r.notes.push_back("n=" + std::to_string(n) + " lambda " + lam.str() + " nu " + nu.str() + ": " + std::to_string(got));
                }
            }
    r.notes.push_back(std::to_string(checked) + " restriction coefficients with |lambda| = |nu| <= 3");
    std::mt19937_64 rng(20);
    int tensor_ok = 0;
    for (int k = 0; k < 20; ++k) {
        const int n = std::uniform_int_distribution<int>(2, 8)(rng);
        const auto all = enumerate_partitions(n);
        const Partition lam = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
        const auto lhs = irreducible_character(lam) * irreducible_character(Partition{n - 1, 1});
        if (tensor_with_standard(lam).character() == lhs) ++tensor_ok;
        else {
            r.pass = false;
            r.notes.push_back("tensor rule fails for " + lam.str());
        }
    }
    r.notes.push_back("tensor rule " + std::to_string(tensor_ok) + "/20");
    return r;
}

}  // namespace

std::vector<int> criteria_for_suite(const std::string& suite) {
    static const std::map<std::string, std::vector<int>> named = {
        {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}}, {"cubic-n5", {1}}, {"formula", {2}},   {"small-n", {3}},
        {"socle", {4}},                           {"inverse", {5}},  {"linrel", {6}},    {"duality", {7}},
        {"golod", {8}},                           {"equivariant", {9}}, {"restrict", {10}}};
    if (auto it = named.find(suite); it != named.end()) return it->second;
    std::vector<int> ids;
    std::stringstream ss(suite);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int id = 0;
        try {
            id = std::stoi(tok);
        } catch (const std::exception&) {
            throw ConfigError("unknown suite " + suite);
        }
        if (id < 1 || id > 10) throw ConfigError("criteria are numbered 1..10");
        ids.push_back(id);
    }
    if (ids.empty()) throw ConfigError("empty suite");
    return ids;
}

CriterionResult run_criterion(int id) {
    static const std::map<int, std::function<CriterionResult()>> table = {
        {1, c1}, {2, c2}, {3, c3}, {4, c4}, {5, c5}, {6, c6}, {7, c7}, {8, c8}, {9, c9}, {10, c10}};
    auto it = table.find(id);
    if (it == table.end()) throw ConfigError("no criterion " + std::to_string(id));
    const auto t0 = Clock::now();
    CriterionResult r;
    try {
        r = it->second();
    } catch (const std::exception& e) {
        r.id = id;
        r.pass = false;
        r.notes.push_back(std::string("error: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

CriterionResult run_stretch() {
    CriterionResult r = start(0, "stretch: d=4, n=8 closed form vs Koszul homology over GF(1000003)");
    const auto t0 = Clock::now();
    PrimeField P(1000003);
    const auto cf = closed_form_betti(8, 4);
    auto f = sample_general_f(8, 4, 1, 5);
    auto I = make_psi_ideal(P, f);
    QuotientAlgebra<PrimeField> A(P, 8, 4, I.degree_d);
    if (!A.artinian()) {
        r.notes.push_back("sample is not artinian below the cap");
    } else {
        auto B = koszul_betti(A.as_module());
        r.pass = B == cf.table;
        for (const auto& s : B.diff(cf.table)) r.notes.push_back("diff " + s);
        r.notes.push_back("oracle table:\n" + B.render());
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

std::string format_line(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << " criterion " << (r.id ? std::to_string(r.id) : std::string("*")) << ": " << r.title << " ("
       << std::fixed;
    os.precision(2);
    os << r.seconds << " s)";
    return os.str();
}

}  // namespace psilab::cli
