#include "psilab/linrel.hpp"

#include <random>

namespace psilab {

AffineExpr& AffineExpr::operator+=(const AffineExpr& o) {
    constant += o.constant;
    for (const auto& [k, v] : o.coeff) {
        coeff[k] += v;
        if (sgn(coeff[k]) == 0) coeff.erase(k);
    }
    return *this;
}

bool AffineExpr::is_zero() const { return sgn(constant) == 0 && coeff.empty(); }

Rational AffineExpr::eval(const std::map<Partition, Rational>& t) const {
    Rational v = constant;
    for (const auto& [k, c] : coeff) {
        auto it = t.find(k);
        if (it != t.end()) v += c * it->second;
    }
    return v;
}

std::string AffineExpr::str() const {
    std::string s;
    if (sgn(constant) != 0 || coeff.empty()) s = to_string(constant);
    for (const auto& [k, c] : coeff) {
        std::string term = "t" + k.str();
        if (c == 1)
            s += s.empty() ? term : " + " + term;
        else if (c == -1)
            s += s.empty() ? "-" + term : " - " + term;
        else if (sgn(c) < 0)
            s += (s.empty() ? "-" : " - ") + to_string(Rational(-c)) + "*" + term;
        else
            s += (s.empty() ? "" : " + ") + to_string(c) + "*" + term;
    }
    return s;
}

std::vector<Partition> linrel_columns(int d) {
    std::vector<Partition> out;
    for (const auto& p : enumerate_partitions(d))
        if (p.length() != 1) out.push_back(p);
    return out;
}

TParams zero_t(int d) {
    TParams t;
    t.d = d;
    for (const auto& p : enumerate_partitions(d)) t.alpha[p] = 0;
    t.alpha[Partition{d}] = 1;
    for (const auto& p : linrel_columns(d)) t.t[p] = 0;
    return t;
}

TParams random_t(int d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(1, 1000);
    TParams t = zero_t(d);
    for (const auto& p : linrel_columns(d)) {
        t.t[p] = pick(rng);
        t.alpha[p] = t.t[p];
    }
    return t;
}

std::vector<DualElement> W_family(const TParams& t, std::size_t n) {
    std::vector<DualElement> out;
    const DualElement md = monomial_symmetric(Partition{t.d}, n);
    for (const auto& lam : linrel_columns(t.d)) {
        auto it = t.t.find(lam);
        const Rational tv = it == t.t.end() ? Rational(0) : it->second;
        out.push_back(monomial_symmetric(lam, n) - md.scaled(tv));
    }
    return out;
}

SymmetricSystem build_symmetric_matrix(std::size_t n, int d) {
    if (d < 2) throw std::invalid_argument("symmetric system needs d >= 2");
    SymmetricSystem S;
    S.n = n;
    S.d = d;
    S.rows = enumerate_partitions(d - 1);
    S.cols = linrel_columns(d);
    std::map<Partition, std::size_t> colpos;
    for (std::size_t k = 0; k < S.cols.size(); ++k) colpos[S.cols[k]] = k;
    S.entries.assign(S.rows.size(), std::vector<AffineExpr>(S.cols.size()));
    const Partition top{d - 1};
    const Partition hook{d - 1, 1};
    for (std::size_t r = 0; r < S.rows.size(); ++r) {
        const Partition& q = S.rows[r];
        auto& row = S.entries[r];
        if (q == top) {
            for (std::size_t c = 0; c < S.cols.size(); ++c) {
                AffineExpr e;
                e.coeff[S.cols[c]] = -1;
                row[c] += e;
            }
            AffineExpr e;
            e.constant = static_cast<long>(n) - 1;
            row[colpos.at(hook)] += e;
            continue;
        }
        AffineExpr lead;
        lead.constant = static_cast<long>(n) - q.length();
        row[colpos.at(p_up(q, q.length() + 1))] += lead;
        for (int j = 1; j <= q.length(); ++j) {
            AffineExpr one;
            one.constant = 1;
            row[colpos.at(p_up(q, j))] += one;
        }
    }
    return S;
}

std::vector<std::size_t> aprime_columns(const SymmetricSystem& S) {
    std::map<Partition, std::size_t> colpos;
    for (std::size_t k = 0; k < S.cols.size(); ++k) colpos[S.cols[k]] = k;
    std::vector<std::size_t> out;
    for (const auto& q : S.rows) out.push_back(colpos.at(p_up(q, q.length() + 1)));
    return out;
}

Rational aprime_det_at_zero(std::size_t n, int d) {
    Rational v = static_cast<long>(n) - 1;
    const Partition top{d - 1};
    for (const auto& q : enumerate_partitions(d - 1))
        if (q != top) v *= static_cast<long>(n) - q.length();
    return v;
}

AprimeReport analyze_Aprime(std::size_t n, int d, const TParams& t, std::uint64_t seed) {
    RationalField Q;
    AprimeReport rep;
    rep.n = n;
    rep.d = d;
    const auto S = build_symmetric_matrix(n, d);
    const TParams t0 = zero_t(d);
    rep.det_at_zero = determinant(Q, specialize_aprime(Q, S, t0.t));
    rep.predicted_det_at_zero = aprime_det_at_zero(n, d);
    rep.det_matches = rep.det_at_zero == rep.predicted_det_at_zero;

    // affine in t: second differences vanish along every coordinate, and
    // the increments from two random points add up
    auto det_at = [&](const std::map<Partition, Rational>& tt) { return determinant(Q, specialize_aprime(Q, S, tt)); };
    const auto base = random_t(d, seed).t;
    bool affine = true;
    for (const auto& lam : S.cols) {
        auto t1 = base, t2 = base;
        t1[lam] += 1;
        t2[lam] += 2;
        if (det_at(t2) - 2 * det_at(t1) + det_at(base) != 0) affine = false;
    }
    const auto u = random_t(d, seed + 1).t, v = random_t(d, seed + 2).t;
    auto uv = u;
    for (auto& [k, x] : uv) x += v.at(k);
    const Rational g0 = det_at(t0.t);
    if (det_at(uv) - g0 != (det_at(u) - g0) + (det_at(v) - g0)) affine = false;
    rep.det_affine_in_t = affine;

    rep.rank_A = rank(Q, specialize(Q, S, t.t));
    rep.solution_dim = S.cols.size() - rep.rank_A;
    rep.expected_rank = S.rows.size();
    return rep;
}

}  // namespace psilab
