#pragma once

#include "psilab/linalg.hpp"
#include "psilab/partition.hpp"
#include "psilab/polynomial.hpp"

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <vector>

namespace psilab {

// Span of the S_n-orbit of a homogeneous f inside R_d, closed under the
// adjacent transpositions s_1..s_{n-1}.
template <class F>
RowSpace<F> orbit_span(const F& field, const Polynomial& f, const MonomialIndex& idx) {
    if (f.is_zero()) throw std::invalid_argument("orbit of the zero polynomial");
    const int d = f.degree();
    if (d < 1) throw std::invalid_argument("orbit_span needs degree >= 1");
    if (idx.degree() != d || idx.nvars() != f.nvars()) throw ConfigError("monomial index does not match f");
    const std::size_t n = f.nvars();
    RowSpace<F> rs(field, idx.size());
    std::deque<Polynomial> queue;
    if (rs.insert(to_vector(field, f, idx))) queue.push_back(f);
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i + 1 < n; ++i) gens.push_back(Permutation::transposition(n, i, i + 1));
    while (!queue.empty() && !rs.full()) {
        Polynomial g = std::move(queue.front());
        queue.pop_front();
        for (const auto& s : gens) {
            Polynomial h = permute(s, g);
            if (rs.insert(to_vector(field, h, idx))) queue.push_back(std::move(h));
        }
    }
    return rs;
}

template <class F>
struct PsiIdeal {
    Polynomial f;
    std::size_t n = 0;
    int d = 0;
    MonomialIndex index;     // basis of R_d
    RowSpace<F> degree_d;    // I_d
};

template <class F>
PsiIdeal<F> make_psi_ideal(const F& field, const Polynomial& f) {
    PsiIdeal<F> I;
    I.f = f;
    I.n = f.nvars();
    I.d = f.degree();
    I.index = MonomialIndex(I.n, I.d);
    I.degree_d = orbit_span(field, f, I.index);
    return I;
}

// True when every adjacent transposition maps the span into itself.
template <class F>
bool is_symmetric_span(const RowSpace<F>& rs, const MonomialIndex& idx) {
    const F& field = rs.field();
    const std::size_t n = idx.nvars();
    for (const auto& row : rs.basis()) {
        auto p = from_vector<F, FormKind::polynomial>(field, row, idx);
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (!rs.contains(to_vector(field, permute(Permutation::transposition(n, i, i + 1), p), idx))) return false;
    }
    return true;
}

// Random integer coefficients in [-B, B] \ {0} on every monomial of degree d,
// redrawn until the pure powers do not sum to zero.
Polynomial sample_general_f(std::size_t n, int d, std::uint64_t seed, int bound);

struct ConstructionTerm {
    Partition lambda;
    Partition gamma;
    Polynomial binomial;
};

struct Construction {
    Polynomial f;
    std::size_t min_n = 0;
    std::vector<ConstructionTerm> terms;  // excludes x1^d
};

std::size_t construction_min_n(int d);
// n = 0 means use the minimal count.
Construction build_construction_f(int d, std::size_t n = 0);

struct TParams {
    int d = 0;
    std::map<Partition, Rational> alpha;  // every lambda |- d
    std::map<Partition, Rational> t;      // lambda != (d)
};

TParams extract_params(const Polynomial& f);

}  // namespace psilab
