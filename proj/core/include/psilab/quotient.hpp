#pragma once

#include "psilab/graded_module.hpp"
#include "psilab/linalg.hpp"
#include "psilab/partition.hpp"
#include "psilab/polynomial.hpp"
#include "psilab/psi_ideal.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace psilab {

// A = R/I for I generated by a subspace of R_d. All graded pieces are built
// eagerly up to the first vanishing degree (or the cap), after which the
// object is read-only.
template <class F>
class QuotientAlgebra {
public:
    using Elem = typename F::Elem;

    QuotientAlgebra(const F& field, std::size_t n, int d, RowSpace<F> generators, int cap = -1)
        : field_(field), n_(n), d_(d), cap_(cap < 0 ? d + static_cast<int>(n) : cap) {
        if (d < 1) throw std::invalid_argument("generator degree must be positive");
        if (generators.ambient_dim() != dim_R(n, d)) throw ConfigError("generator space does not live in R_d");
        for (int j = 0;; ++j) {
            Piece p;
            p.index = MonomialIndex(n, j);
            if (j < d)
                p.ideal = RowSpace<F>(field, p.index.size());
            else if (j == d)
                p.ideal = std::move(generators);
            else
                p.ideal = raise(pieces_.back(), p.index);
            p.pos.assign(p.index.size(), -1);
            const auto& fr = p.ideal.free_columns();
            for (std::size_t k = 0; k < fr.size(); ++k) p.pos[fr[k]] = static_cast<int>(k);
            const bool zero = fr.empty();
            pieces_.push_back(std::move(p));
            if (zero) {
                artinian_ = true;
                break;
            }
            if (j >= cap_) break;
        }
        top_ = static_cast<int>(pieces_.size()) - 1;
        if (artinian_) --top_;
    }

    static QuotientAlgebra from_psi(const F& field, const PsiIdeal<F>& I, int cap = -1) {
        return QuotientAlgebra(field, I.n, I.d, I.degree_d, cap);
    }

    const F& field() const { return field_; }
    std::size_t nvars() const { return n_; }
    int generator_degree() const { return d_; }
    int cap() const { return cap_; }
    bool artinian() const { return artinian_; }
    // last degree with A_j != 0
    int top_degree() const { return top_; }
    int computed_degree() const { return static_cast<int>(pieces_.size()) - 1; }

    const MonomialIndex& monomials(int j) const { return piece(j).index; }
    const RowSpace<F>& ideal_piece(int j) const { return piece(j).ideal; }
    std::size_t hilbert(int j) const {
        if (j < 0) return 0;
        if (j > computed_degree()) {
            if (artinian_) return 0;
            throw std::out_of_range("degree beyond the computed range");
        }
        return piece(j).ideal.free_columns().size();
    }
    std::vector<std::size_t> hilbert_function() const {
        std::vector<std::size_t> h;
        for (int j = 0; j <= computed_degree(); ++j) h.push_back(hilbert(j));
        return h;
    }

    // Basis of A_j: the monomials in the free columns of I_j.
    std::vector<Monomial> basis(int j) const {
        std::vector<Monomial> out;
        const auto& p = piece(j);
        for (std::size_t c : p.ideal.free_columns()) out.push_back(p.index[c]);
        return out;
    }

    Vec<F> normal_form(const Monomial& m) const {
        const auto& p = piece(m.degree());
        const std::size_t c = p.index.index(m);
        Vec<F> out(p.ideal.free_columns().size(), field_.zero());
        if (p.pos[c] >= 0) {
            out[p.pos[c]] = field_.one();
            return out;
        }
        const auto& row = p.ideal.row_for_pivot(c);
        const auto& fr = p.ideal.free_columns();
        for (std::size_t k = 0; k < fr.size(); ++k) out[k] = field_.neg(row[fr[k]]);
        return out;
    }

    // x_k : A_j -> A_{j+1}
    Matrix<F> mult_matrix(std::size_t k, int j) const {
        auto src = basis(j);
        const std::size_t tgt = hilbert(j + 1);
        Matrix<F> m(field_, tgt, src.size());
        if (tgt == 0) return m;
        for (std::size_t c = 0; c < src.size(); ++c) {
            auto v = normal_form(src[c] * Monomial::var(n_, k));
            for (std::size_t r = 0; r < tgt; ++r) m(r, c) = v[r];
        }
        return m;
    }

    Matrix<F> action_matrix(const Permutation& sigma, int j) const {
        auto src = basis(j);
        Matrix<F> m(field_, src.size(), src.size());
        for (std::size_t c = 0; c < src.size(); ++c) {
            auto v = normal_form(permute(sigma, src[c]));
            for (std::size_t r = 0; r < src.size(); ++r) m(r, c) = v[r];
        }
        return m;
    }

    GradedModule<F> as_module() const {
        require_artinian();
        std::vector<std::size_t> dims;
        for (int j = 0; j <= top_; ++j) dims.push_back(hilbert(j));
        GradedModule<F> M(field_, n_, 0, dims);
        for (int j = 0; j < top_; ++j)
            for (std::size_t k = 0; k < n_; ++k) M.x(k, j) = mult_matrix(k, j);
        const QuotientAlgebra* self = this;
        M.set_action([self](const Permutation& s, int j) { return self->action_matrix(s, j); });
        return M;
    }

    // (I^perp)_{-j}: vectors over the dual monomials of degree j, one per
    // basis element of A_j.
    std::vector<Vec<F>> inverse_vectors(int j) const {
        if (j > computed_degree()) {
            if (artinian_) return {};
            throw std::out_of_range("degree beyond the computed range");
        }
        return piece(j).ideal.orthogonal_complement();
    }
    std::vector<DualElement> inverse_component(int j) const {
        std::vector<DualElement> out;
        if (j > computed_degree() && artinian_) return out;
        const auto& idx = piece(j).index;
        for (const auto& v : inverse_vectors(j)) out.push_back(from_vector<F, FormKind::dual>(field_, v, idx));
        return out;
    }

    // Coordinates of a member of (I^perp)_{-j} in the basis inverse_vectors(j).
    Vec<F> inverse_coordinates(int j, const Vec<F>& v) const {
        const auto& fr = piece(j).ideal.free_columns();
        Vec<F> out;
        out.reserve(fr.size());
        for (std::size_t f : fr) out.push_back(v[f]);
        return out;
    }

    // x_k : (I^perp)_{-j} -> (I^perp)_{-(j-1)} by contraction.
    Matrix<F> contraction_matrix(std::size_t k, int j) const {
        auto src = inverse_vectors(j);
        const std::size_t tgt = j >= 1 ? hilbert(j - 1) : 0;
        Matrix<F> m(field_, tgt, src.size());
        if (tgt == 0) return m;
        const auto& hi = piece(j).index;
        const auto& lo = piece(j - 1).index;
        for (std::size_t c = 0; c < src.size(); ++c) {
            Vec<F> w(lo.size(), field_.zero());
            for (std::size_t b = 0; b < hi.size(); ++b) {
                if (field_.is_zero(src[c][b]) || hi[b][k] == 0) continue;
                w[lo.index(hi[b] / Monomial::var(n_, k))] = src[c][b];
            }
            auto coords = inverse_coordinates(j - 1, w);
            for (std::size_t r = 0; r < tgt; ++r) m(r, c) = coords[r];
        }
        return m;
    }

    Matrix<F> dual_action_matrix(const Permutation& sigma, int j) const {
        auto src = inverse_vectors(j);
        const auto& idx = piece(j).index;
        Matrix<F> m(field_, src.size(), src.size());
        for (std::size_t c = 0; c < src.size(); ++c) {
            Vec<F> w(idx.size(), field_.zero());
            for (std::size_t b = 0; b < idx.size(); ++b)
                if (!field_.is_zero(src[c][b])) w[idx.index(permute(sigma, idx[b]))] = src[c][b];
            auto coords = inverse_coordinates(j, w);
            for (std::size_t r = 0; r < src.size(); ++r) m(r, c) = coords[r];
        }
        return m;
    }

    // I^perp as a module in degrees -top..0.
    GradedModule<F> dual_module() const {
        require_artinian();
        std::vector<std::size_t> dims;
        for (int a = -top_; a <= 0; ++a) dims.push_back(hilbert(-a));
        GradedModule<F> M(field_, n_, -top_, dims);
        for (int a = -top_; a < 0; ++a)
            for (std::size_t k = 0; k < n_; ++k) M.x(k, a) = contraction_matrix(k, -a);
        const QuotientAlgebra* self = this;
        M.set_action([self](const Permutation& s, int a) { return self->dual_action_matrix(s, -a); });
        return M;
    }

    // dim Soc(A)_i
    std::size_t socle_dim(int i) const {
        require_artinian();
        const std::size_t src = hilbert(i);
        if (src == 0) return 0;
        const std::size_t tgt = hilbert(i + 1);
        if (tgt == 0) return src;
        RowSpace<F> rs(field_, src);
        for (std::size_t k = 0; k < n_ && !rs.full(); ++k) {
            auto m = mult_matrix(k, i);
            for (std::size_t r = 0; r < m.rows() && !rs.full(); ++r) rs.insert(m.row(r));
        }
        return src - rs.rank();
    }

    void require_artinian() const {
        if (!artinian_)
            throw std::runtime_error("possibly non-artinian: A_" + std::to_string(cap_) + " != 0 at the degree cap");
    }

private:
    struct Piece {
        MonomialIndex index;
        RowSpace<F> ideal;
        std::vector<int> pos;  // column -> position in the A_j basis, or -1
    };

    const Piece& piece(int j) const {
        if (j < 0 || j >= static_cast<int>(pieces_.size())) throw std::out_of_range("graded piece not computed");
        return pieces_[j];
    }

    // I_{j+1} = R_1 * I_j
    RowSpace<F> raise(const Piece& lower, const MonomialIndex& upper) const {
        RowSpace<F> rs(field_, upper.size());
        const auto& lo = lower.index;
        std::vector<std::vector<std::size_t>> shift(lo.size(), std::vector<std::size_t>(n_));
        for (std::size_t a = 0; a < lo.size(); ++a)
            for (std::size_t k = 0; k < n_; ++k) shift[a][k] = upper.index(lo[a] * Monomial::var(n_, k));
        for (const auto& row : lower.ideal.basis()) {
            for (std::size_t k = 0; k < n_; ++k) {
                Vec<F> v(upper.size(), field_.zero());
                for (std::size_t a = 0; a < lo.size(); ++a)
                    if (!field_.is_zero(row[a])) v[shift[a][k]] = row[a];
                rs.insert(std::move(v));
                if (rs.full()) return rs;
            }
        }
        return rs;
    }

    F field_{};
    std::size_t n_ = 0;
    int d_ = 0;
    int cap_ = 0;
    bool artinian_ = false;
    int top_ = 0;
    std::vector<Piece> pieces_;
};

struct SocleSummary {
    std::vector<std::size_t> hilbert;
    std::vector<std::size_t> socle;  // e_i
    int t = 0;                       // initial degree of I
    int s = 0;                       // top socle degree of A
    bool st_bound = true;            // t <= s + 1
};

template <class F>
SocleSummary hilbert_and_socle(const QuotientAlgebra<F>& A) {
    A.require_artinian();
    SocleSummary out;
    out.hilbert = A.hilbert_function();
    while (!out.hilbert.empty() && out.hilbert.back() == 0) out.hilbert.pop_back();
    for (int i = 0; i <= A.top_degree(); ++i) out.socle.push_back(A.socle_dim(i));
    out.t = -1;
    for (int j = 0; j <= A.computed_degree(); ++j)
        if (A.ideal_piece(j).rank() > 0) {
            out.t = j;
            break;
        }
    if (out.t < 0) out.t = A.computed_degree() + 1;
    out.s = 0;
    for (int i = 0; i < static_cast<int>(out.socle.size()); ++i)
        if (out.socle[i] > 0) out.s = i;
    out.st_bound = out.t <= out.s + 1;
    return out;
}

// Tuples (l_1..l_a) of linear forms with sum l_k o F_k = 0. Coordinates are
// indexed k*n + i for the coefficient of x_{i+1} in l_k.
template <class F>
struct LSpace {
    std::size_t n = 0;
    std::size_t a = 0;
    std::vector<Vec<F>> basis;
    std::size_t image_rank = 0;  // dim R_1 o span(F)
    std::size_t dim() const { return basis.size(); }
};

template <class F>
LSpace<F> linear_relations(const F& field, const std::vector<DualElement>& Fs) {
    if (Fs.empty()) throw std::invalid_argument("linear_relations needs at least one dual element");
    const std::size_t n = Fs.front().nvars();
    const int d = -Fs.front().degree();
    for (const auto& g : Fs)
        if (g.nvars() != n || g.is_zero() || -g.degree() != d) throw std::invalid_argument("dual elements must be nonzero of one degree");
    if (d < 1) throw std::invalid_argument("dual elements must have negative degree");
    MonomialIndex top(n, d), low(n, d - 1);
    {
        RowSpace<F> check(field, top.size());
        for (const auto& g : Fs)
            if (!check.insert(to_vector(field, g, top))) throw std::invalid_argument("dual elements are linearly dependent");
    }
    const std::size_t a = Fs.size();
    // rows: dual monomials of degree d-1; columns: (i, k)
    Matrix<F> m(field, low.size(), n * a);
    for (std::size_t k = 0; k < a; ++k)
        for (const auto& [mono, c] : Fs[k].terms())
            for (std::size_t i = 0; i < n; ++i) {
                if (mono[i] == 0) continue;
                m(low.index(mono / Monomial::var(n, i)), k * n + i) = field.from(c);
            }
    LSpace<F> L;
    L.n = n;
    L.a = a;
    L.basis = kernel(field, m);
    L.image_rank = n * a - L.basis.size();
    return L;
}

// Span of every component l_k of every basis tuple, as vectors in R_1.
template <class F>
RowSpace<F> component_span(const F& field, const LSpace<F>& L) {
    RowSpace<F> rs(field, L.n);
    for (const auto& v : L.basis)
        for (std::size_t k = 0; k < L.a; ++k) rs.insert(Vec<F>(v.begin() + k * L.n, v.begin() + (k + 1) * L.n));
    return rs;
}

struct Classification {
    SocleSummary summary;
    bool narrow = false;
    bool extremely_narrow = false;
    std::optional<std::vector<Rational>> witness;  // common linear form, when L != 0
    std::size_t L_dim = 0;
    bool compressed = false;
    bool permissible = false;
    bool gorenstein = false;
};

template <class F>
Classification classify(const QuotientAlgebra<F>& A) {
    const F& field = A.field();
    Classification c;
    c.summary = hilbert_and_socle(A);
    const auto& S = c.summary;
    const std::size_t n = A.nvars();
    const int s = S.s, t = S.t;
    c.narrow = t >= s;
    auto e = [&](int i) -> std::size_t { return i >= 0 && i < static_cast<int>(S.socle.size()) ? S.socle[i] : 0; };
    auto R = [&](int i) -> std::size_t { return dim_R(n, i); };

    const int d = A.generator_degree();
    if (s == d && t == d) {
        auto Fs = A.inverse_component(d);
        if (!Fs.empty()) {
            auto L = linear_relations(field, Fs);
            c.L_dim = L.dim();
            auto span = component_span(field, L);
            if (span.rank() <= 1) {
                c.extremely_narrow = true;
                if (span.rank() == 1) {
                    std::vector<Rational> w;
                    for (const auto& x : span.basis().front()) w.push_back(field.to_rational(x));
                    c.witness = w;
                }
            }
        }
    }

    c.compressed = true;
    for (int i = 0; i <= s; ++i) {
        std::size_t bound = 0;
        for (int j = i; j <= s; ++j) bound += e(j) * R(j - i);
        bound = std::min(bound, R(i));
        if (A.hilbert(i) != bound) c.compressed = false;
    }

    bool ok = e(s) > 0;
    for (int i = 0; i < t - 1; ++i)
        if (e(i) != 0) ok = false;
    std::size_t lhs = 0;
    for (int i = t; i <= s; ++i) lhs += e(i) * R(i - t);
    if (!(lhs < R(t))) ok = false;
    if (t >= 1) {
        std::size_t sum = 0;
        for (int i = t; i <= s; ++i) sum += e(i) * R(i - (t - 1));
        const std::size_t expect = R(t - 1) > sum ? R(t - 1) - sum : 0;
        if (e(t - 1) != expect) ok = false;
    }
    c.permissible = ok;

    std::size_t total = 0;
    for (auto x : S.socle) total += x;
    c.gorenstein = total == 1;
    return c;
}

}  // namespace psilab
