#include "psilab/characters.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace psilab {

ClassFunction::ClassFunction(int n_) : n(n_) {
    for (const auto& mu : enumerate_partitions(n)) values.emplace(mu, Rational(0));
}

Rational ClassFunction::degree() const {
    return values.at(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
    if (o.n != n) throw std::invalid_argument("class functions of different groups");
    for (auto& [mu, v] : values) v += o.values.at(mu);
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
    if (o.n != n) throw std::invalid_argument("class functions of different groups");
    for (auto& [mu, v] : values) v -= o.values.at(mu);
    return *this;
}

ClassFunction ClassFunction::scaled(const Rational& c) const {
    ClassFunction r = *this;
    for (auto& [mu, v] : r.values) v *= c;
    return r;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
    if (a.n != b.n) throw std::invalid_argument("class functions of different groups");
    ClassFunction r = a;
    for (auto& [mu, v] : r.values) v *= b.values.at(mu);
    return r;
}

std::string ClassFunction::str() const {
    std::string s;
    for (const auto& [mu, v] : values) {
        if (!s.empty()) s += ", ";
        s += mu.str() + ":" + to_string(v);
    }
    return "{" + s + "}";
}

long SpechtDecomposition::get(const Partition& lambda) const {
    auto it = mult.find(lambda);
    return it == mult.end() ? 0 : it->second;
}

void SpechtDecomposition::add(const Partition& lambda, long m) {
    if (lambda.size() != n) throw std::invalid_argument("Specht index " + lambda.str() + " is not a partition of " + std::to_string(n));
    long& v = mult[lambda];
    v += m;
    if (v == 0) mult.erase(lambda);
}

void SpechtDecomposition::add_sequence(const std::vector<int>& seq, long m) {
    if (!Partition::is_partition(seq)) return;
    Partition p(seq);
    if (p.size() != n) return;
    add(p, m);
}

bool SpechtDecomposition::genuine() const {
    return std::all_of(mult.begin(), mult.end(), [](const auto& kv) { return kv.second >= 0; });
}

long SpechtDecomposition::dimension() const {
    long s = 0;
    for (const auto& [lam, m] : mult) s += m * dim_specht(lam);
    return s;
}

ClassFunction SpechtDecomposition::character() const {
    ClassFunction c(n);
    for (const auto& [lam, m] : mult) c += irreducible_character(lam).scaled(m);
    return c;
}

std::string SpechtDecomposition::str() const {
    if (mult.empty()) return "0";
    std::string s;
    // largest partitions first, as usually written
    for (auto it = mult.rbegin(); it != mult.rend(); ++it) {
        if (!s.empty()) s += " + ";
        if (it->second != 1) s += std::to_string(it->second) + "*";
        s += "Sp" + it->first.str();
    }
    return s;
}

SpechtDecomposition operator-(const SpechtDecomposition& a, const SpechtDecomposition& b) {
    SpechtDecomposition r = a;
    for (const auto& [lam, m] : b.mult) r.add(lam, -m);
    return r;
}

bool operator==(const SpechtDecomposition& a, const SpechtDecomposition& b) {
    return a.n == b.n && a.mult == b.mult;
}

Rational centralizer_order(const Partition& mu) {
    mpz_class z = 1;
    std::map<int, int> count;
    for (int p : mu.parts()) ++count[p];
    for (const auto& [k, m] : count) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
        z *= f * pw;
    }
    return Rational(z);
}

Rational class_size(const Partition& mu) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(mu.size()));
    return Rational(f) / centralizer_order(mu);
}

namespace {

using Key = std::pair<std::vector<int>, std::vector<int>>;

// lam a partition, mu the cycle lengths still to be removed (largest first)
long mn(const std::vector<int>& lam, const std::vector<int>& mu, std::map<Key, long>& memo) {
    if (mu.empty()) return lam.empty() ? 1 : 0;
    Key key{lam, mu};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int r = mu.front();
    const std::vector<int> rest(mu.begin() + 1, mu.end());
    const int L = static_cast<int>(lam.size());
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = lam[i] + (L - 1 - i);
    std::set<int> beads(beta.begin(), beta.end());

    long total = 0;
    for (int i = 0; i < L; ++i) {
        const int b = beta[i], nb = b - r;
        if (nb < 0 || beads.count(nb)) continue;
        int between = 0;
        for (int c : beta)
            if (c > nb && c < b) ++between;
        std::vector<int> nbeta = beta;
        nbeta[i] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        std::vector<int> nlam;
        for (int k = 0; k < L; ++k) {
            const int part = nbeta[k] - (L - 1 - k);
            if (part > 0) nlam.push_back(part);
        }
        const long v = mn(nlam, rest, memo);
        total += between % 2 ? -v : v;
    }
    memo.emplace(std::move(key), total);
    return total;
}

std::map<Key, long>& mn_cache() {
    thread_local std::map<Key, long> memo;
    return memo;
}

}  // namespace

long irreducible_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("character of " + lambda.str() + " at class " + mu.str() + ": sizes differ");
    return mn(lambda.parts(), mu.parts(), mn_cache());
}

ClassFunction irreducible_character(const Partition& lambda) {
    ClassFunction c(lambda.size());
    for (auto& [mu, v] : c.values) v = irreducible_character(lambda, mu);
    return c;
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.n != b.n) throw std::invalid_argument("class functions of different groups");
    Rational s = 0;
    for (const auto& [mu, v] : a.values) s += v * b.values.at(mu) / centralizer_order(mu);
    return s;
}

SpechtDecomposition virtual_decompose(const ClassFunction& chi) {
    SpechtDecomposition d;
    d.n = chi.n;
    for (const auto& lam : enumerate_partitions(chi.n)) {
        const Rational m = inner_product(chi, irreducible_character(lam));
        if (m.get_den() != 1)
            throw NotACharacter("not a character: multiplicity of Sp" + lam.str() + " is " + to_string(m));
        if (sgn(m) != 0) d.add(lam, m.get_num().get_si());
    }
    return d;
}

SpechtDecomposition specht_decompose(const ClassFunction& chi) {
    auto d = virtual_decompose(chi);
    for (const auto& [lam, m] : d.mult)
        if (m < 0) throw NotACharacter("not a character: multiplicity of Sp" + lam.str() + " is " + std::to_string(m));
    return d;
}

long dim_specht(const Partition& lambda) {
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(lambda.size()));
    mpz_class den = 1;
    const auto& p = lambda.parts();
    for (std::size_t r = 0; r < p.size(); ++r)
        for (int c = 0; c < p[r]; ++c) {
            int below = 0;
            for (std::size_t r2 = r + 1; r2 < p.size() && p[r2] > c; ++r2) ++below;
            den *= p[r] - c + below;
        }
    mpz_class q = num / den;
    return q.get_si();
}

ClassFunction trivial_character(int n) {
    ClassFunction c(n);
    for (auto& [mu, v] : c.values) v = 1;
    return c;
}

ClassFunction sign_character(int n) {
    ClassFunction c(n);
    for (auto& [mu, v] : c.values) v = (n - mu.length()) % 2 ? -1 : 1;
    return c;
}

ClassFunction permutation_character(int n) {
    ClassFunction c(n);
    for (auto& [mu, v] : c.values) v = power_sum_at(mu, 1);
    return c;
}

ClassFunction exterior_power_character(int n, int i) {
    // prod over cycles of (1 - (-t)^c), coefficient of t^i
    ClassFunction c(n);
    for (auto& [mu, v] : c.values) {
        std::vector<long> poly{1};
        for (int len : mu.parts()) {
            std::vector<long> next(poly.size() + len, 0);
            const long lead = len % 2 ? 1 : -1;  // -(-1)^len
            for (std::size_t k = 0; k < poly.size(); ++k) {
                next[k] += poly[k];
                next[k + len] += lead * poly[k];
            }
            poly = std::move(next);
        }
        v = i >= 0 && static_cast<std::size_t>(i) < poly.size() ? poly[i] : 0;
    }
    return c;
}

ClassFunction standard_exterior_character(int n, int i) {
    // Lambda^i k^n = Lambda^i Sp_(n-1,1) + Lambda^{i-1} Sp_(n-1,1)
    ClassFunction acc(n);
    for (int k = 0; k <= i; ++k) {
        auto term = exterior_power_character(n, i - k);
        acc += (k % 2 ? term.scaled(-1) : term);
    }
    return acc;
}

long power_sum_at(const Partition& mu, int k) {
    long s = 0;
    for (int c : mu.parts())
        if (k % c == 0) s += c;
    return s;
}

long schur_dimension(const Partition& lambda, int n) {
    mpq_class v = 1;
    const auto& p = lambda.parts();
    for (std::size_t r = 0; r < p.size(); ++r)
        for (int c = 0; c < p[r]; ++c) {
            int below = 0;
            for (std::size_t r2 = r + 1; r2 < p.size() && p[r2] > c; ++r2) ++below;
            v *= mpq_class(n + c - static_cast<int>(r), p[r] - c + below);
        }
    v.canonicalize();
    return v.get_num().get_si();
}

ClassFunction schur_character(const Partition& lambda, int n) {
    ClassFunction c(n);
    const int m = lambda.size();
    const auto rhos = enumerate_partitions(m);
    std::vector<Rational> coef;
    for (const auto& rho : rhos) coef.push_back(Rational(irreducible_character(lambda, rho)) / centralizer_order(rho));
    for (auto& [mu, v] : c.values) {
        Rational s = 0;
        for (std::size_t r = 0; r < rhos.size(); ++r) {
            if (sgn(coef[r]) == 0) continue;
            Rational p = 1;
            for (int k : rhos[r].parts()) p *= power_sum_at(mu, k);
            s += coef[r] * p;
        }
        v = s;
    }
    return c;
}

std::optional<Partition> padded(const Partition& nu, int n) {
    if (nu.part(0) + nu.size() > n) return std::nullopt;
    std::vector<int> p{n - nu.size()};
    p.insert(p.end(), nu.parts().begin(), nu.parts().end());
    return Partition(p);
}

long restriction_multiplicity(const Partition& lambda, const Partition& nu_n) {
    const int n = nu_n.size();
    if (n <= 0) throw std::invalid_argument("restriction target must be a partition of n >= 1");
    const Rational m = inner_product(schur_character(lambda, n), irreducible_character(nu_n));
    if (m.get_den() != 1 || sgn(m) < 0) throw NotACharacter("restriction multiplicity " + to_string(m));
    return m.get_num().get_si();
}

SpechtDecomposition restriction_decomposition(const Partition& lambda, int n) {
    return specht_decompose(schur_character(lambda, n));
}

std::vector<Partition> remove_add_box(const Partition& lambda) {
    std::set<Partition> out;
    const auto& p = lambda.parts();
    for (std::size_t r = 0; r < p.size(); ++r) {
        if (r + 1 < p.size() && p[r + 1] == p[r]) continue;  // not a removable corner
        std::vector<int> q = p;
        --q[r];
        if (q[r] == 0) q.pop_back();
        for (std::size_t s = 0; s <= q.size(); ++s) {
            std::vector<int> t = q;
            if (s == t.size())
                t.push_back(1);
            else
                ++t[s];
            if (Partition::is_partition(t)) out.insert(Partition(t));
        }
    }
    return {out.begin(), out.end()};
}

SpechtDecomposition tensor_with_standard(const Partition& lambda) {
    SpechtDecomposition d;
    d.n = lambda.size();
    for (const auto& mu : remove_add_box(lambda))
        if (mu != lambda) d.add(mu, 1);
    if (lambda.distinct_parts() > 1) d.add(lambda, lambda.distinct_parts() - 1);
    return d;
}

Partition hook(int a, int i) {
    std::vector<int> p{a};
    for (int k = 0; k < i; ++k) p.push_back(1);
    return Partition(p);
}

}  // namespace psilab
