#include "psilab/field.hpp"

#include <cctype>

namespace psilab {

Rational parse_rational(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty()) throw std::invalid_argument("empty rational");
    if (t[0] == '+') t.erase(0, 1);
    auto slash = t.find('/');
    auto digits_ok = [](const std::string& u, bool allow_sign) {
        if (u.empty()) return false;
        std::size_t i = (allow_sign && u[0] == '-') ? 1 : 0;
        if (i == u.size()) return false;
        for (; i < u.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(u[i]))) return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!digits_ok(t, true)) throw std::invalid_argument("bad rational: " + s);
        return Rational(mpz_class(t));
    }
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) throw std::invalid_argument("bad rational: " + s);
    mpz_class dz(den);
    if (dz == 0) throw std::invalid_argument("zero denominator: " + s);
    Rational q(mpz_class(num), dz);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        if (p == q) return true;
        if (p % q == 0) return false;
    }
    for (std::uint64_t q = 17; q * q <= p; q += 2)
        if (p % q == 0) return false;
    return true;
}

PrimeField::Elem PrimeField::from(const Rational& q) const {
    mpz_class pz(static_cast<unsigned long>(p_));
    mpz_class num = q.get_num() % pz;
    if (num < 0) num += pz;
    mpz_class den = q.get_den() % pz;
    if (den == 0) throw ConfigError("denominator vanishes modulo " + std::to_string(p_));
    return mul(num.get_ui(), inv(den.get_ui()));
}

Rational PrimeField::to_rational(const Elem& a) const {
    // symmetric representative
    if (a > p_ / 2) return Rational(-static_cast<long>(p_ - a));
    return Rational(static_cast<long>(a));
}

PrimeField::Elem PrimeField::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    Elem result = 1, base = a % p_, e = p_ - 2;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FieldSpec FieldSpec::parse(const std::string& text) {
    FieldSpec s;
    if (text == "q" || text == "Q" || text == "qq") return s;
    if (text.rfind("fp:", 0) == 0) {
        std::string num = text.substr(3);
        if (num.empty()) throw ConfigError("missing prime in '" + text + "'");
        for (char c : num)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ConfigError("bad prime in '" + text + "'");
        s.kind = Kind::prime;
        s.p = std::stoull(num);
        if (!is_prime(s.p)) throw ConfigError(num + " is not prime");
        if (s.p >= (1ULL << 32)) throw ConfigError("prime must be below 2^32");
        return s;
    }
    throw ConfigError("unknown field '" + text + "' (use q or fp:<p>)");
}

std::string FieldSpec::str() const { return kind == Kind::rational ? "q" : "fp:" + std::to_string(p); }

void check_field_for(const FieldSpec& spec, int n, int d) {
    if (spec.kind != FieldSpec::Kind::prime) return;
    if (spec.p <= static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(d))
        throw ConfigError("prime " + std::to_string(spec.p) + " must exceed n*d = " + std::to_string(n * d));
}

}  // namespace psilab
