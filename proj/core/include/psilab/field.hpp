#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace psilab {

using Rational = mpq_class;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

bool is_prime(std::uint64_t p);

// Rationals, exact; elements are GMP fractions kept canonical.
class RationalField {
public:
    using Elem = mpq_class;

    static constexpr bool is_exact_rational = true;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long v) const { return Elem(v); }
    Elem from(const Rational& q) const { return q; }
    Rational to_rational(const Elem& a) const { return a; }

    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (sgn(a) == 0) throw std::domain_error("inverse of zero");
        return 1 / a;
    }
    // acc -= c * b
    void sub_mul(Elem& acc, const Elem& c, const Elem& b) const { acc -= c * b; }

    std::string name() const { return "QQ"; }
    std::string format(const Elem& a) const { return to_string(a); }
};

// Residues modulo a prime below 2^32.
class PrimeField {
public:
    using Elem = std::uint64_t;

    static constexpr bool is_exact_rational = false;

    // GF(2); only meant for default-constructed containers
    PrimeField() = default;
    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 2 || p >= (1ULL << 32) || !is_prime(p))
            throw ConfigError("prime field needs a prime below 2^32, got " + std::to_string(p));
    }

    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long v) const {
        long r = v % static_cast<long>(p_);
        return static_cast<Elem>(r < 0 ? r + static_cast<long>(p_) : r);
    }
    Elem from(const Rational& q) const;
    Rational to_rational(const Elem& a) const;

    bool is_zero(Elem a) const { return a == 0; }
    bool equal(Elem a, Elem b) const { return a == b; }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const;
    void sub_mul(Elem& acc, Elem c, Elem b) const { acc = sub(acc, mul(c, b)); }

    std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
    std::string format(Elem a) const { return std::to_string(a); }

private:
    std::uint64_t p_ = 2;
};

// Runtime field selection. "q" or "fp:<p>".
struct FieldSpec {
    enum class Kind { rational, prime };
    Kind kind = Kind::rational;
    std::uint64_t p = 0;

    static FieldSpec parse(const std::string& text);
    std::string str() const;
    bool is_rational() const { return kind == Kind::rational; }
};

// Checks the prime-field guard p > n*d.
void check_field_for(const FieldSpec& spec, int n, int d);

template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
    if (spec.kind == FieldSpec::Kind::rational) return fn(RationalField{});
    return fn(PrimeField{spec.p});
}

}  // namespace psilab
