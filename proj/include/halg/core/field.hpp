#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "halg/core/error.hpp"

namespace halg {

inline bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Residues modulo a prime p < 2^31, stored in [0, p).
class PrimeField {
public:
    using Elem = std::uint32_t;

    explicit PrimeField(std::uint64_t p = 32003) : p_(static_cast<std::uint32_t>(p))
    {
        if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
            throw DomainError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
    }

    std::uint32_t characteristic() const { return p_; }
    std::string name() const { return "prime " + std::to_string(p_); }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(std::int64_t v) const
    {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<Elem>(r);
    }
    Elem from_ratio(const mpz_class& num, const mpz_class& den) const
    {
        if (den == 0) throw DomainError("zero denominator");
        mpz_class n = num % p_, d = den % p_;
        if (n < 0) n += p_;
        if (d < 0) d += p_;
        return mul(static_cast<Elem>(n.get_ui()), inv(static_cast<Elem>(d.get_ui())));
    }

    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1; }
    bool equal(Elem a, Elem b) const { return a == b; }

    Elem add(Elem a, Elem b) const
    {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const
    {
        return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    Elem inv(Elem a) const
    {
        if (a == 0) throw DomainError("inverse of zero");
        std::int64_t t = 0, nt = 1, r = p_, nr = a;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (t < 0) t += p_;
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    /// Symmetric representative, so -1 prints as -1 rather than p-1.
    std::int64_t signed_value(Elem a) const
    {
        return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
    }
    std::string to_string(Elem a) const { return std::to_string(signed_value(a)); }

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

/// Exact rationals backed by GMP.
class RationalField {
public:
    using Elem = mpq_class;

    std::uint32_t characteristic() const { return 0; }
    std::string name() const { return "rational"; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(std::int64_t v) const { return Elem(mpz_class(static_cast<long>(v))); }
    Elem from_ratio(const mpz_class& num, const mpz_class& den) const
    {
        if (den == 0) throw DomainError("zero denominator");
        Elem r(num, den);
        r.canonicalize();
        return r;
    }

    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const
    {
        if (sgn(a) == 0) throw DomainError("inverse of zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    std::string to_string(const Elem& a) const { return a.get_str(); }

    bool operator==(const RationalField&) const = default;
};

}  // namespace halg
