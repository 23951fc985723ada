#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "halg/core/error.hpp"

namespace halg {

/// Upper bound on the number of ring variables. Exponents are packed inline.
inline constexpr std::size_t kMaxVariables = 8;

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : nvars_(checked_nvars(nvars)) {}
    Monomial(std::initializer_list<int> exps) : Monomial(std::vector<int>(exps)) {}
    explicit Monomial(std::span<const int> exps) : nvars_(checked_nvars(exps.size()))
    {
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] < 0 || exps[i] > 0xFFFF) throw DomainError("exponent out of range");
            exp_[i] = static_cast<std::uint16_t>(exps[i]);
            degree_ += exp_[i];
        }
    }
    explicit Monomial(const std::vector<int>& exps) : Monomial(std::span<const int>(exps)) {}

    static Monomial variable(std::size_t nvars, std::size_t var, int power = 1)
    {
        Monomial m(nvars);
        if (var >= nvars) throw StructuralError("variable index out of range");
        m.exp_[var] = static_cast<std::uint16_t>(power);
        m.degree_ = static_cast<std::uint32_t>(power);
        return m;
    }

    std::size_t size() const { return nvars_; }
    int degree() const { return static_cast<int>(degree_); }
    int operator[](std::size_t i) const { return exp_[i]; }
    bool is_one() const { return degree_ == 0; }

    std::vector<int> exponents() const { return {exp_.begin(), exp_.begin() + nvars_}; }

    friend Monomial operator*(const Monomial& a, const Monomial& b)
    {
        same_length(a, b);
        Monomial r = a;
        for (std::size_t i = 0; i < a.nvars_; ++i) r.exp_[i] = static_cast<std::uint16_t>(a.exp_[i] + b.exp_[i]);
        r.degree_ = a.degree_ + b.degree_;
        return r;
    }

    /// True iff a divides b.
    friend bool divides(const Monomial& a, const Monomial& b)
    {
        if (a.degree_ > b.degree_) return false;
        for (std::size_t i = 0; i < a.nvars_; ++i)
            if (a.exp_[i] > b.exp_[i]) return false;
        return true;
    }

    /// b / a; requires divides(a, b).
    friend Monomial quotient(const Monomial& b, const Monomial& a)
    {
        Monomial r = b;
        for (std::size_t i = 0; i < a.nvars_; ++i) r.exp_[i] = static_cast<std::uint16_t>(b.exp_[i] - a.exp_[i]);
        r.degree_ = b.degree_ - a.degree_;
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b)
    {
        same_length(a, b);
        Monomial r = a;
        r.degree_ = 0;
        for (std::size_t i = 0; i < a.nvars_; ++i) {
            r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
            r.degree_ += r.exp_[i];
        }
        return r;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b)
    {
        same_length(a, b);
        Monomial r = a;
        r.degree_ = 0;
        for (std::size_t i = 0; i < a.nvars_; ++i) {
            r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
            r.degree_ += r.exp_[i];
        }
        return r;
    }

    friend bool coprime(const Monomial& a, const Monomial& b)
    {
        for (std::size_t i = 0; i < a.nvars_; ++i)
            if (a.exp_[i] != 0 && b.exp_[i] != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b)
    {
        return a.nvars_ == b.nvars_ && a.exp_ == b.exp_;
    }

    /// Plain lexicographic comparison of exponent arrays; only for use as a map key.
    friend bool key_less(const Monomial& a, const Monomial& b) { return a.exp_ < b.exp_; }

    std::size_t hash() const
    {
        std::size_t h = nvars_;
        for (std::size_t i = 0; i < nvars_; ++i) h = h * 1000003u + exp_[i];
        return h;
    }

    std::string to_string(const std::vector<std::string>& names) const
    {
        std::string s;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (exp_[i] == 0) continue;
            if (!s.empty()) s += '*';
            s += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
            if (exp_[i] > 1) s += '^' + std::to_string(exp_[i]);
        }
        return s.empty() ? "1" : s;
    }

private:
    static std::uint8_t checked_nvars(std::size_t n)
    {
        if (n > kMaxVariables) throw DomainError("at most " + std::to_string(kMaxVariables) + " variables are supported");
        return static_cast<std::uint8_t>(n);
    }
    static void same_length(const Monomial& a, const Monomial& b)
    {
        if (a.nvars_ != b.nvars_) throw StructuralError("monomials of different exponent lengths");
    }

    std::array<std::uint16_t, kMaxVariables> exp_{};
    std::uint32_t degree_ = 0;
    std::uint8_t nvars_ = 0;
};

enum class TermOrder { degrevlex, lex };

inline std::string to_string(TermOrder o) { return o == TermOrder::lex ? "lex" : "degrevlex"; }

/// Global monomial orders. degrevlex: degree first, then the last differing
/// exponent, a smaller last-variable exponent making the monomial larger.
inline std::strong_ordering compare(TermOrder order, const Monomial& a, const Monomial& b)
{
    if (a.size() != b.size()) throw StructuralError("monomials of different exponent lengths");
    const std::size_t n = a.size();
    if (order == TermOrder::degrevlex) {
        if (a.degree() != b.degree()) return a.degree() <=> b.degree();
        for (std::size_t i = n; i-- > 0;)
            if (a[i] != b[i]) return b[i] <=> a[i];
        return std::strong_ordering::equal;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// All monomials of total degree d in n variables, in decreasing degrevlex order.
inline std::vector<Monomial> monomials_of_degree(std::size_t n, int d)
{
    std::vector<Monomial> out;
    if (d < 0) return out;
    if (n == 0) {
        if (d == 0) out.emplace_back(0);
        return out;
    }
    std::vector<int> e(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == n) {
            e[i] = left;
            out.emplace_back(e);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
    };
    rec(0, d);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return compare(TermOrder::degrevlex, a, b) == std::strong_ordering::greater;
    });
    return out;
}

}  // namespace halg
