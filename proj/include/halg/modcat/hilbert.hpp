#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "halg/core/error.hpp"
#include "halg/core/monomial.hpp"

namespace halg {

/// Sentinel for dim(0) and for lengths of modules of positive dimension.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();
inline constexpr std::int64_t kInfiniteLength = -1;

/// Integer Laurent polynomial Σ c_k t^k, k >= low.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(int exponent, std::int64_t c = 1)
    {
        LaurentPoly p;
        p.low_ = exponent;
        p.c_ = {c};
        p.trim();
        return p;
    }
    static LaurentPoly one() { return monomial(0, 1); }

    bool is_zero() const { return c_.empty(); }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
    std::int64_t coeff(int k) const
    {
        if (c_.empty() || k < low_ || k > high()) return 0;
        return c_[static_cast<std::size_t>(k - low_)];
    }
    std::int64_t at_one() const
    {
        std::int64_t s = 0;
        for (auto v : c_) s += v;
        return s;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b)
    {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        LaurentPoly r;
        r.low_ = std::min(a.low_, b.low_);
        int hi = std::max(a.high(), b.high());
        r.c_.assign(static_cast<std::size_t>(hi - r.low_ + 1), 0);
        for (int k = a.low_; k <= a.high(); ++k) r.c_[static_cast<std::size_t>(k - r.low_)] += a.coeff(k);
        for (int k = b.low_; k <= b.high(); ++k) r.c_[static_cast<std::size_t>(k - r.low_)] += b.coeff(k);
        r.trim();
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a) { return a * -1; }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
    friend LaurentPoly operator*(const LaurentPoly& a, std::int64_t s)
    {
        if (s == 0) return {};
        LaurentPoly r = a;
        for (auto& v : r.c_) v *= s;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        LaurentPoly r;
        r.low_ = a.low_ + b.low_;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }
    LaurentPoly shifted(int k) const
    {
        LaurentPoly r = *this;
        if (!r.is_zero()) r.low_ += k;
        return r;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.low_ == b.low_ && a.c_ == b.c_; }

    /// Exact division by (1 - t); nullopt when not divisible.
    std::optional<LaurentPoly> divide_one_minus_t() const
    {
        if (is_zero()) return LaurentPoly();
        if (at_one() != 0) return std::nullopt;
        // q(1 - t) = p: q_k = p_low + ... + p_k
        LaurentPoly q;
        q.low_ = low_;
        std::int64_t acc = 0;
        for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
            acc += c_[i];
            q.c_.push_back(acc);
        }
        q.trim();
        return q;
    }

    std::string to_string() const
    {
        if (is_zero()) return "0";
        std::string s;
        for (int k = low_; k <= high(); ++k) {
            auto v = coeff(k);
            if (v == 0) continue;
            if (!s.empty()) s += v < 0 ? " - " : " + ";
            else if (v < 0) s += "-";
            auto a = v < 0 ? -v : v;
            if (k == 0) s += std::to_string(a);
            else {
                if (a != 1) s += std::to_string(a) + "*";
                s += "t";
                if (k != 1) s += "^" + std::to_string(k);
            }
        }
        return s;
    }

private:
    void trim()
    {
        std::size_t b = 0;
        while (b < c_.size() && c_[b] == 0) ++b;
        if (b == c_.size()) {
            c_.clear();
            low_ = 0;
            return;
        }
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(b));
        low_ += static_cast<int>(b);
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    int low_ = 0;
    std::vector<std::int64_t> c_;
};

/// Hilbert series numerator / (1 - t)^nvars of a finitely generated graded module.
class HilbertData {
public:
    HilbertData() = default;
    HilbertData(LaurentPoly numerator, int nvars) : num_(std::move(numerator)), nvars_(nvars) {}

    const LaurentPoly& numerator() const { return num_; }
    int denominator_exponent() const { return nvars_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Pole order at t = 1; kMinusInfinity for the zero module.
    int dimension() const
    {
        if (num_.is_zero()) return kMinusInfinity;
        int k = 0;
        LaurentPoly p = num_;
        while (k < nvars_) {
            auto q = p.divide_one_minus_t();
            if (!q) break;
            p = *q;
            ++k;
        }
        return nvars_ - k;
    }

    /// Numerator after cancelling every (1 - t) factor; series = reduced / (1 - t)^dim.
    LaurentPoly reduced_numerator() const
    {
        LaurentPoly p = num_;
        for (int k = 0; k < nvars_; ++k) {
            auto q = p.divide_one_minus_t();
            if (!q) break;
            p = *q;
        }
        return p;
    }

    /// Σ_d H(d) when the dimension is <= 0, kInfiniteLength otherwise.
    std::int64_t length() const
    {
        if (num_.is_zero()) return 0;
        if (dimension() > 0) return kInfiniteLength;
        return reduced_numerator().at_one();
    }

    std::optional<std::int64_t> multiplicity() const
    {
        if (num_.is_zero()) return std::nullopt;
        return reduced_numerator().at_one();
    }

    /// H(d) = Σ_k n_k C(d - k + s - 1, s - 1).
    std::int64_t value(int d) const
    {
        std::int64_t total = 0;
        for (int k = num_.low(); k <= num_.high() && !num_.is_zero(); ++k) {
            auto c = num_.coeff(k);
            if (c == 0 || d - k < 0) continue;
            total += c * binom(d - k + nvars_ - 1, nvars_ - 1);
        }
        return total;
    }

    std::vector<std::int64_t> prefix(int from, int to) const
    {
        std::vector<std::int64_t> v;
        for (int d = from; d <= to; ++d) v.push_back(value(d));
        return v;
    }

    /// Lowest degree with H(d) != 0 (the numerator's lowest exponent); meaningless for zero.
    int initial_degree() const { return num_.low(); }

    HilbertData shifted(int k) const { return HilbertData(num_.shifted(k), nvars_); }
    friend HilbertData operator+(const HilbertData& a, const HilbertData& b)
    {
        return HilbertData(a.num_ + b.num_, std::max(a.nvars_, b.nvars_));
    }
    friend HilbertData operator-(const HilbertData& a, const HilbertData& b)
    {
        return HilbertData(a.num_ - b.num_, std::max(a.nvars_, b.nvars_));
    }
    friend bool operator==(const HilbertData& a, const HilbertData& b)
    {
        return a.num_ == b.num_ && (a.num_.is_zero() || a.nvars_ == b.nvars_);
    }

    static std::int64_t binom(int n, int k)
    {
        if (k < 0 || n < k) return (n == -1 && k == -1) ? 1 : 0;
        std::int64_t r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    }

private:
    LaurentPoly num_;
    int nvars_ = 0;
};

/// Hilbert numerator of S/J for a monomial ideal J, by the pivot recursion
/// N(J) = N(J + (x_v)) + t·N(J : x_v) on the variable occurring in the most
/// minimal generators. Memo is local to one instance.
class MonomialHilbert {
public:
    explicit MonomialHilbert(std::size_t nvars) : nvars_(nvars) {}

    LaurentPoly numerator(std::vector<Monomial> gens)
    {
        minimalize(gens);
        return rec(std::move(gens));
    }

private:
    static void minimalize(std::vector<Monomial>& g)
    {
        std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) {
            if (a.degree() != b.degree()) return a.degree() < b.degree();
            return key_less(a, b);
        });
        g.erase(std::unique(g.begin(), g.end()), g.end());
        std::vector<Monomial> out;
        for (const auto& m : g) {
            bool red = false;
            for (const auto& o : out)
                if (divides(o, m)) {
                    red = true;
                    break;
                }
            if (!red) out.push_back(m);
        }
        g = std::move(out);
    }

    struct KeyLess {
        bool operator()(const std::vector<Monomial>& a, const std::vector<Monomial>& b) const
        {
            if (a.size() != b.size()) return a.size() < b.size();
            for (std::size_t i = 0; i < a.size(); ++i) {
                if (key_less(a[i], b[i])) return true;
                if (key_less(b[i], a[i])) return false;
            }
            return false;
        }
    };

    LaurentPoly rec(std::vector<Monomial> gens)
    {
        if (gens.empty()) return LaurentPoly::one();
        bool pairwise_coprime = true;
        for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j)
                if (!coprime(gens[i], gens[j])) {
                    pairwise_coprime = false;
                    break;
                }
        if (pairwise_coprime) {
            LaurentPoly r = LaurentPoly::one();
            for (const auto& m : gens) r = r * (LaurentPoly::one() - LaurentPoly::monomial(m.degree()));
            return r;
        }
        auto memo = memo_.find(gens);
        if (memo != memo_.end()) return memo->second;

        std::vector<int> freq(nvars_, 0);
        for (const auto& m : gens)
            for (std::size_t v = 0; v < nvars_; ++v)
                if (m[v] > 0) ++freq[v];
        std::size_t pivot = static_cast<std::size_t>(std::max_element(freq.begin(), freq.end()) - freq.begin());
        Monomial x = Monomial::variable(nvars_, pivot);

        std::vector<Monomial> sum{x};
        std::vector<Monomial> colon;
        for (const auto& m : gens) {
            if (m[pivot] == 0) sum.push_back(m);
            colon.push_back(m[pivot] > 0 ? quotient(m, x) : m);
        }
        minimalize(sum);
        minimalize(colon);
        LaurentPoly r = rec(std::move(sum)) + rec(std::move(colon)).shifted(1);
        memo_.emplace(std::move(gens), r);
        return r;
    }

    std::size_t nvars_;
    std::map<std::vector<Monomial>, LaurentPoly, KeyLess> memo_;
};

}  // namespace halg
