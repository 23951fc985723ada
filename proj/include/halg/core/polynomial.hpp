#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "halg/core/error.hpp"
#include "halg/core/field.hpp"
#include "halg/core/monomial.hpp"

namespace halg {

template <class F>
struct Term {
    Monomial mono;
    typename F::Elem coeff;
};

template <class F>
class PolyRing;

/// Homogeneous polynomial: terms strictly decreasing in the ring's order,
/// no zero coefficients, one common total degree.
template <class F>
class Polynomial {
public:
    using Elem = typename F::Elem;

    Polynomial() = default;

    const std::vector<Term<F>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// Total degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
    const Term<F>& lead() const { return terms_.front(); }
    bool is_monomial() const { return terms_.size() == 1; }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
        return true;
    }

private:
    friend class PolyRing<F>;
    std::vector<Term<F>> terms_;
};

/// The ambient polynomial ring k[x_1..x_s] with a fixed global term order.
template <class F>
class PolyRing {
public:
    using Elem = typename F::Elem;
    using Poly = Polynomial<F>;

    PolyRing(F field, std::vector<std::string> names, TermOrder order = TermOrder::degrevlex)
        : field_(std::move(field)), names_(std::move(names)), order_(order)
    {
        if (names_.size() > kMaxVariables) throw DomainError("too many variables");
    }

    const F& field() const { return field_; }
    std::size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    TermOrder order() const { return order_; }

    std::strong_ordering cmp(const Monomial& a, const Monomial& b) const { return compare(order_, a, b); }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) == std::strong_ordering::greater; }

    Monomial one_monomial() const { return Monomial(nvars()); }

    /// Sorts, merges equal monomials, drops zeros; throws on mixed degrees.
    Poly make(std::vector<Term<F>> terms) const
    {
        for (const auto& t : terms)
            if (t.mono.size() != nvars()) throw StructuralError("monomial length does not match ring");
        std::sort(terms.begin(), terms.end(), [&](const Term<F>& a, const Term<F>& b) { return greater(a.mono, b.mono); });
        Poly p;
        for (auto& t : terms) {
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
                p.terms_.back().coeff = field_.add(p.terms_.back().coeff, t.coeff);
                if (field_.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
            } else if (!field_.is_zero(t.coeff)) {
                p.terms_.push_back(std::move(t));
            }
        }
        check_homogeneous(p);
        return p;
    }

    Poly zero() const { return Poly(); }
    Poly constant(const Elem& c) const { return monomial(one_monomial(), c); }
    Poly one() const { return constant(field_.one()); }
    Poly variable(std::size_t i) const { return monomial(Monomial::variable(nvars(), i), field_.one()); }
    Poly monomial(const Monomial& m, const Elem& c) const
    {
        Poly p;
        if (m.size() != nvars()) throw StructuralError("monomial length does not match ring");
        if (!field_.is_zero(c)) p.terms_.push_back({m, c});
        return p;
    }

    Poly add(const Poly& f, const Poly& g) const
    {
        if (f.is_zero()) return g;
        if (g.is_zero()) return f;
        if (f.degree() != g.degree())
            throw HomogeneityError("sum of polynomials of degrees " + std::to_string(f.degree()) + " and " +
                                   std::to_string(g.degree()));
        Poly r;
        r.terms_.reserve(f.size() + g.size());
        std::size_t i = 0, j = 0;
        while (i < f.size() && j < g.size()) {
            auto c = cmp(f.terms_[i].mono, g.terms_[j].mono);
            if (c == std::strong_ordering::greater) {
                r.terms_.push_back(f.terms_[i++]);
            } else if (c == std::strong_ordering::less) {
                r.terms_.push_back(g.terms_[j++]);
            } else {
                auto s = field_.add(f.terms_[i].coeff, g.terms_[j].coeff);
                if (!field_.is_zero(s)) r.terms_.push_back({f.terms_[i].mono, s});
                ++i;
                ++j;
            }
        }
        r.terms_.insert(r.terms_.end(), f.terms_.begin() + i, f.terms_.end());
        r.terms_.insert(r.terms_.end(), g.terms_.begin() + j, g.terms_.end());
        return r;
    }

    Poly neg(const Poly& f) const { return scale(f, field_.neg(field_.one())); }
    Poly sub(const Poly& f, const Poly& g) const { return add(f, neg(g)); }

    Poly scale(const Poly& f, const Elem& c) const
    {
        if (field_.is_zero(c)) return Poly();
        Poly r = f;
        for (auto& t : r.terms_) t.coeff = field_.mul(t.coeff, c);
        return r;
    }

    /// c * m * f
    Poly mul_term(const Poly& f, const Monomial& m, const Elem& c) const
    {
        if (field_.is_zero(c)) return Poly();
        Poly r;
        r.terms_.reserve(f.size());
        for (const auto& t : f.terms_) r.terms_.push_back({t.mono * m, field_.mul(t.coeff, c)});
        return r;
    }

    Poly mul(const Poly& f, const Poly& g) const
    {
        if (f.is_zero() || g.is_zero()) return Poly();
        std::unordered_map<Monomial, Elem, MonomialHash> acc;
        acc.reserve(f.size() * g.size());
        for (const auto& a : f.terms_)
            for (const auto& b : g.terms_) {
                auto m = a.mono * b.mono;
                auto it = acc.find(m);
                auto prod = field_.mul(a.coeff, b.coeff);
                if (it == acc.end()) acc.emplace(m, prod);
                else it->second = field_.add(it->second, prod);
            }
        std::vector<Term<F>> terms;
        terms.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!field_.is_zero(c)) terms.push_back({m, c});
        return make(std::move(terms));
    }

    Poly pow(const Poly& f, int e) const
    {
        Poly r = one();
        for (int i = 0; i < e; ++i) r = mul(r, f);
        return r;
    }

    bool is_homogeneous(const std::vector<Term<F>>& terms) const
    {
        for (const auto& t : terms)
            if (t.mono.degree() != terms.front().mono.degree()) return false;
        return true;
    }

    std::string to_string(const Poly& f) const
    {
        if (f.is_zero()) return "0";
        std::string s;
        bool first = true;
        for (const auto& t : f.terms_) {
            std::string c = field_.to_string(t.coeff);
            bool negative = !c.empty() && c[0] == '-';
            if (negative) c = c.substr(1);
            if (first) s += negative ? "-" : "";
            else s += negative ? " - " : " + ";
            first = false;
            if (t.mono.is_one()) s += c;
            else if (c == "1") s += t.mono.to_string(names_);
            else s += c + "*" + t.mono.to_string(names_);
        }
        return s;
    }

private:
    void check_homogeneous(const Poly& p) const
    {
        if (!is_homogeneous(p.terms_)) throw HomogeneityError("inhomogeneous polynomial");
    }

    F field_;
    std::vector<std::string> names_;
    TermOrder order_;
};

}  // namespace halg
