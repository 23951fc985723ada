#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "halg/core/polynomial.hpp"

namespace halg {

/// Graded free module F = ⊕ S(-d_i): basis vector e_i sits in degree d_i.
struct FreeModule {
    std::vector<int> degrees;

    FreeModule() = default;
    explicit FreeModule(std::vector<int> d) : degrees(std::move(d)) {}
    static FreeModule uniform(std::size_t rank, int degree = 0) { return FreeModule(std::vector<int>(rank, degree)); }

    std::size_t rank() const { return degrees.size(); }
    int degree(std::size_t i) const { return degrees[i]; }
    bool operator==(const FreeModule&) const = default;

    /// F(shift): every basis degree decreases by shift.
    FreeModule twisted(int shift) const
    {
        FreeModule r = *this;
        for (auto& d : r.degrees) d -= shift;
        return r;
    }
};

template <class F>
struct VTerm {
    Monomial mono;
    std::uint32_t pos;
    typename F::Elem coeff;
};

/// Element of a free module, stored as a flat list of terms sorted strictly
/// decreasing in position-over-term order (lower position index dominates).
template <class F>
class Vector {
public:
    Vector() = default;
    explicit Vector(std::vector<VTerm<F>> sorted_terms) : terms_(std::move(sorted_terms)) {}

    const std::vector<VTerm<F>>& terms() const { return terms_; }
    std::vector<VTerm<F>>& mutable_terms() { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const VTerm<F>& lead() const { return terms_.front(); }

    /// Graded degree inside `module`; -1 for zero (callers track degrees of zero vectors separately).
    int degree(const FreeModule& module) const
    {
        return terms_.empty() ? -1 : terms_.front().mono.degree() + module.degree(terms_.front().pos);
    }

    friend bool operator==(const Vector& a, const Vector& b)
    {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].pos != b.terms_[i].pos || !(a.terms_[i].mono == b.terms_[i].mono) ||
                !(a.terms_[i].coeff == b.terms_[i].coeff))
                return false;
        return true;
    }

private:
    std::vector<VTerm<F>> terms_;
};

/// Position-over-term comparison: positions compared first, lower index is larger.
template <class F>
std::strong_ordering term_cmp(const PolyRing<F>& ring, const VTerm<F>& a, const VTerm<F>& b)
{
    if (a.pos != b.pos) return b.pos <=> a.pos;
    return ring.cmp(a.mono, b.mono);
}

template <class F>
bool is_homogeneous(const Vector<F>& v, const FreeModule& module)
{
    if (v.is_zero()) return true;
    const int d = v.degree(module);
    for (const auto& t : v.terms()) {
        if (t.pos >= module.rank()) return false;
        if (t.mono.degree() + module.degree(t.pos) != d) return false;
    }
    return true;
}

template <class F>
Vector<F> make_vector(const PolyRing<F>& ring, std::vector<VTerm<F>> terms)
{
    const auto& k = ring.field();
    std::sort(terms.begin(), terms.end(), [&](const VTerm<F>& a, const VTerm<F>& b) {
        return term_cmp(ring, a, b) == std::strong_ordering::greater;
    });
    std::vector<VTerm<F>> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().pos == t.pos && out.back().mono == t.mono) {
            out.back().coeff = k.add(out.back().coeff, t.coeff);
            if (k.is_zero(out.back().coeff)) out.pop_back();
        } else if (!k.is_zero(t.coeff)) {
            out.push_back(std::move(t));
        }
    }
    return Vector<F>(std::move(out));
}

/// a + c*b
template <class F>
Vector<F> vaxpy(const PolyRing<F>& ring, const Vector<F>& a, const typename F::Elem& c, const Vector<F>& b)
{
    const auto& k = ring.field();
    if (k.is_zero(c) || b.is_zero()) return a;
    std::vector<VTerm<F>> out;
    out.reserve(a.size() + b.size());
    auto i = a.terms().begin(), ie = a.terms().end();
    auto j = b.terms().begin(), je = b.terms().end();
    while (i != ie && j != je) {
        auto o = term_cmp(ring, *i, *j);
        if (o == std::strong_ordering::greater) {
            out.push_back(*i++);
        } else if (o == std::strong_ordering::less) {
            out.push_back({j->mono, j->pos, k.mul(c, j->coeff)});
            ++j;
        } else {
            auto s = k.add(i->coeff, k.mul(c, j->coeff));
            if (!k.is_zero(s)) out.push_back({i->mono, i->pos, s});
            ++i;
            ++j;
        }
    }
    for (; i != ie; ++i) out.push_back(*i);
    for (; j != je; ++j) out.push_back({j->mono, j->pos, k.mul(c, j->coeff)});
    return Vector<F>(std::move(out));
}

template <class F>
Vector<F> vadd(const PolyRing<F>& ring, const Vector<F>& a, const Vector<F>& b)
{
    return vaxpy(ring, a, ring.field().one(), b);
}

template <class F>
Vector<F> vsub(const PolyRing<F>& ring, const Vector<F>& a, const Vector<F>& b)
{
    return vaxpy(ring, a, ring.field().neg(ring.field().one()), b);
}

template <class F>
Vector<F> vscale(const PolyRing<F>& ring, const Vector<F>& v, const typename F::Elem& c)
{
    if (ring.field().is_zero(c)) return {};
    auto terms = v.terms();
    for (auto& t : terms) t.coeff = ring.field().mul(t.coeff, c);
    return Vector<F>(std::move(terms));
}

/// c * m * v (order-preserving because term orders are multiplicative)
template <class F>
Vector<F> vmul_term(const PolyRing<F>& ring, const Vector<F>& v, const Monomial& m, const typename F::Elem& c)
{
    if (ring.field().is_zero(c)) return {};
    auto terms = v.terms();
    for (auto& t : terms) {
        t.mono = t.mono * m;
        t.coeff = ring.field().mul(t.coeff, c);
    }
    return Vector<F>(std::move(terms));
}

template <class F>
Vector<F> vmul(const PolyRing<F>& ring, const Polynomial<F>& f, const Vector<F>& v)
{
    std::vector<VTerm<F>> terms;
    terms.reserve(f.size() * v.size());
    for (const auto& a : f.terms())
        for (const auto& b : v.terms()) terms.push_back({a.mono * b.mono, b.pos, ring.field().mul(a.coeff, b.coeff)});
    return make_vector(ring, std::move(terms));
}

/// f * e_pos
template <class F>
Vector<F> poly_at(const Polynomial<F>& f, std::uint32_t pos)
{
    std::vector<VTerm<F>> terms;
    terms.reserve(f.size());
    for (const auto& t : f.terms()) terms.push_back({t.mono, pos, t.coeff});
    return Vector<F>(std::move(terms));
}

template <class F>
Vector<F> unit_vector(const PolyRing<F>& ring, std::uint32_t pos)
{
    return poly_at(ring.one(), pos);
}

/// The polynomial in coordinate `pos`.
template <class F>
Polynomial<F> component(const PolyRing<F>& ring, const Vector<F>& v, std::uint32_t pos)
{
    std::vector<Term<F>> terms;
    for (const auto& t : v.terms())
        if (t.pos == pos) terms.push_back({t.mono, t.coeff});
    return ring.make(std::move(terms));
}

/// Renumbers positions through `map`; the result is re-sorted.
template <class F>
Vector<F> remap_positions(const PolyRing<F>& ring, const Vector<F>& v, const std::function<std::uint32_t(std::uint32_t)>& map)
{
    auto terms = v.terms();
    for (auto& t : terms) t.pos = map(t.pos);
    return make_vector(ring, std::move(terms));
}

template <class F>
std::string to_string(const PolyRing<F>& ring, const Vector<F>& v, std::size_t rank)
{
    std::string s = "(";
    for (std::uint32_t p = 0; p < rank; ++p) {
        if (p) s += ", ";
        s += ring.to_string(component(ring, v, p));
    }
    return s + ")";
}

}  // namespace halg
