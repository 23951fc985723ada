#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "halg/core/polynomial.hpp"
#include "halg/core/vector.hpp"
#include "halg/groebner/engine.hpp"

namespace halg {

/// R = S/I with S = k[x_1..x_s]; I is generated by homogeneous forms of
/// degree >= 2, so the embedding dimension of R equals s. Without an ideal,
/// R = S.
template <class F>
class RingDescriptor : public std::enable_shared_from_this<RingDescriptor<F>> {
public:
    using Poly = Polynomial<F>;

    explicit RingDescriptor(PolyRing<F> S, std::vector<Poly> ideal = {}) : S_(std::move(S))
    {
        for (const auto& f : ideal) {
            if (f.is_zero()) continue;
            if (f.degree() < 2)
                throw DomainError("ideal generator " + S_.to_string(f) + " has degree < 2");
            ideal_.push_back(f);
        }
        if (!ideal_.empty()) {
            GroebnerEngine<F> gb(S_, FreeModule::uniform(1));
            for (const auto& f : ideal_) gb.add(poly_at(f, 0));
            gb.complete();
            for (const auto& v : gb.reduced_basis()) ideal_gb_.push_back(component(S_, v, 0));
        }
        ideal_engine_ = std::make_unique<GroebnerEngine<F>>(S_, FreeModule::uniform(1));
        ideal_engine_->add_basis(ideal_lift(FreeModule::uniform(1)));
    }

    /// The polynomial ring S this ring is a quotient of (itself when R = S).
    std::shared_ptr<const RingDescriptor> cover() const
    {
        if (!is_quotient()) return this->shared_from_this();
        std::call_once(cover_once_, [this] { cover_ = std::make_shared<const RingDescriptor>(S_); });
        return cover_;
    }

    RingDescriptor(const RingDescriptor&) = delete;
    RingDescriptor& operator=(const RingDescriptor&) = delete;

    const PolyRing<F>& S() const { return S_; }
    const F& field() const { return S_.field(); }
    std::size_t nvars() const { return S_.nvars(); }
    bool is_quotient() const { return !ideal_.empty(); }
    const std::vector<Poly>& ideal() const { return ideal_; }
    const std::vector<Poly>& ideal_gb() const { return ideal_gb_; }

    /// GB(I)·e_p for every position p: a Gröbner basis of I·F.
    std::vector<Vector<F>> ideal_lift(const FreeModule& module) const
    {
        std::vector<Vector<F>> out;
        out.reserve(module.rank() * ideal_gb_.size());
        for (std::uint32_t p = 0; p < module.rank(); ++p)
            for (const auto& g : ideal_gb_) out.push_back(poly_at(g, p));
        return out;
    }

    /// Reduces every coordinate of v modulo I.
    Vector<F> reduce_mod_ideal(const Vector<F>& v, const FreeModule& module) const
    {
        if (!is_quotient() || v.is_zero()) return v;
        (void)module;
        std::vector<VTerm<F>> out;
        std::size_t i = 0;
        const auto& t = v.terms();
        while (i < t.size()) {
            std::size_t j = i;
            std::vector<VTerm<F>> comp;
            while (j < t.size() && t[j].pos == t[i].pos) {
                comp.push_back({t[j].mono, 0, t[j].coeff});
                ++j;
            }
            const Vector<F> red = ideal_engine_->reduce(Vector<F>(std::move(comp)), true);
            for (const auto& r : red.terms()) out.push_back({r.mono, t[i].pos, r.coeff});
            i = j;
        }
        return Vector<F>(std::move(out));
    }

    Poly reduce_mod_ideal(const Poly& f) const
    {
        if (!is_quotient() || f.is_zero()) return f;
        return component(S_, ideal_engine_->reduce(poly_at(f, 0), true), 0);
    }

    std::string description() const
    {
        std::string s = "k[";
        for (std::size_t i = 0; i < nvars(); ++i) s += (i ? "," : "") + S_.names()[i];
        s += "]";
        if (is_quotient()) {
            s += "/(";
            for (std::size_t i = 0; i < ideal_.size(); ++i) s += (i ? ", " : "") + S_.to_string(ideal_[i]);
            s += ")";
        }
        return s + " over " + S_.field().name() + ", " + to_string(S_.order());
    }

private:
    PolyRing<F> S_;
    std::vector<Poly> ideal_;
    std::vector<Poly> ideal_gb_;
    std::unique_ptr<GroebnerEngine<F>> ideal_engine_;
    mutable std::once_flag cover_once_;
    mutable std::shared_ptr<const RingDescriptor> cover_;
};

template <class F>
using RingPtr = std::shared_ptr<const RingDescriptor<F>>;

template <class F>
RingPtr<F> make_ring(PolyRing<F> S, std::vector<Polynomial<F>> ideal = {})
{
    return std::make_shared<const RingDescriptor<F>>(std::move(S), std::move(ideal));
}

}  // namespace halg
