#pragma once

#include <string>
#include <vector>

#include "halg/core/matrix.hpp"
#include "halg/core/ring.hpp"
#include "halg/groebner/groebner.hpp"
#include "halg/modcat/hilbert.hpp"

namespace halg {

/// (im generators + im relations) / im relations inside a graded free module
/// over the tagged ring. Over R = S/I the relations implicitly contain I·ambient.
template <class F>
class Module {
public:
    Module() = default;
    Module(RingPtr<F> ring, GradedMatrix<F> gens, GradedMatrix<F> rels)
        : ring_(std::move(ring)), gens_(std::move(gens)), rels_(std::move(rels))
    {
        if (!(gens_.target == rels_.target)) throw StructuralError("generators and relations in different ambients");
        gens_.validate();
        rels_.validate();
    }

    static Module cokernel(RingPtr<F> ring, GradedMatrix<F> rels)
    {
        auto gens = GradedMatrix<F>::identity(ring->S(), rels.target);
        return Module(std::move(ring), std::move(gens), std::move(rels));
    }
    static Module free(RingPtr<F> ring, const FreeModule& f)
    {
        return cokernel(std::move(ring), GradedMatrix<F>::empty(f));
    }
    static Module zero(RingPtr<F> ring) { return free(std::move(ring), FreeModule()); }

    const RingPtr<F>& ring() const { return ring_; }
    const PolyRing<F>& S() const { return ring_->S(); }
    const FreeModule& ambient() const { return gens_.target; }
    const GradedMatrix<F>& generators() const { return gens_; }
    const GradedMatrix<F>& relations() const { return rels_; }

    bool is_cokernel() const
    {
        if (gens_.cols() != ambient().rank()) return false;
        for (std::uint32_t j = 0; j < gens_.cols(); ++j)
            if (!(gens_.columns[j] == unit_vector(S(), j))) return false;
        return true;
    }

    /// The same module regarded over the cover S: relations + I·ambient made explicit.
    Module lift() const
    {
        if (!ring_->is_quotient()) return *this;
        auto rels = rels_;
        for (auto& v : ring_->ideal_lift(ambient())) {
            rels.source.degrees.push_back(v.degree(ambient()));
            rels.columns.push_back(std::move(v));
        }
        return Module(ring_->cover(), gens_, std::move(rels));
    }

    /// Same presentation over another ring with the same cover (entries reduced there).
    Module over(RingPtr<F> ring) const
    {
        auto reduce = [&](GradedMatrix<F> m) {
            for (auto& c : m.columns) c = ring->reduce_mod_ideal(c, m.target);
            return m;
        };
        return Module(ring, reduce(gens_), reduce(rels_));
    }

    std::string fingerprint() const
    {
        std::string s = ring_->description() + "|";
        auto dump = [&](const GradedMatrix<F>& m) {
            for (int d : m.source.degrees) s += std::to_string(d) + ",";
            s += ";";
            for (int d : m.target.degrees) s += std::to_string(d) + ",";
            s += ";";
            for (const auto& c : m.columns) s += to_string(S(), c, m.rows()) + " ";
            s += "|";
        };
        dump(gens_);
        dump(rels_);
        return s;
    }

private:
    RingPtr<F> ring_;
    GradedMatrix<F> gens_;
    GradedMatrix<F> rels_;
};

/// k = R/m as the cokernel of (x_1 .. x_s).
template <class F>
Module<F> residue_field(RingPtr<F> ring)
{
    const auto& S = ring->S();
    std::vector<Vector<F>> cols;
    for (std::size_t i = 0; i < S.nvars(); ++i) cols.push_back(poly_at(S.variable(i), 0));
    GradedMatrix<F> m(FreeModule::uniform(S.nvars(), 1), FreeModule::uniform(1), std::move(cols));
    return Module<F>::cokernel(std::move(ring), std::move(m));
}

/// R/(f_1..f_n) for homogeneous forms.
template <class F>
Module<F> cyclic_quotient(RingPtr<F> ring, const std::vector<Polynomial<F>>& forms)
{
    FreeModule src;
    std::vector<Vector<F>> cols;
    for (const auto& f : forms) {
        if (f.is_zero()) continue;
        src.degrees.push_back(f.degree());
        cols.push_back(poly_at(f, 0));
    }
    GradedMatrix<F> m(std::move(src), FreeModule::uniform(1), std::move(cols));
    return Module<F>::cokernel(std::move(ring), std::move(m));
}

template <class F>
Module<F> subquotient(RingPtr<F> ring, GradedMatrix<F> gens, GradedMatrix<F> rels)
{
    return Module<F>(std::move(ring), std::move(gens), std::move(rels));
}

/// Numerator of HS(ambient / span(leads)) from the leading terms of a Gröbner basis.
template <class F>
LaurentPoly leading_term_numerator(const FreeModule& ambient, const std::vector<std::pair<std::uint32_t, Monomial>>& leads,
                                   std::size_t nvars)
{
    std::vector<std::vector<Monomial>> per(ambient.rank());
    for (const auto& [p, m] : leads) per[p].push_back(m);
    MonomialHilbert mh(nvars);
    LaurentPoly total;
    for (std::size_t p = 0; p < ambient.rank(); ++p)
        total = total + mh.numerator(per[p]).shifted(ambient.degree(p));
    return total;
}

/// HS(ambient / (span(seed_gb) + span(extra))) over S; seed_gb must already be a Gröbner basis.
template <class F>
HilbertData quotient_hilbert(const PolyRing<F>& S, const FreeModule& ambient, const std::vector<Vector<F>>& seed_gb,
                             const std::vector<Vector<F>>& extra = {})
{
    GroebnerEngine<F> e(S, ambient);
    e.add_basis(seed_gb);
    for (const auto& v : extra) e.add(v);
    e.complete();
    return HilbertData(leading_term_numerator<F>(ambient, e.leading_terms(), S.nvars()), static_cast<int>(S.nvars()));
}

/// HS of the free R-module F, i.e. of F/I·F over S.
template <class F>
HilbertData free_hilbert(const RingDescriptor<F>& R, const FreeModule& f)
{
    HilbertData ring = quotient_hilbert(R.S(), FreeModule::uniform(1), R.ideal_lift(FreeModule::uniform(1)));
    HilbertData total(LaurentPoly(), static_cast<int>(R.nvars()));
    for (int d : f.degrees) total = total + ring.shifted(d);
    return total;
}

/// Exact Hilbert series from the leading-term module of the lifted presentation.
template <class F>
HilbertData hilbert_data(const Module<F>& M)
{
    const auto& R = *M.ring();
    const auto& S = M.S();
    const auto& amb = M.ambient();
    std::vector<Vector<F>> rels = M.relations().columns;
    auto seed = R.ideal_lift(amb);
    GroebnerEngine<F> e(S, amb);
    e.add_basis(seed);
    for (const auto& v : rels) e.add(v);
    e.complete();
    LaurentPoly whole = leading_term_numerator<F>(amb, e.leading_terms(), S.nvars());
    if (M.is_cokernel()) return HilbertData(whole, static_cast<int>(S.nvars()));
    for (const auto& v : M.generators().columns) e.add(v);
    e.complete();
    LaurentPoly part = leading_term_numerator<F>(amb, e.leading_terms(), S.nvars());
    return HilbertData(whole - part, static_cast<int>(S.nvars()));
}

template <class F>
int krull_dimension(const Module<F>& M)
{
    return hilbert_data(M).dimension();
}

/// Total k-dimension, or kInfiniteLength when dim > 0.
template <class F>
std::int64_t length(const Module<F>& M)
{
    return hilbert_data(M).length();
}

/// Hilbert data of the graded k-dual of a finite-length module: H^∨(d) = H(-d).
inline HilbertData graded_dual_hilbert(const HilbertData& h)
{
    if (h.is_zero()) return h;
    if (h.dimension() > 0) throw DomainError("graded dual of a module of positive dimension");
    LaurentPoly q = h.reduced_numerator();
    LaurentPoly rev;
    for (int k = q.low(); k <= q.high(); ++k) rev = rev + LaurentPoly::monomial(-k, q.coeff(k));
    LaurentPoly one_minus_t = LaurentPoly::one() - LaurentPoly::monomial(1);
    for (int i = 0; i < h.denominator_exponent(); ++i) rev = rev * one_minus_t;
    return HilbertData(rev, h.denominator_exponent());
}

template <class F>
HilbertData graded_dual_hilbert(const Module<F>& M)
{
    return graded_dual_hilbert(hilbert_data(M));
}

/// Minimal presentation: coker(P) ≅ M with minimal generators and relations,
/// P entries in the irrelevant ideal. Generators are picked from M's
/// generators degree by degree (graded Nakayama), relations likewise.
template <class F>
Module<F> minimal_presentation(const Module<F>& M)
{
    const auto& R = *M.ring();
    const auto& S = M.S();
    const auto& amb = M.ambient();
    const auto& gens = M.generators().columns;
    auto ideal_amb = R.ideal_lift(amb);

    auto chosen = minimal_generator_indices(S, amb, gens, ideal_amb, M.relations().columns);
    FreeModule G;
    std::vector<Vector<F>> cols;
    for (std::size_t i : chosen) {
        G.degrees.push_back(M.generators().source.degree(i));
        cols.push_back(gens[i]);
    }
    GradedMatrix<F> gm(G, amb, std::move(cols));
    auto track = R.ideal_lift(G);
    auto syz = syzygy_basis(S, gm, ideal_amb, M.relations().columns, track);
    std::vector<Vector<F>> cands;
    cands.reserve(syz.size());
    for (const auto& v : syz) cands.push_back(R.reduce_mod_ideal(v, G));
    auto rel_idx = minimal_generator_indices(S, G, cands, track);
    FreeModule src;
    std::vector<Vector<F>> rels;
    for (std::size_t i : rel_idx) {
        src.degrees.push_back(cands[i].degree(G));
        rels.push_back(cands[i]);
    }
    return Module<F>::cokernel(M.ring(), GradedMatrix<F>(std::move(src), G, std::move(rels)));
}

/// Number of minimal generators, dim_k M/mM.
template <class F>
std::size_t minimal_generator_count(const Module<F>& M)
{
    const auto& R = *M.ring();
    return minimal_generator_indices(M.S(), M.ambient(), M.generators().columns, R.ideal_lift(M.ambient()),
                                     M.relations().columns)
        .size();
}

/// Throws ContractViolation unless d_lo ∘ d_hi vanishes over the ring.
template <class F>
void check_complex(const RingDescriptor<F>& R, const GradedMatrix<F>& d_hi, const GradedMatrix<F>& d_lo)
{
    if (!(d_hi.target == d_lo.source)) throw StructuralError("maps are not composable");
    auto c = multiply(R.S(), d_lo, d_hi);
    for (const auto& v : c.columns)
        if (!R.reduce_mod_ideal(v, c.target).is_zero()) throw ContractViolation("composite of differentials is not zero");
}

/// ker(d_lo) / im(d_hi) as a subquotient of d_lo's source.
template <class F>
Module<F> kernel_and_homology(RingPtr<F> ring, const GradedMatrix<F>& d_hi, const GradedMatrix<F>& d_lo)
{
    check_complex(*ring, d_hi, d_lo);
    auto K = kernel_over_quotient(*ring, d_lo);
    return Module<F>(std::move(ring), std::move(K), d_hi);
}

/// HS of the homology of X_prev -> X_mid -> X_next where X_* = G_* / rel_*
/// and the maps are induced by matrices of free modules:
///   HS(H) = HS(G_mid/(in + rel_mid)) - HS(G_next/rel_next) + HS(G_next/(out + rel_next)).
/// Relations are given as Gröbner bases (e.g. block-replicated ones).
template <class F>
HilbertData homology_hilbert(const PolyRing<F>& S, const FreeModule& mid, const std::vector<Vector<F>>& in,
                             const std::vector<Vector<F>>& rel_mid_gb, const FreeModule& next,
                             const std::vector<Vector<F>>& out, const std::vector<Vector<F>>& rel_next_gb,
                             const HilbertData& next_over_rel)
{
    HilbertData a = quotient_hilbert(S, mid, rel_mid_gb, in);
    if (next.rank() == 0) return a;
    HilbertData c = quotient_hilbert(S, next, rel_next_gb, out);
    return a - next_over_rel + c;
}

/// Hilbert series of ker(d_lo)/im(d_hi) over the matrices' ring, without computing kernels.
template <class F>
HilbertData homology_hilbert(const RingDescriptor<F>& R, const GradedMatrix<F>& d_hi, const GradedMatrix<F>& d_lo)
{
    if (!(d_hi.target == d_lo.source)) throw StructuralError("maps are not composable");
    return homology_hilbert(R.S(), d_lo.source, d_hi.columns, R.ideal_lift(d_lo.source), d_lo.target, d_lo.columns,
                            R.ideal_lift(d_lo.target), free_hilbert(R, d_lo.target));
}

}  // namespace halg
