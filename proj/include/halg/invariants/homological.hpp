#pragma once

#include <vector>

#include "halg/resolve/resolution.hpp"

namespace halg {

/// A module X = G / rel prepared for Hom(F, X) and F ⊗ X block complexes:
/// rel_gb is a Gröbner basis of rel + I·G inside G.
template <class F>
struct Coefficients {
    RingPtr<F> ring;
    FreeModule gens;
    std::vector<Vector<F>> rel_gb;
    HilbertData hilbert;
};

template <class F>
Coefficients<F> prepare_coefficients(const Module<F>& X)
{
    Module<F> P = minimal_presentation(X);
    const auto& R = *P.ring();
    GroebnerEngine<F> e(R.S(), P.ambient());
    e.add_basis(R.ideal_lift(P.ambient()));
    for (const auto& v : P.relations().columns) e.add(v);
    e.complete();
    Coefficients<F> c{P.ring(), P.ambient(), e.reduced_basis(), {}};
    c.hilbert = HilbertData(leading_term_numerator<F>(c.gens, e.leading_terms(), R.nvars()), static_cast<int>(R.nvars()));
    return c;
}

namespace detail {

/// ⊕_j X(∓a_j): block j, generator p sits at position j*g + p in degree deg(p) + sign*a_j.
template <class F>
FreeModule block_module(const FreeModule& basis, const Coefficients<F>& X, int sign)
{
    FreeModule m;
    m.degrees.reserve(basis.rank() * X.gens.rank());
    for (int a : basis.degrees)
        for (int d : X.gens.degrees) m.degrees.push_back(d + sign * a);
    return m;
}

template <class F>
std::vector<Vector<F>> block_relations(const PolyRing<F>&, std::size_t blocks, const Coefficients<F>& X)
{
    std::vector<Vector<F>> out;
    const auto g = static_cast<std::uint32_t>(X.gens.rank());
    for (std::uint32_t b = 0; b < blocks; ++b)
        for (const auto& v : X.rel_gb) {
            auto terms = v.terms();
            for (auto& t : terms) t.pos += b * g;
            out.emplace_back(std::move(terms));
        }
    return out;
}

template <class F>
HilbertData block_hilbert(const FreeModule& basis, const Coefficients<F>& X, int sign)
{
    HilbertData h(LaurentPoly(), X.hilbert.denominator_exponent());
    for (int a : basis.degrees) h = h + X.hilbert.shifted(sign * a);
    return h;
}

/// Hom(d, X): Hom(F_{i-1}, X) -> Hom(F_i, X) for d : F_i -> F_{i-1}.
/// The column of source block (j, p) is Σ_e d[j, e] · e_{(e, p)}.
template <class F>
std::vector<Vector<F>> hom_map_columns(const PolyRing<F>& S, const GradedMatrix<F>& d, const Coefficients<F>& X)
{
    const auto g = static_cast<std::uint32_t>(X.gens.rank());
    std::vector<std::vector<VTerm<F>>> rows(d.rows());
    for (std::uint32_t e = 0; e < d.cols(); ++e)
        for (const auto& t : d.columns[e].terms()) rows[t.pos].push_back({t.mono, e, t.coeff});
    std::vector<Vector<F>> out;
    out.reserve(d.rows() * g);
    for (std::size_t j = 0; j < d.rows(); ++j)
        for (std::uint32_t p = 0; p < g; ++p) {
            std::vector<VTerm<F>> terms;
            terms.reserve(rows[j].size());
            for (const auto& t : rows[j]) terms.push_back({t.mono, t.pos * g + p, t.coeff});
            out.push_back(make_vector(S, std::move(terms)));
        }
    return out;
}

/// d ⊗ X: F_i ⊗ X -> F_{i-1} ⊗ X. The column of block (e, p) is Σ_j d[j, e] · e_{(j, p)}.
template <class F>
std::vector<Vector<F>> tensor_map_columns(const PolyRing<F>& S, const GradedMatrix<F>& d, const Coefficients<F>& X)
{
    const auto g = static_cast<std::uint32_t>(X.gens.rank());
    std::vector<Vector<F>> out;
    out.reserve(d.cols() * g);
    for (std::uint32_t e = 0; e < d.cols(); ++e)
        for (std::uint32_t p = 0; p < g; ++p) {
            auto terms = d.columns[e].terms();
            for (auto& t : terms) t.pos = t.pos * g + p;
            out.push_back(make_vector(S, std::move(terms)));
        }
    return out;
}

}  // namespace detail

/// Hilbert series of H^i(Hom(F, X)); F must be known through step i + 1.
template <class F>
HilbertData hom_homology_hilbert(const FreeResolution<F>& res, const Coefficients<F>& X, std::size_t i)
{
    const auto& S = res.ring->S();
    FreeModule mid = detail::block_module(res.module(i), X, -1);
    std::vector<Vector<F>> in;
    if (i >= 1) in = detail::hom_map_columns(S, res.differential(i), X);
    GradedMatrix<F> d_next = res.differential(i + 1);
    FreeModule next = detail::block_module(d_next.source, X, -1);
    auto out = detail::hom_map_columns(S, d_next, X);
    return homology_hilbert(S, mid, in, detail::block_relations(S, res.module(i).rank(), X), next, out,
                            detail::block_relations(S, d_next.source.rank(), X),
                            detail::block_hilbert(d_next.source, X, -1));
}

/// Hilbert series of H_i(F ⊗ X); F must be known through step i + 1.
template <class F>
HilbertData tensor_homology_hilbert(const FreeResolution<F>& res, const Coefficients<F>& X, std::size_t i)
{
    const auto& S = res.ring->S();
    FreeModule mid = detail::block_module(res.module(i), X, 1);
    auto in = detail::tensor_map_columns(S, res.differential(i + 1), X);
    if (i == 0)
        return homology_hilbert(S, mid, in, detail::block_relations(S, res.module(0).rank(), X), FreeModule(), {}, {},
                                HilbertData());
    GradedMatrix<F> d = res.differential(i);
    FreeModule next = detail::block_module(d.target, X, 1);
    auto out = detail::tensor_map_columns(S, d, X);
    return homology_hilbert(S, mid, in, detail::block_relations(S, res.module(i).rank(), X), next, out,
                            detail::block_relations(S, d.target.rank(), X), detail::block_hilbert(d.target, X, 1));
}

/// H^i(Hom(F, X)) as an explicit subquotient (kernel modulo the relations of the next term).
template <class F>
Module<F> hom_homology_module(const FreeResolution<F>& res, const Coefficients<F>& X, std::size_t i)
{
    const auto& S = res.ring->S();
    FreeModule mid = detail::block_module(res.module(i), X, -1);
    GradedMatrix<F> d_next = res.differential(i + 1);
    FreeModule next = detail::block_module(d_next.source, X, -1);
    GradedMatrix<F> out(mid, next, detail::hom_map_columns(S, d_next, X));
    auto rel_mid = detail::block_relations(S, res.module(i).rank(), X);
    auto syz = syzygy_basis(S, out, detail::block_relations(S, d_next.source.rank(), X), {}, rel_mid);
    std::vector<Vector<F>> cands;
    for (const auto& v : syz) cands.push_back(res.ring->reduce_mod_ideal(v, mid));
    auto idx = minimal_generator_indices(S, mid, cands, rel_mid);
    FreeModule ksrc;
    std::vector<Vector<F>> kcols;
    for (std::size_t k : idx) {
        ksrc.degrees.push_back(cands[k].degree(mid));
        kcols.push_back(cands[k]);
    }
    FreeModule rsrc;
    std::vector<Vector<F>> rcols;
    auto add_rel = [&](const Vector<F>& v) {
        if (v.is_zero()) return;
        rsrc.degrees.push_back(v.degree(mid));
        rcols.push_back(v);
    };
    if (i >= 1)
        for (const auto& v : detail::hom_map_columns(S, res.differential(i), X)) add_rel(v);
    for (const auto& v : rel_mid) add_rel(v);
    return Module<F>(res.ring, GradedMatrix<F>(std::move(ksrc), mid, std::move(kcols)),
                     GradedMatrix<F>(std::move(rsrc), mid, std::move(rcols)));
}

/// The Koszul complex on x_1..x_s over the ring: K_i = Λ^i R^s(-i), complete.
template <class F>
FreeResolution<F> koszul_complex(RingPtr<F> ring)
{
    const auto& S = ring->S();
    const std::size_t s = S.nvars();
    std::vector<std::vector<std::uint32_t>> subsets_by_size(s + 1);
    for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
        std::vector<std::uint32_t> sub;
        for (std::uint32_t v = 0; v < s; ++v)
            if (mask >> v & 1u) sub.push_back(v);
        subsets_by_size[sub.size()].push_back(mask);
    }
    FreeResolution<F> res;
    res.ring = ring;
    res.f0 = FreeModule::uniform(1, 0);
    res.complete = true;
    for (std::size_t i = 1; i <= s; ++i) {
        const auto& src = subsets_by_size[i];
        const auto& tgt = subsets_by_size[i - 1];
        std::vector<Vector<F>> cols;
        for (std::uint32_t mask : src) {
            std::vector<VTerm<F>> terms;
            int sign = 0;
            for (std::uint32_t v = 0; v < s; ++v) {
                if (!(mask >> v & 1u)) continue;
                std::uint32_t rest = mask & ~(1u << v);
                auto pos = static_cast<std::uint32_t>(std::find(tgt.begin(), tgt.end(), rest) - tgt.begin());
                auto c = sign % 2 ? S.field().neg(S.field().one()) : S.field().one();
                terms.push_back({Monomial::variable(s, v), pos, c});
                ++sign;
            }
            cols.push_back(make_vector(S, std::move(terms)));
        }
        res.differentials.emplace_back(FreeModule::uniform(src.size(), static_cast<int>(i)),
                                       FreeModule::uniform(tgt.size(), static_cast<int>(i) - 1), std::move(cols));
    }
    res.minimal = true;
    return res;
}

}  // namespace halg
