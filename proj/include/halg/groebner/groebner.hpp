#pragma once

#include <map>
#include <numeric>
#include <vector>

#include "halg/core/matrix.hpp"
#include "halg/core/ring.hpp"
#include "halg/groebner/engine.hpp"

namespace halg {

template <class F>
struct GroebnerBasis {
    FreeModule module;
    std::vector<Vector<F>> elements;
    bool reduced = false;
};

/// Reduced Gröbner basis of the submodule generated by `gens`.
template <class F>
GroebnerBasis<F> reduced_groebner(const PolyRing<F>& ring, const FreeModule& module, const std::vector<Vector<F>>& gens)
{
    GroebnerEngine<F> e(ring, module);
    for (const auto& g : gens) {
        if (!is_homogeneous(g, module)) throw HomogeneityError("inhomogeneous generator");
        e.add(g);
    }
    e.complete();
#ifndef NDEBUG
    if (!e.satisfies_buchberger_criterion()) throw EngineError("Buchberger post-check failed");
#endif
    return {module, e.reduced_basis(), true};
}

template <class F>
Vector<F> normal_form(const PolyRing<F>& ring, const Vector<F>& v, const GroebnerBasis<F>& G)
{
    GroebnerEngine<F> e(ring, G.module);
    e.add_basis(G.elements);
    return e.reduce(v, true);
}

/// Graded Nakayama selection: indices of a minimal generating subset of
/// `candidates` modulo the span of `seed_gb` (already a Gröbner basis) and
/// `seeds`. Candidates are visited by degree, then by index.
template <class F>
std::vector<std::size_t> minimal_generator_indices(const PolyRing<F>& ring, const FreeModule& module,
                                                   const std::vector<Vector<F>>& candidates,
                                                   const std::vector<Vector<F>>& seed_gb,
                                                   const std::vector<Vector<F>>& seeds = {})
{
    GroebnerEngine<F> e(ring, module);
    e.add_basis(seed_gb);
    std::map<int, std::vector<std::size_t>> cand_by_deg;
    std::map<int, std::vector<std::size_t>> seed_by_deg;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (!candidates[i].is_zero()) cand_by_deg[candidates[i].degree(module)].push_back(i);
    for (std::size_t i = 0; i < seeds.size(); ++i)
        if (!seeds[i].is_zero()) seed_by_deg[seeds[i].degree(module)].push_back(i);
    std::vector<int> degrees;
    for (auto& [d, _] : cand_by_deg) degrees.push_back(d);
    for (auto& [d, _] : seed_by_deg) degrees.push_back(d);
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

    std::vector<std::size_t> selected;
    for (int d : degrees) {
        if (auto it = seed_by_deg.find(d); it != seed_by_deg.end())
            for (std::size_t i : it->second) e.add(seeds[i]);
        e.complete(d);
        auto it = cand_by_deg.find(d);
        if (it == cand_by_deg.end()) continue;
        for (std::size_t i : it->second) {
            if (e.add(candidates[i])) {
                selected.push_back(i);
                e.complete(d);
            }
        }
    }
    return selected;
}

/// Gröbner basis of {a : Σ a_j columns_j ∈ span(seed_gb ∪ seeds)} inside the
/// free module with one position per column, computed by completing the
/// augmented module (column_j, e_j) with the target positions dominant.
/// `tracking_gb` (a Gröbner basis inside the column module) is added to the
/// kernel side, e.g. I·e_j when only the kernel modulo I matters.
template <class F>
std::vector<Vector<F>> syzygy_basis(const PolyRing<F>& ring, const GradedMatrix<F>& m,
                                    const std::vector<Vector<F>>& seed_gb, const std::vector<Vector<F>>& seeds = {},
                                    const std::vector<Vector<F>>& tracking_gb = {})
{
    const std::uint32_t r = static_cast<std::uint32_t>(m.target.rank());
    FreeModule aug = m.target;
    aug.degrees.insert(aug.degrees.end(), m.source.degrees.begin(), m.source.degrees.end());
    GroebnerEngine<F> e(ring, aug);
    e.add_basis(seed_gb);
    std::vector<Vector<F>> shifted;
    for (const auto& t : tracking_gb)
        shifted.push_back(remap_positions<F>(ring, t, [r](std::uint32_t p) { return p + r; }));
    e.add_basis(shifted);
    for (const auto& s : seeds) e.add(s);
    for (std::uint32_t j = 0; j < m.cols(); ++j) {
        std::vector<VTerm<F>> terms = m.columns[j].terms();
        terms.push_back({ring.one_monomial(), r + j, ring.field().one()});
        e.add(Vector<F>(std::move(terms)));
    }
    e.complete();
    std::vector<Vector<F>> out;
    for (const auto& g : e.elements()) {
        if (g.lead().pos < r) continue;
        out.push_back(remap_positions<F>(ring, g, [r](std::uint32_t p) { return p - r; }));
    }
    return out;
}

/// Minimal homogeneous generators of the syzygy module of the columns of m,
/// as a matrix from a new free module into m.source.
template <class F>
GradedMatrix<F> syzygy_generators(const PolyRing<F>& ring, const GradedMatrix<F>& m)
{
    auto syz = syzygy_basis(ring, m, {});
    auto idx = minimal_generator_indices(ring, m.source, syz, {});
    FreeModule src;
    std::vector<Vector<F>> cols;
    for (std::size_t i : idx) {
        src.degrees.push_back(syz[i].degree(m.source));
        cols.push_back(syz[i]);
    }
    return GradedMatrix<F>(std::move(src), m.source, std::move(cols));
}

/// Minimal generators of ker(A: R^a -> R^b) over R = S/I, entries reduced
/// modulo I. Routed through the S-lift [A | I·e_1 .. I·e_b].
template <class F>
GradedMatrix<F> kernel_over_quotient(const RingDescriptor<F>& R, const GradedMatrix<F>& A)
{
    A.validate();
    const auto& S = R.S();
    if (!R.is_quotient()) return syzygy_generators(S, A);
    auto seeds = R.ideal_lift(A.target);
    auto track = R.ideal_lift(A.source);
    auto syz = syzygy_basis(S, A, seeds, {}, track);
    std::vector<Vector<F>> cands;
    cands.reserve(syz.size());
    for (const auto& v : syz) cands.push_back(R.reduce_mod_ideal(v, A.source));
    auto idx = minimal_generator_indices(S, A.source, cands, track);
    FreeModule src;
    std::vector<Vector<F>> cols;
    for (std::size_t i : idx) {
        src.degrees.push_back(cands[i].degree(A.source));
        cols.push_back(cands[i]);
    }
    return GradedMatrix<F>(std::move(src), A.source, std::move(cols));
}

}  // namespace halg
