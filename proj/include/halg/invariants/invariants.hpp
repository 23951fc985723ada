#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "halg/invariants/analysis.hpp"

namespace halg {

template <class F>
std::pair<int, int> depth_and_dim(Session<F>& session, const Module<F>& M)
{
    auto a = session.analyze(M);
    return {a->depth(), a->dim()};
}

/// K^j(M) in minimal presentation over R; j must lie in [0, t].
template <class F>
Module<F> deficiency_module(Session<F>& session, const Module<F>& M, int j)
{
    auto a = session.analyze(M);
    if (a->is_zero() || j < 0 || j > a->dim())
        throw DomainError("deficiency index " + std::to_string(j) + " outside [0, dim M]");
    return a->deficiency(j)->module();
}

template <class F>
struct DeficiencyFamily {
    std::map<int, Module<F>> modules;  // 0 <= j <= t
    int t = kMinusInfinity;
    const Module<F>& canonical() const { return modules.at(t); }
};

template <class F>
DeficiencyFamily<F> deficiency_family(Session<F>& session, const Module<F>& M)
{
    auto a = session.analyze(M);
    DeficiencyFamily<F> fam;
    fam.t = a->dim();
    if (a->is_zero()) return fam;
    for (int j = 0; j <= fam.t; ++j) fam.modules.emplace(j, a->deficiency(j)->module());
    return fam;
}

template <class F>
std::vector<std::int64_t> bass_numbers(Session<F>& session, const Module<F>& M, std::size_t n)
{
    return session.analyze(M)->bass_list(n);
}

template <class F>
std::int64_t type_of(Session<F>& session, const Module<F>& M)
{
    return session.analyze(M)->type();
}

/// Ext^j_R(M, N) via Hom(minimal resolution of M, N).
template <class F>
Module<F> ext_module(Session<F>& session, const Module<F>& M, const Module<F>& N, std::size_t j)
{
    if (M.ring() != N.ring()) throw StructuralError("Ext of modules over different rings");
    auto res = session.resolutions().get(M, j + 1);
    return hom_homology_module(*res, prepare_coefficients(N), j);
}

template <class F>
HilbertData ext_hilbert(Session<F>& session, const Module<F>& M, const Module<F>& N, std::size_t j)
{
    if (M.ring() != N.ring()) throw StructuralError("Ext of modules over different rings");
    auto res = session.resolutions().get(M, j + 1);
    return hom_homology_hilbert(*res, prepare_coefficients(N), j);
}

/// M ⊕ N as a cokernel.
template <class F>
Module<F> direct_sum(const Module<F>& A, const Module<F>& B)
{
    if (A.ring() != B.ring()) throw StructuralError("direct sum over different rings");
    auto pa = minimal_presentation(A), pb = minimal_presentation(B);
    const auto& S = A.S();
    const auto shift = static_cast<std::uint32_t>(pa.ambient().rank());
    FreeModule amb = pa.ambient();
    amb.degrees.insert(amb.degrees.end(), pb.ambient().degrees.begin(), pb.ambient().degrees.end());
    FreeModule src = pa.relations().source;
    src.degrees.insert(src.degrees.end(), pb.relations().source.degrees.begin(), pb.relations().source.degrees.end());
    std::vector<Vector<F>> cols = pa.relations().columns;
    for (const auto& c : pb.relations().columns)
        cols.push_back(remap_positions<F>(S, c, [shift](std::uint32_t p) { return p + shift; }));
    return Module<F>::cokernel(A.ring(), GradedMatrix<F>(std::move(src), std::move(amb), std::move(cols)));
}

/// Finite projective dimension: with r = depth R - depth M, pd M < ∞ iff β_{r+1}(M) = 0.
struct Finiteness {
    bool finite = false;
    int value = -1;  // pd or id when finite
    long tested_index = -1;
};

template <class F>
Finiteness pd_finite(Session<F>& session, const Module<F>& M)
{
    auto a = session.analyze(M);
    if (a->is_zero()) return {true, -1, -1};
    const int r = session.ring_depth(M.ring()) - a->depth();
    if (r < 0) return {false, -1, r};
    const bool finite = a->betti(static_cast<std::size_t>(r + 1)) == 0;
    return {finite, finite ? r : -1, r + 1};
}

/// Finite injective dimension: id M < ∞ iff μ^{max(depth R, depth M)+1}(M) = 0.
template <class F>
Finiteness id_finite(Session<F>& session, const Module<F>& M)
{
    auto a = session.analyze(M);
    if (a->is_zero()) return {true, -1, -1};
    const int dR = session.ring_depth(M.ring());
    const int idx = std::max(dR, a->depth()) + 1;
    const bool finite = a->bass(static_cast<std::size_t>(idx)) == 0;
    return {finite, finite ? dR : -1, idx};
}

/// Minimal number of generators of I, dimension of R, and the complete intersection flag.
struct CompleteIntersection {
    std::size_t generators = 0;
    int codimension = 0;
    bool value = false;
};

template <class F>
CompleteIntersection complete_intersection(Session<F>& session, const RingPtr<F>& R)
{
    CompleteIntersection ci;
    const int d = session.ring_dim(R);
    ci.codimension = static_cast<int>(R->nvars()) - d;
    if (R->is_quotient()) {
        FreeModule src;
        std::vector<Vector<F>> cols;
        for (const auto& f : R->ideal()) {
            src.degrees.push_back(f.degree());
            cols.push_back(poly_at(f, 0));
        }
        Module<F> I(R->cover(), GradedMatrix<F>(src, FreeModule::uniform(1), cols),
                    GradedMatrix<F>::empty(FreeModule::uniform(1)));
        ci.generators = minimal_generator_count(I);
    }
    (void)session;
    ci.value = static_cast<int>(ci.generators) == ci.codimension;
    return ci;
}

/// Equidimensionality when M viewed over S is a cyclic monomial quotient S/J:
/// all minimal primes of J (minimal vertex covers of the supports) have equal size.
template <class F>
std::optional<bool> monomial_equidimensional(const Module<F>& M)
{
    Module<F> P = minimal_presentation(M.lift());
    if (P.ambient().rank() != 1) return std::nullopt;
    const std::size_t s = P.S().nvars();
    std::vector<std::uint32_t> supports;
    for (const auto& c : P.relations().columns) {
        if (c.size() != 1) return std::nullopt;
        std::uint32_t mask = 0;
        for (std::size_t v = 0; v < s; ++v)
            if (c.lead().mono[v] > 0) mask |= 1u << v;
        supports.push_back(mask);
    }
    if (supports.empty()) return true;
    std::vector<std::uint32_t> covers;
    for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
        bool cover = std::all_of(supports.begin(), supports.end(), [mask](std::uint32_t g) { return (g & mask) != 0; });
        if (cover) covers.push_back(mask);
    }
    std::set<int> sizes;
    for (std::uint32_t c : covers) {
        bool minimal = true;
        for (std::uint32_t d : covers)
            if (d != c && (d & c) == d) minimal = false;
        if (minimal) sizes.insert(__builtin_popcount(c));
    }
    return sizes.size() == 1;
}

/// Largest k with dim K^j(M) <= j - k for all j < t (dim 0 = -∞), capped at t.
/// Meaningful as Serre's S_k only for equidimensional M.
template <class F>
int serre_bound(Session<F>& session, const Module<F>& M)
{
    auto a = session.analyze(M);
    const int t = a->dim();
    int k = t;
    for (int j = 0; j < t; ++j) {
        const int dj = a->deficiency(j)->dim();
        if (dj == kMinusInfinity) continue;
        k = std::min(k, j - dj);
    }
    return k;
}

/// depth via Koszul homology: s - max{i : H_i(x; M) != 0} over the cover.
template <class F>
int koszul_depth(const Module<F>& M)
{
    Module<F> lifted = M.lift();
    auto K = koszul_complex(lifted.ring());
    auto X = prepare_coefficients(lifted);
    const int s = static_cast<int>(M.S().nvars());
    for (int i = s; i >= 0; --i)
        if (!tensor_homology_hilbert(K, X, static_cast<std::size_t>(i)).is_zero()) return s - i;
    return kPlusInfinity;
}

template <class F>
struct ModuleProfile {
    int g = kPlusInfinity;
    int t = kMinusInfinity;
    std::vector<std::int64_t> betti;
    std::vector<std::int64_t> bass;
    std::int64_t type_value = 0;
    bool is_cm = false;
    bool is_gcm = false;
    bool is_ccm = false;
    Finiteness pd;
    Finiteness id;
};

template <class F>
ModuleProfile<F> module_profile(Session<F>& session, const Module<F>& M, int bound)
{
    auto a = session.analyze(M);
    ModuleProfile<F> p;
    p.g = a->depth();
    p.t = a->dim();
    p.betti = a->betti_list(static_cast<std::size_t>(bound));
    p.bass = a->bass_list(static_cast<std::size_t>(bound));
    p.type_value = a->type();
    if (!a->is_zero()) {
        p.is_cm = a->is_cohen_macaulay();
        p.is_gcm = a->is_generalized_cm();
        p.is_ccm = a->is_canonically_cm();
    }
    p.pd = pd_finite(session, M);
    p.id = id_finite(session, M);
    return p;
}

}  // namespace halg
