#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "halg/invariants/invariants.hpp"
#include "halg/verify/numbers.hpp"
#include "halg/verify/outcome.hpp"

namespace halg {

/// One module under test together with facts asserted by its corpus entry.
template <class F>
struct Subject {
    std::string id;
    std::string ring_id;
    Module<F> module;
    std::optional<bool> equidimensional;  // asserted; computed when absent and possible
    std::optional<int> serre;             // asserted S_k
};

template <class F>
struct CheckContext {
    Session<F>& session;
    Numbers<F>& numbers;
    int bound;  // N
};

/// Isomorphism evidence A ≅ B(-twist): equal Hilbert series and equal complete
/// graded Betti tables over the cover after one global twist. Equality of these
/// invariants is necessary, not sufficient.
struct IsoEvidence {
    bool consistent = false;
    std::optional<int> twist;
    std::string detail;
};

template <class F>
IsoEvidence iso_evidence(Analysis<F>& A, Analysis<F>& B)
{
    IsoEvidence ev;
    if (A.is_zero() || B.is_zero()) {
        ev.consistent = A.is_zero() && B.is_zero();
        if (ev.consistent) ev.twist = 0;
        ev.detail = ev.consistent ? "both zero" : "exactly one side is zero";
        return ev;
    }
    auto max_deg = [](const Module<F>& M) {
        const auto& d = M.ambient().degrees;
        int m = 0;
        for (int x : d) m = std::max(m, std::abs(x));
        return m;
    };
    const int W = static_cast<int>(A.nvars()) + std::max(max_deg(A.module()), max_deg(B.module()));
    const auto ta = A.cover_betti();
    const auto tb = B.cover_betti();
    // prefer the smallest |δ|
    for (int k = 0; k <= 2 * W; ++k) {
        const int delta = k % 2 ? (k + 1) / 2 : -(k / 2);
        if (std::abs(delta) > W) continue;
        if (!(A.hilbert() == B.hilbert().shifted(delta))) continue;
        if (!(ta == tb.shifted(delta))) continue;
        ev.consistent = true;
        ev.twist = delta;
        ev.detail = "Hilbert series and graded Betti tables agree at twist " + std::to_string(delta);
        return ev;
    }
    ev.detail = "no twist in [-" + std::to_string(W) + ", " + std::to_string(W) + "] matches";
    return ev;
}

namespace detail {

inline std::int64_t dim_witness(int d) { return d == kMinusInfinity ? kWitnessMinusInfinity : d; }

template <class F>
bool all_finite(Session<F>& session, const std::vector<typename Analysis<F>::Ptr>& mods, bool projective)
{
    for (const auto& a : mods) {
        auto f = projective ? pd_finite(session, a->module()) : id_finite(session, a->module());
        if (!f.finite) return false;
    }
    return true;
}

template <class F>
std::vector<typename Analysis<F>::Ptr> deficiencies(Analysis<F>& a, int lo, int hi)
{
    std::vector<typename Analysis<F>::Ptr> v;
    for (int i = std::max(lo, 0); i <= hi; ++i) v.push_back(a.deficiency(i));
    return v;
}

template <class F>
std::optional<bool> equidimensional(const Subject<F>& subj)
{
    if (subj.equidimensional) return subj.equidimensional;
    return monomial_equidimensional(subj.module);
}

inline std::int64_t as_flag(bool b) { return b ? 1 : 0; }

}  // namespace detail

/// dim K^j <= j, dim K(M) = t, vanishing outside [g, t]; with equidimensionality,
/// the S_k dimension bounds and the CM criterion through CCM and S_2.
template <class F>
CheckOutcome check_schenzel_bounds(CheckContext<F>& ctx, const Subject<F>& subj)
{
    Recorder rec(subj.id, "schenzel_bounds");
    auto a = ctx.session.analyze(subj.module);
    if (a->is_zero()) {
        rec.skip("all", "zero module");
        return rec.finish();
    }
    const int s = static_cast<int>(a->nvars());
    const int g = a->depth(), t = a->dim();
    rec.window(0, s);
    for (int j = 0; j <= s; ++j) {
        const int dj = a->deficiency(j)->dim();
        rec.compare("dim_deficiency_le_index", j, detail::dim_witness(dj), Rel::le, j);
        if (j < g || j > t) rec.require("deficiency_vanishes_outside_depth_dim", dj == kMinusInfinity, j, detail::dim_witness(dj), kWitnessMinusInfinity);
    }
    rec.compare("dim_canonical_equals_dim", t, a->canonical()->dim(), Rel::eq, t);
    rec.require("deficiency_at_depth_nonzero", a->deficiency(g)->dim() != kMinusInfinity, g, 0, 1);

    auto equi = detail::equidimensional(subj);
    if (subj.serre) {
        const int k = *subj.serre;
        if (!equi) {
            rec.unknown("serre_dimension_bounds", "equidimensionality not decidable for this presentation");
        } else if (!*equi) {
            rec.skip("serre_dimension_bounds", "module is not equidimensional");
        } else {
            for (int j = 0; j < t; ++j)
                rec.compare("serre_dimension_bound", j, detail::dim_witness(a->deficiency(j)->dim()), Rel::le, j - k);
        }
    } else {
        rec.skip("serre_dimension_bounds", "no S_k asserted");
    }
    if (equi) {
        bool s2 = true;
        for (int j = 0; j < t; ++j) {
            const int dj = a->deficiency(j)->dim();
            if (dj != kMinusInfinity && dj > j - 2) s2 = false;
        }
        const bool rhs = *equi && a->is_canonically_cm() && s2;
        rec.require("cm_iff_equidimensional_ccm_s2", a->is_cohen_macaulay() == rhs, 0, detail::as_flag(a->is_cohen_macaulay()),
                    detail::as_flag(rhs));
        rec.note(std::string("equidimensional: ") + (*equi ? "yes" : "no") + (subj.equidimensional ? " (asserted)" : " (computed)"));
    } else {
        rec.unknown("cm_criterion", "equidimensionality not decidable for this presentation");
    }
    return rec.finish();
}

/// Upper bounds on Bass numbers from the Betti numbers of the deficiency modules:
/// μ^j(M) <= Σ_{i=g}^{t} β_{j-i}(K^i(M)). The Tor index is p = j - i, as forced by
/// type(M) = β_0(K^g(M)); with j + i the bound already fails for M = S.
template <class F>
CheckOutcome check_bass_bounds(CheckContext<F>& ctx, const Subject<F>& subj)
{
    Recorder rec(subj.id, "bass_bounds");
    auto a = ctx.session.analyze(subj.module);
    if (a->is_zero()) {
        rec.skip("all", "zero module");
        return rec.finish();
    }
    auto& nb = ctx.numbers;
    const int g = a->depth(), t = a->dim();
    const int N = ctx.bound;
    rec.window(0, N);
    auto K = [&](int i) { return a->deficiency(i); };
    for (int j = 0; j <= N; ++j) {
        std::int64_t sum = 0;
        for (int i = g; i <= t; ++i) sum += nb.betti(*K(i), j - i);
        rec.compare("bass_le_sum_of_deficiency_betti", j, nb.bass(*a, j), Rel::le, sum);
    }
    const std::int64_t b0 = nb.betti(*K(g), 0);
    rec.compare("type_equals_beta0_of_first_deficiency", g, nb.bass(*a, g), Rel::eq, b0);
    rec.require("type_one_iff_first_deficiency_cyclic", (nb.bass(*a, g) == 1) == (b0 == 1), g, nb.bass(*a, g), b0);
    {
        const std::int64_t lhs = nb.bass(*a, g + 2) - nb.bass(*a, g + 1);
        const std::int64_t next = g + 1 <= t ? nb.betti(*K(g + 1), 0) : 0;
        const std::int64_t rhs = nb.betti(*K(g), 2) - nb.betti(*K(g), 1) - next;
        // Read off the five-term sequence: the rank of Ext-dual(μ^{g+2}) -> Tor_2(K^g) is
        // β₂ − β₀(K^{g+1}) + μ^{g+1} − β₁ and at most μ^{g+2}, so the difference is bounded below.
        rec.compare("bass_second_difference", g + 2, lhs, Rel::ge, rhs);
        rec.compare("first_deficiency_beta1_le_bass", g + 1, nb.betti(*K(g), 1), Rel::le, nb.bass(*a, g + 1));
    }
    if (a->is_cohen_macaulay()) {
        auto Kc = a->canonical();
        rec.compare("cm_canonical_bass_difference", t + 2, nb.bass(*Kc, t + 2) - nb.bass(*Kc, t + 1), Rel::ge,
                    nb.betti(*a, 2) - nb.betti(*a, 1));
    } else {
        rec.skip("cm_canonical_bass_difference", "module is not Cohen-Macaulay");
    }
    if (id_finite(ctx.session, subj.module).finite) {
        const std::int64_t next = g + 1 <= t ? nb.betti(*K(g + 1), 0) : 0;
        rec.compare("finite_id_deficiency_betti", g + 1, next, Rel::ge, nb.betti(*K(g), 2) - nb.betti(*K(g), 1));
    } else {
        rec.skip("finite_id_deficiency_betti", "id M infinite");
    }
    return rec.finish();
}

/// Upper bounds on Betti numbers from the Bass numbers of the deficiency modules.
template <class F>
CheckOutcome check_betti_bounds(CheckContext<F>& ctx, const Subject<F>& subj)
{
    Recorder rec(subj.id, "betti_bounds");
    auto a = ctx.session.analyze(subj.module);
    if (a->is_zero()) {
        rec.skip("all", "zero module");
        return rec.finish();
    }
    auto& nb = ctx.numbers;
    const int g = a->depth(), t = a->dim();
    const int N = ctx.bound;
    rec.window(0, N);
    auto K = [&](int i) { return a->deficiency(i); };
    auto Kc = a->canonical();
    for (int j = 0; j <= N; ++j) {
        std::int64_t sum = 0;
        for (int i = g; i <= t; ++i) sum += nb.bass(*K(i), j + i);
        rec.compare("betti_le_sum_of_deficiency_bass", j, nb.betti(*a, j), Rel::le, sum);
    }
    rec.compare("canonical_bass0", 0, nb.bass(*Kc, 0), Rel::eq, nb.betti(*a, -t));
    rec.compare("canonical_bass1_le_betti", 1, nb.bass(*Kc, 1), Rel::le, nb.betti(*a, -t + 1));
    {
        const std::int64_t prev = t >= 1 ? nb.bass(*K(t - 1), 0) : 0;
        rec.compare("betti_second_difference", -t + 2, nb.betti(*a, -t + 2) - nb.betti(*a, -t + 1), Rel::ge,
                    nb.bass(*Kc, 2) - nb.bass(*Kc, 1) - prev);
    }
    const std::int64_t d21 = nb.bass(*Kc, 2) - nb.bass(*Kc, 1);
    switch (t) {
    case 0:
        rec.compare("dim0_beta0_equals_canonical_mu0", 0, nb.betti(*a, 0), Rel::eq, nb.bass(*Kc, 0));
        rec.compare("dim0_betti_difference_equals_bass_difference", 2, nb.betti(*a, 2) - nb.betti(*a, 1), Rel::eq, d21);
        break;
    case 1:
        rec.compare("dim1_difference", 1, nb.betti(*a, 1) - nb.betti(*a, 0), Rel::ge, d21 - nb.bass(*K(0), 0));
        break;
    case 2:
        rec.compare("dim2_difference", 0, nb.betti(*a, 0), Rel::ge, d21 - nb.bass(*K(1), 0));
        break;
    default:
        rec.compare("dim_ge3_difference", t - 1, nb.bass(*K(t - 1), 0), Rel::ge, d21);
        break;
    }
    if (t > 0) rec.require("canonical_positive_depth", Kc->depth() > 0, 0, Kc->depth() == kPlusInfinity ? INT64_MAX : Kc->depth(), 1);
    return rec.finish();
}

/// Betti and Bass numbers of M and K(M) trade places under the CM hypotheses.
template <class F>
CheckOutcome check_foxby_cm(CheckContext<F>& ctx, const Subject<F>& subj)
{
    Recorder rec(subj.id, "foxby_cm");
    auto a = ctx.session.analyze(subj.module);
    if (a->is_zero()) {
        rec.skip("all", "zero module");
        return rec.finish();
    }
    const int t = a->dim();
    bool applies = a->is_cohen_macaulay();
    if (!applies) {
        if (!a->is_generalized_cm()) {
            rec.skip("all", "module is neither Cohen-Macaulay nor generalized Cohen-Macaulay");
            return rec.finish();
        }
        if (!a->is_canonically_cm()) {
            rec.skip("all", "canonical module is not Cohen-Macaulay");
            return rec.finish();
        }
        for (int i = 0; i <= std::min(1, t - 1); ++i)
            if (a->deficiency(i)->depth() == 0) {
                rec.skip("all", "depth K^" + std::to_string(i) + " = 0");
                return rec.finish();
            }
        rec.note("hypothesis: generalized CM, canonically CM, K^0 and K^1 of positive depth");
    } else {
        rec.note("hypothesis: Cohen-Macaulay");
    }
    auto& nb = ctx.numbers;
    auto Kc = a->canonical();
    const int N = ctx.bound;
    rec.window(0, N);
    for (int j = 0; j <= N; ++j) {
        rec.compare("betti_equals_canonical_bass", j, nb.betti(*a, j), Rel::eq, nb.bass(*Kc, j + t));
        rec.compare("bass_equals_canonical_betti", j, nb.bass(*a, j), Rel::eq, nb.betti(*Kc, j - t));
    }
    rec.require("canonical_is_cm", Kc->is_cohen_macaulay(), t, Kc->depth(), t);
    rec.compare("canonical_dim", t, Kc->dim(), Rel::eq, t);
    auto KK = Kc->canonical();
    auto ev = iso_evidence(*KK, *a);
    rec.require("double_canonical_iso_evidence", ev.consistent, 0, 0, 1);
    rec.note("K(K(M)) vs M: " + ev.detail);
    const bool pd = pd_finite(ctx.session, subj.module).finite, idK = id_finite(ctx.session, Kc->module()).finite;
    const bool id = id_finite(ctx.session, subj.module).finite, pdK = pd_finite(ctx.session, Kc->module()).finite;
    rec.require("pd_finite_iff_canonical_id_finite", pd == idK, 0, detail::as_flag(pd), detail::as_flag(idK));
    rec.require("id_finite_iff_canonical_pd_finite", id == pdK, 0, detail::as_flag(id), detail::as_flag(pdK));
    return rec.finish();
}

/// Structure of generalized Cohen-Macaulay modules: double deficiency modules,
/// the four-term exact sequence through Hilbert series, depth of K(M).
template <class F>
CheckOutcome check_gcm_structure(CheckContext<F>& ctx, const Subject<F>& subj)
{
    Recorder rec(subj.id, "gcm_structure");
    auto a = ctx.session.analyze(subj.module);
    if (a->is_zero()) {
        rec.skip("all", "zero module");
        return rec.finish();
    }
    if (!a->is_generalized_cm()) {
        rec.skip("all", "module is not generalized Cohen-Macaulay");
        return rec.finish();
    }
    (void)ctx;
    const int t = a->dim();
    rec.window(0, t);
    auto Kc = a->canonical();
    auto KK = [&](int j) { return Kc->deficiency(j); };  // K^j(K(M))
    auto len = [](const typename Analysis<F>::Ptr& x) { return x->is_zero() ? std::int64_t{0} : x->length(); };

    rec.require("canonical_is_gcm", Kc->is_generalized_cm(), t, 0, 1);
    if (t == 0) {
        auto ev = iso_evidence(*KK(0), *a);
        rec.compare("dim0_double_dual_length", 0, len(KK(0)), Rel::eq, a->length());
        rec.require("dim0_double_dual_iso_evidence", ev.consistent, 0, 0, 1);
        rec.note("K^0(K(M)) vs M: " + ev.detail);
        return rec.finish();
    }
    rec.compare("double_deficiency0_vanishes", 0, len(KK(0)), Rel::eq, 0);
    if (t >= 2) rec.compare("double_deficiency1_vanishes", 1, len(KK(1)), Rel::eq, 0);
    rec.require("canonical_depth_bound", Kc->depth() >= std::min(t, 2), 0, Kc->depth(), std::min(t, 2));
    if (t <= 2) {
        rec.require("low_dim_canonical_is_cm", Kc->is_cohen_macaulay(), t, Kc->depth(), t);
    }
    if (t >= 3) {
        rec.compare("double_deficiency2_length", 2, len(KK(2)), Rel::eq, len(a->deficiency(t - 1)->deficiency(0)));
        for (int j = 1; j <= t - 2; ++j) {
            auto lhs = KK(t - j);
            auto rhs = a->deficiency(j + 1)->deficiency(0);
            rec.compare("double_deficiency_length", j, len(lhs), Rel::eq, len(rhs));
            auto ev = iso_evidence(*lhs, *rhs);
            rec.require("double_deficiency_iso_evidence", ev.consistent, j, 0, 1);
        }
    }
    // 0 -> K^0(K^0 M) -> M -> K(K(M)) -> K^0(K^1 M) -> 0
    {
        auto A0 = a->deficiency(0)->deficiency(0);
        auto A1 = t >= 1 ? a->deficiency(1)->deficiency(0) : nullptr;
        auto D = Kc->canonical();
        const int n = static_cast<int>(a->nvars());
        HilbertData zero(LaurentPoly(), n);
        auto hs = [&](const typename Analysis<F>::Ptr& x) { return !x || x->is_zero() ? zero : x->hilbert(); };
        std::optional<int> found;
        const int W = n + 4;
        for (int k = 0; k <= 2 * W && !found; ++k) {
            const int delta = k % 2 ? (k + 1) / 2 : -(k / 2);
            HilbertData sum = hs(A0).shifted(delta) - a->hilbert() + hs(D).shifted(delta) - hs(A1).shifted(delta);
            if (sum.is_zero()) found = delta;
        }
        rec.require("four_term_sequence_hilbert", found.has_value(), 0, 0, 1);
        if (found) rec.note("four-term sequence balances at twist " + std::to_string(*found));
    }
    // with K^0 = K^1 = 0 in positive depth the module is its own double dual
    bool reflexive = true;
    for (int i = 0; i <= std::min(1, t - 1); ++i)
        if (a->deficiency(i)->depth() == 0) reflexive = false;
    if (reflexive) {
        auto ev = iso_evidence(*Kc->canonical(), *a);
        rec.require("positive_depth_double_dual_iso_evidence", ev.consistent, 0, 0, 1);
        rec.note("K(K(M)) vs M: " + ev.detail);
    } else {
        rec.skip("positive_depth_double_dual", "K^0 or K^1 has depth 0");
    }
    return rec.finish();
}

/// Stable tails: equalities of Betti/Bass numbers beyond explicit thresholds.
template <class F>
CheckOutcome check_tail_equalities(CheckContext<F>& ctx, const Subject<F>& subj)
{
    Recorder rec(subj.id, "tail_equalities");
    auto a = ctx.session.analyze(subj.module);
    if (a->is_zero()) {
        rec.skip("all", "zero module");
        return rec.finish();
    }
    auto& session = ctx.session;
    auto& nb = ctx.numbers;
    const int s = static_cast<int>(a->nvars());
    const int g = a->depth(), t = a->dim();
    const int dR = session.ring_depth(a->ring());
    auto Kc = a->canonical();
    auto K = [&](int i) { return a->deficiency(i); };
    constexpr int kWidth = 4;

    auto first_failing = [&](int lo, int hi, bool projective) -> std::optional<int> {
        for (int i = lo; i <= hi; ++i) {
            auto f = projective ? pd_finite(session, K(i)->module()) : id_finite(session, K(i)->module());
            if (!f.finite) return i;
        }
        return std::nullopt;
    };

    if (auto bad = first_failing(g, t - 1, true)) {
        rec.skip("bass_tail", "pd K^" + std::to_string(*bad) + " infinite");
    } else {
        const int th = dR + t;
        rec.window(th + 1, th + kWidth);
        for (int j = th + 1; j <= th + kWidth; ++j)
            rec.compare("bass_tail", j, nb.bass(*a, j), Rel::eq, nb.betti(*Kc, j - t));
        const bool id = id_finite(session, subj.module).finite, pdK = pd_finite(session, Kc->module()).finite;
        rec.require("bass_tail_id_iff_canonical_pd", id == pdK, 0, detail::as_flag(id), detail::as_flag(pdK));
    }
    if (auto bad = first_failing(g, t - 1, false)) {
        rec.skip("betti_tail", "id K^" + std::to_string(*bad) + " infinite");
    } else {
        const int th = s + dR - t - g;
        rec.window(th + 1, th + kWidth);
        for (int j = th + 1; j <= th + kWidth; ++j)
            rec.compare("betti_tail", j, nb.betti(*a, j), Rel::eq, nb.bass(*Kc, j + t));
        const bool pd = pd_finite(session, subj.module).finite, idK = id_finite(session, Kc->module()).finite;
        rec.require("betti_tail_pd_iff_canonical_id", pd == idK, 0, detail::as_flag(pd), detail::as_flag(idK));
    }

    // two non-vanishing deficiency modules K^g and K^t, g < t
    bool two_lines = g < t;
    for (int i = 0; i <= s && two_lines; ++i)
        if (i != g && i != t && !K(i)->is_zero()) two_lines = false;
    if (!two_lines) {
        const std::string why = g == t ? "depth equals dimension" : "a deficiency module other than K^g, K^t is nonzero";
        rec.skip("two_module_betti_shift", why);
        rec.skip("two_module_bass_shift", why);
        return rec.finish();
    }
    auto Kg = K(g);
    if (!id_finite(session, subj.module).finite) {
        rec.skip("two_module_betti_shift", "id M infinite");
    } else {
        const int th = dR - g + 1;
        rec.window(th + 1, th + kWidth);
        for (int j = th + 1; j <= th + kWidth; ++j)
            rec.compare("two_module_betti_shift", j, nb.betti(*Kg, j), Rel::eq, nb.betti(*Kc, j + g - t - 1));
    }
    auto pd = pd_finite(session, subj.module);
    if (!pd.finite) {
        rec.skip("two_module_bass_shift", "pd M infinite");
    } else {
        const int th = pd.value + 1;
        rec.window(th + 1, th + kWidth);
        for (int j = th + 1; j <= th + kWidth; ++j)
            rec.compare("two_module_bass_shift", j, nb.bass(*Kg, j), Rel::eq, nb.bass(*Kc, j - g + t + 1));
    }
    return rec.finish();
}

/// Ring-level: Betti and Bass numbers of k detect complete intersections.
template <class F>
CheckOutcome check_ci_characterization(CheckContext<F>& ctx, const std::string& ring_id, const RingPtr<F>& R)
{
    Recorder rec(ring_id, "ci_characterization");
    auto& nb = ctx.numbers;
    auto k = ctx.session.analyze(residue_field(R));
    const auto e = static_cast<std::int64_t>(R->nvars());
    const std::int64_t d = ctx.session.ring_dim(R);
    auto ci = complete_intersection(ctx.session, R);
    const std::int64_t c2 = e * (e - 1) / 2;
    rec.window(0, 2);
    rec.compare("beta1_of_k_equals_embedding_dimension", 1, nb.betti(*k, 1), Rel::eq, e);
    const std::int64_t b2 = nb.betti(*k, 2);
    rec.require("beta2_of_k_detects_ci", (b2 == c2 + e - d) == ci.value, 2, b2, c2 + e - d);
    const std::int64_t m21 = nb.bass(*k, 2) - nb.bass(*k, 1);
    rec.require("bass_difference_of_k_detects_ci", (m21 == c2 - d) == ci.value, 2, m21, c2 - d);
    rec.compare("k_betti_difference_equals_bass_difference", 2, b2 - nb.betti(*k, 1), Rel::eq, m21);
    rec.note("minimal generators of I: " + std::to_string(ci.generators) + ", codimension " + std::to_string(ci.codimension) +
             (ci.value ? ", complete intersection" : ", not a complete intersection"));
    return rec.finish();
}

/// Finiteness of pd/id transferred between M and its deficiency modules.
template <class F>
CheckOutcome check_finiteness_transfer(CheckContext<F>& ctx, const Subject<F>& subj)
{
    Recorder rec(subj.id, "finiteness_transfer");
    auto a = ctx.session.analyze(subj.module);
    if (a->is_zero()) {
        rec.skip("all", "zero module");
        return rec.finish();
    }
    auto& session = ctx.session;
    const int s = static_cast<int>(a->nvars());
    const int g = a->depth(), t = a->dim();
    const auto& R = a->ring();
    const bool pdK = detail::all_finite(session, detail::deficiencies(*a, g, t), true);
    const bool idK = detail::all_finite(session, detail::deficiencies(*a, 0, s), false);
    const bool ring_cm = session.ring_depth(R) == session.ring_dim(R);
    if (pdK) {
        const bool id = id_finite(session, subj.module).finite;
        rec.require("finite_pd_deficiency_gives_finite_id", id, 0, detail::as_flag(id), 1);
        rec.require("finite_pd_deficiency_gives_cm_ring", ring_cm, 0, detail::as_flag(ring_cm), 1);
    } else {
        rec.skip("finite_pd_deficiency", "some pd K^i infinite");
    }
    if (idK) {
        const bool pd = pd_finite(session, subj.module).finite;
        rec.require("finite_id_deficiency_gives_finite_pd", pd, 0, detail::as_flag(pd), 1);
        const int dimR = session.ring_dim(R);
        Module<F> target = direct_sum(subj.module, Module<F>::free(R, FreeModule::uniform(1)));
        bool vanish = true;
        int first = -1;
        for (int j = 1; j <= dimR && vanish; ++j)
            if (!ext_hilbert(session, subj.module, target, static_cast<std::size_t>(j)).is_zero()) {
                vanish = false;
                first = j;
            }
        rec.window(1, dimR);
        if (vanish) {
            const bool free = a->module().relations().cols() == 0;
            rec.require("vanishing_ext_gives_free", free, 0, detail::as_flag(free), 1);
        } else {
            rec.skip("vanishing_ext_gives_free", "Ext^" + std::to_string(first) + "(M, M + R) is nonzero");
        }
    } else {
        rec.skip("finite_id_deficiency", "some id K^i infinite");
    }
    return rec.finish();
}

/// The two open questions: compare both sides, no claim either way.
template <class F>
std::vector<CheckOutcome> explore_questions(CheckContext<F>& ctx, const Subject<F>& subj)
{
    auto a = ctx.session.analyze(subj.module);
    auto& session = ctx.session;
    std::vector<CheckOutcome> out;
    auto make = [&](const std::string& name, bool lhs, const std::vector<Witness>& sides) {
        CheckOutcome o;
        o.module_id = subj.id;
        o.check = name;
        o.witnesses = sides;
        (void)lhs;
        return o;
    };
    if (a->is_zero()) {
        for (const char* q : {"question_1", "question_2"}) {
            CheckOutcome o = make(q, false, {});
            o.status = Status::skip;
            o.reason = "zero module";
            out.push_back(o);
        }
        return out;
    }
    const int g = a->depth(), t = a->dim();
    auto settle = [](CheckOutcome& o, bool lhs, bool rhs) {
        o.verdict = lhs == rhs ? "AGREE" : "COUNTEREXAMPLE";
        o.status = lhs == rhs ? Status::pass : Status::fail;
    };
    {
        const auto id = id_finite(session, subj.module);
        std::vector<Witness> w{{"id_M_finite_vs_all_pd_deficiency_finite", -1, 0, 0}};
        bool all = true;
        for (int i = g; i <= t; ++i) {
            auto f = pd_finite(session, a->deficiency(i)->module());
            all = all && f.finite;
            w.push_back({"pd_deficiency_finite", i, detail::as_flag(f.finite), f.tested_index});
        }
        w[0].lhs = detail::as_flag(id.finite);
        w[0].rhs = detail::as_flag(all);
        CheckOutcome o = make("question_1", id.finite, w);
        o.window_lo = g;
        o.window_hi = t;
        settle(o, id.finite, all);
        out.push_back(o);
    }
    {
        const auto pd = pd_finite(session, subj.module);
        std::vector<Witness> w{{"pd_M_finite_vs_all_id_deficiency_finite", -1, 0, 0}};
        bool all = true;
        for (int i = g; i <= t; ++i) {
            auto f = id_finite(session, a->deficiency(i)->module());
            all = all && f.finite;
            w.push_back({"id_deficiency_finite", i, detail::as_flag(f.finite), f.tested_index});
        }
        w[0].lhs = detail::as_flag(pd.finite);
        w[0].rhs = detail::as_flag(all);
        CheckOutcome o = make("question_2", pd.finite, w);
        o.window_lo = g;
        o.window_hi = t;
        settle(o, pd.finite, all);
        out.push_back(o);
    }
    return out;
}

/// Names accepted by --checks, in report order.
inline const std::vector<std::string>& check_names()
{
    static const std::vector<std::string> names = {"schenzel_bounds", "bass_bounds",          "betti_bounds",
                                                    "foxby_cm",        "gcm_structure",        "tail_equalities",
                                                    "ci_characterization", "finiteness_transfer"};
    return names;
}

template <class F>
CheckOutcome run_module_check(CheckContext<F>& ctx, const std::string& name, const Subject<F>& subj)
{
    if (name == "schenzel_bounds") return check_schenzel_bounds(ctx, subj);
    if (name == "bass_bounds") return check_bass_bounds(ctx, subj);
    if (name == "betti_bounds") return check_betti_bounds(ctx, subj);
    if (name == "foxby_cm") return check_foxby_cm(ctx, subj);
    if (name == "gcm_structure") return check_gcm_structure(ctx, subj);
    if (name == "tail_equalities") return check_tail_equalities(ctx, subj);
    if (name == "finiteness_transfer") return check_finiteness_transfer(ctx, subj);
    throw DomainError("unknown check " + name);
}

/// A FAIL is only emitted when the oracle recomputation fails the same way;
/// otherwise the outcome becomes UNKNOWN with the disagreement recorded.
inline void confirm_failure(CheckOutcome& engine, const CheckOutcome& oracle, std::size_t fallbacks)
{
    if (engine.status != Status::fail) return;
    auto same = [](const Witness& x, const Witness& y) {
        return x.label == y.label && x.index == y.index && x.lhs == y.lhs && x.rhs == y.rhs;
    };
    bool reproduced = oracle.status == Status::fail && oracle.witnesses.size() == engine.witnesses.size() &&
                      std::equal(engine.witnesses.begin(), engine.witnesses.end(), oracle.witnesses.begin(), same);
    if (reproduced) {
        engine.notes.push_back("failure reproduced by the degreewise linear-algebra oracle" +
                               (fallbacks ? " (" + std::to_string(fallbacks) + " numbers beyond its index range taken from the engine)" : std::string()));
    } else {
        engine.status = Status::unknown;
        engine.reason = "engine reports a failure the linear-algebra oracle does not reproduce";
    }
}

}  // namespace halg
