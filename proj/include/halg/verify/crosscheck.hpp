#pragma once

// Engine against the degreewise linear-algebra oracle, one module at a time.
// Degree windows for Ext and Koszul homology come from the engine's own
// support widened by a margin, so a support the engine misses still shows up.

#include <algorithm>

#include "halg/groebner/groebner.hpp"
#include "halg/invariants/invariants.hpp"
#include "halg/oracle/oracle.hpp"
#include "halg/verify/checks.hpp"

namespace halg {

struct CrossCheckOptions {
    int max_degree = 8;
    std::size_t max_index = 4;
    int margin = 2;
};

inline std::vector<std::string> crosscheck_names()
{
    return {"oracle_corank", "oracle_depth", "oracle_ext", "oracle_hilbert", "oracle_tor"};
}

/// Per degree, the number of standard monomials of a Gröbner basis of rels + I·F.
template <class F>
std::vector<std::int64_t> standard_monomial_counts(const Module<F>& M, int max_degree)
{
    const auto& S = M.S();
    const auto& amb = M.ambient();
    auto gens = M.ring()->ideal_lift(amb);
    for (const auto& v : M.relations().columns) gens.push_back(v);
    auto G = reduced_groebner(S, amb, gens);
    std::vector<std::int64_t> out(static_cast<std::size_t>(max_degree + 1), 0);
    for (std::uint32_t p = 0; p < amb.rank(); ++p)
        for (int d = std::max(0, amb.degree(p)); d <= max_degree; ++d)
            for (const auto& m : monomials_of_degree(S.nvars(), d - amb.degree(p))) {
                bool standard = true;
                for (const auto& g : G.elements)
                    if (g.lead().pos == p && divides(g.lead().mono, m)) {
                        standard = false;
                        break;
                    }
                if (standard) ++out[static_cast<std::size_t>(d)];
            }
    return out;
}

template <class F>
std::vector<CheckOutcome> oracle_crosscheck(Session<F>& session, const Subject<F>& subj, const CrossCheckOptions& opt = {})
{
    const auto& M = subj.module;
    auto a = session.analyze(M);
    oracle::Oracle<F> o(M.ring());
    const int D = opt.max_degree;
    const int low = oracle::Oracle<F>::lowest_degree(M);
    std::vector<CheckOutcome> out;

    auto widen = [&](const HilbertData& h, int anchor) {
        if (h.is_zero()) return std::pair{anchor - opt.margin, anchor + opt.margin};
        const auto num = h.reduced_numerator();
        return std::pair{num.low() - opt.margin, num.high() + opt.margin};
    };

    {
        Recorder rec(subj.id, "oracle_hilbert");
        rec.window(0, D);
        auto hf = o.hilbert_function(M, D);
        for (int d = 0; d <= D; ++d) rec.compare("HF", d, a->hilbert().value(d), Rel::eq, hf[static_cast<std::size_t>(d)]);
        out.push_back(rec.finish());
    }
    {
        Recorder rec(subj.id, "oracle_corank");
        if (!M.is_cokernel()) {
            rec.skip("standard monomials", "module is not a cokernel");
        } else {
            rec.window(0, D);
            auto sm = standard_monomial_counts(M, D);
            auto hf = o.hilbert_function(M, D);
            for (int d = 0; d <= D; ++d)
                rec.compare("standard monomials", d, sm[static_cast<std::size_t>(d)], Rel::eq, hf[static_cast<std::size_t>(d)]);
        }
        out.push_back(rec.finish());
    }
    {
        Recorder rec(subj.id, "oracle_tor");
        rec.window(0, static_cast<long>(opt.max_index));
        auto ob = o.graded_betti(M, opt.max_index, D);
        for (std::size_t i = 0; i <= opt.max_index; ++i) {
            auto tor = a->tor_hilbert(i);
            for (int d = low; d <= D; ++d) {
                auto it = ob.find({i, d});
                rec.compare("Tor_" + std::to_string(i) + " in degree", d, tor.value(d), Rel::eq, it == ob.end() ? 0 : it->second);
            }
        }
        out.push_back(rec.finish());
    }
    {
        Recorder rec(subj.id, "oracle_ext");
        rec.window(0, static_cast<long>(opt.max_index));
        for (std::size_t i = 0; i <= opt.max_index; ++i) {
            auto ext = a->ext_from_k_hilbert(i);
            auto [lo, hi] = widen(ext, low - 2 * static_cast<int>(i + 1));
            const int kdeg = 2 * (static_cast<int>(i) + 2) + 2;
            for (int d = lo; d <= std::min(hi, D); ++d)
                rec.compare("Ext^" + std::to_string(i) + " in degree", d, ext.value(d), Rel::eq, o.ext_from_k(M, i, d, kdeg));
        }
        out.push_back(rec.finish());
    }
    {
        Recorder rec(subj.id, "oracle_depth");
        auto L = M.lift();
        oracle::Oracle<F> cover(M.ring()->cover());
        auto la = session.analyze(L);
        int top = low;
        for (std::size_t i = 0; i <= M.S().nvars(); ++i) {
            auto h = la->tor_hilbert(i);
            if (!h.is_zero()) top = std::max(top, h.reduced_numerator().high());
        }
        rec.compare("depth", 0, a->depth(), Rel::eq, cover.koszul_depth(L, top + opt.margin));
        out.push_back(rec.finish());
    }
    return out;
}

}  // namespace halg
