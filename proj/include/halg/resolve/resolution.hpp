#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "halg/modcat/module.hpp"

namespace halg {

/// F_0 <- F_1 <- ... with d_i : F_i -> F_{i-1}.
template <class F>
struct FreeResolution {
    RingPtr<F> ring;
    FreeModule f0;
    std::vector<GradedMatrix<F>> differentials;
    bool minimal = true;
    /// True iff the last kernel was zero: F_{length+1} = 0.
    bool complete = false;
    /// d_1, kept when the resolution was requested with zero steps.
    GradedMatrix<F> presentation;

    std::size_t steps() const { return differentials.size(); }
    /// F_i; the zero module past the end of a complete resolution.
    FreeModule module(std::size_t i) const
    {
        if (i == 0) return f0;
        if (i <= differentials.size()) return differentials[i - 1].source;
        if (!complete) throw DomainError("resolution not computed to step " + std::to_string(i));
        return FreeModule();
    }
    bool known(std::size_t i) const { return complete || i <= differentials.size(); }
    /// d_i, or a zero map when one side vanishes.
    GradedMatrix<F> differential(std::size_t i) const
    {
        if (i >= 1 && i <= differentials.size()) return differentials[i - 1];
        FreeModule src = module(i);
        FreeModule tgt = i == 0 ? FreeModule() : module(i - 1);
        return GradedMatrix<F>(src, tgt, std::vector<Vector<F>>(src.rank()));
    }
    /// Length of a complete resolution (the largest i with F_i != 0; -1 for M = 0).
    int length() const
    {
        if (!complete) throw DomainError("length of an incomplete resolution");
        for (std::size_t i = differentials.size() + 1; i-- > 0;)
            if (module(i).rank() > 0) return static_cast<int>(i);
        return -1;
    }
};

/// Graded Betti numbers β_{i,j}: rank of the degree-j part of F_i's basis.
struct BettiTable {
    std::map<std::pair<int, int>, std::int64_t> entries;
    std::map<int, std::int64_t> totals;

    std::int64_t total(int i) const
    {
        auto it = totals.find(i);
        return it == totals.end() ? 0 : it->second;
    }
    std::int64_t at(int i, int j) const
    {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    bool operator==(const BettiTable&) const = default;

    BettiTable shifted(int delta) const
    {
        BettiTable b;
        for (const auto& [k, v] : entries) b.entries[{k.first, k.second + delta}] = v;
        b.totals = totals;
        return b;
    }

    std::string to_string() const
    {
        std::string s;
        for (const auto& [i, n] : totals) {
            s += std::to_string(i) + ":";
            for (const auto& [k, v] : entries)
                if (k.first == i) s += " " + std::to_string(v) + "@" + std::to_string(k.second);
            s += "\n";
        }
        return s;
    }
};

template <class F>
BettiTable betti_table(const FreeResolution<F>& res)
{
    if (!res.minimal) throw ContractViolation("Betti table of a non-minimal resolution");
    BettiTable b;
    for (std::size_t i = 0; i <= res.steps(); ++i) {
        const FreeModule m = res.module(i);
        if (m.rank() == 0) continue;
        for (int d : m.degrees) ++b.entries[{static_cast<int>(i), d}];
        b.totals[static_cast<int>(i)] = static_cast<std::int64_t>(m.rank());
    }
    return b;
}

/// Continues a minimal resolution until `max_steps` differentials exist or the kernel vanishes.
template <class F>
void extend_resolution(FreeResolution<F>& res, std::size_t max_steps)
{
    const auto& R = *res.ring;
    while (!res.complete && res.steps() < max_steps) {
        if (res.steps() == 0) {
            res.differentials.push_back(res.presentation);
            continue;
        }
        auto next = kernel_over_quotient(R, res.differentials.back());
        if (next.cols() == 0) {
            res.complete = true;
            break;
        }
        res.differentials.push_back(std::move(next));
    }
    if (!R.is_quotient() && res.steps() > R.nvars()) throw EngineError("resolution over S longer than the number of variables");
}

/// Minimal graded free resolution out to max_steps differentials, or to completion.
template <class F>
FreeResolution<F> minimal_free_resolution(const Module<F>& M, std::size_t max_steps)
{
    FreeResolution<F> res;
    res.ring = M.ring();
    Module<F> P = minimal_presentation(M);
    res.f0 = P.ambient();
    if (res.f0.rank() == 0 || P.relations().cols() == 0) {
        res.complete = true;
        return res;
    }
    res.presentation = P.relations();
    extend_resolution(res, max_steps);
    return res;
}

/// Shared, synchronized cache of resolutions keyed by module fingerprint. A
/// request for more steps than cached replaces the entry with an extension.
template <class F>
class ResolutionCache {
public:
    using Ptr = std::shared_ptr<const FreeResolution<F>>;

    Ptr get(const Module<F>& M, std::size_t steps)
    {
        const std::string key = M.fingerprint();
        std::unique_lock lock(mutex_);
        auto& slot = slots_[key];
        if (!slot) slot = std::make_shared<Slot>();
        auto s = slot;
        lock.unlock();

        std::lock_guard guard(s->mutex);
        if (!s->res) s->res = std::make_shared<const FreeResolution<F>>(minimal_free_resolution(M, steps));
        else if (!s->res->complete && s->res->steps() < steps) {
            auto copy = std::make_shared<FreeResolution<F>>(*s->res);
            extend_resolution(*copy, steps);
            s->res = std::move(copy);
        }
        return s->res;
    }

    std::size_t size() const
    {
        std::lock_guard lock(mutex_);
        return slots_.size();
    }

private:
    struct Slot {
        std::mutex mutex;
        Ptr res;
    };
    mutable std::mutex mutex_;
    std::unordered_map<std::string, std::shared_ptr<Slot>> slots_;
};

}  // namespace halg
