#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "halg/invariants/analysis.hpp"
#include "halg/oracle/oracle.hpp"

namespace halg {

/// Where the checks read β_i and μ^i from.
template <class F>
class Numbers {
public:
    virtual ~Numbers() = default;
    virtual std::int64_t betti(Analysis<F>& a, long i) = 0;
    virtual std::int64_t bass(Analysis<F>& a, long i) = 0;
    virtual std::string name() const = 0;
};

template <class F>
class EngineNumbers : public Numbers<F> {
public:
    std::int64_t betti(Analysis<F>& a, long i) override { return a.betti_at(i); }
    std::int64_t bass(Analysis<F>& a, long i) override { return a.bass_at(i); }
    std::string name() const override { return "engine"; }
};

/// Recomputes β_i and μ^i for i <= max_index by degreewise linear algebra.
/// The degree windows come from the supports the engine reports, widened by
/// a margin, so a number the engine gets wrong inside or near its support is
/// caught. Higher indices fall back to the engine and are counted.
template <class F>
class OracleNumbers : public Numbers<F> {
public:
    explicit OracleNumbers(std::size_t max_index = 4, int margin = 2) : max_index_(max_index), margin_(margin) {}

    std::int64_t betti(Analysis<F>& a, long i) override
    {
        if (i < 0) return 0;
        if (a.is_zero()) return 0;
        if (static_cast<std::size_t>(i) > max_index_) return fallback_betti(a, i);
        auto& o = oracle_for(a.ring());
        const auto ui = static_cast<std::size_t>(i);
        const auto [lo, hi] = support(a.tor_hilbert(ui), oracle::Oracle<F>::lowest_degree(a.module()) + i);
        auto graded = o.graded_betti(a.module(), ui, hi);
        std::int64_t total = 0;
        for (const auto& [key, v] : graded)
            if (key.first == ui && key.second >= lo) total += v;
        return total;
    }

    std::int64_t bass(Analysis<F>& a, long i) override
    {
        if (i < 0) return 0;
        if (a.is_zero()) return 0;
        if (static_cast<std::size_t>(i) > max_index_) return fallback_bass(a, i);
        auto& o = oracle_for(a.ring());
        const auto ui = static_cast<std::size_t>(i);
        const int low = oracle::Oracle<F>::lowest_degree(a.module());
        auto [lo, hi] = support(a.ext_from_k_hilbert(ui), low - 2 * (i + 1));
        const int kdeg = 2 * (static_cast<int>(i) + 2) + 2;
        std::int64_t total = 0;
        for (int d = lo; d <= hi; ++d) total += o.ext_from_k(a.module(), ui, d, kdeg);
        return total;
    }

    std::string name() const override { return "oracle"; }
    std::size_t fallbacks() const { return fallbacks_; }

private:
    std::pair<int, int> support(const HilbertData& h, int anchor) const
    {
        if (h.is_zero()) return {anchor - margin_, anchor + margin_ + 2};
        const auto num = h.reduced_numerator();
        return {num.low() - margin_, num.high() + margin_};
    }

    std::int64_t fallback_betti(Analysis<F>& a, long i)
    {
        ++fallbacks_;
        return a.betti_at(i);
    }
    std::int64_t fallback_bass(Analysis<F>& a, long i)
    {
        ++fallbacks_;
        return a.bass_at(i);
    }

    oracle::Oracle<F>& oracle_for(const RingPtr<F>& R)
    {
        std::lock_guard lock(mutex_);
        auto& slot = oracles_[R.get()];
        if (!slot) slot = std::make_unique<oracle::Oracle<F>>(R);
        return *slot;
    }

    std::size_t max_index_;
    int margin_;
    std::size_t fallbacks_ = 0;
    std::mutex mutex_;
    std::map<const void*, std::unique_ptr<oracle::Oracle<F>>> oracles_;
};

}  // namespace halg
