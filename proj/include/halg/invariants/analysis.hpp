#pragma once

#include <climits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "halg/invariants/homological.hpp"

namespace halg {

/// depth of the zero module.
inline constexpr int kPlusInfinity = INT_MAX;

template <class F>
class Session;

/// Memoized invariants of one module: depth g, dimension t, Betti and Bass
/// numbers, deficiency modules. Betti numbers are dim Tor_i(k, M) and Bass
/// numbers dim Ext^i(k, M), both read off the cached resolution of k.
template <class F>
class Analysis {
public:
    using Ptr = std::shared_ptr<Analysis>;

    Analysis(Session<F>& session, const Module<F>& M)
        : session_(&session), module_(minimal_presentation(M)), hilbert_(hilbert_data(module_))
    {}

    const Module<F>& module() const { return module_; }
    const RingPtr<F>& ring() const { return module_.ring(); }
    std::size_t nvars() const { return module_.S().nvars(); }
    const HilbertData& hilbert() const { return hilbert_; }
    bool is_zero() const { return hilbert_.is_zero(); }
    int dim() const { return hilbert_.dimension(); }
    std::int64_t length() const { return hilbert_.length(); }
    std::size_t generator_count() const { return module_.ambient().rank(); }

    /// Minimal S-resolution of M viewed over the cover, always complete.
    const FreeResolution<F>& cover_resolution()
    {
        std::lock_guard lock(mutex_);
        if (!cover_res_)
            cover_res_ = session_->resolutions().get(module_.lift(), nvars() + 1);
        return *cover_res_;
    }
    int cover_pd() { return cover_resolution().length(); }

    /// g = s - pd_S(M); +∞ for the zero module.
    int depth()
    {
        if (is_zero()) return kPlusInfinity;
        return static_cast<int>(nvars()) - cover_pd();
    }

    /// Complete graded S-Betti table of M viewed over the cover.
    BettiTable cover_betti() { return betti_table(cover_resolution()); }

    const Coefficients<F>& coefficients()
    {
        std::lock_guard lock(mutex_);
        if (!coeff_) coeff_ = prepare_coefficients(module_);
        return *coeff_;
    }

    HilbertData tor_hilbert(std::size_t i)
    {
        auto res = session_->residue_resolution(ring(), i + 1);
        return tensor_homology_hilbert(*res, coefficients(), i);
    }
    HilbertData ext_from_k_hilbert(std::size_t i)
    {
        auto res = session_->residue_resolution(ring(), i + 1);
        return hom_homology_hilbert(*res, coefficients(), i);
    }

    /// β_i(M) = dim_k Tor_i(k, M).
    std::int64_t betti(std::size_t i)
    {
        {
            std::lock_guard lock(mutex_);
            if (auto it = betti_.find(i); it != betti_.end()) return it->second;
        }
        std::int64_t v = is_zero() ? 0 : finite_length(tor_hilbert(i), "Tor");
        std::lock_guard lock(mutex_);
        return betti_[i] = v;
    }

    /// μ^i(M) = dim_k Ext^i(k, M).
    std::int64_t bass(std::size_t i)
    {
        {
            std::lock_guard lock(mutex_);
            if (auto it = bass_.find(i); it != bass_.end()) return it->second;
        }
        std::int64_t v = is_zero() ? 0 : finite_length(ext_from_k_hilbert(i), "Ext");
        std::lock_guard lock(mutex_);
        return bass_[i] = v;
    }

    /// β and μ indexed by integers; negative indices give 0.
    std::int64_t betti_at(long i) { return i < 0 ? 0 : betti(static_cast<std::size_t>(i)); }
    std::int64_t bass_at(long i) { return i < 0 ? 0 : bass(static_cast<std::size_t>(i)); }

    std::vector<std::int64_t> betti_list(std::size_t n)
    {
        std::vector<std::int64_t> v;
        for (std::size_t i = 0; i <= n; ++i) v.push_back(betti(i));
        return v;
    }
    std::vector<std::int64_t> bass_list(std::size_t n)
    {
        std::vector<std::int64_t> v;
        for (std::size_t i = 0; i <= n; ++i) v.push_back(bass(i));
        return v;
    }

    /// type(M) = μ^{depth M}(M); 0 for the zero module.
    std::int64_t type()
    {
        if (is_zero()) return 0;
        return bass(static_cast<std::size_t>(depth()));
    }

    /// K^j(M) = Ext^{s-j}_S(M, S(-s)) regarded over R, for 0 <= j <= s.
    Ptr deficiency(int j)
    {
        const int s = static_cast<int>(nvars());
        if (j < 0 || j > s) throw DomainError("deficiency index " + std::to_string(j) + " outside [0, " + std::to_string(s) + "]");
        {
            std::lock_guard lock(mutex_);
            if (auto it = deficiency_.find(j); it != deficiency_.end()) return it->second;
        }
        const auto& res = cover_resolution();
        const auto& Sring = res.ring;
        const auto q = static_cast<std::size_t>(s - j);
        auto d_hi = dual_matrix(Sring->S(), res.differential(q), s);
        auto d_lo = dual_matrix(Sring->S(), res.differential(q + 1), s);
        Module<F> H = kernel_and_homology(Sring, d_hi, d_lo);
        Module<F> over_R = minimal_presentation(H).over(ring());
        auto a = session_->analyze(over_R);
        std::lock_guard lock(mutex_);
        return deficiency_[j] = a;
    }

    /// The canonical module K(M) = K^t(M); null for M = 0.
    Ptr canonical()
    {
        if (is_zero()) return nullptr;
        return deficiency(dim());
    }

    bool is_cohen_macaulay() { return !is_zero() && depth() == dim(); }

    /// Every K^j(M), j < t, has finite length.
    bool is_generalized_cm()
    {
        if (is_zero()) return false;
        for (int j = 0; j < dim(); ++j)
            if (deficiency(j)->dim() > 0) return false;
        return true;
    }

    bool is_canonically_cm()
    {
        if (is_zero()) return false;
        return canonical()->is_cohen_macaulay();
    }

    Session<F>& session() { return *session_; }

private:
    static std::int64_t finite_length(const HilbertData& h, const char* what)
    {
        if (h.dimension() > 0) throw EngineError(std::string(what) + " against k has positive dimension");
        return h.length();
    }

    Session<F>* session_;
    Module<F> module_;
    HilbertData hilbert_;
    std::recursive_mutex mutex_;
    std::shared_ptr<const FreeResolution<F>> cover_res_;
    std::optional<Coefficients<F>> coeff_;
    std::map<std::size_t, std::int64_t> betti_;
    std::map<std::size_t, std::int64_t> bass_;
    std::map<int, Ptr> deficiency_;
};

/// Shared caches for one run: resolutions of k per ring, S-resolutions,
/// module analyses. All access is synchronized.
template <class F>
class Session {
public:
    Session() = default;
    Session(const Session&) = delete;
    Session& operator=(const Session&) = delete;

    ResolutionCache<F>& resolutions() { return resolutions_; }

    std::shared_ptr<const FreeResolution<F>> residue_resolution(const RingPtr<F>& R, std::size_t steps)
    {
        return resolutions_.get(residue_field(R), steps);
    }

    typename Analysis<F>::Ptr analyze(const Module<F>& M)
    {
        const std::string key = M.fingerprint();
        {
            std::lock_guard lock(mutex_);
            if (auto it = analyses_.find(key); it != analyses_.end()) return it->second;
        }
        auto a = std::make_shared<Analysis<F>>(*this, M);
        std::lock_guard lock(mutex_);
        auto [it, inserted] = analyses_.emplace(key, a);
        return it->second;
    }

    /// The ring as a module over itself.
    typename Analysis<F>::Ptr analyze_ring(const RingPtr<F>& R) { return analyze(Module<F>::free(R, FreeModule::uniform(1))); }

    int ring_depth(const RingPtr<F>& R) { return analyze_ring(R)->depth(); }
    int ring_dim(const RingPtr<F>& R) { return analyze_ring(R)->dim(); }

    /// Truncation bound N = s + dim R + 4.
    int default_bound(const RingPtr<F>& R) { return static_cast<int>(R->nvars()) + ring_dim(R) + 4; }

private:
    std::mutex mutex_;
    ResolutionCache<F> resolutions_;
    std::unordered_map<std::string, typename Analysis<F>::Ptr> analyses_;
};

}  // namespace halg
