#pragma once

// Degreewise exact linear algebra. Nothing here touches the Gröbner engine:
// every graded piece is a quotient of spans of monomial multiples inside a
// finite-dimensional slice of a free module, reduced by plain elimination.

#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "halg/modcat/module.hpp"
#include "halg/oracle/linear.hpp"

namespace halg::oracle {

template <class F>
using Dense = std::vector<typename F::Elem>;

/// Monomial basis of G_d for a graded free S-module G.
template <class F>
class Slice {
public:
    Slice() = default;
    Slice(std::size_t nvars, const FreeModule& G, int d) : degree_(d)
    {
        for (std::uint32_t p = 0; p < G.rank(); ++p) {
            offset_.push_back(items_.size());
            index_.emplace_back();
            for (const auto& m : monomials_of_degree(nvars, d - G.degree(p))) {
                index_.back().emplace(m, items_.size());
                items_.push_back({p, m});
            }
        }
    }

    std::size_t size() const { return items_.size(); }
    int degree() const { return degree_; }
    const std::pair<std::uint32_t, Monomial>& item(std::size_t i) const { return items_[i]; }

    Dense<F> densify(const F& k, const Vector<F>& v) const
    {
        Dense<F> out(size(), k.zero());
        for (const auto& t : v.terms()) {
            auto it = index_.at(t.pos).find(t.mono);
            if (it == index_[t.pos].end()) throw ContractViolation("vector outside the degree slice");
            out[it->second] = k.add(out[it->second], t.coeff);
        }
        return out;
    }

    Vector<F> sparsify(const PolyRing<F>& S, const Dense<F>& v) const
    {
        std::vector<VTerm<F>> terms;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!S.field().is_zero(v[i])) terms.push_back({items_[i].second, items_[i].first, v[i]});
        return make_vector(S, std::move(terms));
    }

private:
    int degree_ = 0;
    std::vector<std::pair<std::uint32_t, Monomial>> items_;
    std::vector<std::size_t> offset_;
    std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> index_;
};

/// N/U with U ⊆ N ⊆ G; N = G when no generators are given. Built degree by degree.
template <class F>
class GradedQuotient {
public:
    GradedQuotient(const PolyRing<F>& S, FreeModule G, std::optional<std::vector<Vector<F>>> gens, std::vector<Vector<F>> rels,
                   const std::vector<Polynomial<F>>& ideal)
        : S_(&S), G_(std::move(G)), gens_(std::move(gens)), rels_(std::move(rels))
    {
        for (std::uint32_t p = 0; p < G_.rank(); ++p)
            for (const auto& f : ideal) rels_.push_back(poly_at(f, p));
        for (auto& r : rels_)
            if (!r.is_zero()) rel_deg_.push_back(r.degree(G_));
            else rel_deg_.push_back(-1);
    }

    static GradedQuotient of(const Module<F>& M)
    {
        std::optional<std::vector<Vector<F>>> gens;
        if (!M.is_cokernel()) gens = M.generators().columns;
        std::vector<Polynomial<F>> ideal = M.ring()->ideal();
        return GradedQuotient(M.S(), M.ambient(), std::move(gens), M.relations().columns, ideal);
    }

    /// The free module F over R = S/(ideal).
    static GradedQuotient free(const PolyRing<F>& S, const FreeModule& f, const std::vector<Polynomial<F>>& ideal)
    {
        return GradedQuotient(S, f, std::nullopt, {}, ideal);
    }

    const FreeModule& ambient() const { return G_; }
    const PolyRing<F>& S() const { return *S_; }

    std::size_t dim(int d) { return level(d).lifts.size(); }

    /// Coordinates of v ∈ N_d in the chosen basis of (N/U)_d.
    Dense<F> coords(int d, const Vector<F>& v)
    {
        auto& L = level(d);
        const auto& k = S_->field();
        Dense<F> w = L.slice.densify(k, v);
        Dense<F> out(L.lifts.size(), k.zero());
        for (const auto& [c, entry] : L.rows) {
            if (k.is_zero(w[c])) continue;
            const auto f = w[c];
            if (entry.second >= 0) out[static_cast<std::size_t>(entry.second)] = f;
            for (std::size_t i = c; i < w.size(); ++i)
                if (!k.is_zero(entry.first[i])) w[i] = k.sub(w[i], k.mul(f, entry.first[i]));
        }
        for (const auto& x : w)
            if (!k.is_zero(x)) throw ContractViolation("vector does not lie in the module");
        return out;
    }

    /// A representative in G of the element with the given coordinates.
    Vector<F> lift(int d, const Dense<F>& c)
    {
        auto& L = level(d);
        const auto& k = S_->field();
        Vector<F> acc;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (!k.is_zero(c[i])) acc = vaxpy(*S_, acc, c[i], L.lifts[i]);
        return acc;
    }

    const Vector<F>& basis_lift(int d, std::size_t i) { return level(d).lifts[i]; }

private:
    struct Level {
        Slice<F> slice;
        std::map<std::size_t, std::pair<Dense<F>, long>> rows;  // pivot -> (row, basis index or -1 for U)
        std::vector<Vector<F>> lifts;
    };

    Level& level(int d)
    {
        if (auto it = levels_.find(d); it != levels_.end()) return it->second;
        Level L;
        L.slice = Slice<F>(S_->nvars(), G_, d);
        const auto& k = S_->field();
        const std::size_t n = L.slice.size();
        auto insert = [&](Dense<F> w, long tag) {
            for (const auto& [c, entry] : L.rows) {
                if (k.is_zero(w[c])) continue;
                const auto f = w[c];
                for (std::size_t i = c; i < n; ++i)
                    if (!k.is_zero(entry.first[i])) w[i] = k.sub(w[i], k.mul(f, entry.first[i]));
            }
            std::size_t c = 0;
            while (c < n && k.is_zero(w[c])) ++c;
            if (c == n) return n;
            const auto inv = k.inv(w[c]);
            for (std::size_t i = c; i < n; ++i) w[i] = k.mul(w[i], inv);
            L.rows.emplace(c, std::make_pair(std::move(w), tag));
            return c;
        };
        auto multiples = [&](const Vector<F>& v, int e, auto&& sink) {
            for (const auto& m : monomials_of_degree(S_->nvars(), d - e))
                sink(vmul_term(*S_, v, m, k.one()));
        };
        for (std::size_t r = 0; r < rels_.size(); ++r) {
            if (rel_deg_[r] < 0 || rel_deg_[r] > d) continue;
            multiples(rels_[r], rel_deg_[r], [&](const Vector<F>& w) { insert(L.slice.densify(k, w), -1); });
        }
        // The basis of (N/U)_d is the set of echelon rows coming from N, so coordinates
        // read off during reduction refer to exactly these vectors.
        auto add_gen = [&](const Vector<F>& w) {
            const std::size_t c = insert(L.slice.densify(k, w), static_cast<long>(L.lifts.size()));
            if (c < n) L.lifts.push_back(L.slice.sparsify(*S_, L.rows.at(c).first));
        };
        if (gens_) {
            for (const auto& g : *gens_) {
                if (g.is_zero()) continue;
                const int e = g.degree(G_);
                if (e <= d) multiples(g, e, add_gen);
            }
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                const auto& [p, m] = L.slice.item(i);
                add_gen(Vector<F>({{m, p, k.one()}}));
            }
        }
        return levels_.emplace(d, std::move(L)).first->second;
    }

    const PolyRing<F>* S_;
    FreeModule G_;
    std::optional<std::vector<Vector<F>>> gens_;
    std::vector<Vector<F>> rels_;
    std::vector<int> rel_deg_;
    std::map<int, Level> levels_;
};

/// Image of a sparse vector of F (a free module with the given columns as map) in the target.
template <class F>
Vector<F> apply_columns(const PolyRing<F>& S, const std::vector<Vector<F>>& columns, const Vector<F>& v)
{
    Vector<F> acc;
    for (const auto& t : v.terms()) acc = vadd(S, acc, vmul_term(S, columns[t.pos], t.mono, t.coeff));
    return acc;
}

/// Minimal free resolution over R computed one degree at a time up to max_degree.
/// maps[0] : F_0 -> ambient of M, maps[i] : F_i -> F_{i-1}. Exact in degrees <= max_degree.
template <class F>
struct TruncatedResolution {
    std::vector<FreeModule> modules;
    std::vector<std::vector<Vector<F>>> maps;
    int max_degree = 0;

    /// β_{i,d}
    std::int64_t graded(std::size_t i, int d) const
    {
        if (i >= modules.size()) return 0;
        return std::count(modules[i].degrees.begin(), modules[i].degrees.end(), d);
    }
    std::int64_t total(std::size_t i) const { return i < modules.size() ? static_cast<std::int64_t>(modules[i].rank()) : 0; }
};

template <class F>
class Oracle {
public:
    explicit Oracle(RingPtr<F> ring) : ring_(std::move(ring)) {}

    const RingPtr<F>& ring() const { return ring_; }

    /// dim_k (R^{rank} / I)_d for a free module: co-rank of the Macaulay matrix of I in degree d.
    std::int64_t ring_hilbert(int d)
    {
        auto q = GradedQuotient<F>::free(ring_->S(), FreeModule::uniform(1), ring_->ideal());
        return static_cast<std::int64_t>(q.dim(d));
    }

    std::vector<std::int64_t> hilbert_function(const Module<F>& M, int max_degree)
    {
        auto& q = quotient(M);
        std::vector<std::int64_t> out;
        for (int d = 0; d <= max_degree; ++d) out.push_back(static_cast<std::int64_t>(q.dim(d)));
        return out;
    }

    TruncatedResolution<F> resolve(const Module<F>& M, std::size_t steps, int max_degree)
    {
        const auto& S = ring_->S();
        const auto& k = S.field();
        const std::size_t s = S.nvars();
        TruncatedResolution<F> res;
        res.max_degree = max_degree;
        GradedQuotient<F>& Mq = quotient(M);
        const int low = lowest_degree(M);

        // F_0: complements of m·M_{d-1} in M_d.
        FreeModule f0;
        std::vector<Vector<F>> cols0;
        for (int d = low; d <= max_degree; ++d) {
            const std::size_t n = Mq.dim(d);
            Echelon<F> e(k, n);
            if (d > low)
                for (std::size_t b = 0; b < Mq.dim(d - 1); ++b)
                    for (std::size_t v = 0; v < s; ++v)
                        e.insert(Mq.coords(d, vmul_term(S, Mq.basis_lift(d - 1, b), Monomial::variable(s, v), k.one())));
            for (std::size_t b = 0; b < n; ++b) {
                Dense<F> u(n, k.zero());
                u[b] = k.one();
                if (e.insert(u)) {
                    f0.degrees.push_back(d);
                    cols0.push_back(Mq.basis_lift(d, b));
                }
            }
        }
        res.modules.push_back(f0);
        res.maps.push_back(cols0);

        std::unique_ptr<GradedQuotient<F>> target;
        GradedQuotient<F>* tgt = &Mq;
        for (std::size_t i = 0; i < steps; ++i) {
            const FreeModule& Fi = res.modules[i];
            if (Fi.rank() == 0) break;
            auto src = std::make_unique<GradedQuotient<F>>(GradedQuotient<F>::free(S, Fi, ring_->ideal()));
            const auto& cols = res.maps[i];
            const int lo = *std::min_element(Fi.degrees.begin(), Fi.degrees.end());
            FreeModule next;
            std::vector<Vector<F>> next_cols;
            std::vector<Vector<F>> prev_kernel;  // lifts of a basis of K_{d-1}
            for (int d = lo; d <= max_degree; ++d) {
                const std::size_t n = src->dim(d);
                const std::size_t m = tgt->dim(d);
                std::vector<Dense<F>> images;
                for (std::size_t b = 0; b < n; ++b) images.push_back(tgt->coords(d, apply_columns(S, cols, src->basis_lift(d, b))));
                auto ker = kernel_basis(k, m, images);
                Echelon<F> e(k, n);
                for (const auto& w : prev_kernel)
                    for (std::size_t v = 0; v < s; ++v)
                        e.insert(src->coords(d, vmul_term(S, w, Monomial::variable(s, v), k.one())));
                std::vector<Vector<F>> cur;
                for (const auto& kv : ker) {
                    Vector<F> lifted = src->lift(d, kv);
                    cur.push_back(lifted);
                    if (e.insert(kv)) {
                        next.degrees.push_back(d);
                        next_cols.push_back(lifted);
                    }
                }
                prev_kernel = std::move(cur);
            }
            res.modules.push_back(next);
            res.maps.push_back(next_cols);
            target = std::move(src);
            tgt = target.get();
        }
        return res;
    }

    /// β_{i,d}(M) for i <= steps, d <= max_degree.
    std::map<std::pair<std::size_t, int>, std::int64_t> graded_betti(const Module<F>& M, std::size_t steps, int max_degree)
    {
        auto res = resolve(M, steps, max_degree);
        std::map<std::pair<std::size_t, int>, std::int64_t> out;
        for (std::size_t i = 0; i < res.modules.size() && i <= steps; ++i)
            for (int d : res.modules[i].degrees) ++out[{i, d}];
        return out;
    }

    /// Truncated resolution of k, memoized for the largest request.
    const TruncatedResolution<F>& residue_resolution(std::size_t steps, int max_degree)
    {
        if (!k_res_ || k_res_->modules.size() < steps + 1 || k_res_->max_degree < max_degree)
            k_res_ = resolve(residue_field(ring_), steps, max_degree);
        return *k_res_;
    }

    /// dim_k Ext^i_R(k, M)_d through the Hom complex of the truncated resolution of k.
    /// Needs F_{i+1}(k) completely inside the truncation degree.
    std::int64_t ext_from_k(const Module<F>& M, std::size_t i, int d, int k_degree)
    {
        const auto& S = ring_->S();
        const auto& k = S.field();
        const auto& res = residue_resolution(i + 1, k_degree);
        auto& Mq = quotient(M);
        auto module_at = [&](std::size_t j) -> const FreeModule& {
            static const FreeModule empty;
            return j < res.modules.size() ? res.modules[j] : empty;
        };
        // Hom(F_j, M)_d = ⊕_p M_{d + a_p}
        auto hom_dim = [&](std::size_t j) {
            std::size_t n = 0;
            for (int a : module_at(j).degrees) n += Mq.dim(d + a);
            return n;
        };
        // matrix of Hom(F_{j-1}, M)_d -> Hom(F_j, M)_d as images of basis elements
        auto delta = [&](std::size_t j) {
            const FreeModule& src = module_at(j - 1);
            const FreeModule& tgt = module_at(j);
            std::vector<Dense<F>> images;
            std::vector<std::size_t> offsets;
            std::size_t total = 0;
            for (int a : tgt.degrees) {
                offsets.push_back(total);
                total += Mq.dim(d + a);
            }
            const auto& cols = j < res.maps.size() ? res.maps[j] : std::vector<Vector<F>>{};
            for (std::uint32_t p = 0; p < src.rank(); ++p) {
                const int e = d + src.degree(p);
                for (std::size_t b = 0; b < Mq.dim(e); ++b) {
                    Dense<F> img(total, k.zero());
                    const Vector<F>& phi = Mq.basis_lift(e, b);
                    for (std::size_t l = 0; l < tgt.rank(); ++l) {
                        Polynomial<F> c = component(S, cols[l], p);
                        if (c.is_zero()) continue;
                        Vector<F> w = vmul(S, c, phi);
                        if (w.is_zero()) continue;
                        auto x = Mq.coords(d + tgt.degree(l), w);
                        for (std::size_t q = 0; q < x.size(); ++q) img[offsets[l] + q] = x[q];
                    }
                    images.push_back(std::move(img));
                }
            }
            return std::make_pair(total, images);
        };
        const std::size_t n = hom_dim(i);
        auto [m_out, out_images] = delta(i + 1);
        const std::size_t ker = kernel_basis(k, m_out, out_images).size();
        std::size_t im = 0;
        if (i >= 1) {
            auto [m_in, in_images] = delta(i);
            im = rank_of(k, m_in, in_images);
        }
        (void)n;
        return static_cast<std::int64_t>(ker - im);
    }

    /// dim_k H_i(x_1..x_s; M)_d, M regarded over S.
    std::int64_t koszul_homology(const Module<F>& M, std::size_t i, int d)
    {
        const auto& S = ring_->S();
        const auto& k = S.field();
        const std::size_t s = S.nvars();
        auto& Mq = quotient(M);
        std::vector<std::vector<std::uint32_t>> by_size(s + 2);
        for (std::uint32_t mask = 0; mask < (1u << s); ++mask) by_size[static_cast<std::size_t>(__builtin_popcount(mask))].push_back(mask);
        // ∂ : K_j -> K_{j-1} in degree d, K_j = ⊕_{|J|=j} M_{d-j}
        auto boundary = [&](std::size_t j) {
            std::vector<Dense<F>> images;
            if (j == 0 || j > s) return std::make_pair(std::size_t{0}, images);
            const auto& tgt = by_size[j - 1];
            const std::size_t block = Mq.dim(d - static_cast<int>(j) + 1);
            const std::size_t m = tgt.size() * block;
            for (std::uint32_t J : by_size[j])
                for (std::size_t b = 0; b < Mq.dim(d - static_cast<int>(j)); ++b) {
                    Dense<F> img(m, k.zero());
                    int sign = 0;
                    for (std::uint32_t v = 0; v < s; ++v) {
                        if (!(J >> v & 1u)) continue;
                        const auto pos = static_cast<std::size_t>(std::find(tgt.begin(), tgt.end(), J & ~(1u << v)) - tgt.begin());
                        auto x = Mq.coords(d - static_cast<int>(j) + 1,
                                           vmul_term(S, Mq.basis_lift(d - static_cast<int>(j), b), Monomial::variable(s, v), k.one()));
                        for (std::size_t q = 0; q < block; ++q) {
                            auto val = sign % 2 ? k.neg(x[q]) : x[q];
                            img[pos * block + q] = k.add(img[pos * block + q], val);
                        }
                        ++sign;
                    }
                    images.push_back(std::move(img));
                }
            return std::make_pair(m, images);
        };
        if (i > s) return 0;
        std::size_t ker = 0;
        if (i == 0) {
            ker = Mq.dim(d);
        } else {
            auto [m, imgs] = boundary(i);
            ker = kernel_basis(k, m, imgs).size();
        }
        std::size_t im = 0;
        if (i + 1 <= s) {
            auto [m, imgs] = boundary(i + 1);
            im = rank_of(k, m, imgs);
        }
        return static_cast<std::int64_t>(ker - im);
    }

    /// depth_S M = s - max{i : H_i(x; M)_d != 0 for some d <= max_degree}; INT_MAX for M = 0 in the window.
    int koszul_depth(const Module<F>& M, int max_degree)
    {
        const std::size_t s = ring_->nvars();
        const int low = lowest_degree(M);
        for (std::size_t i = s + 1; i-- > 0;)
            for (int d = low; d <= max_degree; ++d)
                if (koszul_homology(M, i, d) != 0) return static_cast<int>(s - i);
        return INT_MAX;
    }

    static int lowest_degree(const Module<F>& M)
    {
        const auto& d = M.ambient().degrees;
        return d.empty() ? 0 : *std::min_element(d.begin(), d.end());
    }

private:
    GradedQuotient<F>& quotient(const Module<F>& M)
    {
        if (M.ring() != ring_) throw StructuralError("oracle asked about a module over another ring");
        const std::string key = M.fingerprint();
        auto it = quotients_.find(key);
        if (it == quotients_.end())
            it = quotients_.emplace(key, std::make_unique<GradedQuotient<F>>(GradedQuotient<F>::of(M))).first;
        return *it->second;
    }

    RingPtr<F> ring_;
    std::optional<TruncatedResolution<F>> k_res_;
    std::map<std::string, std::unique_ptr<GradedQuotient<F>>> quotients_;
};

}  // namespace halg::oracle
