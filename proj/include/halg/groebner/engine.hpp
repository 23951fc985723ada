#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <set>
#include <vector>

#include "halg/core/vector.hpp"

namespace halg {

/// Homogeneous Buchberger completion for submodules of a graded free module
/// (ideals are the rank-1 case), position-over-term order, normal selection
/// strategy with Gebauer–Möller pair elimination. Pairs are processed by
/// increasing degree, so completing up to degree d yields a basis that is
/// exact in degrees <= d.
template <class F>
class GroebnerEngine {
public:
    using Elem = typename F::Elem;
    using Vec = Vector<F>;

    GroebnerEngine(const PolyRing<F>& ring, FreeModule module)
        : ring_(&ring), module_(std::move(module)), by_pos_(module_.rank())
    {}

    const PolyRing<F>& ring() const { return *ring_; }
    const FreeModule& module() const { return module_; }
    const std::vector<Vec>& elements() const { return basis_; }
    std::size_t pending_pairs() const { return pairs_.size(); }

    /// Reduces v and, if non-zero, inserts it with new pairs. Returns whether the basis grew.
    bool add(const Vec& v)
    {
        check_ambient(v);
        Vec r = reduce(v, false);
        if (r.is_zero()) return false;
        insert(std::move(r), true);
        return true;
    }

    /// Inserts elements that already form a Gröbner basis of their span
    /// (for example a block-replicated basis of relations). No pairs are
    /// formed among them; later insertions pair with them as usual.
    void add_basis(const std::vector<Vec>& gb)
    {
        for (const auto& v : gb) {
            check_ambient(v);
            if (!v.is_zero()) insert(make_monic(v), false);
        }
    }

    /// Processes every pending pair of degree <= max_degree.
    void complete(int max_degree = INT_MAX)
    {
        while (!pairs_.empty() && pairs_.begin()->degree <= max_degree) {
            Pair p = *pairs_.begin();
            pairs_.erase(pairs_.begin());
            Vec s = s_vector(p.i, p.j, p.lcm);
            Vec r = reduce(s, false);
            if (!r.is_zero()) insert(std::move(r), true);
        }
    }

    bool completed() const { return pairs_.empty(); }

    /// Normal form (full) or top-reduction (full = false) against the current basis.
    Vec reduce(const Vec& v, bool full = true) const
    {
        const auto& k = ring_->field();
        std::vector<VTerm<F>> cur = v.terms(), next, done;
        std::size_t start = 0;
        while (start < cur.size()) {
            const VTerm<F>& lt = cur[start];
            const std::size_t div = find_divisor(lt.mono, lt.pos);
            if (div == npos) {
                if (!full) break;
                done.push_back(lt);
                ++start;
                continue;
            }
            const Vec& g = basis_[div];
            const Monomial m = quotient(lt.mono, g.lead().mono);
            const Elem c = k.neg(lt.coeff);  // basis elements are monic
            next.clear();
            next.reserve(cur.size() - start + g.size());
            auto i = cur.begin() + static_cast<std::ptrdiff_t>(start) + 1, ie = cur.end();
            auto j = g.terms().begin() + 1, je = g.terms().end();
            while (i != ie && j != je) {
                const Monomial mj = j->mono * m;
                std::strong_ordering o = i->pos != j->pos ? (j->pos <=> i->pos) : ring_->cmp(i->mono, mj);
                if (o == std::strong_ordering::greater) {
                    next.push_back(*i++);
                } else if (o == std::strong_ordering::less) {
                    next.push_back({mj, j->pos, k.mul(c, j->coeff)});
                    ++j;
                } else {
                    Elem s = k.add(i->coeff, k.mul(c, j->coeff));
                    if (!k.is_zero(s)) next.push_back({i->mono, i->pos, std::move(s)});
                    ++i;
                    ++j;
                }
            }
            for (; i != ie; ++i) next.push_back(*i);
            for (; j != je; ++j) next.push_back({j->mono * m, j->pos, k.mul(c, j->coeff)});
            std::swap(cur, next);
            start = 0;
        }
        if (!full) {
            cur.erase(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(start));
            return Vec(std::move(cur));
        }
        return Vec(std::move(done));
    }

    bool contains(const Vec& v) const { return reduce(v, false).is_zero(); }

    /// Indices of basis elements whose leading terms form the minimal leading-term set.
    std::vector<std::size_t> minimal_indices() const
    {
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            const auto& li = basis_[i].lead();
            bool redundant = false;
            for (std::size_t j : by_pos_[li.pos]) {
                if (j == i) continue;
                const auto& lj = basis_[j].lead();
                if (divides(lj.mono, li.mono) && (!(lj.mono == li.mono) || j < i)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) keep.push_back(i);
        }
        return keep;
    }

    /// Leading terms (position, monomial) of the minimal basis.
    std::vector<std::pair<std::uint32_t, Monomial>> leading_terms() const
    {
        std::vector<std::pair<std::uint32_t, Monomial>> out;
        for (std::size_t i : minimal_indices()) out.emplace_back(basis_[i].lead().pos, basis_[i].lead().mono);
        return out;
    }

    /// Reduced Gröbner basis: minimal leading terms, tails fully reduced,
    /// monic; sorted by degree ascending, then leading term descending.
    std::vector<Vec> reduced_basis() const
    {
        GroebnerEngine red(*ring_, module_);
        std::vector<Vec> kept;
        for (std::size_t i : minimal_indices()) kept.push_back(basis_[i]);
        red.add_basis(kept);
        std::vector<Vec> out;
        for (const auto& g : kept) {
            Vec tail(std::vector<VTerm<F>>(g.terms().begin() + 1, g.terms().end()));
            Vec lead(std::vector<VTerm<F>>{g.lead()});
            out.push_back(vadd(*ring_, lead, red.reduce(tail, true)));
        }
        std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
            int da = a.degree(module_), db = b.degree(module_);
            if (da != db) return da < db;
            return term_cmp(*ring_, a.lead(), b.lead()) == std::strong_ordering::greater;
        });
        return out;
    }

    /// Buchberger criterion on the full pair set; used as a post-check.
    bool satisfies_buchberger_criterion() const
    {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            for (std::size_t j = i + 1; j < basis_.size(); ++j) {
                if (basis_[i].lead().pos != basis_[j].lead().pos) continue;
                Monomial l = lcm(basis_[i].lead().mono, basis_[j].lead().mono);
                if (!reduce(s_vector(i, j, l), false).is_zero()) return false;
            }
        return true;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    struct Pair {
        int degree;
        std::uint32_t i, j;
        Monomial lcm;
        bool operator<(const Pair& o) const
        {
            if (degree != o.degree) return degree < o.degree;
            if (i != o.i) return i < o.i;
            return j < o.j;
        }
    };

    void check_ambient(const Vec& v) const
    {
        for (const auto& t : v.terms())
            if (t.pos >= module_.rank() || t.mono.size() != ring_->nvars())
                throw StructuralError("vector outside the ambient free module");
    }

    Vec make_monic(const Vec& v) const
    {
        const auto& k = ring_->field();
        if (k.is_one(v.lead().coeff)) return v;
        return vscale(*ring_, v, k.inv(v.lead().coeff));
    }

    std::size_t find_divisor(const Monomial& m, std::uint32_t pos) const
    {
        for (std::size_t idx : by_pos_[pos])
            if (divides(basis_[idx].lead().mono, m)) return idx;
        return npos;
    }

    Vec s_vector(std::size_t i, std::size_t j, const Monomial& l) const
    {
        const auto& k = ring_->field();
        const Vec& a = basis_[i];
        const Vec& b = basis_[j];
        Vec left = vmul_term(*ring_, a, quotient(l, a.lead().mono), k.one());
        Vec right = vmul_term(*ring_, b, quotient(l, b.lead().mono), k.one());
        return vsub(*ring_, left, right);
    }

    int pair_degree(const Monomial& l, std::uint32_t pos) const { return l.degree() + module_.degree(pos); }

    void insert(Vec v, bool with_pairs)
    {
        v = make_monic(v);
        const std::uint32_t h = static_cast<std::uint32_t>(basis_.size());
        const std::uint32_t pos = v.lead().pos;
        const Monomial lh = v.lead().mono;
        basis_.push_back(std::move(v));
        if (with_pairs) update(h, pos, lh);
        by_pos_[pos].push_back(h);
    }

    // Gebauer–Möller update. The coprime (product) criterion is valid for
    // ideals only, so it is used just when the free module has rank one.
    void update(std::uint32_t h, std::uint32_t pos, const Monomial& lh)
    {
        const bool ideal_case = module_.rank() == 1;
        struct Cand {
            std::uint32_t i;
            Monomial lcm;
            bool coprime;
        };
        std::vector<Cand> cands;
        for (std::uint32_t i : by_pos_[pos]) {
            const Monomial& li = basis_[i].lead().mono;
            cands.push_back({i, lcm(li, lh), ideal_case && coprime(li, lh)});
        }

        // Criterion B on existing pairs.
        for (auto it = pairs_.begin(); it != pairs_.end();) {
            if (basis_[it->i].lead().pos == pos && divides(lh, it->lcm)) {
                Monomial lih = lcm(basis_[it->i].lead().mono, lh);
                Monomial ljh = lcm(basis_[it->j].lead().mono, lh);
                if (!(lih == it->lcm) && !(ljh == it->lcm)) {
                    it = pairs_.erase(it);
                    continue;
                }
            }
            ++it;
        }

        // Criteria M and F among the new pairs.
        std::vector<Cand> kept;
        for (std::size_t a = 0; a < cands.size(); ++a) {
            const Cand& p = cands[a];
            bool drop = false;
            if (!p.coprime) {
                for (std::size_t b = a + 1; b < cands.size() && !drop; ++b)
                    if (divides(cands[b].lcm, p.lcm)) drop = true;
                for (std::size_t b = 0; b < kept.size() && !drop; ++b)
                    if (divides(kept[b].lcm, p.lcm)) drop = true;
            }
            if (!drop) kept.push_back(p);
        }
        for (const Cand& p : kept) {
            if (p.coprime) continue;
            pairs_.insert(Pair{pair_degree(p.lcm, pos), p.i, h, p.lcm});
        }
    }

    const PolyRing<F>* ring_;
    FreeModule module_;
    std::vector<Vec> basis_;
    std::vector<std::vector<std::size_t>> by_pos_;
    std::set<Pair> pairs_;
};

}  // namespace halg
