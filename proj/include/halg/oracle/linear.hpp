#pragma once

#include <map>
#include <vector>

namespace halg::oracle {

/// Row echelon basis of a subspace of F^n, rows keyed by pivot column, pivot entry 1.
template <class F>
class Echelon {
public:
    using Elem = typename F::Elem;
    using Row = std::vector<Elem>;

    Echelon(const F& field, std::size_t n) : k_(&field), n_(n) {}

    std::size_t dimension() const { return rows_.size(); }
    std::size_t ambient() const { return n_; }

    /// v minus a combination of the rows, zero at every pivot column.
    Row reduce(Row v) const
    {
        for (const auto& [c, row] : rows_) {
            if (k_->is_zero(v[c])) continue;
            const Elem f = v[c];
            for (std::size_t i = c; i < n_; ++i)
                if (!k_->is_zero(row[i])) v[i] = k_->sub(v[i], k_->mul(f, row[i]));
        }
        return v;
    }

    /// Adds v; returns false when v already lies in the span.
    bool insert(const Row& v)
    {
        Row r = reduce(v);
        std::size_t c = 0;
        while (c < n_ && k_->is_zero(r[c])) ++c;
        if (c == n_) return false;
        const Elem inv = k_->inv(r[c]);
        for (std::size_t i = c; i < n_; ++i) r[i] = k_->mul(r[i], inv);
        rows_.emplace(c, std::move(r));
        return true;
    }

    bool contains(const Row& v) const
    {
        Row r = reduce(v);
        for (const auto& x : r)
            if (!k_->is_zero(x)) return false;
        return true;
    }

    bool is_pivot(std::size_t c) const { return rows_.count(c) > 0; }

    std::vector<Row> basis() const
    {
        std::vector<Row> out;
        for (const auto& [c, row] : rows_) out.push_back(row);
        return out;
    }

private:
    const F* k_;
    std::size_t n_;
    std::map<std::size_t, Row> rows_;
};

/// Rank of a list of vectors.
template <class F>
std::size_t rank_of(const F& field, std::size_t n, const std::vector<std::vector<typename F::Elem>>& vectors)
{
    Echelon<F> e(field, n);
    for (const auto& v : vectors) e.insert(v);
    return e.dimension();
}

/// Basis of the kernel of the linear map sending basis vector i of F^images.size() to images[i] in F^m.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const F& field, std::size_t m,
                                                        const std::vector<std::vector<typename F::Elem>>& images)
{
    using Elem = typename F::Elem;
    const std::size_t n = images.size();
    // Echelon on [image | unit], pivots searched in the image part first.
    std::vector<std::vector<Elem>> rows;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Elem> r(m + n, field.zero());
        for (std::size_t j = 0; j < m; ++j) r[j] = images[i][j];
        r[m + i] = field.one();
        rows.push_back(std::move(r));
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && field.is_zero(rows[piv][c])) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        const Elem inv = field.inv(rows[rank][c]);
        for (auto& x : rows[rank]) x = field.mul(x, inv);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (field.is_zero(rows[r][c])) continue;
            const Elem f = rows[r][c];
            for (std::size_t k = c; k < m + n; ++k) rows[r][k] = field.sub(rows[r][k], field.mul(f, rows[rank][k]));
        }
        ++rank;
    }
    std::vector<std::vector<Elem>> out;
    for (std::size_t r = rank; r < rows.size(); ++r) out.emplace_back(rows[r].begin() + static_cast<std::ptrdiff_t>(m), rows[r].end());
    return out;
}

}  // namespace halg::oracle
