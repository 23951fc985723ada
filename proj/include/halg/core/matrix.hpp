#pragma once

#include <string>
#include <vector>

#include "halg/core/vector.hpp"

namespace halg {

/// Homogeneous map of graded free modules, stored by columns: column j is the
/// image of the j-th source basis vector and has degree source.degree(j).
template <class F>
struct GradedMatrix {
    FreeModule source;
    FreeModule target;
    std::vector<Vector<F>> columns;

    GradedMatrix() = default;
    GradedMatrix(FreeModule src, FreeModule tgt, std::vector<Vector<F>> cols)
        : source(std::move(src)), target(std::move(tgt)), columns(std::move(cols))
    {
        validate();
    }

    std::size_t rows() const { return target.rank(); }
    std::size_t cols() const { return source.rank(); }

    void validate() const
    {
        if (columns.size() != source.rank()) throw StructuralError("column count does not match source rank");
        for (std::size_t j = 0; j < columns.size(); ++j) {
            const auto& c = columns[j];
            if (c.is_zero()) continue;
            for (const auto& t : c.terms()) {
                if (t.pos >= target.rank()) throw StructuralError("column entry outside the target module");
                if (t.mono.degree() + target.degree(t.pos) != source.degree(j))
                    throw HomogeneityError("column " + std::to_string(j) + " is not homogeneous of degree " +
                                           std::to_string(source.degree(j)));
            }
        }
    }

    static GradedMatrix identity(const PolyRing<F>& ring, const FreeModule& m)
    {
        std::vector<Vector<F>> cols;
        for (std::uint32_t i = 0; i < m.rank(); ++i) cols.push_back(unit_vector(ring, i));
        return GradedMatrix(m, m, std::move(cols));
    }

    static GradedMatrix empty(const FreeModule& target) { return GradedMatrix(FreeModule(), target, {}); }

    /// Entry (row i, column j).
    Polynomial<F> entry(const PolyRing<F>& ring, std::size_t i, std::size_t j) const
    {
        return component(ring, columns[j], static_cast<std::uint32_t>(i));
    }

    bool is_zero() const
    {
        for (const auto& c : columns)
            if (!c.is_zero()) return false;
        return true;
    }
};

/// Transpose of a matrix with respect to a target twist: Hom(-, S(-shift))
/// turns source degree a into shift - a.
template <class F>
GradedMatrix<F> dual_matrix(const PolyRing<F>& ring, const GradedMatrix<F>& m, int shift)
{
    FreeModule src, tgt;
    for (int d : m.target.degrees) src.degrees.push_back(shift - d);
    for (int d : m.source.degrees) tgt.degrees.push_back(shift - d);
    std::vector<std::vector<VTerm<F>>> cols(m.rows());
    for (std::uint32_t j = 0; j < m.cols(); ++j)
        for (const auto& t : m.columns[j].terms()) cols[t.pos].push_back({t.mono, j, t.coeff});
    std::vector<Vector<F>> out;
    out.reserve(cols.size());
    for (auto& c : cols) out.push_back(make_vector(ring, std::move(c)));
    return GradedMatrix<F>(std::move(src), std::move(tgt), std::move(out));
}

/// Product A·B (A: Q -> P, B: Rr -> Q), computed column by column.
template <class F>
GradedMatrix<F> multiply(const PolyRing<F>& ring, const GradedMatrix<F>& a, const GradedMatrix<F>& b)
{
    if (!(a.source == b.target)) throw StructuralError("matrix product of incompatible modules");
    std::vector<Vector<F>> cols;
    for (const auto& bc : b.columns) {
        Vector<F> acc;
        for (const auto& t : bc.terms())
            acc = vadd(ring, acc, vmul_term(ring, a.columns[t.pos], t.mono, t.coeff));
        cols.push_back(std::move(acc));
    }
    return GradedMatrix<F>(b.source, a.target, std::move(cols));
}

}  // namespace halg
