#include <gtest/gtest.h>

#include <random>

#include "halg/groebner/groebner.hpp"

using namespace halg;

namespace {

using K = PrimeField;
using P = PolyRing<K>;

struct Fixture2 {
    P S{K(32003), {"x", "y"}};
    Polynomial<K> x = S.variable(0), y = S.variable(1);
    FreeModule R1 = FreeModule::uniform(1);
};

// Dimension of span of degree-d multiples of the generators, by Gaussian elimination
// over F_p on coefficient vectors. Independent of the Gröbner engine.
std::size_t ideal_dimension_in_degree(const P& S, const std::vector<Polynomial<K>>& gens, int d)
{
    auto basis = monomials_of_degree(S.nvars(), d);
    std::vector<std::vector<std::uint32_t>> rows;
    for (const auto& g : gens) {
        if (g.degree() > d) continue;
        for (const auto& m : monomials_of_degree(S.nvars(), d - g.degree())) {
            std::vector<std::uint32_t> row(basis.size(), 0);
            for (const auto& t : g.terms()) {
                auto mm = t.mono * m;
                auto it = std::find(basis.begin(), basis.end(), mm);
                row[static_cast<std::size_t>(it - basis.begin())] = t.coeff;
            }
            rows.push_back(row);
        }
    }
    const K& F = S.field();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < basis.size() && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        auto inv = F.inv(rows[rank][c]);
        for (auto& v : rows[rank]) v = F.mul(v, inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            auto f = rows[r][c];
            for (std::size_t k = 0; k < basis.size(); ++k) rows[r][k] = F.sub(rows[r][k], F.mul(f, rows[rank][k]));
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST(Groebner, NormalFormExamples)
{
    Fixture2 f;
    auto& S = f.S;
    auto x2 = S.mul(f.x, f.x), xy = S.mul(f.x, f.y), y2 = S.mul(f.y, f.y);
    auto G1 = reduced_groebner(S, f.R1, {poly_at(x2, 0)});
    EXPECT_TRUE(normal_form(S, poly_at(S.mul(x2, f.y), 0), G1).is_zero());
    auto G2 = reduced_groebner(S, f.R1, {poly_at(S.add(xy, y2), 0)});
    EXPECT_TRUE(normal_form(S, poly_at(S.add(S.mul(xy, f.y), S.mul(y2, f.y)), 0), G2).is_zero());
    auto G3 = reduced_groebner(S, f.R1, {poly_at(x2, 0), poly_at(xy, 0)});
    EXPECT_EQ(normal_form(S, poly_at(y2, 0), G3), poly_at(y2, 0));
}

TEST(Groebner, ReducedBasisExamples)
{
    Fixture2 f;
    auto& S = f.S;
    auto x2 = S.mul(f.x, f.x), xy = S.mul(f.x, f.y), y2 = S.mul(f.y, f.y);
    auto G = reduced_groebner(S, f.R1, {poly_at(x2, 0), poly_at(S.add(xy, y2), 0)});
    ASSERT_EQ(G.elements.size(), 3u);
    EXPECT_EQ(G.elements[0], poly_at(x2, 0));
    EXPECT_EQ(G.elements[1], poly_at(S.add(xy, y2), 0));
    EXPECT_EQ(G.elements[2], poly_at(S.mul(y2, f.y), 0));

    auto L = reduced_groebner(S, f.R1, {poly_at(f.x, 0), poly_at(f.y, 0)});
    EXPECT_EQ(L.elements.size(), 2u);

    auto M = reduced_groebner(S, f.R1, {poly_at(x2, 0), poly_at(S.mul(x2, f.y), 0), poly_at(y2, 0)});
    EXPECT_EQ(M.elements.size(), 2u);
}

TEST(Groebner, SyzygyExamples)
{
    Fixture2 f;
    auto& S = f.S;
    GradedMatrix<K> koszul(FreeModule({1, 1}), FreeModule({0}), {poly_at(f.x, 0), poly_at(f.y, 0)});
    auto s1 = syzygy_generators(S, koszul);
    ASSERT_EQ(s1.cols(), 1u);
    EXPECT_TRUE(multiply(S, koszul, s1).is_zero());
    EXPECT_EQ(s1.source.degrees, std::vector<int>({2}));

    auto x2 = S.mul(f.x, f.x), xy = S.mul(f.x, f.y);
    GradedMatrix<K> m(FreeModule({2, 2}), FreeModule({0}), {poly_at(x2, 0), poly_at(xy, 0)});
    auto s2 = syzygy_generators(S, m);
    ASSERT_EQ(s2.cols(), 1u);
    EXPECT_EQ(s2.source.degrees, std::vector<int>({3}));
    auto c = s2.columns[0];
    auto expect = vsub(S, poly_at(f.y, 0), poly_at(f.x, 1));
    EXPECT_TRUE(c == expect || c == vscale(S, expect, S.field().from_int(-1)));

    GradedMatrix<K> single(FreeModule({2}), FreeModule({0}), {poly_at(x2, 0)});
    EXPECT_EQ(syzygy_generators(S, single).cols(), 0u);
}

TEST(Groebner, KernelOverQuotient)
{
    Fixture2 f;
    auto& S0 = f.S;
    auto R = make_ring(S0, {S0.mul(f.x, f.x), S0.mul(f.x, f.y)});
    const auto& S = R->S();
    GradedMatrix<K> A(FreeModule({1}), FreeModule({0}), {poly_at(S.variable(0), 0)});
    auto k = kernel_over_quotient(*R, A);
    ASSERT_EQ(k.cols(), 2u);
    EXPECT_EQ(k.columns[0], poly_at(S.variable(0), 0));
    EXPECT_EQ(k.columns[1], poly_at(S.variable(1), 0));

    auto Rs = make_ring(S0);
    GradedMatrix<K> B(FreeModule({1, 1}), FreeModule({0}), {poly_at(S.variable(0), 0), poly_at(S.variable(1), 0)});
    EXPECT_EQ(kernel_over_quotient(*Rs, B).cols(), 1u);

    auto id = GradedMatrix<K>::identity(S, FreeModule({0, 0}));
    EXPECT_EQ(kernel_over_quotient(*R, id).cols(), 0u);
}

TEST(Groebner, PropertiesAgainstLinearAlgebra)
{
    std::mt19937 g(5);
    P S(K(32003), {"x", "y", "z"});
    std::uniform_int_distribution<int> deg(2, 3), coef(-3, 3), count(1, 3);
    for (int it = 0; it < 40; ++it) {
        std::vector<Polynomial<K>> gens;
        int n = count(g);
        for (int i = 0; i < n; ++i) {
            int d = deg(g);
            std::vector<Term<K>> terms;
            for (const auto& m : monomials_of_degree(3, d))
                if (g() % 3 == 0) terms.push_back({m, S.field().from_int(coef(g))});
            auto p = S.make(terms);
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        std::vector<Vector<K>> vs;
        for (auto& p : gens) vs.push_back(poly_at(p, 0));
        GroebnerEngine<K> e(S, FreeModule::uniform(1));
        for (auto& v : vs) e.add(v);
        e.complete();
        ASSERT_TRUE(e.satisfies_buchberger_criterion());
        auto G = GroebnerBasis<K>{FreeModule::uniform(1), e.reduced_basis(), true};
        // membership soundness and idempotence
        for (int k = 0; k < 5; ++k) {
            Vector<K> comb;
            int d = 4;
            for (auto& p : gens) {
                std::vector<Term<K>> t;
                for (const auto& m : monomials_of_degree(3, d - p.degree()))
                    if (g() % 2) t.push_back({m, S.field().from_int(coef(g))});
                comb = vadd(S, comb, poly_at(S.mul(S.make(t), p), 0));
            }
            EXPECT_TRUE(normal_form(S, comb, G).is_zero());
            auto junk = poly_at(S.make({{Monomial{1, 2, 1}, 1u}, {Monomial{0, 0, 4}, 2u}}), 0);
            auto nf = normal_form(S, junk, G);
            EXPECT_EQ(normal_form(S, nf, G), nf);
        }
        // standard monomial count = Macaulay co-rank
        std::vector<Monomial> leads;
        for (auto& v : G.elements) leads.push_back(v.lead().mono);
        for (int d = 0; d <= 6; ++d) {
            std::size_t standard = 0;
            for (const auto& m : monomials_of_degree(3, d)) {
                bool in = false;
                for (auto& l : leads) in = in || divides(l, m);
                if (!in) ++standard;
            }
            EXPECT_EQ(standard, monomials_of_degree(3, d).size() - ideal_dimension_in_degree(S, gens, d)) << d;
        }
    }
}
