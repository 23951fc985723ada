#include <gtest/gtest.h>

#include "halg/modcat/module.hpp"

using namespace halg;

namespace {

using K = PrimeField;

struct Env {
    RingPtr<K> S;
    Polynomial<K> x, y;
    explicit Env(std::vector<std::string> names = {"x", "y"})
        : S(make_ring(PolyRing<K>(K(32003), std::move(names)))), x(S->S().variable(0)), y(S->S().variable(1))
    {}
    const PolyRing<K>& P() const { return S->S(); }
    Polynomial<K> mul(const Polynomial<K>& a, const Polynomial<K>& b) const { return P().mul(a, b); }
};

LaurentPoly lp(std::initializer_list<std::pair<int, std::int64_t>> c)
{
    LaurentPoly r;
    for (auto [k, v] : c) r = r + LaurentPoly::monomial(k, v);
    return r;
}

}  // namespace

TEST(Hilbert, MonomialRecursionAgainstCounting)
{
    MonomialHilbert mh(3);
    // (x^2, xy, yz^3)
    std::vector<Monomial> gens{{2, 0, 0}, {1, 1, 0}, {0, 1, 3}};
    HilbertData h(mh.numerator(gens), 3);
    for (int d = 0; d <= 9; ++d) {
        std::int64_t standard = 0;
        for (const auto& m : monomials_of_degree(3, d)) {
            bool in = false;
            for (const auto& g : gens) in = in || divides(g, m);
            standard += in ? 0 : 1;
        }
        EXPECT_EQ(h.value(d), standard) << d;
    }
}

TEST(Hilbert, Examples)
{
    Env e;
    auto M0 = cyclic_quotient(e.S, {e.mul(e.x, e.x), e.mul(e.x, e.y)});
    auto h = hilbert_data(M0);
    EXPECT_EQ(h.numerator(), lp({{0, 1}, {2, -2}, {3, 1}}));
    EXPECT_EQ(h.prefix(0, 4), std::vector<std::int64_t>({1, 2, 1, 1, 1}));
    EXPECT_EQ(h.dimension(), 1);
    EXPECT_EQ(h.length(), kInfiniteLength);

    auto free = hilbert_data(Module<K>::free(e.S, FreeModule::uniform(1)));
    EXPECT_EQ(free.numerator(), LaurentPoly::one());
    EXPECT_EQ(free.value(5), 6);

    auto k = hilbert_data(residue_field(e.S));
    EXPECT_EQ(k.numerator(), lp({{0, 1}, {1, -2}, {2, 1}}));
    EXPECT_EQ(k.dimension(), 0);
    EXPECT_EQ(k.length(), 1);

    auto z = hilbert_data(Module<K>::zero(e.S));
    EXPECT_EQ(z.dimension(), kMinusInfinity);
    EXPECT_EQ(z.length(), 0);
}

TEST(Hilbert, GradedDual)
{
    Env e;
    auto k = residue_field(e.S);
    auto d = graded_dual_hilbert(k);
    EXPECT_EQ(d.length(), 1);
    EXPECT_EQ(d.value(0), 1);
    // H = (1, 2): S/(x,y)^2
    auto M = cyclic_quotient(e.S, {e.mul(e.x, e.x), e.mul(e.x, e.y), e.mul(e.y, e.y)});
    auto dm = graded_dual_hilbert(M);
    EXPECT_EQ(dm.length(), 3);
    EXPECT_EQ(dm.value(0), 1);
    EXPECT_EQ(dm.value(-1), 2);
    EXPECT_THROW(graded_dual_hilbert(Module<K>::free(e.S, FreeModule::uniform(1))), DomainError);
}

TEST(Presentation, Examples)
{
    Env e;
    auto M0 = cyclic_quotient(e.S, {e.mul(e.x, e.x), e.mul(e.x, e.y)});
    auto P = minimal_presentation(M0);
    EXPECT_EQ(P.ambient().rank(), 1u);
    EXPECT_EQ(P.relations().cols(), 2u);

    auto unit = Module<K>::cokernel(e.S, GradedMatrix<K>(FreeModule({0}), FreeModule({0}), {unit_vector(e.P(), 0)}));
    auto Pu = minimal_presentation(unit);
    EXPECT_EQ(Pu.ambient().rank(), 0u);
    EXPECT_EQ(Pu.relations().cols(), 0u);

    GradedMatrix<K> ideal(FreeModule({1, 1}), FreeModule({0}), {poly_at(e.x, 0), poly_at(e.y, 0)});
    auto sub = subquotient(e.S, ideal, GradedMatrix<K>::empty(FreeModule({0})));
    auto Ps = minimal_presentation(sub);
    EXPECT_EQ(Ps.ambient().degrees, std::vector<int>({1, 1}));
    ASSERT_EQ(Ps.relations().cols(), 1u);
    EXPECT_EQ(Ps.relations().source.degrees, std::vector<int>({2}));
    EXPECT_EQ(hilbert_data(Ps), hilbert_data(sub));

    // idempotence
    auto again = minimal_presentation(Ps);
    EXPECT_EQ(again.ambient(), Ps.ambient());
    EXPECT_EQ(again.relations().source, Ps.relations().source);
}

TEST(Presentation, OverQuotientDropsIdealRelations)
{
    Env e;
    auto R = make_ring(e.P(), {e.mul(e.x, e.x), e.mul(e.x, e.y)});
    // R/(x) over R: relation x only, I adds nothing new.
    auto M = cyclic_quotient(R, {e.x, e.mul(e.x, e.y)});
    auto P = minimal_presentation(M);
    EXPECT_EQ(P.relations().cols(), 1u);
    EXPECT_EQ(hilbert_data(P).prefix(0, 4), std::vector<std::int64_t>({1, 1, 1, 1, 1}));
    EXPECT_EQ(hilbert_data(Module<K>::free(R, FreeModule::uniform(1))).prefix(0, 3), std::vector<std::int64_t>({1, 2, 1, 1}));
}

TEST(Homology, Examples)
{
    Env e;
    const auto& S = e.P();
    GradedMatrix<K> d1(FreeModule({1, 1}), FreeModule({0}), {poly_at(e.x, 0), poly_at(e.y, 0)});
    GradedMatrix<K> d2(FreeModule({2}), FreeModule({1, 1}), {vsub(S, poly_at(e.y, 0), poly_at(e.x, 1))});
    auto H1 = kernel_and_homology(e.S, d2, d1);
    EXPECT_TRUE(hilbert_data(H1).is_zero());
    EXPECT_TRUE(homology_hilbert(*e.S, d2, d1).is_zero());

    auto zero_in = GradedMatrix<K>::empty(FreeModule({0}));
    GradedMatrix<K> zero_out(FreeModule({0}), FreeModule(), {Vector<K>()});
    auto H = kernel_and_homology(e.S, zero_in, zero_out);
    EXPECT_EQ(hilbert_data(H), hilbert_data(Module<K>::free(e.S, FreeModule({0}))));

    EXPECT_THROW(kernel_and_homology(e.S, d1.source.rank() ? GradedMatrix<K>(FreeModule({1}), FreeModule({1, 1}),
                                                                             {poly_at(S.one(), 0)})
                                                           : d2,
                                     d1),
                 ContractViolation);
}

TEST(Homology, KoszulOnQuotientTop)
{
    // Koszul complex of (x, y) tensored with M0 = S/(x^2, xy) at the top:
    // H_2 = {m : xm = ym = 0} = socle-like kernel spanned by x, in degree 1 (+2 from the twist).
    Env e;
    auto R = make_ring(e.P(), {e.mul(e.x, e.x), e.mul(e.x, e.y)});
    const auto& S = R->S();
    GradedMatrix<K> d2(FreeModule({2}), FreeModule({1, 1}), {vsub(S, poly_at(S.variable(1), 0), poly_at(S.variable(0), 1))});
    auto zero_in = GradedMatrix<K>::empty(FreeModule({2}));
    auto H = kernel_and_homology(R, zero_in, d2);
    auto h = hilbert_data(H);
    EXPECT_EQ(h.length(), 1);
    EXPECT_EQ(h.value(3), 1);
    EXPECT_EQ(homology_hilbert(*R, zero_in, d2), h);
}
