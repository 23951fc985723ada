#include <gtest/gtest.h>

#include <random>

#include "halg/core/polynomial.hpp"
#include "halg/core/vector.hpp"
#include "halg/core/matrix.hpp"

using namespace halg;

namespace {

using P = PolyRing<PrimeField>;

P ring3(std::uint32_t p = 32003) { return P(PrimeField(p), {"x", "y", "z"}); }

Monomial random_monomial(std::mt19937& g, std::size_t n, int degree)
{
    std::vector<int> e(n, 0);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int i = 0; i < degree; ++i) ++e[pick(g)];
    return Monomial(e);
}

template <class R>
typename R::Poly random_poly(std::mt19937& g, const R& ring, int degree, int nterms = 4)
{
    std::vector<Term<typename std::decay_t<decltype(ring.field())>>> terms;
    std::uniform_int_distribution<int> c(-50, 50);
    for (int i = 0; i < nterms; ++i)
        terms.push_back({random_monomial(g, ring.nvars(), degree), ring.field().from_int(c(g))});
    return ring.make(std::move(terms));
}

}  // namespace

TEST(Monomial, DegrevlexChain)
{
    std::vector<Monomial> all = monomials_of_degree(3, 2);
    std::vector<Monomial> expected{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
    ASSERT_EQ(all.size(), 6u);
    // Oracle: sort by the literal definition, independent of compare().
    auto by_definition = [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    };
    std::vector<Monomial> sorted = expected;
    std::sort(sorted.begin(), sorted.end(), by_definition);
    EXPECT_EQ(sorted, expected);
    EXPECT_EQ(all, expected);
    EXPECT_EQ(compare(TermOrder::degrevlex, Monomial{2, 0, 0}, Monomial{1, 1, 0}), std::strong_ordering::greater);
    EXPECT_EQ(compare(TermOrder::degrevlex, Monomial{1, 1, 0}, Monomial{1, 1, 0}), std::strong_ordering::equal);
    EXPECT_EQ(compare(TermOrder::degrevlex, Monomial{1, 0, 0}, Monomial{0, 2, 0}), std::strong_ordering::less);
    EXPECT_THROW(compare(TermOrder::lex, Monomial{1, 0}, Monomial{1, 0, 0}), StructuralError);
}

TEST(Monomial, OrderAxioms)
{
    std::mt19937 g(7);
    std::uniform_int_distribution<int> deg(0, 5);
    for (TermOrder o : {TermOrder::degrevlex, TermOrder::lex}) {
        for (int it = 0; it < 1000; ++it) {
            Monomial a = random_monomial(g, 4, deg(g)), b = random_monomial(g, 4, deg(g)),
                     c = random_monomial(g, 4, deg(g));
            auto ab = compare(o, a, b);
            EXPECT_EQ(ab == std::strong_ordering::equal, a == b);
            EXPECT_EQ(compare(o, b, a), 0 <=> ab);
            if (ab == std::strong_ordering::less && compare(o, b, c) == std::strong_ordering::less) {
                EXPECT_EQ(compare(o, a, c), std::strong_ordering::less);
            }
            EXPECT_EQ(compare(o, a * c, b * c), ab);
            EXPECT_NE(compare(o, Monomial(4), a), std::strong_ordering::greater);
        }
    }
}

TEST(Polynomial, Examples)
{
    P Q(PrimeField(32003), {"x", "y"});
    auto x = Q.variable(0), y = Q.variable(1);
    auto f = Q.mul(Q.add(x, y), Q.sub(x, y));
    EXPECT_EQ(f, Q.sub(Q.mul(x, x), Q.mul(y, y)));
    EXPECT_TRUE(Q.add(f, Q.scale(f, Q.field().from_int(-1))).is_zero());

    P F5(PrimeField(5), {"x"});
    auto x5 = F5.variable(0);
    EXPECT_EQ(F5.mul(F5.scale(x5, 2), F5.scale(x5, 3)), F5.mul(x5, x5));

    EXPECT_THROW(Q.add(x, Q.mul(x, y)), HomogeneityError);

    PolyRing<RationalField> QQ(RationalField{}, {"x", "y"});
    auto a = QQ.variable(0), b = QQ.variable(1);
    EXPECT_EQ(QQ.to_string(QQ.mul(QQ.add(a, b), QQ.sub(a, b))), "x^2 - y^2");
}

TEST(Polynomial, RingAxioms)
{
    std::mt19937 g(11);
    auto R = ring3();
    std::uniform_int_distribution<int> deg(0, 3);
    for (int it = 0; it < 1000; ++it) {
        int d1 = deg(g), d2 = deg(g), d3 = deg(g);
        auto f = random_poly(g, R, d1), h = random_poly(g, R, d2), k = random_poly(g, R, d3);
        auto h2 = random_poly(g, R, d2);
        EXPECT_EQ(R.mul(R.mul(f, h), k), R.mul(f, R.mul(h, k)));
        EXPECT_EQ(R.mul(f, h), R.mul(h, f));
        EXPECT_EQ(R.mul(f, R.add(h, h2)), R.add(R.mul(f, h), R.mul(f, h2)));
        EXPECT_EQ(R.add(h, h2), R.add(h2, h));
    }
}

TEST(Field, Inverses)
{
    std::mt19937 g(3);
    PrimeField F(32003);
    for (int i = 1; i < 2000; ++i) {
        auto a = F.from_int(static_cast<long>(g() % 32003));
        if (F.is_zero(a)) continue;
        EXPECT_TRUE(F.is_one(F.mul(a, F.inv(a))));
    }
    RationalField Q;
    for (int i = 0; i < 200; ++i) {
        mpq_class a(static_cast<long>(g() % 1000) + 1, static_cast<long>(g() % 997) + 1);
        EXPECT_TRUE(Q.is_one(Q.mul(a, Q.inv(a))));
    }
    EXPECT_THROW(PrimeField(32004), DomainError);
    EXPECT_THROW(F.inv(F.zero()), DomainError);
}

TEST(Matrix, DualAndProduct)
{
    P Q(PrimeField(32003), {"x", "y"});
    auto x = Q.variable(0), y = Q.variable(1);
    GradedMatrix<PrimeField> d1(FreeModule({2, 2}), FreeModule({0}),
                                {poly_at(Q.mul(x, x), 0), poly_at(Q.mul(x, y), 0)});
    GradedMatrix<PrimeField> d2(FreeModule({3}), FreeModule({2, 2}),
                                {vsub(Q, poly_at(y, 0), poly_at(x, 1))});
    EXPECT_TRUE(multiply(Q, d1, d2).is_zero());
    auto t = dual_matrix(Q, d1, 2);
    EXPECT_EQ(t.source.degrees, std::vector<int>({2}));
    EXPECT_EQ(t.target.degrees, std::vector<int>({0, 0}));
    EXPECT_THROW(GradedMatrix<PrimeField>(FreeModule({1}), FreeModule({0}), {poly_at(Q.mul(x, x), 0)}),
                 HomogeneityError);
}
