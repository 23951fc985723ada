#include <gtest/gtest.h>

#include <chrono>

#include "halg/resolve/resolution.hpp"

using namespace halg;

namespace {

using K = PrimeField;

RingPtr<K> poly_ring(std::size_t s, TermOrder o = TermOrder::degrevlex)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < s; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
    return make_ring(PolyRing<K>(K(32003), names, o));
}

std::int64_t binom(int n, int k) { return HilbertData::binom(n, k); }

// Σ (-1)^i HS(F_i) = HS(M)
void expect_euler(const FreeResolution<K>& res, const Module<K>& M)
{
    ASSERT_TRUE(res.complete);
    HilbertData sum(LaurentPoly(), static_cast<int>(M.S().nvars()));
    for (std::size_t i = 0; i <= res.steps(); ++i) {
        auto h = free_hilbert(*res.ring, res.module(i));
        sum = i % 2 ? sum - h : sum + h;
    }
    EXPECT_EQ(sum, hilbert_data(M));
}

}  // namespace

TEST(Resolution, KoszulBinomials)
{
    for (std::size_t s = 2; s <= 4; ++s) {
        auto S = poly_ring(s);
        auto k = residue_field(S);
        auto res = minimal_free_resolution(k, 10);
        ASSERT_TRUE(res.complete);
        auto b = betti_table(res);
        for (int i = 0; i <= static_cast<int>(s); ++i) {
            EXPECT_EQ(b.total(i), binom(static_cast<int>(s), i));
            EXPECT_EQ(b.at(i, i), binom(static_cast<int>(s), i));
        }
        EXPECT_EQ(res.length(), static_cast<int>(s));
        expect_euler(res, k);
    }
}

TEST(Resolution, HilbertBurch)
{
    auto S = poly_ring(2);
    const auto& P = S->S();
    auto x = P.variable(0), y = P.variable(1);
    auto M0 = cyclic_quotient(S, {P.mul(x, x), P.mul(x, y)});
    auto res = minimal_free_resolution(M0, 5);
    auto b = betti_table(res);
    EXPECT_EQ(b.total(0), 1);
    EXPECT_EQ(b.total(1), 2);
    EXPECT_EQ(b.total(2), 1);
    EXPECT_EQ(b.at(1, 2), 2);
    EXPECT_EQ(b.at(2, 3), 1);
    expect_euler(res, M0);
    for (std::size_t i = 2; i <= res.steps(); ++i)
        EXPECT_TRUE(multiply(P, res.differentials[i - 2], res.differentials[i - 1]).is_zero());
}

TEST(Resolution, SquareZeroRing)
{
    auto S = poly_ring(2);
    const auto& P = S->S();
    auto x = P.variable(0), y = P.variable(1);
    auto R = make_ring(P, {P.mul(x, x), P.mul(x, y), P.mul(y, y)});
    auto res = minimal_free_resolution(residue_field(R), 6);
    auto b = betti_table(res);
    for (int i = 0; i <= 6; ++i) {
        EXPECT_EQ(b.total(i), std::int64_t(1) << i);
        EXPECT_EQ(b.at(i, i), std::int64_t(1) << i);
    }
    // composites vanish modulo I
    for (std::size_t i = 2; i <= res.steps(); ++i)
        EXPECT_NO_THROW(check_complex(*R, res.differentials[i - 1], res.differentials[i - 2]));
}

TEST(Resolution, ExtensionKeepsEarlierSteps)
{
    auto S = poly_ring(2);
    const auto& P = S->S();
    auto x = P.variable(0), y = P.variable(1);
    auto R = make_ring(P, {P.mul(x, x), P.mul(x, y)});
    auto k = residue_field(R);
    auto short_res = minimal_free_resolution(k, 3);
    auto long_res = short_res;
    extend_resolution(long_res, 6);
    auto direct = minimal_free_resolution(k, 6);
    for (std::size_t i = 0; i <= 3; ++i) EXPECT_EQ(short_res.module(i), long_res.module(i));
    EXPECT_EQ(betti_table(long_res), betti_table(direct));
    auto zero = minimal_free_resolution(k, 0);
    EXPECT_EQ(zero.steps(), 0u);
    extend_resolution(zero, 2);
    EXPECT_EQ(zero.module(2), direct.module(2));
}

TEST(Resolution, OrderIndependence)
{
    for (TermOrder o : {TermOrder::degrevlex, TermOrder::lex}) {
        auto S = poly_ring(3, o);
        const auto& P = S->S();
        auto a = P.variable(0), b = P.variable(1), c = P.variable(2);
        auto M = cyclic_quotient(S, {P.mul(a, b), P.mul(b, c), P.mul(a, c), P.sub(P.mul(a, a), P.mul(b, c))});
        auto t = betti_table(minimal_free_resolution(M, 5));
        auto dr = poly_ring(3);
        const auto& Q = dr->S();
        auto a2 = Q.variable(0), b2 = Q.variable(1), c2 = Q.variable(2);
        auto M2 = cyclic_quotient(dr, {Q.mul(a2, b2), Q.mul(b2, c2), Q.mul(a2, c2), Q.sub(Q.mul(a2, a2), Q.mul(b2, c2))});
        EXPECT_EQ(t, betti_table(minimal_free_resolution(M2, 5)));
    }
}

TEST(Resolution, ZeroModuleAndCache)
{
    auto S = poly_ring(2);
    auto z = minimal_free_resolution(Module<K>::zero(S), 4);
    EXPECT_TRUE(z.complete);
    EXPECT_TRUE(betti_table(z).totals.empty());
    ResolutionCache<K> cache;
    auto k = residue_field(S);
    auto r1 = cache.get(k, 1);
    auto r2 = cache.get(k, 5);
    EXPECT_EQ(cache.size(), 1u);
    EXPECT_TRUE(r2->complete);
    EXPECT_EQ(r1->module(1), r2->module(1));
}
