#include <gtest/gtest.h>

#include <iostream>

#include "halg/verify/runner.hpp"

using namespace halg;

namespace {

using K = PrimeField;

struct Rings {
    PolyRing<K> P{K(32003), {"x", "y"}};
    Polynomial<K> x = P.variable(0), y = P.variable(1);
    RingPtr<K> S = make_ring(P);
    RingPtr<K> gcm = make_ring(P, {P.mul(x, x), P.mul(x, y)});
    RingPtr<K> ci = make_ring(P, {P.mul(x, x), P.mul(y, y)});
    RingPtr<K> sq = make_ring(P, {P.mul(x, x), P.mul(x, y), P.mul(y, y)});
    Session<K> session;
};

Module<K> ring_module(const RingPtr<K>& R) { return Module<K>::free(R, FreeModule::uniform(1)); }

const CheckOutcome& find(const std::vector<CheckOutcome>& v, const std::string& module, const std::string& check)
{
    for (const auto& o : v)
        if (o.module_id == module && o.check == check) return o;
    throw std::runtime_error("no outcome " + module + "/" + check);
}

std::vector<std::string> all_checks()
{
    return check_names();
}

}  // namespace

TEST(Verify, NoFailuresAcrossSmallRings)
{
    Rings r;
    struct Case {
        std::string ring_id;
        RingPtr<K> R;
    };
    for (const auto& [rid, R] : std::vector<Case>{{"S", r.S}, {"gcm", r.gcm}, {"ci", r.ci}, {"sq", r.sq}}) {
        RingGroup<K> group{rid, R, {}};
        group.subjects.push_back({rid + "/R", rid, ring_module(R), {}, {}});
        group.subjects.push_back({rid + "/k", rid, residue_field(R), {}, {}});
        group.subjects.push_back({rid + "/x", rid, cyclic_quotient(R, {r.x}), {}, {}});
        group.subjects.push_back({rid + "/y2", rid, cyclic_quotient(R, {r.P.mul(r.y, r.y)}), {}, {}});
        auto out = verify_group(r.session, group, all_checks(), std::nullopt);
        for (const auto& o : out) {
            EXPECT_NE(o.status, Status::fail) << o.module_id << " " << o.check << " " << o.witnesses.front().label << " j="
                                              << o.witnesses.front().index << " " << o.witnesses.front().lhs << " vs "
                                              << o.witnesses.front().rhs;
            EXPECT_NE(o.status, Status::unknown) << o.module_id << " " << o.check << " " << o.reason;
            if (o.status == Status::skip) {
                EXPECT_FALSE(o.reason.empty());
            }
        }
    }
}

TEST(Verify, RunningExampleOutcomes)
{
    Rings r;
    RingGroup<K> group{"gcm", r.gcm, {{"gcm/R", "gcm", ring_module(r.gcm), {}, {}}}};
    auto out = verify_group(r.session, group, all_checks(), std::nullopt);
    EXPECT_EQ(find(out, "gcm/R", "bass_bounds").status, Status::pass);
    EXPECT_EQ(find(out, "gcm/R", "gcm_structure").status, Status::pass);
    EXPECT_EQ(find(out, "gcm/R", "foxby_cm").status, Status::skip);  // depth K^0 = 0
    const auto& tail = find(out, "gcm/R", "tail_equalities");
    EXPECT_EQ(tail.status, Status::pass);  // only the finite-pd shift applies
    bool saw_pd_skip = false;
    for (const auto& n : tail.notes)
        if (n.find("pd K^0 infinite") != std::string::npos) saw_pd_skip = true;
    EXPECT_TRUE(saw_pd_skip);
    EXPECT_EQ(find(out, "gcm", "ci_characterization").status, Status::pass);
}

TEST(Verify, HypersurfaceOverPolynomialRing)
{
    Rings r;
    RingGroup<K> group{"S", r.S, {{"S/x", "S", cyclic_quotient(r.S, {r.x}), {}, {}}}};
    auto out = verify_group(r.session, group, all_checks(), std::nullopt);
    EXPECT_EQ(find(out, "S/x", "foxby_cm").status, Status::pass);
    EXPECT_EQ(find(out, "S/x", "finiteness_transfer").status, Status::pass);
    EXPECT_EQ(find(out, "S/x", "tail_equalities").status, Status::pass);
}

TEST(Verify, ZeroModuleSkips)
{
    Rings r;
    RingGroup<K> group{"S", r.S, {{"S/0", "S", Module<K>::zero(r.S), {}, {}}}};
    auto out = verify_group(r.session, group, {"schenzel_bounds", "bass_bounds", "foxby_cm"}, std::nullopt);
    for (const auto& o : out) {
        EXPECT_EQ(o.status, Status::skip);
        EXPECT_NE(o.reason.find("zero module"), std::string::npos);
    }
}

TEST(Verify, IsoEvidenceFindsTwist)
{
    Rings r;
    auto A = r.session.analyze(cyclic_quotient(r.S, {r.x}));
    GradedMatrix<K> rel(FreeModule::uniform(1, 3), FreeModule::uniform(1, 2), {poly_at(r.x, 0)});
    auto B = r.session.analyze(Module<K>::cokernel(r.S, rel));  // (S/x)(-2)
    auto ev = iso_evidence(*B, *A);
    EXPECT_TRUE(ev.consistent);
    ASSERT_TRUE(ev.twist.has_value());
    EXPECT_EQ(*ev.twist, 2);
    auto C = r.session.analyze(cyclic_quotient(r.S, {r.P.mul(r.x, r.y)}));
    EXPECT_FALSE(iso_evidence(*A, *C).consistent);
}

namespace {

/// Engine numbers with β_1 bumped for one module: the oracle must refuse to confirm the resulting failure.
class Corrupted : public Numbers<K> {
public:
    std::int64_t betti(Analysis<K>& a, long i) override { return a.betti_at(i) + (i == 0 ? 5 : 0); }
    std::int64_t bass(Analysis<K>& a, long i) override { return a.bass_at(i); }
    std::string name() const override { return "corrupted"; }
};

}  // namespace

TEST(Verify, UnreproducedFailureBecomesUnknown)
{
    Rings r;
    Subject<K> subj{"S/x", "S", cyclic_quotient(r.S, {r.x}), {}, {}};
    Corrupted bad;
    CheckContext<K> ctx{r.session, bad, 6};
    auto o = check_foxby_cm(ctx, subj);
    ASSERT_EQ(o.status, Status::fail);
    ASSERT_FALSE(o.witnesses.empty());
    OracleNumbers<K> oracle;
    CheckContext<K> octx{r.session, oracle, 6};
    confirm_failure(o, check_foxby_cm(octx, subj), oracle.fallbacks());
    EXPECT_EQ(o.status, Status::unknown);
}

TEST(Verify, OracleNumbersMatchEngineOnLowIndices)
{
    Rings r;
    OracleNumbers<K> oracle;
    for (const auto& R : {r.gcm, r.ci, r.S}) {
        for (const auto& M : {ring_module(R), residue_field(R), cyclic_quotient(R, {r.x})}) {
            auto a = r.session.analyze(M);
            for (long i = 0; i <= 3; ++i) {
                EXPECT_EQ(oracle.betti(*a, i), a->betti_at(i)) << R->description() << " beta_" << i;
                EXPECT_EQ(oracle.bass(*a, i), a->bass_at(i)) << R->description() << " mu^" << i;
            }
        }
    }
}

TEST(Verify, QuestionsOnSmallModules)
{
    Rings r;
    RingGroup<K> group{"gcm", r.gcm, {{"gcm/R", "gcm", ring_module(r.gcm), {}, {}}, {"gcm/k", "gcm", residue_field(r.gcm), {}, {}}}};
    auto out = explore_group(r.session, group, std::nullopt);
    ASSERT_EQ(out.size(), 4u);
    for (const auto& o : out) {
        EXPECT_TRUE(o.verdict == "AGREE" || o.verdict == "COUNTEREXAMPLE");
        EXPECT_FALSE(o.witnesses.empty());
    }
}

TEST(Verify, BassSecondDifferenceIsALowerBound)
{
    // embedded point on a line over k[x,y]: g = 0, t = 1
    Rings r;
    auto M = cyclic_quotient(r.S, {r.P.mul(r.x, r.x), r.P.mul(r.x, r.y)});
    auto a = r.session.analyze(M);
    ASSERT_EQ(a->depth(), 0);
    ASSERT_EQ(a->dim(), 1);
    const auto lhs = a->bass_at(2) - a->bass_at(1);
    const auto rhs = a->deficiency(0)->betti_at(2) - a->deficiency(0)->betti_at(1) - a->deficiency(1)->betti_at(0);
    EXPECT_EQ(lhs, -1);
    EXPECT_EQ(rhs, -2);
    RingGroup<K> group{"S", r.S, {{"S/emb", "S", M, {}, {}}}};
    EXPECT_EQ(find(verify_group(r.session, group, {"bass_bounds"}, std::nullopt), "S/emb", "bass_bounds").status, Status::pass);
}
