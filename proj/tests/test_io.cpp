#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "halg/halg.hpp"

using namespace halg;

namespace {

using K = PrimeField;

template <class Fn>
std::string parse_error(Fn&& fn)
{
    try {
        fn();
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(Corpus, RunningExample)
{
    auto f = parse_corpus("field prime 32003\nvars x y\nideal x^2, x*y\nmodule m ring\n");
    ASSERT_EQ(f.vars.size(), 2u);
    ASSERT_EQ(f.ideal.size(), 2u);
    auto g = instantiate(f, K(32003), TermOrder::degrevlex);
    EXPECT_EQ(g.ring->ideal().size(), 2u);
    ASSERT_EQ(g.subjects.size(), 1u);
    EXPECT_EQ(g.subjects[0].id, "input/m");
    Session<K> session;
    EXPECT_EQ(session.analyze(g.subjects[0].module)->depth(), 0);
}

TEST(Corpus, CokerRowIsResidueField)
{
    auto f = parse_corpus("vars x y\nmodule m coker [x, y]\n");
    auto g = instantiate(f, K(32003), TermOrder::degrevlex);
    const auto& M = g.subjects[0].module;
    EXPECT_EQ(M.ambient().rank(), 1u);
    EXPECT_EQ(M.relations().cols(), 2u);
    EXPECT_EQ(length(M), 1);
}

TEST(Corpus, RowDegreesInferred)
{
    // rows in degrees 0 and 1: columns (x^2, y) and (x*y, 0)
    auto f = parse_corpus("vars x y\nmodule m coker [x^2, x*y; y, 0]\n");
    EXPECT_EQ(f.modules[0].row_degrees, (std::vector<int>{0, 1}));
    auto g = parse_corpus("vars x y\nmodule m coker [x; 1] degrees 1 2\n");
    EXPECT_EQ(g.modules[0].row_degrees, (std::vector<int>{1, 2}));
    EXPECT_NE(parse_error([] { parse_corpus("vars x y\nmodule m coker [x, y^2; x, y]\n"); }).find("inhomogeneous presentation"), std::string::npos);
}

TEST(Corpus, PositionedErrors)
{
    EXPECT_EQ(parse_error([] { parse_corpus("field prime 32003\nvars x y\nideal x + 1\n"); }), "inhomogeneous generator at line 3");
    EXPECT_NE(parse_error([] { parse_corpus("vars x y\nideal x*z\n"); }).find("unknown variable 'z' at line 2, column 9"), std::string::npos);
    EXPECT_NE(parse_error([] { parse_corpus("field prime 32004\nvars x\n"); }).find("at line 1"), std::string::npos);
    EXPECT_EQ(parse_error([] { parse_corpus("vars x y\nideal x\n"); }), "ideal generator of degree < 2 at line 2");
    EXPECT_NE(parse_error([] { parse_corpus("vars x\nmeta q equidimensional=true\n"); }).find("unknown module"), std::string::npos);
    EXPECT_NE(parse_error([] { parse_corpus("vars x\nbogus\n"); }).find("unknown keyword"), std::string::npos);
    EXPECT_NE(parse_error([] { parse_corpus("ideal x^2\n"); }).find("'vars' must come first"), std::string::npos);
}

TEST(Corpus, PolynomialSyntax)
{
    auto f = parse_corpus("field rational\nvars x y\nideal (x + y)^2 - 2*x*y, 1/2 x^2 + 3x*y\n");
    ASSERT_EQ(f.ideal.size(), 2u);
    EXPECT_EQ(render_poly(f.ideal[0], f.vars), "x^2 + y^2");
    auto g = instantiate(f, RationalField(), TermOrder::degrevlex);
    EXPECT_EQ(g.ring->ideal().size(), 2u);
    EXPECT_THROW(instantiate(parse_corpus("vars x y\nideal 1/32003 x^2\n"), K(32003), TermOrder::degrevlex), ParseError);
}

TEST(Corpus, RoundTrip)
{
    const char* texts[] = {
        "field prime 32003\nvars x y\nideal x^2, x*y\nmodule m ring\nmodule k coker [x, y]\nmeta m equidimensional=true serre_k=0 cm=false\n",
        "field rational\norder lex\nvars a b c\nideal a*b - c^2\nmodule z zero\nmodule n coker [a, b, 0; 0, c, a] degrees 0 0\n",
        "vars x\nmodule f coker [x^3 - 0]\n",
    };
    for (const char* t : texts) {
        auto a = parse_corpus(t);
        auto b = parse_corpus(render_corpus(a));
        EXPECT_EQ(a, b) << render_corpus(a);
        EXPECT_EQ(render_corpus(a), render_corpus(b));
    }
}

TEST(Corpus, RandomRoundTrip)
{
    std::mt19937 rng(3);
    const std::vector<std::string> vars = {"x", "y", "z"};
    for (int trial = 0; trial < 200; ++trial) {
        CorpusFile f;
        f.vars = vars;
        const int deg = 2 + static_cast<int>(rng() % 3);
        RawPoly p;
        for (const auto& m : monomials_of_degree(3, deg))
            if (rng() % 2) p.terms[m.exponents()] = mpq_class(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
        for (auto it = p.terms.begin(); it != p.terms.end();) {
            it->second.canonicalize();
            it = it->second == 0 ? p.terms.erase(it) : std::next(it);
        }
        if (!p.is_zero()) f.ideal.push_back(p);
        auto g = parse_corpus(render_corpus(f));
        EXPECT_EQ(f.ideal, g.ideal) << render_corpus(f);
    }
}

TEST(Report, EmptyAndSingle)
{
    ReportHeader h;
    auto j = report_json(h, {});
    EXPECT_TRUE(j["entries"].empty());
    EXPECT_EQ(j["summary"]["pass"], 0);
    EXPECT_EQ(j["summary"]["fail"], 0);
    EXPECT_EQ(j["summary"]["skip"], 0);
    EXPECT_EQ(j["summary"]["unknown"], 0);
    EXPECT_TRUE(j.contains("version"));
    EXPECT_TRUE(j.contains("field"));
    EXPECT_TRUE(j.contains("bound"));

    CheckOutcome pass;
    pass.module_id = "a/m";
    pass.check = "bass_bounds";
    pass.status = Status::pass;
    pass.window_lo = 0;
    pass.window_hi = 6;
    auto j1 = report_json(h, {pass});
    EXPECT_EQ(j1["entries"][0]["status"], "pass");
    EXPECT_TRUE(j1["entries"][0]["witnesses"].empty());
    EXPECT_EQ(j1["entries"][0]["window"], nlohmann::json::array({0, 6}));
    EXPECT_EQ(j1["summary"]["pass"], 1);

    CheckOutcome fail = pass;
    fail.status = Status::fail;
    fail.witnesses.push_back({"x", 2, kWitnessMinusInfinity, 1});
    auto j2 = report_json(h, {fail});
    EXPECT_FALSE(j2["entries"][0]["witnesses"].empty());
    EXPECT_EQ(j2["entries"][0]["witnesses"][0]["lhs"], "-inf");
    auto md = write_report_markdown(h, {pass, fail}, {{"a/m", 0, 1, {1, 2, 4}, {1, 3}}});
    EXPECT_NE(md.find("| a/m | 0 | 1 | 1, 2, 4 | 1, 3 |"), std::string::npos);
}

TEST(Corpus, ShippedCorpusParses)
{
    auto paths = corpus_paths(HALG_CORPUS_DIR);
    EXPECT_GE(paths.size(), 12u);
    for (const auto& p : paths) {
        auto f = load_corpus_file(p);
        EXPECT_FALSE(f.modules.empty()) << p;
        EXPECT_EQ(parse_corpus(render_corpus(f), f.name), f) << p;
        auto g = instantiate(f, K(32003), TermOrder::degrevlex);
        EXPECT_EQ(g.subjects.size(), f.modules.size());
    }
}
