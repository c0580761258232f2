#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "ineqforge/search.hpp"

using namespace ineqforge;
using Catch::Approx;

namespace {

SearchSpace square_bound_space() {
    SearchSpace space;
    space.theorem = TheoremId::superaddSquareB;
    space.functions = {FunctionSpace{
        FunctionFamily::exponential,
        {ParamRange{1.0, 1.0}, ParamRange{-2.0, 2.0}}}};
    space.intervalLo = ParamRange{0.0, 0.0};
    space.intervalHi = ParamRange{1.0, 1.0};
    space.budget = 2000;
    space.seed = 42;
    return space;
}

CandidateConfig square_bound_config(double k) {
    CandidateConfig c;
    c.theorem = TheoremId::superaddSquareB;
    c.f = make_function(FunctionFamily::exponential, {1.0, k}, Interval{0.0, 1.0});
    c.h = make_weight(WeightFamily::identity);
    c.iv = Interval{0.0, 1.0};
    return c;
}

}  // namespace

TEST_CASE("candidate evaluation matches the direct oracle") {
    auto c = square_bound_config(1.0);
    auto viaCandidate = evaluate_theorem(c);
    auto direct = check_superadd_square(c.f, c.h, c.iv);
    CHECK(viaCandidate.lhs == direct.lhs);
    CHECK(viaCandidate.rhs == direct.rhs);
    CHECK(viaCandidate.margin == direct.margin);
    CHECK(viaCandidate.verdict == direct.verdict);
}

TEST_CASE("candidate evaluation validates its optional parts") {
    auto c = square_bound_config(1.0);

    c.theorem = TheoremId::productSymmetricC;  // needs g
    CHECK_THROWS_AS(evaluate_theorem(c), InvalidParamsError);

    c.theorem = TheoremId::youngSplitD;  // needs g and young
    c.g = c.f;
    CHECK_THROWS_AS(evaluate_theorem(c), InvalidParamsError);

    c.theorem = TheoremId::geomHolder;  // needs holder, positive interval
    c.young.reset();
    CHECK_THROWS_AS(evaluate_theorem(c), InvalidParamsError);

    c.theorem = TheoremId::corollaryReciprocal;  // report pair, not a candidate
    CHECK_THROWS_AS(evaluate_theorem(c), InvalidParamsError);
}

TEST_CASE("hypothesis screening grid is coarse and deterministic") {
    GridSpec g = search_hypothesis_grid(42);
    CHECK(g.xN == 9);
    CHECK(g.yN == 9);
    CHECK(g.tN == 9);
    CHECK(g.randomSamples == 0);
    CHECK(g.seed == 42);
}

TEST_CASE("violation search drives the growth rate to the worst corner") {
    auto result = search_violation(square_bound_space());

    CHECK(result.theorem == TheoremId::superaddSquareB);
    CHECK(result.seed == 42);
    CHECK(result.budget == 2000);
    CHECK(result.feasibleFound);
    REQUIRE(result.bestConfig.has_value());

    // margin(k) = e^k - ((e^k - 1)/k)^2 on [0, 1] is most negative at k = 2.
    CHECK(result.bestMargin <= -0.2);
    CHECK(result.bestMargin == Approx(-2.8159534).margin(1e-4));
    CHECK(result.bestConfig->f.family == FunctionFamily::exponential);
    REQUIRE(result.bestConfig->f.params.size() == 2);
    CHECK(result.bestConfig->f.params[1] == Approx(2.0).margin(1e-3));

    for (const auto& [name, hv] : result.hypothesisResults)
        CHECK(hv.status == GridStatus::holdsOnGrid);

    SECTION("trace records strictly improving margins") {
        REQUIRE(!result.trace.empty());
        for (std::size_t i = 1; i < result.trace.size(); ++i) {
            CHECK(result.trace[i].margin < result.trace[i - 1].margin);
            CHECK(result.trace[i].evaluation > result.trace[i - 1].evaluation);
        }
        CHECK(result.trace.back().margin == result.bestMargin);
        CHECK(result.oracleEvaluations >= result.trace.back().evaluation);
    }

    SECTION("reruns are bit-identical") {
        auto again = search_violation(square_bound_space());
        CHECK(again.bestMargin == result.bestMargin);
        REQUIRE(again.bestConfig.has_value());
        CHECK(*again.bestConfig == *result.bestConfig);
        CHECK(again.trace == result.trace);
    }

    SECTION("a larger budget never reports a worse best") {
        auto small = square_bound_space();
        small.budget = 300;
        auto smallResult = search_violation(small);
        CHECK(result.bestMargin <= smallResult.bestMargin);
    }

    SECTION("replay confirms the violation at a tighter tolerance") {
        auto rep = replay(result);
        CHECK(rep.verdict == ReportVerdict::violated);
        CHECK(rep.margin == Approx(result.bestMargin).margin(1e-6));
    }
}

TEST_CASE("search over an exact identity stays at zero margin") {
    auto space = square_bound_space();
    space.theorem = TheoremId::superaddProductA;
    auto result = search_violation(space);
    CHECK(result.feasibleFound);
    CHECK(result.bestMargin >= -1e-6);
}

TEST_CASE("search over a true bound reports no violation") {
    SearchSpace space;
    space.theorem = TheoremId::HH101;
    space.functions = {FunctionSpace{
        FunctionFamily::exponential,
        {ParamRange{0.5, 2.0}, ParamRange{-2.0, 2.0}}}};
    space.intervalLo = ParamRange{0.0, 0.0};
    space.intervalHi = ParamRange{1.0, 1.0};
    space.budget = 400;
    space.seed = 11;
    auto result = search_violation(space);
    CHECK(result.feasibleFound);
    CHECK(result.bestMargin >= -1e-9);
}

TEST_CASE("search refines the split parameter to the symmetric optimum") {
    SearchSpace space;
    space.theorem = TheoremId::midpoint;
    space.functions = {FunctionSpace{
        FunctionFamily::exponential,
        {ParamRange{1.0, 1.0}, ParamRange{1.0, 1.0}}}};
    space.intervalLo = ParamRange{0.0, 0.0};
    space.intervalHi = ParamRange{1.0, 1.0};
    space.alphaRange = ParamRange{0.1, 0.9};
    space.budget = 400;
    space.seed = 7;
    auto result = search_violation(space);
    CHECK(result.feasibleFound);
    REQUIRE(result.bestConfig.has_value());
    REQUIRE(result.bestConfig->young.has_value());
    CHECK(result.bestConfig->young->alpha == Approx(0.5).margin(5e-3));
    double kE = std::exp(1.0);
    CHECK(result.bestMargin == Approx(kE - 1.0 - std::sqrt(kE)).margin(1e-3));
}

TEST_CASE("conjugate-split search stays feasible with a positive margin") {
    SearchSpace space;
    space.theorem = TheoremId::geomHolder;
    space.functions = {FunctionSpace{FunctionFamily::power, {ParamRange{1.0, 1.0}}}};
    space.intervalLo = ParamRange{1.0, 1.0};
    space.intervalHi = ParamRange{2.0, 2.0};
    space.pRange = ParamRange{2.0, 2.0};
    space.budget = 100;
    space.seed = 3;
    auto result = search_violation(space);
    CHECK(result.feasibleFound);
    CHECK(result.bestMargin == Approx(0.3259635).margin(1e-3));
}

TEST_CASE("search without a feasible candidate flags it instead of throwing") {
    SearchSpace space;
    space.theorem = TheoremId::multiMean;
    space.functions = {FunctionSpace{FunctionFamily::power, {ParamRange{1.0, 1.0}}}};
    space.intervalLo = ParamRange{1.0, 1.0};
    space.intervalHi = ParamRange{2.0, 2.0};
    space.budget = 100;
    space.seed = 12;
    auto result = search_violation(space);
    CHECK_FALSE(result.feasibleFound);
    REQUIRE(result.bestConfig.has_value());
    CHECK(result.bestMargin == Approx(-0.0286525).margin(1e-4));
    auto rep = replay(result);
    CHECK(rep.verdict == ReportVerdict::hypothesisFailed);
}

TEST_CASE("search space validation") {
    auto space = square_bound_space();

    SECTION("needs a positive budget") {
        space.budget = 0;
        CHECK_THROWS_AS(search_violation(space), InvalidParamsError);
    }

    SECTION("needs at least one function space") {
        space.functions.clear();
        CHECK_THROWS_AS(search_violation(space), InvalidParamsError);
    }

    SECTION("rejects the report-pair target") {
        space.theorem = TheoremId::corollaryReciprocal;
        CHECK_THROWS_AS(search_violation(space), InvalidParamsError);
    }

    SECTION("rejects inverted ranges") {
        space.intervalHi = ParamRange{1.0, 0.5};
        CHECK_THROWS_AS(search_violation(space), InvalidParamsError);
    }

    SECTION("rejects split parameters touching the endpoints") {
        space.theorem = TheoremId::midpoint;
        space.alphaRange = ParamRange{0.0, 0.5};
        CHECK_THROWS_AS(search_violation(space), InvalidParamsError);
    }

    SECTION("rejects conjugate exponents at or below one") {
        space.theorem = TheoremId::geomHolder;
        space.functions2 = space.functions;
        space.pRange = ParamRange{1.0, 2.0};
        CHECK_THROWS_AS(search_violation(space), InvalidParamsError);
    }
}

TEST_CASE("replay requires a recorded candidate") {
    SearchResult empty;
    CHECK_THROWS_AS(replay(empty), InvalidParamsError);
}

TEST_CASE("margin sweep along the interval endpoint") {
    auto rows = sweep_margin(square_bound_config(1.0), "b", ParamRange{0.1, 1.0}, 10);
    REQUIRE(rows.size() == 10);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].value == Approx(0.1 + 0.1 * static_cast<double>(i)).margin(1e-12));
        if (i > 0) CHECK(rows[i].report.margin < rows[i - 1].report.margin);
    }
    CHECK(rows.back().report.margin == Approx(-0.2342106136).margin(1e-6));
    CHECK(rows.back().report.verdict == ReportVerdict::violated);
}

TEST_CASE("margin sweep along the split parameter holds throughout") {
    CandidateConfig c;
    c.theorem = TheoremId::midpoint;
    c.f = make_function(FunctionFamily::exponential, {1.0, 1.0}, Interval{0.0, 1.0});
    c.h = make_weight(WeightFamily::identity);
    c.iv = Interval{0.0, 1.0};
    c.young = YoungParams{0.5, 0.5};
    auto rows = sweep_margin(c, "alpha", ParamRange{0.1, 0.9}, 9);
    REQUIRE(rows.size() == 9);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].value == Approx(0.1 + 0.1 * static_cast<double>(i)).margin(1e-12));
        CHECK(rows[i].report.verdict == ReportVerdict::holds);
        CHECK(rows[i].report.margin >= 0.0);
    }
}

TEST_CASE("margin sweep along a chain bound endpoint") {
    CandidateConfig c;
    c.theorem = TheoremId::HH101;
    c.f = make_function(FunctionFamily::power, {2.0}, Interval{0.0, 2.0});
    c.h = make_weight(WeightFamily::identity);
    c.iv = Interval{0.0, 2.0};
    auto rows = sweep_margin(c, "b", ParamRange{0.5, 2.0}, 4);
    REQUIRE(rows.size() == 4);
    for (const auto& row : rows) {
        CHECK(row.report.verdict == ReportVerdict::holds);
        CHECK(row.report.margin >= 0.0);
    }
}

TEST_CASE("margin sweep input validation") {
    auto c = square_bound_config(1.0);
    CHECK_THROWS_AS(sweep_margin(c, "nosuchaxis", ParamRange{0.0, 1.0}, 5),
                    InvalidParamsError);
    CHECK_THROWS_AS(sweep_margin(c, "b", ParamRange{0.1, 1.0}, 1), InvalidParamsError);
    // Moving the left endpoint within a hair of the right one collapses the
    // interval; the offending row is reported, not silently skipped.
    CHECK_THROWS_AS(sweep_margin(c, "a", ParamRange{0.9999, 0.99995}, 2), Error);
}
