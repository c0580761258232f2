#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "ineqforge/theorems.hpp"

using namespace ineqforge;
using Catch::Approx;

namespace {

const Interval kUnit{0.0, 1.0};
const double kE = std::exp(1.0);

FunctionSpec exp_fn(double c, double k, Interval iv = kUnit) {
    return make_function(FunctionFamily::exponential, {c, k}, iv);
}

FunctionSpec const_fn(double c, Interval iv = kUnit) {
    return make_function(FunctionFamily::constant, {c}, iv);
}

FunctionSpec id_fn(Interval iv) {
    return make_function(FunctionFamily::power, {1.0}, iv);
}

std::vector<WeightSpec> all_weight_presets() {
    return {make_weight(WeightFamily::identity),
            make_weight(WeightFamily::power, {0.5}),
            make_weight(WeightFamily::reciprocal),
            make_weight(WeightFamily::constant, {0.7}),
            make_weight(WeightFamily::convexMix, {0.3, 2.0})};
}

}  // namespace

TEST_CASE("midpoint-mean-endpoint chain") {
    SECTION("squaring on [0, 2]") {
        auto f = make_function(FunctionFamily::power, {2.0}, Interval{0.0, 2.0});
        auto r = check_hh(f, Interval{0.0, 2.0});
        CHECK(r.theorem == TheoremId::HH101);
        CHECK(r.lhs == Approx(1.0).margin(1e-12));
        CHECK(r.rhs == Approx(2.0).margin(1e-12));
        // Mean is 4/3; the binding side is mean - midpoint = 1/3.
        CHECK(r.margin == Approx(1.0 / 3.0).margin(1e-8));
        CHECK(r.verdict == ReportVerdict::holds);
        CHECK_FALSE(r.productAtLeastOne.has_value());
        REQUIRE(r.hypothesisResults.count("hConvex") == 1);
        CHECK(r.hypothesisResults.at("hConvex").status == GridStatus::holdsOnGrid);
    }

    SECTION("exponential on [0, 1]") {
        auto r = check_hh(exp_fn(1.0, 1.0), kUnit);
        CHECK(r.lhs == Approx(std::sqrt(kE)).margin(1e-12));          // 1.6487213
        CHECK(r.rhs == Approx(0.5 * (1.0 + kE)).margin(1e-12));       // 1.8591409
        CHECK(r.margin == Approx(kE - 1.0 - std::sqrt(kE)).margin(1e-8));
        CHECK(r.verdict == ReportVerdict::holds);
    }
}

TEST_CASE("reflected-product mean bound is exact for exponentials") {
    // f(x) f(a+b-x) is constant for f = c e^{kx}, so the mean equals
    // c^2 e^{k(a+b)} and the identity-weight bound is met with zero margin.
    auto h = make_weight(WeightFamily::identity);
    for (double c : {0.5, 1.0, 1.5, 2.0, 2.5}) {
        for (double k : {-2.0, -1.0, 0.25, 1.0, 2.0}) {
            Interval iv{0.2, 1.1};
            auto r = check_superadd_product(exp_fn(c, k, Interval{0.0, 2.0}), h, iv);
            double closed = c * c * std::exp(k * (iv.lo + iv.hi));
            CHECK(std::abs(r.lhs - closed) <= 10.0 * r.quadError + 1e-9);
            CHECK(std::abs(r.margin) <= 1e-7);
            CHECK(r.verdict == ReportVerdict::holds);
        }
    }
}

TEST_CASE("squared-mean bound fails for the exponential") {
    auto h = make_weight(WeightFamily::identity);
    auto r = check_superadd_square(exp_fn(1.0, 1.0), h, kUnit);
    CHECK(r.lhs == Approx((kE - 1.0) * (kE - 1.0)).margin(1e-8));
    CHECK(r.rhs == Approx(kE).margin(1e-12));
    CHECK(r.margin == Approx(-0.2342106136).margin(1e-7));
    // Every hypothesis passes, so the negative margin is a genuine violation.
    for (const auto& [name, hv] : r.hypothesisResults)
        CHECK(hv.status == GridStatus::holdsOnGrid);
    CHECK(r.verdict == ReportVerdict::violated);
    REQUIRE(r.productAtLeastOne.has_value());
    CHECK(*r.productAtLeastOne == true);
}

TEST_CASE("reciprocal-weight pair keeps its failed hypothesis visible") {
    auto [product, square] = check_corollary_reciprocal(exp_fn(1.0, 1.0), kUnit);

    CHECK(product.theorem == TheoremId::corollaryReciprocal);
    REQUIRE(product.variant.has_value());
    CHECK(*product.variant == "product");
    CHECK(product.lhs == Approx(kE).margin(1e-8));
    CHECK(product.rhs == Approx(kE).margin(1e-12));
    CHECK(std::abs(product.margin) <= 1e-7);
    REQUIRE(product.hypothesisResults.count("superadditive") == 1);
    CHECK(product.hypothesisResults.at("superadditive").status ==
          GridStatus::violated);
    CHECK(product.verdict == ReportVerdict::hypothesisFailed);

    REQUIRE(square.variant.has_value());
    CHECK(*square.variant == "square");
    CHECK(square.margin == Approx(-0.2342106136).margin(1e-7));
    CHECK(square.verdict == ReportVerdict::hypothesisFailed);
    REQUIRE(square.productAtLeastOne.has_value());
    CHECK(*square.productAtLeastOne == true);
}

TEST_CASE("symmetric-weight product bound") {
    auto one = make_weight(WeightFamily::constant, {1.0});

    SECTION("two exponentials") {
        auto f = exp_fn(1.0, 1.0);
        auto r = check_product_symmetric(f, f, one, kUnit);
        CHECK(r.lhs == Approx(0.5 * (kE * kE - 1.0)).margin(1e-8));  // 3.1945280
        CHECK(r.rhs == Approx(kE * kE).margin(1e-8));                // 7.3890561
        CHECK(r.verdict == ReportVerdict::holds);
    }

    SECTION("exponential times a constant") {
        auto r = check_product_symmetric(exp_fn(1.0, 1.0), const_fn(2.0), one, kUnit);
        CHECK(r.lhs == Approx(2.0 * (kE - 1.0)).margin(1e-8));
        CHECK(r.rhs == Approx(4.0 * kE).margin(1e-8));
        CHECK(r.verdict == ReportVerdict::holds);
    }

    SECTION("asymmetric weight downgrades the verdict") {
        auto t = make_weight(WeightFamily::identity);
        auto f = exp_fn(1.0, 1.0);
        auto r = check_product_symmetric(f, f, t, kUnit);
        REQUIRE(r.hypothesisResults.count("symmetricHalf") == 1);
        CHECK(r.hypothesisResults.at("symmetricHalf").status == GridStatus::violated);
        CHECK(r.verdict == ReportVerdict::hypothesisFailed);
    }
}

TEST_CASE("split-exponent product bound") {
    auto t = make_weight(WeightFamily::identity);
    auto f = exp_fn(1.0, 1.0);

    SECTION("balanced split is tight for matching exponentials") {
        auto r = check_young_split(f, f, t, kUnit, YoungParams{0.5, 0.5});
        double both = 0.5 * (kE * kE - 1.0);  // 3.1945280
        CHECK(r.lhs == Approx(both).margin(1e-8));
        CHECK(r.rhs == Approx(both).margin(1e-8));
        CHECK(std::abs(r.margin) <= 1e-7);
        CHECK(r.verdict == ReportVerdict::holds);
    }

    SECTION("lopsided split against a unit factor") {
        auto r = check_young_split(f, const_fn(1.0), t, kUnit, young_from_alpha(0.3));
        CHECK(r.lhs == Approx(kE - 1.0).margin(1e-8));
        double rhs = 0.09 * (std::exp(10.0 / 3.0) - 1.0) + 0.7;
        CHECK(r.rhs == Approx(rhs).margin(1e-8));
        CHECK(r.rhs == Approx(3.1328464).margin(1e-6));
        CHECK(r.verdict == ReportVerdict::holds);
    }

    SECTION("invalid split parameters are rejected") {
        CHECK_THROWS_AS(check_young_split(f, f, t, kUnit, YoungParams{0.3, 0.6}),
                        InvalidParamsError);
    }
}

TEST_CASE("pointwise-exponent product bound") {
    auto t = make_weight(WeightFamily::identity);
    auto f = exp_fn(1.0, 1.0);
    auto r = check_young_pointwise(f, f, t, kUnit, YoungParams{0.5, 0.5});
    CHECK(r.lhs == Approx(0.5 * (kE * kE - 1.0)).margin(1e-8));
    double rhs = 0.5 + (std::exp(4.0) - 1.0) / 8.0;
    CHECK(r.rhs == Approx(rhs).margin(1e-8));
    CHECK(r.rhs == Approx(7.1997688).margin(1e-6));
    CHECK(r.verdict == ReportVerdict::holds);
}

TEST_CASE("midpoint bound through split exponents") {
    auto t = make_weight(WeightFamily::identity);

    SECTION("exponential collapses to the plain mean") {
        auto r = check_midpoint(exp_fn(1.0, 1.0), t, kUnit, YoungParams{0.5, 0.5});
        CHECK(r.lhs == Approx(std::sqrt(kE)).margin(1e-12));
        CHECK(r.rhs == Approx(kE - 1.0).margin(1e-8));
        CHECK(r.verdict == ReportVerdict::holds);
    }

    SECTION("squaring is not multiplicatively convex, sides still reported") {
        auto f = make_function(FunctionFamily::power, {2.0}, Interval{1.0, 3.0});
        auto r = check_midpoint(f, t, Interval{1.0, 3.0}, YoungParams{0.5, 0.5});
        CHECK(r.lhs == Approx(4.0).margin(1e-12));
        CHECK(r.rhs == Approx(13.0 / 3.0).margin(1e-8));
        CHECK(r.margin == Approx(1.0 / 3.0).margin(1e-8));
        CHECK(r.hypothesisResults.at("hLogConvex").status == GridStatus::violated);
        CHECK(r.verdict == ReportVerdict::hypothesisFailed);
    }
}

TEST_CASE("geometric-mean product bound is tight for the identity map") {
    auto t = make_weight(WeightFamily::identity);
    auto r = check_geom_product(id_fn(Interval{1.0, 2.0}), t, Interval{1.0, 2.0});
    CHECK(r.lhs == Approx(2.0).margin(1e-7));
    CHECK(r.rhs == Approx(2.0).margin(1e-7));
    CHECK(std::abs(r.margin) <= 1e-7);
    CHECK(r.verdict == ReportVerdict::holds);

    auto f = make_function(FunctionFamily::power, {1.0}, Interval{0.0, 2.0});
    CHECK_THROWS_AS(check_geom_product(f, t, Interval{0.0, 2.0}), DomainError);
}

TEST_CASE("conjugate-exponent split of the geometric product") {
    auto t = make_weight(WeightFamily::identity);
    auto f = id_fn(Interval{1.0, 2.0});
    auto r = check_geom_holder(f, f, t, 1.0, 2.0, HolderParams{2.0, 2.0});
    CHECK(r.lhs == Approx(2.0).margin(1e-8));
    double rhs = std::sqrt(15.0 / (4.0 * std::log(2.0)));
    CHECK(r.rhs == Approx(rhs).margin(1e-7));
    CHECK(r.rhs == Approx(2.3259635).margin(1e-6));
    CHECK(r.verdict == ReportVerdict::holds);

    CHECK_THROWS_AS(check_geom_holder(f, f, t, 2.0, 1.0, HolderParams{2.0, 2.0}),
                    DomainError);
    CHECK_THROWS_AS(check_geom_holder(f, f, t, 1.0, 2.0, HolderParams{1.0, 2.0}),
                    InvalidParamsError);
}

TEST_CASE("blended-mean bound reports sides despite a failed hypothesis") {
    auto t = make_weight(WeightFamily::identity);
    auto r = check_multi_mean(id_fn(Interval{1.0, 2.0}), t, Interval{1.0, 2.0});
    double invLog2 = 1.0 / std::log(2.0);
    CHECK(r.lhs == Approx(0.5 * (invLog2 + 1.5)).margin(1e-7));  // 1.4713475
    CHECK(r.rhs == Approx(invLog2).margin(1e-7));                // 1.4426950
    CHECK(r.margin == Approx(0.5 * (invLog2 - 1.5)).margin(1e-7));
    CHECK(r.margin < 0.0);
    // The negative margin does not count as a violation: the blend hypothesis
    // already failed, and the verdict says so.
    CHECK(r.hypothesisResults.at("hMultiConvex").status == GridStatus::violated);
    CHECK(r.verdict == ReportVerdict::hypothesisFailed);

    auto f = make_function(FunctionFamily::power, {1.0}, Interval{0.0, 2.0});
    CHECK_THROWS_AS(check_multi_mean(f, t, Interval{0.0, 2.0}), DomainError);
}

TEST_CASE("constant one meets every bound with zero margin") {
    // Unit mass is preserved under every weight family, including the
    // clipped reciprocal, so f = 1 gives lhs = rhs = 1 everywhere. Verdicts
    // may still be hypothesisFailed (e.g. non-superadditive weights); only
    // the margin is asserted here.
    Interval iv{1.0, 2.0};
    auto one = const_fn(1.0, Interval{0.5, 3.0});
    for (const auto& h : all_weight_presets()) {
        CAPTURE(family_name(h.family));
        auto checkMargin = [&](const InequalityReport& r) {
            CHECK(std::abs(r.margin) <= kMarginTol + 10.0 * r.quadError);
        };
        checkMargin(check_hh(one, iv));
        checkMargin(check_superadd_product(one, h, iv));
        checkMargin(check_superadd_square(one, h, iv));
        checkMargin(check_product_symmetric(one, one, h, iv));
        checkMargin(check_young_split(one, one, h, iv, YoungParams{0.4, 0.6}));
        checkMargin(check_young_pointwise(one, one, h, iv, YoungParams{0.4, 0.6}));
        checkMargin(check_midpoint(one, h, iv, YoungParams{0.5, 0.5}));
        checkMargin(check_geom_product(one, h, iv));
        checkMargin(check_geom_holder(one, one, h, 1.0, 2.0, HolderParams{2.0, 2.0}));
        checkMargin(check_multi_mean(one, h, iv));
    }
}

TEST_CASE("product flag tracks whether the endpoint product reaches one") {
    auto h = make_weight(WeightFamily::identity);
    auto big = check_superadd_square(exp_fn(1.0, 1.0), h, kUnit);
    REQUIRE(big.productAtLeastOne.has_value());
    CHECK(*big.productAtLeastOne == true);

    auto small = check_superadd_square(const_fn(0.5), h, kUnit);
    REQUIRE(small.productAtLeastOne.has_value());
    CHECK(*small.productAtLeastOne == false);

    auto productSide = check_superadd_product(const_fn(0.5), h, kUnit);
    REQUIRE(productSide.productAtLeastOne.has_value());
    CHECK(*productSide.productAtLeastOne == false);
}

TEST_CASE("split and conjugate parameter helpers validate their inputs") {
    CHECK_NOTHROW(make_young(0.3, 0.7));
    CHECK_THROWS_AS(make_young(0.3, 0.6), InvalidParamsError);
    CHECK_THROWS_AS(make_young(0.0, 1.0), InvalidParamsError);
    CHECK_THROWS_AS(make_young(-0.2, 1.2), InvalidParamsError);
    CHECK(young_from_alpha(0.25).beta == Approx(0.75).margin(1e-15));

    CHECK(holder_from_p(2.0).q == Approx(2.0).margin(1e-15));
    CHECK(holder_from_p(1.5).q == Approx(3.0).margin(1e-12));
    CHECK_THROWS_AS(holder_from_p(1.0), InvalidParamsError);
    CHECK_THROWS_AS(make_holder(2.0, 3.0), InvalidParamsError);
    CHECK_NOTHROW(make_holder(2.0, 2.0));
}

TEST_CASE("reports are deterministic") {
    auto t = make_weight(WeightFamily::identity);
    auto f = exp_fn(1.3, 0.8);
    auto a = check_young_split(f, f, t, kUnit, young_from_alpha(0.35));
    auto b = check_young_split(f, f, t, kUnit, young_from_alpha(0.35));
    CHECK(a.lhs == b.lhs);
    CHECK(a.rhs == b.rhs);
    CHECK(a.margin == b.margin);
    CHECK(a.quadError == b.quadError);
    CHECK(a.verdict == b.verdict);
    REQUIRE(a.hypothesisResults.size() == b.hypothesisResults.size());
    for (const auto& [name, hv] : a.hypothesisResults) {
        REQUIRE(b.hypothesisResults.count(name) == 1);
        CHECK(hv.status == b.hypothesisResults.at(name).status);
        CHECK(hv.maxViolation == b.hypothesisResults.at(name).maxViolation);
    }
}

TEST_CASE("verdicts are stable across quadrature tolerances") {
    auto h = make_weight(WeightFamily::identity);
    auto f = exp_fn(1.0, 1.0);
    auto loose = check_superadd_square(f, h, kUnit, 1e-6);
    auto tight = check_superadd_square(f, h, kUnit, 1e-10);
    CHECK(loose.verdict == ReportVerdict::violated);
    CHECK(tight.verdict == ReportVerdict::violated);
    CHECK(std::abs(loose.margin - tight.margin) < 1e-5);
}

TEST_CASE("theorem names round-trip") {
    for (TheoremId id :
         {TheoremId::HH101, TheoremId::superaddProductA, TheoremId::superaddSquareB,
          TheoremId::corollaryReciprocal, TheoremId::productSymmetricC,
          TheoremId::youngSplitD, TheoremId::youngPointwiseE, TheoremId::midpoint,
          TheoremId::geomProduct, TheoremId::geomHolder, TheoremId::multiMean}) {
        auto back = theorem_from_name(theorem_name(id));
        REQUIRE(back.has_value());
        CHECK(*back == id);
    }
    CHECK_FALSE(theorem_from_name("HH102").has_value());
}
