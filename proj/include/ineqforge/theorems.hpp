#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "ineqforge/classes.hpp"
#include "ineqforge/errors.hpp"
#include "ineqforge/function.hpp"
#include "ineqforge/interval.hpp"
#include "ineqforge/quadrature.hpp"

namespace ineqforge {

// One oracle per inequality. Every oracle computes both sides even when a
// hypothesis fails, so searches can rank near-miss configurations; the
// verdict is downgraded to hypothesisFailed whenever any hypothesis predicate
// reports violated.
//
// All t-integrals run over the full unit interval with clipped weight
// evaluation (singular families evaluate below clipEpsilon as at
// clipEpsilon). This keeps the integrals proper without losing unit mass, so
// the constant-1 function reproduces margin 0 under every weight family.
enum class TheoremId {
    HH101,
    superaddProductA,
    superaddSquareB,
    corollaryReciprocal,
    productSymmetricC,
    youngSplitD,
    youngPointwiseE,
    midpoint,
    geomProduct,
    geomHolder,
    multiMean,
};

inline const char* theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::HH101: return "HH101";
        case TheoremId::superaddProductA: return "superaddProductA";
        case TheoremId::superaddSquareB: return "superaddSquareB";
        case TheoremId::corollaryReciprocal: return "corollaryReciprocal";
        case TheoremId::productSymmetricC: return "productSymmetricC";
        case TheoremId::youngSplitD: return "youngSplitD";
        case TheoremId::youngPointwiseE: return "youngPointwiseE";
        case TheoremId::midpoint: return "midpoint";
        case TheoremId::geomProduct: return "geomProduct";
        case TheoremId::geomHolder: return "geomHolder";
        case TheoremId::multiMean: return "multiMean";
    }
    return "?";
}

inline std::optional<TheoremId> theorem_from_name(std::string_view name) {
    for (TheoremId id :
         {TheoremId::HH101, TheoremId::superaddProductA, TheoremId::superaddSquareB,
          TheoremId::corollaryReciprocal, TheoremId::productSymmetricC,
          TheoremId::youngSplitD, TheoremId::youngPointwiseE, TheoremId::midpoint,
          TheoremId::geomProduct, TheoremId::geomHolder, TheoremId::multiMean})
        if (name == theorem_name(id)) return id;
    return std::nullopt;
}

enum class ReportVerdict { holds, violated, hypothesisFailed };

inline const char* verdict_name(ReportVerdict v) {
    switch (v) {
        case ReportVerdict::holds: return "holds";
        case ReportVerdict::violated: return "violated";
        case ReportVerdict::hypothesisFailed: return "hypothesisFailed";
    }
    return "?";
}

// Margin slack: an inequality counts as holding when
// margin >= -(kMarginTol + 10 * quadError).
inline constexpr double kMarginTol = 1e-6;

struct InequalityReport {
    TheoremId theorem = TheoremId::HH101;
    // Distinguishes the two sub-reports of the reciprocal-weight corollary.
    std::optional<std::string> variant;
    std::map<std::string, ClassVerdict> hypothesisResults;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;  // rhs - lhs (for chains: the binding side)
    double quadError = 0.0;
    ReportVerdict verdict = ReportVerdict::holds;
    // For the superadditivity-based oracles: whether f(a)*f(b) >= 1, the
    // regime where bounding h(t)+h(1-t) by h(1) actually raises the bound.
    std::optional<bool> productAtLeastOne;
};

struct YoungParams {
    double alpha = 0.5;
    double beta = 0.5;

    friend bool operator==(const YoungParams&, const YoungParams&) = default;
};

inline YoungParams make_young(double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0))
        throw InvalidParamsError("Young parameters must be positive");
    if (std::abs(alpha + beta - 1.0) > 1e-12)
        throw InvalidParamsError("Young parameters must sum to 1");
    return {alpha, beta};
}

inline YoungParams young_from_alpha(double alpha) {
    return make_young(alpha, 1.0 - alpha);
}

struct HolderParams {
    double p = 2.0;
    double q = 2.0;

    friend bool operator==(const HolderParams&, const HolderParams&) = default;
};

inline HolderParams make_holder(double p, double q) {
    if (!(p > 1.0)) throw InvalidParamsError("Holder exponent p must exceed 1");
    if (std::abs(1.0 / p + 1.0 / q - 1.0) > 1e-12)
        throw InvalidParamsError("Holder exponents must be conjugate");
    return {p, q};
}

inline HolderParams holder_from_p(double p) {
    if (!(p > 1.0)) throw InvalidParamsError("Holder exponent p must exceed 1");
    return {p, p / (p - 1.0)};
}

namespace detail {

inline ReportVerdict decide_verdict(const std::map<std::string, ClassVerdict>& hyp,
                                    double margin, double quadError) {
    for (const auto& [name, verdict] : hyp)
        if (verdict.status == GridStatus::violated) return ReportVerdict::hypothesisFailed;
    return margin >= -(kMarginTol + 10.0 * quadError) ? ReportVerdict::holds
                                                      : ReportVerdict::violated;
}

inline InequalityReport assemble(TheoremId id, std::map<std::string, ClassVerdict> hyp,
                                 double lhs, double rhs, double margin,
                                 double quadError) {
    InequalityReport r;
    r.theorem = id;
    r.hypothesisResults = std::move(hyp);
    r.lhs = lhs;
    r.rhs = rhs;
    r.margin = margin;
    r.quadError = quadError;
    r.verdict = decide_verdict(r.hypothesisResults, margin, quadError);
    return r;
}

inline const Interval kUnit{0.0, 1.0};

}  // namespace detail

// Midpoint value <= integral mean <= endpoint average, for convex f. The
// reported margin is the slack of the binding side of the chain.
inline InequalityReport check_hh(const FunctionSpec& f, Interval iv,
                                 double tol = kQuadTol, const GridSpec& grid = {}) {
    FunctionView view = restrict_to(f, iv);
    std::map<std::string, ClassVerdict> hyp;
    hyp.emplace("hConvex", check_h_convex(view, make_weight(WeightFamily::identity), grid));

    double mid = eval_function(f, iv.midpoint());
    double avg = 0.5 * (eval_function(f, iv.lo) + eval_function(f, iv.hi));
    QuadResult mean = mean_value([&](double x) { return eval_function(f, x); }, iv, tol);
    double margin = std::min(mean.value - mid, avg - mean.value);
    return detail::assemble(TheoremId::HH101, std::move(hyp), mid, avg, margin,
                            mean.errorEstimate);
}

// Mean of f(x)f(a+b-x) <= (f(a)f(b))^{h(1)} for h-log-convex monotone f and
// superadditive h.
inline InequalityReport check_superadd_product(const FunctionSpec& f, const WeightSpec& h,
                                               Interval iv, double tol = kQuadTol,
                                               const GridSpec& grid = {}) {
    FunctionView view = restrict_to(f, iv);
    std::map<std::string, ClassVerdict> hyp;
    hyp.emplace("hLogConvex", check_h_log_convex(view, h, grid));
    hyp.emplace("monotone", monotone_verdict(view));
    hyp.emplace("superadditive", check_superadditive(h, grid));

    double sum = iv.lo + iv.hi;
    QuadResult mean = mean_value(
        [&](double x) { return eval_function(f, x) * eval_function(f, sum - x); }, iv,
        tol);
    double product = eval_function(f, iv.lo) * eval_function(f, iv.hi);
    double rhs = std::pow(product, eval_weight(h, 1.0));
    InequalityReport r =
        detail::assemble(TheoremId::superaddProductA, std::move(hyp), mean.value, rhs,
                         rhs - mean.value, mean.errorEstimate);
    r.productAtLeastOne = product >= 1.0;
    return r;
}

// (Mean of f)^2 <= (f(a)f(b))^{h(1)} under the same hypotheses.
inline InequalityReport check_superadd_square(const FunctionSpec& f, const WeightSpec& h,
                                              Interval iv, double tol = kQuadTol,
                                              const GridSpec& grid = {}) {
    FunctionView view = restrict_to(f, iv);
    std::map<std::string, ClassVerdict> hyp;
    hyp.emplace("hLogConvex", check_h_log_convex(view, h, grid));
    hyp.emplace("monotone", monotone_verdict(view));
    hyp.emplace("superadditive", check_superadditive(h, grid));

    QuadResult mean = mean_value([&](double x) { return eval_function(f, x); }, iv, tol);
    double lhs = mean.value * mean.value;
    double product = eval_function(f, iv.lo) * eval_function(f, iv.hi);
    double rhs = std::pow(product, eval_weight(h, 1.0));
    InequalityReport r = detail::assemble(TheoremId::superaddSquareB, std::move(hyp), lhs,
                                          rhs, rhs - lhs,
                                          2.0 * std::abs(mean.value) * mean.errorEstimate);
    r.productAtLeastOne = product >= 1.0;
    return r;
}

// Both bounds above instantiated at h(t) = 1/t, where h(1) = 1 collapses the
// right side to f(a)f(b). The superadditivity hypothesis check is attached
// as-is: the clipped reciprocal weight fails it, and the reports say so.
inline std::pair<InequalityReport, InequalityReport> check_corollary_reciprocal(
    const FunctionSpec& f, Interval iv, double tol = kQuadTol,
    const GridSpec& grid = {}) {
    WeightSpec h = make_weight(WeightFamily::reciprocal);
    InequalityReport product = check_superadd_product(f, h, iv, tol, grid);
    product.theorem = TheoremId::corollaryReciprocal;
    product.variant = "product";
    InequalityReport square = check_superadd_square(f, h, iv, tol, grid);
    square.theorem = TheoremId::corollaryReciprocal;
    square.variant = "square";
    return {std::move(product), std::move(square)};
}

// Mean of fg <= integral of [(fg)(a)(fg)(b)]^{h(t)} dt for h-log-convex f, g
// and h symmetric about 1/2.
inline InequalityReport check_product_symmetric(const FunctionSpec& f,
                                                const FunctionSpec& g,
                                                const WeightSpec& h, Interval iv,
                                                double tol = kQuadTol,
                                                const GridSpec& grid = {}) {
    FunctionView fv = restrict_to(f, iv), gv = restrict_to(g, iv);
    std::map<std::string, ClassVerdict> hyp;
    hyp.emplace("hLogConvexF", check_h_log_convex(fv, h, grid));
    hyp.emplace("hLogConvexG", check_h_log_convex(gv, h, grid));
    hyp.emplace("symmetricHalf", check_symmetric_half(h, grid));

    QuadResult lhs = mean_value(
        [&](double x) { return eval_function(f, x) * eval_function(g, x); }, iv, tol);
    double base = eval_function(f, iv.lo) * eval_function(g, iv.lo) *
                  eval_function(f, iv.hi) * eval_function(g, iv.hi);
    QuadResult rhs = integrate(
        [&](double t) { return std::pow(base, eval_weight(h, t)); }, detail::kUnit, tol);
    return detail::assemble(TheoremId::productSymmetricC, std::move(hyp), lhs.value,
                            rhs.value, rhs.value - lhs.value,
                            lhs.errorEstimate + rhs.errorEstimate);
}

// Young-type split of the product bound:
// mean fg <= int [a*(f(a)^{h(t)}f(b)^{h(1-t)})^{1/a} + b*(g..)^{1/b}] dt.
inline InequalityReport check_young_split(const FunctionSpec& f, const FunctionSpec& g,
                                          const WeightSpec& h, Interval iv,
                                          YoungParams yp, double tol = kQuadTol,
                                          const GridSpec& grid = {}) {
    make_young(yp.alpha, yp.beta);
    FunctionView fv = restrict_to(f, iv), gv = restrict_to(g, iv);
    std::map<std::string, ClassVerdict> hyp;
    hyp.emplace("hLogConvexF", check_h_log_convex(fv, h, grid));
    hyp.emplace("hLogConvexG", check_h_log_convex(gv, h, grid));

    QuadResult lhs = mean_value(
        [&](double x) { return eval_function(f, x) * eval_function(g, x); }, iv, tol);
    double fa = eval_function(f, iv.lo), fb = eval_function(f, iv.hi);
    double ga = eval_function(g, iv.lo), gb = eval_function(g, iv.hi);
    QuadResult rhs = integrate(
        [&](double t) {
            double ht = eval_weight(h, t), h1t = eval_weight(h, 1.0 - t);
            double fTerm = std::pow(std::pow(fa, ht) * std::pow(fb, h1t), 1.0 / yp.alpha);
            double gTerm = std::pow(std::pow(ga, ht) * std::pow(gb, h1t), 1.0 / yp.beta);
            return yp.alpha * fTerm + yp.beta * gTerm;
        },
        detail::kUnit, tol);
    return detail::assemble(TheoremId::youngSplitD, std::move(hyp), lhs.value, rhs.value,
                            rhs.value - lhs.value, lhs.errorEstimate + rhs.errorEstimate);
}

// Pointwise Young variant:
// mean fg <= int {a*[f(a)g(a)]^{h(t)/a} + b*[f(b)g(b)]^{h(1-t)/b}} dt.
inline InequalityReport check_young_pointwise(const FunctionSpec& f,
                                              const FunctionSpec& g, const WeightSpec& h,
                                              Interval iv, YoungParams yp,
                                              double tol = kQuadTol,
                                              const GridSpec& grid = {}) {
    make_young(yp.alpha, yp.beta);
    FunctionView fv = restrict_to(f, iv), gv = restrict_to(g, iv);
    std::map<std::string, ClassVerdict> hyp;
    hyp.emplace("hLogConvexF", check_h_log_convex(fv, h, grid));
    hyp.emplace("hLogConvexG", check_h_log_convex(gv, h, grid));

    QuadResult lhs = mean_value(
        [&](double x) { return eval_function(f, x) * eval_function(g, x); }, iv, tol);
    double prodA = eval_function(f, iv.lo) * eval_function(g, iv.lo);
    double prodB = eval_function(f, iv.hi) * eval_function(g, iv.hi);
    QuadResult rhs = integrate(
        [&](double t) {
            return yp.alpha * std::pow(prodA, eval_weight(h, t) / yp.alpha) +
                   yp.beta * std::pow(prodB, eval_weight(h, 1.0 - t) / yp.beta);
        },
        detail::kUnit, tol);
    return detail::assemble(TheoremId::youngPointwiseE, std::move(hyp), lhs.value,
                            rhs.value, rhs.value - lhs.value,
                            lhs.errorEstimate + rhs.errorEstimate);
}

// f((a+b)/2) <= alpha*mean(f^{h(1/2)/alpha}) + beta*mean(f^{h(1/2)/beta}).
inline InequalityReport check_midpoint(const FunctionSpec& f, const WeightSpec& h,
                                       Interval iv, YoungParams yp,
                                       double tol = kQuadTol, const GridSpec& grid = {}) {
    make_young(yp.alpha, yp.beta);
    FunctionView view = restrict_to(f, iv);
    std::map<std::string, ClassVerdict> hyp;
    hyp.emplace("hLogConvex", check_h_log_convex(view, h, grid));

    double lhs = eval_function(f, iv.midpoint());
    double eAlpha = eval_weight(h, 0.5) / yp.alpha;
    double eBeta = eval_weight(h, 0.5) / yp.beta;
    QuadResult mAlpha = mean_value(
        [&](double x) { return std::pow(eval_function(f, x), eAlpha); }, iv, tol);
    QuadResult mBeta = mean_value(
        [&](double x) { return std::pow(eval_function(f, x), eBeta); }, iv, tol);
    double rhs = yp.alpha * mAlpha.value + yp.beta * mBeta.value;
    double quadError = yp.alpha * mAlpha.errorEstimate + yp.beta * mBeta.errorEstimate;
    return detail::assemble(TheoremId::midpoint, std::move(hyp), lhs, rhs, rhs - lhs,
                            quadError);
}

// Logarithmic mean of f(g)f(xy/g) <= int [f(x)f(y)]^{h(t)+h(1-t)} dt for
// h-geometrically convex f on a positive interval.
inline InequalityReport check_geom_product(const FunctionSpec& f, const WeightSpec& h,
                                           Interval iv, double tol = kQuadTol,
                                           const GridSpec& grid = {}) {
    if (!(iv.lo > 0.0))
        throw DomainError("geometric product bound needs a strictly positive interval");
    FunctionView view = restrict_to(f, iv);
    std::map<std::string, ClassVerdict> hyp;
    hyp.emplace("hGeomConvex", check_h_geom_convex(view, h, grid));

    double x = iv.lo, y = iv.hi;
    double logLen = std::log(y) - std::log(x);
    QuadResult lg = integrate_log(
        [&](double gamma) {
            return eval_function(f, gamma) * eval_function(f, iv.clamp(x * y / gamma));
        },
        iv, tol);
    double lhs = lg.value / logLen;
    double base = eval_function(f, x) * eval_function(f, y);
    QuadResult rhs = integrate(
        [&](double t) {
            return std::pow(base, eval_weight(h, t) + eval_weight(h, 1.0 - t));
        },
        detail::kUnit, tol);
    return detail::assemble(TheoremId::geomProduct, std::move(hyp), lhs, rhs.value,
                            rhs.value - lhs, lg.errorEstimate / logLen + rhs.errorEstimate);
}

// Holder-split bound for two h-geometrically convex functions:
// int f(x^t y^{1-t}) g(x^{1-t} y^t) dt <= four-factor product with exponents
// p^2, pq, pq, q^2 on h(t)/h(1-t).
inline InequalityReport check_geom_holder(const FunctionSpec& f, const FunctionSpec& g,
                                          const WeightSpec& h, double x, double y,
                                          HolderParams hp, double tol = kQuadTol,
                                          const GridSpec& grid = {}) {
    make_holder(hp.p, hp.q);
    if (!(0.0 < x && x < y))
        throw DomainError("geometric Holder bound needs 0 < x < y");
    Interval iv{x, y};
    FunctionView fv = restrict_to(f, iv), gv = restrict_to(g, iv);
    std::map<std::string, ClassVerdict> hyp;
    hyp.emplace("hGeomConvexF", check_h_geom_convex(fv, h, grid));
    hyp.emplace("hGeomConvexG", check_h_geom_convex(gv, h, grid));

    double lx = std::log(x), ly = std::log(y);
    QuadResult lhs = integrate(
        [&](double t) {
            double u = iv.clamp(std::exp(t * lx + (1.0 - t) * ly));
            double v = iv.clamp(std::exp((1.0 - t) * lx + t * ly));
            return eval_function(f, u) * eval_function(g, v);
        },
        detail::kUnit, tol);

    double fx = eval_function(f, x), fy = eval_function(f, y);
    double gx = eval_function(g, x), gy = eval_function(g, y);
    double p2 = hp.p * hp.p, pq = hp.p * hp.q, q2 = hp.q * hp.q;
    auto factor = [&](double base, double expScale, bool mirrored) {
        return integrate(
            [&](double t) {
                double w = mirrored ? eval_weight(h, 1.0 - t) : eval_weight(h, t);
                return std::pow(base, expScale * w);
            },
            detail::kUnit, tol);
    };
    QuadResult i1 = factor(fx, p2, false);
    QuadResult i2 = factor(gy, pq, false);
    QuadResult i3 = factor(fy, pq, true);
    QuadResult i4 = factor(gx, q2, true);
    double rhs = std::pow(i1.value, 1.0 / p2) * std::pow(i2.value, 1.0 / pq) *
                 std::pow(i3.value, 1.0 / pq) * std::pow(i4.value, 1.0 / q2);
    // First-order propagation through the powers of the four factors.
    double relErr = i1.errorEstimate / (p2 * i1.value) + i2.errorEstimate / (pq * i2.value) +
                    i3.errorEstimate / (pq * i3.value) + i4.errorEstimate / (q2 * i4.value);
    return detail::assemble(TheoremId::geomHolder, std::move(hyp), lhs.value, rhs,
                            rhs - lhs.value, lhs.errorEstimate + std::abs(rhs) * relErr);
}

// Average of the logarithmic and arithmetic integral means of f bounded by
// int f(x)^{h(t)} f(y)^{h(1-t)} dt, for h-multi convex f.
inline InequalityReport check_multi_mean(const FunctionSpec& f, const WeightSpec& h,
                                         Interval iv, double tol = kQuadTol,
                                         const GridSpec& grid = {}) {
    if (!(iv.lo > 0.0))
        throw DomainError("multi-mean bound needs a strictly positive interval");
    FunctionView view = restrict_to(f, iv);
    std::map<std::string, ClassVerdict> hyp;
    hyp.emplace("hMultiConvex", check_h_multi_convex(view, h, grid));

    double x = iv.lo, y = iv.hi;
    double logLen = std::log(y) - std::log(x);
    QuadResult lg = integrate_log([&](double gamma) { return eval_function(f, gamma); },
                                  iv, tol);
    QuadResult mv = mean_value([&](double gamma) { return eval_function(f, gamma); }, iv,
                               tol);
    double lhs = 0.5 * (lg.value / logLen + mv.value);
    double fx = eval_function(f, x), fy = eval_function(f, y);
    QuadResult rhs = integrate(
        [&](double t) {
            return std::pow(fx, eval_weight(h, t)) * std::pow(fy, eval_weight(h, 1.0 - t));
        },
        detail::kUnit, tol);
    double quadError =
        0.5 * (lg.errorEstimate / logLen + mv.errorEstimate) + rhs.errorEstimate;
    return detail::assemble(TheoremId::multiMean, std::move(hyp), lhs, rhs.value,
                            rhs.value - lhs, quadError);
}

}  // namespace ineqforge
