#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <string>

#include "ineqforge/errors.hpp"
#include "ineqforge/interval.hpp"

namespace ineqforge {

struct QuadResult {
    double value = 0.0;
    double errorEstimate = 0.0;
    std::size_t evaluations = 0;
};

namespace detail {

// 15-point Gauss-Legendre rule on [-1, 1]; nonnegative abscissae and their
// weights (the rule is symmetric).
inline constexpr std::array<double, 8> kGL15Nodes = {
    0.000000000000000, 0.201194093997435, 0.394151347077563,
    0.570972172608539, 0.724417731360170, 0.848206583410427,
    0.937273392400706, 0.987992518020485,
};
inline constexpr std::array<double, 8> kGL15Weights = {
    0.202578241925561, 0.198431485327112, 0.186161000015562,
    0.166269205816994, 0.139570677926154, 0.107159220467172,
    0.070366047488108, 0.030753241996117,
};

struct QuadWorkspace {
    const std::function<double(double)>& f;
    std::size_t budget;
    std::size_t evaluations = 0;

    double eval(double x) {
        if (evaluations >= budget)
            throw BudgetError("integrand evaluation budget exhausted");
        ++evaluations;
        double v = f(x);
        if (!std::isfinite(v))
            throw NonFiniteError("integrand returned a non-finite value at x = " +
                                 std::to_string(x));
        return v;
    }

    double gl15(double a, double b) {
        double c = 0.5 * (a + b), h = 0.5 * (b - a);
        double sum = kGL15Weights[0] * eval(c);
        for (std::size_t i = 1; i < kGL15Nodes.size(); ++i)
            sum += kGL15Weights[i] *
                   (eval(c - h * kGL15Nodes[i]) + eval(c + h * kGL15Nodes[i]));
        return sum * h;
    }
};

inline double simpson(double h6, double fa, double fm, double fb) {
    return h6 * (fa + 4.0 * fm + fb);
}

// Recursive bisection: each accepted panel contributes its Richardson error
// term; the returned value is the extrapolated S2 + (S2 - S1)/15.
inline double adapt_simpson(QuadWorkspace& ws, double a, double b, double fa,
                            double fm, double fb, double whole, double tol,
                            int depth, double& errAcc) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = ws.eval(lm), frm = ws.eval(rm);
    double left = simpson((m - a) / 6.0, fa, flm, fm);
    double right = simpson((b - m) / 6.0, fm, frm, fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        errAcc += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return adapt_simpson(ws, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, errAcc) +
           adapt_simpson(ws, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, errAcc);
}

}  // namespace detail

inline constexpr double kQuadTol = 1e-9;
inline constexpr std::size_t kQuadBudget = 1000000;
inline constexpr int kQuadMaxDepth = 50;

// Adaptive-Simpson integral of f over iv with an absolute tolerance target.
// The error estimate is the larger of the accumulated Richardson terms and
// the disagreement with an independent 4-panel Gauss-Legendre pass.
inline QuadResult integrate(const std::function<double(double)>& f, Interval iv,
                            double tol = kQuadTol,
                            std::size_t budget = kQuadBudget) {
    if (!(tol > 0.0)) throw InvalidParamsError("quadrature tol must be positive");
    detail::QuadWorkspace ws{f, budget};
    double a = iv.lo, b = iv.hi, m = iv.midpoint();
    double fa = ws.eval(a), fm = ws.eval(m), fb = ws.eval(b);
    double whole = detail::simpson((b - a) / 6.0, fa, fm, fb);
    double errAcc = 0.0;
    double value =
        detail::adapt_simpson(ws, a, b, fa, fm, fb, whole, tol, kQuadMaxDepth, errAcc);

    double cross = 0.0;
    double step = iv.length() / 4.0;
    for (int i = 0; i < 4; ++i)
        cross += ws.gl15(a + i * step, a + (i + 1) * step);
    double errorEstimate = std::max(errAcc, std::abs(value - cross));
    return {value, errorEstimate, ws.evaluations};
}

// Integral of f against the logarithmic measure dx/x over iv, computed by the
// substitution u = ln x. The interval must be strictly positive.
inline QuadResult integrate_log(const std::function<double(double)>& f, Interval iv,
                                double tol = kQuadTol,
                                std::size_t budget = kQuadBudget) {
    if (!(iv.lo > 0.0))
        throw DomainError("logarithmic measure needs a strictly positive interval");
    Interval logIv{std::log(iv.lo), std::log(iv.hi)};
    auto g = [&f](double u) { return f(std::exp(u)); };
    return integrate(g, logIv, tol, budget);
}

// Average value of f over iv: integral divided by interval length.
inline QuadResult mean_value(const std::function<double(double)>& f, Interval iv,
                             double tol = kQuadTol,
                             std::size_t budget = kQuadBudget) {
    QuadResult r = integrate(f, iv, tol, budget);
    double len = iv.length();
    return {r.value / len, r.errorEstimate / len, r.evaluations};
}

}  // namespace ineqforge
