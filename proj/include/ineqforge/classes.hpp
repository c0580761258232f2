#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "ineqforge/errors.hpp"
#include "ineqforge/function.hpp"
#include "ineqforge/interval.hpp"
#include "ineqforge/rng.hpp"

namespace ineqforge {

// Sampling plan shared by all membership predicates: a full (x, y, t) lattice,
// a lambda axis where the definition has one, and seeded random refinement.
struct GridSpec {
    int xN = 33;
    int yN = 33;
    int tN = 33;
    std::vector<double> lambdaValues = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5,
                                        0.6, 0.7, 0.8, 0.9, 1.0};
    std::size_t randomSamples = 10000;
    std::uint64_t seed = 0;
    // A sample only counts as a violation when LHS - RHS > slackTol*(1+|RHS|),
    // absorbing floating-point noise at equality cases.
    double slackTol = 1e-9;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

inline std::vector<double> uniform_lambda_grid(int n) {
    if (n < 1) throw InvalidParamsError("lambda grid needs at least one point");
    if (n == 1) return {0.0};
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = static_cast<double>(i) / (n - 1);
    return v;
}

// Sample coordinates and both sides at the reduced point. Predicates without
// a lambda (or t, or y) axis leave those slots 0.
struct Witness {
    double x = 0.0;
    double y = 0.0;
    double t = 0.0;
    double lambda = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;

    friend bool operator==(const Witness&, const Witness&) = default;
};

inline bool witness_lex_less(const Witness& a, const Witness& b) {
    if (a.x != b.x) return a.x < b.x;
    if (a.y != b.y) return a.y < b.y;
    if (a.t != b.t) return a.t < b.t;
    return a.lambda < b.lambda;
}

enum class GridStatus { holdsOnGrid, violated };

inline const char* grid_status_name(GridStatus s) {
    return s == GridStatus::holdsOnGrid ? "holdsOnGrid" : "violated";
}

// Result of a membership predicate. maxViolation is the largest
// slack-adjusted excess LHS - RHS - slackTol*(1+|RHS|) over all samples, so
// it is positive exactly when the status is violated; the witness (present
// only then) is the sample attaining it.
struct ClassVerdict {
    GridStatus status = GridStatus::holdsOnGrid;
    std::optional<Witness> witness;
    double maxViolation = -std::numeric_limits<double>::infinity();
    GridSpec grid;
};

// Absolute tolerance for the equality-style weight properties (symmetry
// about 1/2 and partition of unity).
inline constexpr double kEqualityTol = 1e-12;

namespace detail {

inline double grid_point(Interval iv, int i, int n) {
    if (i == n - 1) return iv.hi;
    return iv.lo + iv.length() * static_cast<double>(i) / (n - 1);
}

// Order-independent max reduction: larger excess wins, exact ties go to the
// lexicographically smaller witness, so concurrent evaluation orders cannot
// change the result.
struct ViolationReducer {
    double best = -std::numeric_limits<double>::infinity();
    Witness witness{};
    bool seen = false;

    void offer(double excess, const Witness& w) {
        if (std::isnan(excess)) return;
        if (!seen || excess > best ||
            (excess == best && witness_lex_less(w, witness))) {
            best = excess;
            witness = w;
        }
        seen = true;
    }
};

inline void validate_grid(const GridSpec& grid) {
    if (grid.xN < 2 || grid.yN < 2 || grid.tN < 2)
        throw InvalidParamsError("grid needs at least 2 points per axis");
    if (grid.lambdaValues.empty())
        throw InvalidParamsError("grid needs at least one lambda value");
    if (!(grid.slackTol > 0.0))
        throw InvalidParamsError("grid slack tolerance must be positive");
}

inline ClassVerdict finish(const ViolationReducer& red, const GridSpec& grid) {
    ClassVerdict v;
    v.grid = grid;
    v.maxViolation = red.best;
    if (red.seen && red.best > 0.0) {
        v.status = GridStatus::violated;
        v.witness = red.witness;
    }
    return v;
}

// Core lattice + random-sample sweep over (x, y, t [, lambda]). The eval
// callback returns (lhs, rhs) for one sample, or nullopt to skip it. Random
// draws consume x, y, t (and the lambda index last) in a fixed order from a
// counter keyed by (seed, sample index), so the (x, y, t) stream is identical
// across predicates sharing a GridSpec — lambda-slice comparisons see the
// same points.
template <typename Eval>
ClassVerdict run_xyt_check(Interval xyDomain, Interval tIv, const GridSpec& grid,
                           bool lambdaAxis, Eval&& eval) {
    validate_grid(grid);
    ViolationReducer red;
    auto offer = [&](double x, double y, double t, double lam) {
        auto sides = eval(x, y, t, lam);
        if (!sides) return;
        double slack = grid.slackTol * (1.0 + std::abs(sides->second));
        red.offer(sides->first - sides->second - slack,
                  Witness{x, y, t, lam, sides->first, sides->second});
    };

    for (int ix = 0; ix < grid.xN; ++ix) {
        double x = grid_point(xyDomain, ix, grid.xN);
        for (int iy = 0; iy < grid.yN; ++iy) {
            double y = grid_point(xyDomain, iy, grid.yN);
            for (int it = 0; it < grid.tN; ++it) {
                double t = grid_point(tIv, it, grid.tN);
                if (lambdaAxis) {
                    for (double lam : grid.lambdaValues) offer(x, y, t, lam);
                } else {
                    offer(x, y, t, 0.0);
                }
            }
        }
    }
    for (std::size_t i = 0; i < grid.randomSamples; ++i) {
        CounterRng rng(grid.seed, i);
        double x = rng.next_in(xyDomain.lo, xyDomain.hi);
        double y = rng.next_in(xyDomain.lo, xyDomain.hi);
        double t = rng.next_in(tIv.lo, tIv.hi);
        double lam =
            lambdaAxis ? grid.lambdaValues[rng.next_index(grid.lambdaValues.size())]
                       : 0.0;
        offer(x, y, t, lam);
    }
    return finish(red, grid);
}

}  // namespace detail

// --- convexity-class predicates ------------------------------------------
//
// Each predicate certifies only "no violation on the tested set": membership
// is a universally quantified statement that sampling can refute but never
// prove. FunctionView overloads exist so composed functions (e.g. the
// pointwise logarithm of a spec) can be tested against the same grids.

// f(tx+(1-t)y) <= h(t)f(x) + h(1-t)f(y)
inline ClassVerdict check_h_convex(const FunctionView& f, const WeightSpec& h,
                                   const GridSpec& grid = {}) {
    return detail::run_xyt_check(
        f.domain, h.t_interval(), grid, false,
        [&](double x, double y, double t, double) -> std::optional<std::pair<double, double>> {
            double lhs = f(t * x + (1.0 - t) * y);
            double rhs = eval_weight(h, t) * f(x) + eval_weight(h, 1.0 - t) * f(y);
            return std::pair{lhs, rhs};
        });
}

inline ClassVerdict check_h_convex(const FunctionSpec& f, const WeightSpec& h,
                                   const GridSpec& grid = {}) {
    return check_h_convex(FunctionView(f), h, grid);
}

// f(tx+(1-t)y) <= f(x)^{h(t)} f(y)^{h(1-t)} — equivalently, log f is h-convex.
inline ClassVerdict check_h_log_convex(const FunctionView& f, const WeightSpec& h,
                                       const GridSpec& grid = {}) {
    return detail::run_xyt_check(
        f.domain, h.t_interval(), grid, false,
        [&](double x, double y, double t, double) -> std::optional<std::pair<double, double>> {
            double lhs = f(t * x + (1.0 - t) * y);
            double rhs = std::pow(f(x), eval_weight(h, t)) *
                         std::pow(f(y), eval_weight(h, 1.0 - t));
            return std::pair{lhs, rhs};
        });
}

inline ClassVerdict check_h_log_convex(const FunctionSpec& f, const WeightSpec& h,
                                       const GridSpec& grid = {}) {
    return check_h_log_convex(FunctionView(f), h, grid);
}

// f(x^t y^{1-t}) <= f(x)^{h(t)} f(y)^{h(1-t)} on a strictly positive domain.
inline ClassVerdict check_h_geom_convex(const FunctionView& f, const WeightSpec& h,
                                        const GridSpec& grid = {}) {
    if (!(f.domain.lo > 0.0))
        throw DomainError("geometric convexity needs a strictly positive domain");
    return detail::run_xyt_check(
        f.domain, h.t_interval(), grid, false,
        [&](double x, double y, double t, double) -> std::optional<std::pair<double, double>> {
            double gm = std::exp(t * std::log(x) + (1.0 - t) * std::log(y));
            double lhs = f(f.domain.clamp(gm));
            double rhs = std::pow(f(x), eval_weight(h, t)) *
                         std::pow(f(y), eval_weight(h, 1.0 - t));
            return std::pair{lhs, rhs};
        });
}

inline ClassVerdict check_h_geom_convex(const FunctionSpec& f, const WeightSpec& h,
                                        const GridSpec& grid = {}) {
    return check_h_geom_convex(FunctionView(f), h, grid);
}

// lambda*f(x^t y^{1-t}) + (1-lambda)*f(tx+(1-t)y) <= f(x)^{h(t)} f(y)^{h(1-t)}
// for every lambda in [0, 1]; the lambda axis uses grid.lambdaValues.
inline ClassVerdict check_h_multi_convex(const FunctionView& f, const WeightSpec& h,
                                         const GridSpec& grid = {}) {
    if (!(f.domain.lo > 0.0))
        throw DomainError("multi convexity needs a strictly positive domain");
    return detail::run_xyt_check(
        f.domain, h.t_interval(), grid, true,
        [&](double x, double y, double t, double lam) -> std::optional<std::pair<double, double>> {
            double gm = std::exp(t * std::log(x) + (1.0 - t) * std::log(y));
            double lhs = lam * f(f.domain.clamp(gm)) +
                         (1.0 - lam) * f(t * x + (1.0 - t) * y);
            double rhs = std::pow(f(x), eval_weight(h, t)) *
                         std::pow(f(y), eval_weight(h, 1.0 - t));
            return std::pair{lhs, rhs};
        });
}

inline ClassVerdict check_h_multi_convex(const FunctionSpec& f, const WeightSpec& h,
                                         const GridSpec& grid = {}) {
    return check_h_multi_convex(FunctionView(f), h, grid);
}

// First-sense s-log-convexity: f(alpha*x + beta*y) <= f(x)^{alpha^s} f(y)^{beta^s}
// over pairs with alpha^s + beta^s = 1, parametrized alpha = u^{1/s},
// beta = (1-u)^{1/s} with u on the t axis. For s < 1 the mixed point
// alpha*x + beta*y can leave the domain; such samples are skipped.
inline ClassVerdict check_s_log_convex_first(const FunctionView& f, double s,
                                             const GridSpec& grid = {}) {
    if (!(s > 0.0 && s <= 1.0))
        throw InvalidParamsError("first-sense exponent s must be in (0, 1]");
    return detail::run_xyt_check(
        f.domain, Interval{0.0, 1.0}, grid, false,
        [&](double x, double y, double u, double) -> std::optional<std::pair<double, double>> {
            double alpha = std::pow(u, 1.0 / s);
            double beta = std::pow(1.0 - u, 1.0 / s);
            double p = alpha * x + beta * y;
            if (!f.domain.contains(p, kDomainTol)) return std::nullopt;
            // alpha^s and beta^s are u and 1-u by construction.
            double lhs = f(f.domain.clamp(p));
            double rhs = std::pow(f(x), u) * std::pow(f(y), 1.0 - u);
            return std::pair{lhs, rhs};
        });
}

inline ClassVerdict check_s_log_convex_first(const FunctionSpec& f, double s,
                                             const GridSpec& grid = {}) {
    return check_s_log_convex_first(FunctionView(f), s, grid);
}

// Second-sense s-log-convexity is h-log-convexity with h = t^s.
inline ClassVerdict check_s_log_convex_second(const FunctionSpec& f, double s,
                                              const GridSpec& grid = {}) {
    return check_h_log_convex(f, make_weight(WeightFamily::power, {s}), grid);
}

// Plain and s-geometric convexity are the h = t and h = t^s instances.
inline ClassVerdict check_geom_convex(const FunctionSpec& f, const GridSpec& grid = {}) {
    return check_h_geom_convex(f, make_weight(WeightFamily::identity), grid);
}

inline ClassVerdict check_s_geom_convex(const FunctionSpec& f, double s,
                                        const GridSpec& grid = {}) {
    return check_h_geom_convex(f, make_weight(WeightFamily::power, {s}), grid);
}

// h(u+v) >= h(u) + h(v) over pairs with u, v, u+v all inside the weight's
// checked domain [clipEpsilon, 1]. The (u, v) axes are uniform over [0, 1]
// before filtering, so e.g. a 3-point grid tests exactly the pair (0.5, 0.5)
// for a singular weight. The witness stores (u, v) in its (x, y) slots.
inline ClassVerdict check_superadditive(const WeightSpec& h, const GridSpec& grid = {}) {
    detail::validate_grid(grid);
    detail::ViolationReducer red;
    Interval unit{0.0, 1.0};
    double clip = h.clipEpsilon;
    auto offer = [&](double u, double v) {
        if (u < clip || v < clip || u + v > 1.0) return;
        double lhs = eval_weight(h, u) + eval_weight(h, v);
        double rhs = eval_weight(h, u + v);
        double slack = grid.slackTol * (1.0 + std::abs(rhs));
        red.offer(lhs - rhs - slack, Witness{u, v, 0.0, 0.0, lhs, rhs});
    };
    for (int iu = 0; iu < grid.xN; ++iu) {
        double u = detail::grid_point(unit, iu, grid.xN);
        for (int iv = 0; iv < grid.yN; ++iv) offer(u, detail::grid_point(unit, iv, grid.yN));
    }
    for (std::size_t i = 0; i < grid.randomSamples; ++i) {
        CounterRng rng(grid.seed, i);
        double u = rng.next_unit();
        double v = rng.next_unit();
        offer(u, v);
    }
    return detail::finish(red, grid);
}

namespace detail {

template <typename Defect>
ClassVerdict run_t_check(const WeightSpec& h, const GridSpec& grid, Defect&& defect) {
    validate_grid(grid);
    ViolationReducer red;
    Interval tIv = h.t_interval();
    auto offer = [&](double t) {
        auto [lhs, rhs] = defect(t);
        red.offer(std::abs(lhs - rhs) - kEqualityTol, Witness{0.0, 0.0, t, 0.0, lhs, rhs});
    };
    for (int it = 0; it < grid.tN; ++it) offer(grid_point(tIv, it, grid.tN));
    for (std::size_t i = 0; i < grid.randomSamples; ++i)
        offer(CounterRng(grid.seed, i).next_in(tIv.lo, tIv.hi));
    return finish(red, grid);
}

}  // namespace detail

// h(t) = h(1-t) within an absolute 1e-12 tolerance.
inline ClassVerdict check_symmetric_half(const WeightSpec& h, const GridSpec& grid = {}) {
    return detail::run_t_check(h, grid, [&](double t) {
        return std::pair{eval_weight(h, t), eval_weight(h, 1.0 - t)};
    });
}

// h(t) + h(1-t) = 1 within an absolute 1e-12 tolerance.
inline ClassVerdict check_partition_unity(const WeightSpec& h, const GridSpec& grid = {}) {
    return detail::run_t_check(h, grid, [&](double t) {
        return std::pair{eval_weight(h, t) + eval_weight(h, 1.0 - t), 1.0};
    });
}

// Returns a copy of the weight with its property flags filled in from the
// grid checks; the original stays unset per construction.
inline WeightSpec annotate_weight_properties(WeightSpec h, const GridSpec& grid = {}) {
    h.superadditiveFlag =
        check_superadditive(h, grid).status == GridStatus::holdsOnGrid;
    h.symmetricHalfFlag =
        check_symmetric_half(h, grid).status == GridStatus::holdsOnGrid;
    h.partitionUnityFlag =
        check_partition_unity(h, grid).status == GridStatus::holdsOnGrid;
    return h;
}

// Monotonicity as a ClassVerdict, for use in hypothesis maps: violated only
// when the samples both rise and fall beyond the tie tolerance. The witness
// is the adjacent pair breaking the direction the function is closer to,
// with the larger value in the lhs slot.
inline ClassVerdict monotone_verdict(const FunctionView& f, int gridN = 1025) {
    if (gridN < 3) throw InvalidParamsError("monotone check needs gridN >= 3");
    double maxRise = 0.0, maxFall = 0.0;
    Witness riseW{}, fallW{};
    double prevX = f.domain.lo;
    double prev = f(prevX);
    for (int i = 1; i < gridN; ++i) {
        double x = detail::grid_point(f.domain, i, gridN);
        double v = f(x);
        if (v - prev > maxRise) {
            maxRise = v - prev;
            riseW = Witness{prevX, x, 0.0, 0.0, v, prev};
        }
        if (prev - v > maxFall) {
            maxFall = prev - v;
            fallW = Witness{prevX, x, 0.0, 0.0, prev, v};
        }
        prevX = x;
        prev = v;
    }
    ClassVerdict verdict;
    verdict.grid.xN = gridN;
    verdict.grid.yN = 2;
    verdict.grid.tN = 2;
    verdict.grid.randomSamples = 0;
    verdict.maxViolation = std::min(maxRise, maxFall) - kEqualityTol;
    if (verdict.maxViolation > 0.0) {
        verdict.status = GridStatus::violated;
        verdict.witness = maxRise <= maxFall ? riseW : fallW;
    }
    return verdict;
}

inline ClassVerdict monotone_verdict(const FunctionSpec& f, int gridN = 1025) {
    return monotone_verdict(FunctionView(f), gridN);
}

}  // namespace ineqforge
