#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ineqforge/classes.hpp"
#include "ineqforge/errors.hpp"
#include "ineqforge/function.hpp"
#include "ineqforge/interval.hpp"
#include "ineqforge/quadrature.hpp"
#include "ineqforge/rng.hpp"
#include "ineqforge/theorems.hpp"

namespace ineqforge {

// One fully instantiated oracle input: everything needed to reproduce a
// single inequality evaluation.
struct CandidateConfig {
    TheoremId theorem = TheoremId::superaddSquareB;
    FunctionSpec f;
    std::optional<FunctionSpec> g;
    WeightSpec h;
    Interval iv{0.0, 1.0};
    std::optional<YoungParams> young;
    std::optional<HolderParams> holder;

    friend bool operator==(const CandidateConfig&, const CandidateConfig&) = default;
};

inline bool theorem_needs_second_function(TheoremId id) {
    return id == TheoremId::productSymmetricC || id == TheoremId::youngSplitD ||
           id == TheoremId::youngPointwiseE || id == TheoremId::geomHolder;
}

inline bool theorem_needs_young(TheoremId id) {
    return id == TheoremId::youngSplitD || id == TheoremId::youngPointwiseE ||
           id == TheoremId::midpoint;
}

inline bool theorem_needs_holder(TheoremId id) { return id == TheoremId::geomHolder; }

// Single-report oracle dispatch. The reciprocal-weight corollary is a report
// pair, not a single margin, so it cannot be a search or sweep target; its
// two halves are reachable as superaddProductA/superaddSquareB with a
// reciprocal weight.
inline InequalityReport evaluate_theorem(const CandidateConfig& c,
                                         double tol = kQuadTol,
                                         const GridSpec& grid = {}) {
    auto needG = [&]() -> const FunctionSpec& {
        if (!c.g) throw InvalidParamsError("theorem needs a second function");
        return *c.g;
    };
    auto needYoung = [&]() -> YoungParams {
        if (!c.young) throw InvalidParamsError("theorem needs Young parameters");
        return *c.young;
    };
    switch (c.theorem) {
        case TheoremId::HH101:
            return check_hh(c.f, c.iv, tol, grid);
        case TheoremId::superaddProductA:
            return check_superadd_product(c.f, c.h, c.iv, tol, grid);
        case TheoremId::superaddSquareB:
            return check_superadd_square(c.f, c.h, c.iv, tol, grid);
        case TheoremId::corollaryReciprocal:
            throw InvalidParamsError(
                "corollaryReciprocal is a report pair; evaluate superaddProductA or "
                "superaddSquareB with a reciprocal weight instead");
        case TheoremId::productSymmetricC:
            return check_product_symmetric(c.f, needG(), c.h, c.iv, tol, grid);
        case TheoremId::youngSplitD:
            return check_young_split(c.f, needG(), c.h, c.iv, needYoung(), tol, grid);
        case TheoremId::youngPointwiseE:
            return check_young_pointwise(c.f, needG(), c.h, c.iv, needYoung(), tol, grid);
        case TheoremId::midpoint:
            return check_midpoint(c.f, c.h, c.iv, needYoung(), tol, grid);
        case TheoremId::geomProduct:
            return check_geom_product(c.f, c.h, c.iv, tol, grid);
        case TheoremId::geomHolder: {
            if (!c.holder) throw InvalidParamsError("theorem needs Holder parameters");
            return check_geom_holder(c.f, needG(), c.h, c.iv.lo, c.iv.hi, *c.holder, tol,
                                     grid);
        }
        case TheoremId::multiMean:
            return check_multi_mean(c.f, c.h, c.iv, tol, grid);
    }
    throw InvalidParamsError("unknown theorem");
}

struct ParamRange {
    double lo = 0.0;
    double hi = 0.0;

    friend bool operator==(const ParamRange&, const ParamRange&) = default;
};

struct FunctionSpace {
    FunctionFamily family = FunctionFamily::exponential;
    std::vector<ParamRange> params;

    friend bool operator==(const FunctionSpace&, const FunctionSpace&) = default;
};

struct WeightSpace {
    WeightFamily family = WeightFamily::identity;
    std::vector<ParamRange> params;
    double clipEpsilon = kDefaultClipEpsilon;

    friend bool operator==(const WeightSpace&, const WeightSpace&) = default;
};

struct SearchSpace {
    TheoremId theorem = TheoremId::superaddSquareB;
    std::vector<FunctionSpace> functions;
    // Candidates for the second function where the theorem takes one; when
    // empty, the first list is reused.
    std::vector<FunctionSpace> functions2;
    // When empty, the identity weight is used without consuming draws.
    std::vector<WeightSpace> weights;
    ParamRange intervalLo{0.0, 1.0};
    ParamRange intervalHi{0.0, 1.0};
    ParamRange alphaRange{0.5, 0.5};
    ParamRange pRange{2.0, 2.0};
    std::size_t budget = 1000;
    std::uint64_t seed = 0;
    double tol = kQuadTol;

    friend bool operator==(const SearchSpace&, const SearchSpace&) = default;
};

struct TracePoint {
    std::size_t evaluation = 0;
    double margin = 0.0;

    friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

struct SearchResult {
    double bestMargin = std::numeric_limits<double>::infinity();
    std::optional<CandidateConfig> bestConfig;
    // False when no evaluated configuration satisfied all hypotheses; the
    // margins then rank near-misses and replay reports hypothesisFailed.
    bool feasibleFound = false;
    std::map<std::string, ClassVerdict> hypothesisResults;
    std::vector<TracePoint> trace;
    std::size_t oracleEvaluations = 0;
    TheoremId theorem = TheoremId::superaddSquareB;
    std::uint64_t seed = 0;
    std::size_t budget = 0;
    double tol = kQuadTol;
};

// Hypothesis grids inside the search run coarse and without random
// refinement for throughput; replay re-verifies at full resolution.
inline GridSpec search_hypothesis_grid(std::uint64_t seed) {
    GridSpec g;
    g.xN = g.yN = g.tN = 9;
    g.randomSamples = 0;
    g.seed = seed;
    return g;
}

inline constexpr double kMinIntervalLength = 1e-3;

namespace detail {

inline void validate_range(const ParamRange& r, const char* what) {
    if (!(std::isfinite(r.lo) && std::isfinite(r.hi)) || !(r.lo <= r.hi))
        throw InvalidParamsError(std::string(what) + " range must satisfy lo <= hi");
}

inline double range_mid(const ParamRange& r) { return 0.5 * (r.lo + r.hi); }

// Lexicographic key used to break exact margin ties deterministically.
inline std::vector<double> config_key(const CandidateConfig& c) {
    std::vector<double> key;
    key.push_back(static_cast<double>(c.f.family));
    key.insert(key.end(), c.f.params.begin(), c.f.params.end());
    key.push_back(c.g ? 1.0 : 0.0);
    if (c.g) {
        key.push_back(static_cast<double>(c.g->family));
        key.insert(key.end(), c.g->params.begin(), c.g->params.end());
    }
    key.push_back(static_cast<double>(c.h.family));
    key.insert(key.end(), c.h.params.begin(), c.h.params.end());
    key.push_back(c.h.clipEpsilon);
    key.push_back(c.iv.lo);
    key.push_back(c.iv.hi);
    key.push_back(c.young ? c.young->alpha : -1.0);
    key.push_back(c.holder ? c.holder->p : -1.0);
    return key;
}

inline bool key_less(const std::vector<double>& a, const std::vector<double>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Continuous refinement axis: a scalar slot of the candidate plus the range
// it may move in.
struct Axis {
    enum class Kind { fParam, gParam, wParam, intervalLo, intervalHi, alpha, p };
    Kind kind;
    std::size_t index = 0;
    ParamRange range;
};

}  // namespace detail

// Rebuilds a candidate with one scalar slot replaced, revalidating the
// affected spec. Throws InvalidParams/NonPositive/Domain errors like direct
// construction would.
inline CandidateConfig with_axis_value(const CandidateConfig& c,
                                       const detail::Axis& axis, double value) {
    CandidateConfig out = c;
    using Kind = detail::Axis::Kind;
    switch (axis.kind) {
        case Kind::fParam: {
            std::vector<double> params = c.f.params;
            params.at(axis.index) = value;
            out.f = make_function(c.f.family, std::move(params), c.f.domain);
            break;
        }
        case Kind::gParam: {
            if (!c.g) throw InvalidParamsError("candidate has no second function");
            std::vector<double> params = c.g->params;
            params.at(axis.index) = value;
            out.g = make_function(c.g->family, std::move(params), c.g->domain);
            break;
        }
        case Kind::wParam: {
            std::vector<double> params = c.h.params;
            params.at(axis.index) = value;
            out.h = make_weight(c.h.family, std::move(params), c.h.clipEpsilon,
                                c.h.domainJ);
            break;
        }
        case Kind::intervalLo:
        case Kind::intervalHi: {
            Interval iv = axis.kind == Kind::intervalLo ? Interval{value, c.iv.hi}
                                                        : Interval{c.iv.lo, value};
            if (!(iv.hi - iv.lo >= kMinIntervalLength))
                throw InvalidParamsError("interval too short");
            out.iv = iv;
            out.f = make_function(c.f.family, c.f.params, iv);
            if (c.g) out.g = make_function(c.g->family, c.g->params, iv);
            break;
        }
        case Kind::alpha:
            out.young = young_from_alpha(value);
            break;
        case Kind::p:
            out.holder = holder_from_p(value);
            break;
    }
    return out;
}

// Margin table along one named axis of a candidate: "a", "b", "alpha", "p",
// "f0".."fN", "g0".."gN", or "w0".."wN" (function, second-function, and
// weight parameter slots). Rows are ordered by ascending parameter value.
struct SweepRow {
    double value = 0.0;
    InequalityReport report;
};

namespace detail {

inline Axis axis_from_name(const CandidateConfig& c, const std::string& name,
                           ParamRange range) {
    auto indexed = [&](char prefix, std::size_t count,
                       Axis::Kind kind) -> std::optional<Axis> {
        if (name.size() < 2 || name[0] != prefix) return std::nullopt;
        std::size_t idx = 0;
        for (std::size_t i = 1; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9') return std::nullopt;
            idx = idx * 10 + static_cast<std::size_t>(name[i] - '0');
        }
        if (idx >= count)
            throw InvalidParamsError("axis " + name + " is out of range");
        return Axis{kind, idx, range};
    };
    if (name == "a") return {Axis::Kind::intervalLo, 0, range};
    if (name == "b") return {Axis::Kind::intervalHi, 0, range};
    if (name == "alpha") return {Axis::Kind::alpha, 0, range};
    if (name == "p") return {Axis::Kind::p, 0, range};
    if (auto a = indexed('f', c.f.params.size(), Axis::Kind::fParam)) return *a;
    if (auto a = indexed('g', c.g ? c.g->params.size() : 0, Axis::Kind::gParam))
        return *a;
    if (auto a = indexed('w', c.h.params.size(), Axis::Kind::wParam)) return *a;
    throw InvalidParamsError("unknown sweep axis " + name);
}

}  // namespace detail

inline std::vector<SweepRow> sweep_margin(const CandidateConfig& config,
                                          const std::string& axis, ParamRange range,
                                          int gridN, double tol = kQuadTol,
                                          const GridSpec& grid = {}) {
    if (gridN < 2) throw InvalidParamsError("sweep needs at least 2 grid points");
    detail::validate_range(range, "sweep");
    detail::Axis ax = detail::axis_from_name(config, axis, range);
    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(gridN));
    for (int i = 0; i < gridN; ++i) {
        double v = i == gridN - 1
                       ? range.hi
                       : range.lo + (range.hi - range.lo) * static_cast<double>(i) /
                                        (gridN - 1);
        CandidateConfig c = with_axis_value(config, ax, v);
        rows.push_back(SweepRow{v, evaluate_theorem(c, tol, grid)});
    }
    return rows;
}

namespace detail {

// Draws one candidate from the space. Draw order is fixed — function index,
// function params, second function, weight, interval endpoints, Young alpha,
// Holder p — and each candidate consumes only its own counter stream, so
// extending the budget never changes earlier candidates.
inline std::optional<CandidateConfig> sample_candidate(const SearchSpace& space,
                                                       std::uint64_t index) {
    CounterRng rng(space.seed, index);
    CandidateConfig c;
    c.theorem = space.theorem;

    auto drawFunction = [&](const std::vector<FunctionSpace>& list)
        -> std::pair<FunctionFamily, std::vector<double>> {
        const FunctionSpace& fs = list[rng.next_index(list.size())];
        std::vector<double> params;
        params.reserve(fs.params.size());
        for (const ParamRange& r : fs.params) params.push_back(rng.next_in(r.lo, r.hi));
        return {fs.family, std::move(params)};
    };

    auto [fFamily, fParams] = drawFunction(space.functions);
    std::optional<std::pair<FunctionFamily, std::vector<double>>> gDraw;
    if (theorem_needs_second_function(space.theorem))
        gDraw = drawFunction(space.functions2.empty() ? space.functions
                                                      : space.functions2);

    WeightFamily wFamily = WeightFamily::identity;
    std::vector<double> wParams;
    double clip = kDefaultClipEpsilon;
    if (!space.weights.empty()) {
        const WeightSpace& ws = space.weights[rng.next_index(space.weights.size())];
        wFamily = ws.family;
        clip = ws.clipEpsilon;
        for (const ParamRange& r : ws.params) wParams.push_back(rng.next_in(r.lo, r.hi));
    }

    double a = rng.next_in(space.intervalLo.lo, space.intervalLo.hi);
    double b = rng.next_in(space.intervalHi.lo, space.intervalHi.hi);
    if (!(b - a >= kMinIntervalLength)) return std::nullopt;

    try {
        c.iv = Interval{a, b};
        c.f = make_function(fFamily, std::move(fParams), c.iv);
        if (gDraw) c.g = make_function(gDraw->first, std::move(gDraw->second), c.iv);
        c.h = make_weight(wFamily, std::move(wParams), clip);
        if (theorem_needs_young(space.theorem))
            c.young = young_from_alpha(rng.next_in(space.alphaRange.lo, space.alphaRange.hi));
        if (theorem_needs_holder(space.theorem))
            c.holder = holder_from_p(rng.next_in(space.pRange.lo, space.pRange.hi));
    } catch (const Error&) {
        return std::nullopt;
    }
    return c;
}

inline std::vector<Axis> refinement_axes(const SearchSpace& space,
                                         const CandidateConfig& c,
                                         std::size_t fSpaceIdx, std::size_t gSpaceIdx,
                                         std::size_t wSpaceIdx) {
    std::vector<Axis> axes;
    auto add = [&](Axis::Kind kind, std::size_t idx, const ParamRange& r) {
        if (r.hi > r.lo) axes.push_back(Axis{kind, idx, r});
    };
    const FunctionSpace& fs = space.functions[fSpaceIdx];
    for (std::size_t i = 0; i < fs.params.size(); ++i)
        add(Axis::Kind::fParam, i, fs.params[i]);
    if (c.g) {
        const auto& list = space.functions2.empty() ? space.functions : space.functions2;
        const FunctionSpace& gs = list[gSpaceIdx];
        for (std::size_t i = 0; i < gs.params.size(); ++i)
            add(Axis::Kind::gParam, i, gs.params[i]);
    }
    if (!space.weights.empty()) {
        const WeightSpace& ws = space.weights[wSpaceIdx];
        for (std::size_t i = 0; i < ws.params.size(); ++i)
            add(Axis::Kind::wParam, i, ws.params[i]);
    }
    add(Axis::Kind::intervalLo, 0, space.intervalLo);
    add(Axis::Kind::intervalHi, 0, space.intervalHi);
    if (theorem_needs_young(space.theorem)) add(Axis::Kind::alpha, 0, space.alphaRange);
    if (theorem_needs_holder(space.theorem)) add(Axis::Kind::p, 0, space.pRange);
    return axes;
}

inline double axis_value(const CandidateConfig& c, const Axis& axis) {
    using Kind = Axis::Kind;
    switch (axis.kind) {
        case Kind::fParam: return c.f.params.at(axis.index);
        case Kind::gParam: return c.g->params.at(axis.index);
        case Kind::wParam: return c.h.params.at(axis.index);
        case Kind::intervalLo: return c.iv.lo;
        case Kind::intervalHi: return c.iv.hi;
        case Kind::alpha: return c.young->alpha;
        case Kind::p: return c.holder->p;
    }
    return 0.0;
}

inline double clamp_axis(const Axis& axis, double v) {
    double lo = axis.range.lo, hi = axis.range.hi;
    if (axis.kind == Axis::Kind::alpha) {
        lo = std::max(lo, 1e-6);
        hi = std::min(hi, 1.0 - 1e-6);
    }
    if (axis.kind == Axis::Kind::p) lo = std::max(lo, 1.0 + 1e-9);
    return std::min(hi, std::max(lo, v));
}

}  // namespace detail

// Seeded random sampling over the space followed by derivative-free
// coordinate descent from every configuration that improved the running
// best. The sampler is counter-based and keyed by (seed, evaluation index),
// so growing the budget extends the sample stream without perturbing its
// prefix — a larger budget can only improve the best margin.
inline SearchResult search_violation(const SearchSpace& space) {
    if (space.budget < 1) throw InvalidParamsError("search budget must be at least 1");
    if (space.functions.empty())
        throw InvalidParamsError("search space needs at least one function family");
    if (space.theorem == TheoremId::corollaryReciprocal)
        throw InvalidParamsError(
            "corollaryReciprocal is a report pair; search superaddProductA or "
            "superaddSquareB with a reciprocal weight instead");
    detail::validate_range(space.intervalLo, "interval lo");
    detail::validate_range(space.intervalHi, "interval hi");
    for (const FunctionSpace& fs : space.functions)
        for (const ParamRange& r : fs.params) detail::validate_range(r, "function param");
    for (const FunctionSpace& fs : space.functions2)
        for (const ParamRange& r : fs.params) detail::validate_range(r, "function param");
    for (const WeightSpace& ws : space.weights)
        for (const ParamRange& r : ws.params) detail::validate_range(r, "weight param");
    if (theorem_needs_young(space.theorem)) {
        detail::validate_range(space.alphaRange, "alpha");
        if (!(space.alphaRange.lo > 0.0 && space.alphaRange.hi < 1.0))
            throw InvalidParamsError("alpha range must lie inside (0, 1)");
    }
    if (theorem_needs_holder(space.theorem)) {
        detail::validate_range(space.pRange, "p");
        if (!(space.pRange.lo > 1.0))
            throw InvalidParamsError("Holder p range must lie above 1");
    }

    GridSpec coarse = search_hypothesis_grid(space.seed);

    SearchResult result;
    result.theorem = space.theorem;
    result.seed = space.seed;
    result.budget = space.budget;
    result.tol = space.tol;

    struct Tracked {
        bool has = false;
        double margin = std::numeric_limits<double>::infinity();
        std::vector<double> key;
        CandidateConfig config;
        std::map<std::string, ClassVerdict> hypotheses;
    };
    Tracked feasible, infeasible;
    struct Start {
        CandidateConfig config;
        double margin;
        bool feasible;
    };
    std::vector<Start> starts;
    std::size_t evaluations = 0;

    auto evaluate = [&](const CandidateConfig& c) -> std::optional<InequalityReport> {
        try {
            InequalityReport r = evaluate_theorem(c, space.tol, coarse);
            ++evaluations;
            return r;
        } catch (const Error&) {
            return std::nullopt;
        }
    };

    auto offer = [&](const CandidateConfig& c, const InequalityReport& rep,
                     bool recordStart) {
        // Overflowed sides make the margin meaningless; such configurations
        // are treated like construction failures.
        if (!std::isfinite(rep.margin)) return;
        bool isFeasible = rep.verdict != ReportVerdict::hypothesisFailed;
        Tracked& track = isFeasible ? feasible : infeasible;
        std::vector<double> key = detail::config_key(c);
        bool better = !track.has || rep.margin < track.margin ||
                      (rep.margin == track.margin && detail::key_less(key, track.key));
        if (!better) return;
        track.has = true;
        track.margin = rep.margin;
        track.key = std::move(key);
        track.config = c;
        track.hypotheses = rep.hypothesisResults;
        // The trace follows the reported track: feasible improvements once
        // any feasible candidate exists, infeasible ones before that.
        if (isFeasible || !feasible.has) {
            if (isFeasible && !result.trace.empty() &&
                result.trace.back().margin <= rep.margin && !result.feasibleFound) {
                // First feasible candidate after infeasible-only improvements:
                // restart the trace so it stays strictly improving within the
                // reported track.
                result.trace.clear();
            }
            if (result.trace.empty() || rep.margin < result.trace.back().margin) {
                if (isFeasible && !result.feasibleFound) result.trace.clear();
                result.trace.push_back(TracePoint{evaluations - 1, rep.margin});
            }
            if (isFeasible) result.feasibleFound = true;
            if (recordStart) starts.push_back(Start{c, rep.margin, isFeasible});
        }
    };

    for (std::size_t i = 0; i < space.budget; ++i) {
        std::optional<CandidateConfig> c = detail::sample_candidate(space, i);
        if (!c) continue;
        std::optional<InequalityReport> rep = evaluate(*c);
        if (!rep) continue;
        offer(*c, *rep, true);
    }

    // Coordinate descent from every sampling-phase improvement, not just the
    // final best: refinement starts must only grow with budget so a bigger
    // budget cannot lose a basin found earlier.
    bool feasiblePhase = feasible.has;
    for (const Start& start : starts) {
        if (feasiblePhase && !start.feasible) continue;
        std::vector<detail::Axis> axes;
        {
            // Recover the space rows this start drew from by matching specs;
            // exact parameter membership identifies the row deterministically.
            std::size_t fIdx = 0, gIdx = 0, wIdx = 0;
            for (std::size_t i = 0; i < space.functions.size(); ++i)
                if (space.functions[i].family == start.config.f.family &&
                    space.functions[i].params.size() == start.config.f.params.size()) {
                    fIdx = i;
                    break;
                }
            if (start.config.g) {
                const auto& list =
                    space.functions2.empty() ? space.functions : space.functions2;
                for (std::size_t i = 0; i < list.size(); ++i)
                    if (list[i].family == start.config.g->family &&
                        list[i].params.size() == start.config.g->params.size()) {
                        gIdx = i;
                        break;
                    }
            }
            for (std::size_t i = 0; i < space.weights.size(); ++i)
                if (space.weights[i].family == start.config.h.family &&
                    space.weights[i].params.size() == start.config.h.params.size()) {
                    wIdx = i;
                    break;
                }
            axes = detail::refinement_axes(space, start.config, fIdx, gIdx, wIdx);
        }
        if (axes.empty()) continue;

        CandidateConfig current = start.config;
        double currentMargin = start.margin;
        std::vector<double> steps;
        steps.reserve(axes.size());
        for (const detail::Axis& ax : axes)
            steps.push_back(0.25 * (ax.range.hi - ax.range.lo));

        constexpr int kSweeps = 8;
        constexpr double kRelStepStop = 1e-4;
        for (int sweep = 0; sweep < kSweeps; ++sweep) {
            double maxRel = 0.0;
            for (std::size_t ai = 0; ai < axes.size(); ++ai)
                maxRel = std::max(maxRel,
                                  steps[ai] / (axes[ai].range.hi - axes[ai].range.lo));
            if (maxRel < kRelStepStop) break;
            for (std::size_t ai = 0; ai < axes.size(); ++ai) {
                const detail::Axis& ax = axes[ai];
                for (double dir : {1.0, -1.0}) {
                    bool movedThisDir = false;
                    for (int move = 0; move < 16; ++move) {
                        double cur = detail::axis_value(current, ax);
                        double next = detail::clamp_axis(ax, cur + dir * steps[ai]);
                        if (next == cur) break;
                        std::optional<CandidateConfig> cand;
                        try {
                            cand = with_axis_value(current, ax, next);
                        } catch (const Error&) {
                            break;
                        }
                        std::optional<InequalityReport> rep = evaluate(*cand);
                        if (!rep) break;
                        bool isFeasible = rep->verdict != ReportVerdict::hypothesisFailed;
                        offer(*cand, *rep, false);
                        if ((feasiblePhase || result.feasibleFound) && !isFeasible) break;
                        if (!(rep->margin < currentMargin)) break;
                        current = *cand;
                        currentMargin = rep->margin;
                        movedThisDir = true;
                    }
                    if (movedThisDir) break;
                }
            }
            for (double& s : steps) s *= 0.5;
        }
    }

    result.oracleEvaluations = evaluations;
    const Tracked& chosen = feasible.has ? feasible : infeasible;
    if (chosen.has) {
        result.bestMargin = chosen.margin;
        result.bestConfig = chosen.config;
        result.hypothesisResults = chosen.hypotheses;
    }
    return result;
}

// Re-evaluates the best configuration at 10x tighter quadrature tolerance
// with the full default grid (random refinement included), confirming that a
// reported violation is not a sampling or quadrature artifact.
inline InequalityReport replay(const SearchResult& result) {
    if (!result.bestConfig)
        throw InvalidParamsError("search produced no evaluable configuration to replay");
    GridSpec full;
    full.seed = result.seed;
    return evaluate_theorem(*result.bestConfig, result.tol / 10.0, full);
}

}  // namespace ineqforge
