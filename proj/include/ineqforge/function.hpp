#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ineqforge/errors.hpp"
#include "ineqforge/interval.hpp"

namespace ineqforge {

// Parametric families of positive candidate functions f on a compact
// interval. Positivity and monotonicity are grid-verified metadata, not
// proofs; the inequality oracles re-check whatever they rely on.
enum class FunctionFamily {
    exponential,  // c * e^{k x},   params {c, k}, c > 0
    power,        // x^p,           params {p}; p must be a nonnegative integer
                  //                unless the domain is strictly positive
    expOfSquare,  // e^{(ln x)^2},  no params, domain strictly positive
    constant,     // c,             params {c}, c > 0
    affineExp,    // e^{a x + b},   params {a, b}
    tabulated,    // params are samples at uniform nodes over the domain,
                  //                linear interpolation between them
};

// Nonnegative weight families h on a domain J containing [0, 1].
enum class WeightFamily {
    identity,    // t
    power,       // t^s,                     params {s}, s > 0
    reciprocal,  // 1/t, clipped below at clipEpsilon
    constant,    // kappa,                   params {kappa}, kappa > 0
    convexMix,   // lambda*t + (1-lambda)*t^s, params {lambda, s}
};

inline const char* family_name(FunctionFamily f) {
    switch (f) {
        case FunctionFamily::exponential: return "exponential";
        case FunctionFamily::power: return "power";
        case FunctionFamily::expOfSquare: return "expOfSquare";
        case FunctionFamily::constant: return "constant";
        case FunctionFamily::affineExp: return "affineExp";
        case FunctionFamily::tabulated: return "tabulated";
    }
    return "?";
}

inline const char* family_name(WeightFamily w) {
    switch (w) {
        case WeightFamily::identity: return "identity";
        case WeightFamily::power: return "power";
        case WeightFamily::reciprocal: return "reciprocal";
        case WeightFamily::constant: return "constant";
        case WeightFamily::convexMix: return "convexMix";
    }
    return "?";
}

inline std::optional<FunctionFamily> function_family_from_name(std::string_view name) {
    for (FunctionFamily f :
         {FunctionFamily::exponential, FunctionFamily::power, FunctionFamily::expOfSquare,
          FunctionFamily::constant, FunctionFamily::affineExp, FunctionFamily::tabulated})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

inline std::optional<WeightFamily> weight_family_from_name(std::string_view name) {
    for (WeightFamily w :
         {WeightFamily::identity, WeightFamily::power, WeightFamily::reciprocal,
          WeightFamily::constant, WeightFamily::convexMix})
        if (name == family_name(w)) return w;
    return std::nullopt;
}

namespace detail {

inline bool is_nonneg_integer(double p) {
    return p >= 0.0 && std::abs(p - std::round(p)) <= 1e-9;
}

}  // namespace detail

struct FunctionSpec {
    FunctionFamily family = FunctionFamily::constant;
    std::vector<double> params{1.0};
    Interval domain{0.0, 1.0};

    friend bool operator==(const FunctionSpec&, const FunctionSpec&) = default;

    // Raw family formula; domain handling lives in eval_function.
    double raw_eval(double x) const {
        switch (family) {
            case FunctionFamily::exponential:
                return params[0] * std::exp(params[1] * x);
            case FunctionFamily::power:
                return std::pow(x, params[0]);
            case FunctionFamily::expOfSquare: {
                double u = std::log(x);
                return std::exp(u * u);
            }
            case FunctionFamily::constant:
                return params[0];
            case FunctionFamily::affineExp:
                return std::exp(params[0] * x + params[1]);
            case FunctionFamily::tabulated: {
                std::size_t n = params.size();
                double step = domain.length() / static_cast<double>(n - 1);
                double pos = (x - domain.lo) / step;
                auto i = static_cast<std::size_t>(pos);
                if (i >= n - 1) return params[n - 1];
                double frac = pos - static_cast<double>(i);
                return params[i] + frac * (params[i + 1] - params[i]);
            }
        }
        return 0.0;
    }
};

// Evaluable view of a positive function: what the class predicates actually
// consume. FunctionSpec converts implicitly; composed views (log f, products)
// are built in place.
struct FunctionView {
    std::function<double(double)> eval;
    Interval domain;

    FunctionView(std::function<double(double)> e, Interval d)
        : eval(std::move(e)), domain(d) {}
    FunctionView(const FunctionSpec& spec);  // defined after eval_function

    double operator()(double x) const { return eval(x); }
};

// Domain membership tolerance for eval_function.
inline constexpr double kDomainTol = 1e-12;

inline double eval_function(const FunctionSpec& spec, double x) {
    if (!spec.domain.contains(x, kDomainTol))
        throw OutOfDomainError("evaluation point " + std::to_string(x) +
                               " outside domain [" + std::to_string(spec.domain.lo) +
                               ", " + std::to_string(spec.domain.hi) + "]");
    return spec.raw_eval(spec.domain.clamp(x));
}

inline FunctionView::FunctionView(const FunctionSpec& spec)
    : eval([spec](double x) { return eval_function(spec, x); }),
      domain(spec.domain) {}

// Pointwise logarithm of a positive spec, as a view over the same domain.
inline FunctionView log_compose(const FunctionSpec& spec) {
    return FunctionView([spec](double x) { return std::log(eval_function(spec, x)); },
                        spec.domain);
}

// The same spec viewed on a subinterval of its domain: evaluation is
// unchanged, but grid-based checks sample only inside iv.
inline FunctionView restrict_to(const FunctionSpec& spec, Interval iv) {
    if (!spec.domain.contains(iv.lo, kDomainTol) ||
        !spec.domain.contains(iv.hi, kDomainTol))
        throw DomainError("restriction interval leaves the function domain");
    return FunctionView([spec](double x) { return eval_function(spec, x); }, iv);
}

inline FunctionSpec make_function(FunctionFamily family, std::vector<double> params,
                                  Interval domain) {
    switch (family) {
        case FunctionFamily::exponential:
            if (params.size() != 2)
                throw InvalidParamsError("exponential needs params {c, k}");
            if (!(params[0] > 0.0))
                throw InvalidParamsError("exponential needs c > 0");
            break;
        case FunctionFamily::power:
            if (params.size() != 1)
                throw InvalidParamsError("power needs params {p}");
            if (domain.lo <= 0.0 && !detail::is_nonneg_integer(params[0]))
                throw InvalidParamsError(
                    "power on a non-positive domain needs a nonnegative integer exponent");
            break;
        case FunctionFamily::expOfSquare:
            if (!params.empty())
                throw InvalidParamsError("expOfSquare takes no params");
            if (domain.lo <= 0.0)
                throw InvalidParamsError("expOfSquare needs a strictly positive domain");
            break;
        case FunctionFamily::constant:
            if (params.size() != 1)
                throw InvalidParamsError("constant needs params {c}");
            if (!(params[0] > 0.0))
                throw InvalidParamsError("constant needs c > 0");
            break;
        case FunctionFamily::affineExp:
            if (params.size() != 2)
                throw InvalidParamsError("affineExp needs params {a, b}");
            break;
        case FunctionFamily::tabulated:
            if (params.size() < 2)
                throw InvalidParamsError("tabulated needs at least two samples");
            // The interpolant passes through every sample, so the samples are
            // grid values of f; a zero could still dodge the midpoint screen
            // below by falling between its points.
            for (double s : params)
                if (!(s > 0.0))
                    throw NonPositiveError("tabulated sample " + std::to_string(s) +
                                           " is not strictly positive");
            break;
    }
    for (double p : params)
        if (!std::isfinite(p)) throw InvalidParamsError("non-finite parameter");

    FunctionSpec spec{family, std::move(params), domain};

    // Positivity screen on a 256-point midpoint grid. The open grid avoids
    // manufacturing rejections from isolated boundary zeros (x^2 at 0) while
    // still catching sign violations and non-finite values in the interior.
    constexpr int kGrid = 256;
    for (int i = 0; i < kGrid; ++i) {
        double x = domain.lo +
                   domain.length() * (static_cast<double>(i) + 0.5) / kGrid;
        double v = spec.raw_eval(x);
        if (!std::isfinite(v) || v <= 0.0)
            throw NonPositiveError("grid sample f(" + std::to_string(x) + ") = " +
                                   std::to_string(v) + " is not a positive finite value");
    }
    return spec;
}

// Default clip for weight evaluation near the singular endpoint of 1/t; it
// also bounds the checked domain [clipEpsilon, 1] of the superadditivity
// property for every family.
inline constexpr double kDefaultClipEpsilon = 1e-3;

struct WeightSpec {
    WeightFamily family = WeightFamily::identity;
    std::vector<double> params{};
    Interval domainJ{0.0, 1.0};
    double clipEpsilon = kDefaultClipEpsilon;

    // Flags are nullopt until annotate_weight_properties stamps a copy.
    std::optional<bool> superadditiveFlag;
    std::optional<bool> symmetricHalfFlag;
    std::optional<bool> partitionUnityFlag;

    friend bool operator==(const WeightSpec&, const WeightSpec&) = default;

    bool singular() const { return family == WeightFamily::reciprocal; }

    // t-range the checkers and theorem integrals use: the open-interval
    // families never touch their singular endpoint.
    Interval t_interval() const {
        return singular() ? Interval{clipEpsilon, 1.0 - clipEpsilon} : Interval{0.0, 1.0};
    }

    double raw_eval(double t) const {
        switch (family) {
            case WeightFamily::identity: return t;
            case WeightFamily::power: return std::pow(t, params[0]);
            case WeightFamily::reciprocal: return 1.0 / std::max(t, clipEpsilon);
            case WeightFamily::constant: return params[0];
            case WeightFamily::convexMix:
                return params[0] * t + (1.0 - params[0]) * std::pow(t, params[1]);
        }
        return 0.0;
    }
};

inline double eval_weight(const WeightSpec& spec, double t) {
    if (!spec.domainJ.contains(t, kDomainTol))
        throw OutOfDomainError("weight argument " + std::to_string(t) +
                               " outside J");
    return spec.raw_eval(spec.domainJ.clamp(t));
}

inline WeightSpec make_weight(WeightFamily family, std::vector<double> params = {},
                              double clipEpsilon = kDefaultClipEpsilon,
                              Interval domainJ = Interval{0.0, 1.0}) {
    if (!(domainJ.lo <= 0.0 && domainJ.hi >= 1.0))
        throw InvalidParamsError("weight domain J must contain [0, 1]");
    if (!(clipEpsilon > 0.0 && clipEpsilon < 0.5))
        throw InvalidParamsError("clipEpsilon must lie in (0, 0.5)");
    switch (family) {
        case WeightFamily::identity:
            if (!params.empty()) throw InvalidParamsError("identity takes no params");
            break;
        case WeightFamily::power:
            if (params.size() != 1 || !(params[0] > 0.0))
                throw InvalidParamsError("power weight needs params {s} with s > 0");
            break;
        case WeightFamily::reciprocal:
            if (!params.empty()) throw InvalidParamsError("reciprocal takes no params");
            break;
        case WeightFamily::constant:
            if (params.size() != 1 || !(params[0] > 0.0))
                throw InvalidParamsError("constant weight needs params {kappa} with kappa > 0");
            break;
        case WeightFamily::convexMix:
            if (params.size() != 2)
                throw InvalidParamsError("convexMix needs params {lambda, s}");
            if (!(params[0] >= 0.0 && params[0] <= 1.0))
                throw InvalidParamsError("convexMix needs lambda in [0, 1]");
            if (!(params[1] > 0.0))
                throw InvalidParamsError("convexMix needs s > 0");
            break;
    }
    for (double p : params)
        if (!std::isfinite(p)) throw InvalidParamsError("non-finite parameter");
    return WeightSpec{family, std::move(params), domainJ, clipEpsilon, {}, {}, {}};
}

enum class Monotonicity { increasing, decreasing, nonMonotone };

inline const char* monotonicity_name(Monotonicity m) {
    switch (m) {
        case Monotonicity::increasing: return "increasing";
        case Monotonicity::decreasing: return "decreasing";
        case Monotonicity::nonMonotone: return "nonMonotone";
    }
    return "?";
}

// Verdict from consecutive differences on a uniform grid. Ties within 1e-12
// are monotone-compatible, so a constant function reports increasing.
inline Monotonicity check_monotone(const FunctionSpec& spec, int gridN = 1025) {
    if (gridN < 3) throw InvalidParamsError("check_monotone needs gridN >= 3");
    constexpr double tieTol = 1e-12;
    bool up = false, down = false;
    double prev = eval_function(spec, spec.domain.lo);
    for (int i = 1; i < gridN; ++i) {
        double x = spec.domain.lo +
                   spec.domain.length() * static_cast<double>(i) / (gridN - 1);
        double v = eval_function(spec, x);
        double d = v - prev;
        if (d > tieTol) up = true;
        if (d < -tieTol) down = true;
        prev = v;
    }
    if (up && down) return Monotonicity::nonMonotone;
    if (down) return Monotonicity::decreasing;
    return Monotonicity::increasing;
}

}  // namespace ineqforge
