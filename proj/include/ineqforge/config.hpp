#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ineqforge/classes.hpp"
#include "ineqforge/errors.hpp"
#include "ineqforge/function.hpp"
#include "ineqforge/interval.hpp"
#include "ineqforge/quadrature.hpp"
#include "ineqforge/search.hpp"
#include "ineqforge/theorems.hpp"

namespace ineqforge {

enum class Command { checkClass, checkTheorem, search, sweep };

inline const char* command_name(Command c) {
    switch (c) {
        case Command::checkClass: return "checkClass";
        case Command::checkTheorem: return "checkTheorem";
        case Command::search: return "search";
        case Command::sweep: return "sweep";
    }
    return "?";
}

inline std::optional<Command> command_from_name(std::string_view name) {
    for (Command c : {Command::checkClass, Command::checkTheorem, Command::search,
                      Command::sweep})
        if (name == command_name(c)) return c;
    return std::nullopt;
}

enum class OutputFormat { json, csv };

inline const char* format_name(OutputFormat f) {
    return f == OutputFormat::json ? "json" : "csv";
}

inline std::optional<OutputFormat> format_from_name(std::string_view name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    return std::nullopt;
}

// Named membership checks runnable through the CLI.
enum class ClassTarget {
    hConvex,
    hLogConvex,
    hGeomConvex,
    hMultiConvex,
    sLogConvexFirst,
    sLogConvexSecond,
    geomConvex,
    sGeomConvex,
    superadditive,
    symmetricHalf,
    partitionUnity,
    monotone,
};

inline const char* class_target_name(ClassTarget t) {
    switch (t) {
        case ClassTarget::hConvex: return "hConvex";
        case ClassTarget::hLogConvex: return "hLogConvex";
        case ClassTarget::hGeomConvex: return "hGeomConvex";
        case ClassTarget::hMultiConvex: return "hMultiConvex";
        case ClassTarget::sLogConvexFirst: return "sLogConvexFirst";
        case ClassTarget::sLogConvexSecond: return "sLogConvexSecond";
        case ClassTarget::geomConvex: return "geomConvex";
        case ClassTarget::sGeomConvex: return "sGeomConvex";
        case ClassTarget::superadditive: return "superadditive";
        case ClassTarget::symmetricHalf: return "symmetricHalf";
        case ClassTarget::partitionUnity: return "partitionUnity";
        case ClassTarget::monotone: return "monotone";
    }
    return "?";
}

inline std::optional<ClassTarget> class_target_from_name(std::string_view name) {
    for (ClassTarget t :
         {ClassTarget::hConvex, ClassTarget::hLogConvex, ClassTarget::hGeomConvex,
          ClassTarget::hMultiConvex, ClassTarget::sLogConvexFirst,
          ClassTarget::sLogConvexSecond, ClassTarget::geomConvex,
          ClassTarget::sGeomConvex, ClassTarget::superadditive,
          ClassTarget::symmetricHalf, ClassTarget::partitionUnity,
          ClassTarget::monotone})
        if (name == class_target_name(t)) return t;
    return std::nullopt;
}

inline bool class_needs_function(ClassTarget t) {
    switch (t) {
        case ClassTarget::superadditive:
        case ClassTarget::symmetricHalf:
        case ClassTarget::partitionUnity: return false;
        default: return true;
    }
}

inline bool class_needs_weight(ClassTarget t) {
    switch (t) {
        case ClassTarget::hConvex:
        case ClassTarget::hLogConvex:
        case ClassTarget::hGeomConvex:
        case ClassTarget::hMultiConvex:
        case ClassTarget::superadditive:
        case ClassTarget::symmetricHalf:
        case ClassTarget::partitionUnity: return true;
        default: return false;
    }
}

inline bool class_needs_s(ClassTarget t) {
    return t == ClassTarget::sLogConvexFirst || t == ClassTarget::sLogConvexSecond ||
           t == ClassTarget::sGeomConvex;
}

struct SweepRequest {
    std::string axis;
    ParamRange range;
    int points = 10;

    friend bool operator==(const SweepRequest&, const SweepRequest&) = default;
};

// One self-describing run: a single check, search, or sweep plus output
// routing. The one top-level seed feeds both the class grids and the search
// sampler so a run is reproducible from this document alone.
struct RunConfig {
    Command command = Command::checkTheorem;
    std::string target;
    std::optional<FunctionSpec> f;
    std::optional<FunctionSpec> g;
    std::optional<WeightSpec> h;
    Interval iv{0.0, 1.0};
    double alpha = 0.5;
    double p = 2.0;
    std::optional<double> s;
    double tol = kQuadTol;
    GridSpec grid;
    std::uint64_t seed = 0;
    std::string output;
    OutputFormat format = OutputFormat::json;
    std::optional<SearchSpace> searchSpace;
    std::optional<SweepRequest> sweepRequest;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

namespace detail {

using Json = nlohmann::ordered_json;

[[noreturn]] inline void bad(const std::string& field, const std::string& msg) {
    throw ValidationError(field, field + ": " + msg);
}

inline void check_keys(const Json& obj, const std::string& where,
                       std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) {
                known = true;
                break;
            }
        if (!known) bad(it.key(), "unknown key in " + where);
    }
}

inline const Json* opt_member(const Json& obj, const char* key) {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

inline double as_number(const Json& v, const std::string& field) {
    if (!v.is_number()) bad(field, "must be a number");
    return v.get<double>();
}

inline std::string as_string(const Json& v, const std::string& field) {
    if (!v.is_string()) bad(field, "must be a string");
    return v.get<std::string>();
}

inline std::vector<double> as_number_array(const Json& v, const std::string& field) {
    if (!v.is_array()) bad(field, "must be an array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (const Json& e : v) out.push_back(as_number(e, field));
    return out;
}

inline ParamRange as_range(const Json& v, const std::string& field) {
    std::vector<double> pair = as_number_array(v, field);
    if (pair.size() != 2) bad(field, "must be a [lo, hi] pair");
    ParamRange r{pair[0], pair[1]};
    try {
        validate_range(r, field.c_str());
    } catch (const InvalidParamsError& e) {
        bad(field, e.what());
    }
    return r;
}

inline FunctionSpec parse_function(const Json& v, const std::string& field,
                                   const Interval& iv) {
    if (!v.is_object()) bad(field, "must be an object {family, params}");
    check_keys(v, field, {"family", "params"});
    const Json* fam = opt_member(v, "family");
    if (!fam) bad(field, "missing family");
    std::string famName = as_string(*fam, "family");
    std::optional<FunctionFamily> family = function_family_from_name(famName);
    if (!family) bad("family", "unknown function family \"" + famName + "\"");
    std::vector<double> params;
    if (const Json* p = opt_member(v, "params")) params = as_number_array(*p, field);
    try {
        return make_function(*family, std::move(params), iv);
    } catch (const Error& e) {
        bad(field, e.what());
    }
}

inline WeightSpec parse_weight(const Json& v, const std::string& field) {
    if (!v.is_object()) bad(field, "must be an object {family, params, clipEpsilon}");
    check_keys(v, field, {"family", "params", "clipEpsilon"});
    const Json* fam = opt_member(v, "family");
    if (!fam) bad(field, "missing family");
    std::string famName = as_string(*fam, "family");
    std::optional<WeightFamily> family = weight_family_from_name(famName);
    if (!family) bad("family", "unknown weight family \"" + famName + "\"");
    std::vector<double> params;
    if (const Json* p = opt_member(v, "params")) params = as_number_array(*p, field);
    double clip = kDefaultClipEpsilon;
    if (const Json* c = opt_member(v, "clipEpsilon"))
        clip = as_number(*c, "clipEpsilon");
    try {
        return make_weight(*family, std::move(params), clip);
    } catch (const Error& e) {
        bad(field, e.what());
    }
}

inline GridSpec parse_grid(const Json& v) {
    if (!v.is_object()) bad("grid", "must be an object");
    check_keys(v, "grid",
               {"xN", "yN", "tN", "lambdaValues", "randomSamples", "slackTol"});
    GridSpec g;
    auto axis = [&](const char* key, int& slot) {
        if (const Json* n = opt_member(v, key)) {
            double d = as_number(*n, key);
            if (!(d >= 2.0) || d != static_cast<int>(d))
                bad(key, "must be an integer >= 2");
            slot = static_cast<int>(d);
        }
    };
    axis("xN", g.xN);
    axis("yN", g.yN);
    axis("tN", g.tN);
    if (const Json* l = opt_member(v, "lambdaValues")) {
        g.lambdaValues = as_number_array(*l, "lambdaValues");
        if (g.lambdaValues.empty()) bad("lambdaValues", "must be nonempty");
        for (double lam : g.lambdaValues)
            if (!(lam >= 0.0 && lam <= 1.0)) bad("lambdaValues", "entries must lie in [0, 1]");
    }
    if (const Json* r = opt_member(v, "randomSamples")) {
        double d = as_number(*r, "randomSamples");
        if (!(d >= 0.0) || d != static_cast<std::size_t>(d))
            bad("randomSamples", "must be a nonnegative integer");
        g.randomSamples = static_cast<std::size_t>(d);
    }
    if (const Json* s = opt_member(v, "slackTol")) {
        g.slackTol = as_number(*s, "slackTol");
        if (!(g.slackTol > 0.0)) bad("slackTol", "must be positive");
    }
    return g;
}

inline std::vector<FunctionSpace> parse_function_spaces(const Json& v,
                                                        const std::string& field) {
    if (!v.is_array()) bad(field, "must be an array");
    std::vector<FunctionSpace> out;
    for (const Json& e : v) {
        if (!e.is_object()) bad(field, "entries must be objects {family, params}");
        check_keys(e, field, {"family", "params"});
        const Json* fam = opt_member(e, "family");
        if (!fam) bad(field, "missing family");
        std::string famName = as_string(*fam, "family");
        std::optional<FunctionFamily> family = function_family_from_name(famName);
        if (!family) bad("family", "unknown function family \"" + famName + "\"");
        FunctionSpace fs;
        fs.family = *family;
        if (const Json* p = opt_member(e, "params")) {
            if (!p->is_array()) bad(field, "params must be an array of [lo, hi] pairs");
            for (const Json& r : *p) fs.params.push_back(as_range(r, field));
        }
        out.push_back(std::move(fs));
    }
    return out;
}

inline SearchSpace parse_search(const Json& v, TheoremId theorem, std::uint64_t seed,
                                double tol) {
    if (!v.is_object()) bad("search", "must be an object");
    check_keys(v, "search",
               {"functions", "functions2", "weights", "intervalLo", "intervalHi",
                "alphaRange", "pRange", "budget"});
    SearchSpace sp;
    sp.theorem = theorem;
    sp.seed = seed;
    sp.tol = tol;
    const Json* fns = opt_member(v, "functions");
    if (!fns) bad("search", "missing functions");
    sp.functions = parse_function_spaces(*fns, "functions");
    if (sp.functions.empty()) bad("functions", "must be nonempty");
    if (const Json* f2 = opt_member(v, "functions2"))
        sp.functions2 = parse_function_spaces(*f2, "functions2");
    if (const Json* ws = opt_member(v, "weights")) {
        if (!ws->is_array()) bad("weights", "must be an array");
        for (const Json& e : *ws) {
            if (!e.is_object()) bad("weights", "entries must be objects");
            check_keys(e, "weights", {"family", "params", "clipEpsilon"});
            const Json* fam = opt_member(e, "family");
            if (!fam) bad("weights", "missing family");
            std::string famName = as_string(*fam, "family");
            std::optional<WeightFamily> family = weight_family_from_name(famName);
            if (!family) bad("family", "unknown weight family \"" + famName + "\"");
            WeightSpace w;
            w.family = *family;
            if (const Json* p = opt_member(e, "params")) {
                if (!p->is_array()) bad("weights", "params must be [lo, hi] pairs");
                for (const Json& r : *p) w.params.push_back(as_range(r, "weights"));
            }
            if (const Json* c = opt_member(e, "clipEpsilon")) {
                w.clipEpsilon = as_number(*c, "clipEpsilon");
                if (!(w.clipEpsilon > 0.0 && w.clipEpsilon < 0.5))
                    bad("clipEpsilon", "must lie in (0, 0.5)");
            }
            sp.weights.push_back(std::move(w));
        }
    }
    if (const Json* r = opt_member(v, "intervalLo")) sp.intervalLo = as_range(*r, "intervalLo");
    if (const Json* r = opt_member(v, "intervalHi")) sp.intervalHi = as_range(*r, "intervalHi");
    if (const Json* r = opt_member(v, "alphaRange")) sp.alphaRange = as_range(*r, "alphaRange");
    if (const Json* r = opt_member(v, "pRange")) sp.pRange = as_range(*r, "pRange");
    if (const Json* b = opt_member(v, "budget")) {
        double d = as_number(*b, "budget");
        if (!(d >= 1.0) || d != static_cast<std::size_t>(d))
            bad("budget", "must be a positive integer");
        sp.budget = static_cast<std::size_t>(d);
    }
    return sp;
}

}  // namespace detail

// Assembles the single-evaluation configuration a checkTheorem or sweep run
// works on. Presence requirements (second function, weight) depend on the
// theorem; absent optional pieces get neutral defaults (identity weight,
// alpha 1/2, p 2).
inline CandidateConfig candidate_from_config(const RunConfig& c) {
    std::optional<TheoremId> th = theorem_from_name(c.target);
    if (!th) detail::bad("target", "unknown theorem \"" + c.target + "\"");
    CandidateConfig cc;
    cc.theorem = *th;
    if (!c.f) detail::bad("f", "required for theorem checks");
    cc.f = *c.f;
    cc.g = c.g;
    if (theorem_needs_second_function(*th) && !cc.g)
        detail::bad("g", "required for this theorem");
    if (*th != TheoremId::HH101 && !c.h)
        detail::bad("h", "required for this theorem");
    cc.h = c.h ? *c.h : make_weight(WeightFamily::identity);
    cc.iv = c.iv;
    if (theorem_needs_young(*th)) {
        try {
            cc.young = young_from_alpha(c.alpha);
        } catch (const Error& e) {
            detail::bad("alpha", e.what());
        }
    }
    if (theorem_needs_holder(*th)) {
        try {
            cc.holder = holder_from_p(c.p);
        } catch (const Error& e) {
            detail::bad("p", e.what());
        }
    }
    return cc;
}

inline RunConfig parse_config(const std::string& text) {
    detail::Json doc;
    try {
        doc = detail::Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object()) throw ParseError("config must be a JSON object");
    detail::check_keys(doc, "config",
                       {"command", "target", "f", "g", "h", "interval", "alpha", "p",
                        "s", "tol", "grid", "seed", "output", "format", "search",
                        "sweep"});

    RunConfig c;
    const detail::Json* cmd = detail::opt_member(doc, "command");
    if (!cmd) detail::bad("command", "required");
    std::string cmdName = detail::as_string(*cmd, "command");
    std::optional<Command> command = command_from_name(cmdName);
    if (!command) detail::bad("command", "unknown command \"" + cmdName + "\"");
    c.command = *command;

    const detail::Json* target = detail::opt_member(doc, "target");
    if (!target) detail::bad("target", "required");
    c.target = detail::as_string(*target, "target");

    if (const detail::Json* t = detail::opt_member(doc, "tol")) {
        c.tol = detail::as_number(*t, "tol");
        if (!(c.tol > 0.0)) detail::bad("tol", "must be positive");
    }
    if (const detail::Json* s = detail::opt_member(doc, "seed")) {
        if (!s->is_number_integer() && !s->is_number_unsigned())
            detail::bad("seed", "must be a nonnegative integer");
        if (s->is_number_integer() && s->get<std::int64_t>() < 0)
            detail::bad("seed", "must be a nonnegative integer");
        c.seed = s->get<std::uint64_t>();
    }
    if (const detail::Json* iv = detail::opt_member(doc, "interval")) {
        std::vector<double> pair = detail::as_number_array(*iv, "interval");
        if (pair.size() != 2) detail::bad("interval", "must be [a, b]");
        try {
            c.iv = Interval{pair[0], pair[1]};
        } catch (const Error& e) {
            detail::bad("interval", e.what());
        }
    }
    if (const detail::Json* f = detail::opt_member(doc, "f"))
        c.f = detail::parse_function(*f, "f", c.iv);
    if (const detail::Json* g = detail::opt_member(doc, "g"))
        c.g = detail::parse_function(*g, "g", c.iv);
    if (const detail::Json* h = detail::opt_member(doc, "h"))
        c.h = detail::parse_weight(*h, "h");
    if (const detail::Json* a = detail::opt_member(doc, "alpha")) {
        c.alpha = detail::as_number(*a, "alpha");
        if (!(c.alpha > 0.0 && c.alpha < 1.0)) detail::bad("alpha", "must lie in (0, 1)");
    }
    if (const detail::Json* p = detail::opt_member(doc, "p")) {
        c.p = detail::as_number(*p, "p");
        if (!(c.p > 1.0)) detail::bad("p", "must be greater than 1");
    }
    if (const detail::Json* s = detail::opt_member(doc, "s")) {
        c.s = detail::as_number(*s, "s");
        if (!(*c.s > 0.0)) detail::bad("s", "must be positive");
    }
    if (const detail::Json* g = detail::opt_member(doc, "grid")) c.grid = detail::parse_grid(*g);
    c.grid.seed = c.seed;
    if (const detail::Json* o = detail::opt_member(doc, "output"))
        c.output = detail::as_string(*o, "output");
    if (const detail::Json* fm = detail::opt_member(doc, "format")) {
        std::string fmtName = detail::as_string(*fm, "format");
        std::optional<OutputFormat> fmt = format_from_name(fmtName);
        if (!fmt) detail::bad("format", "unknown format \"" + fmtName + "\"");
        c.format = *fmt;
    }

    switch (c.command) {
        case Command::checkClass: {
            std::optional<ClassTarget> ct = class_target_from_name(c.target);
            if (!ct) detail::bad("target", "unknown class \"" + c.target + "\"");
            if (class_needs_function(*ct) && !c.f)
                detail::bad("f", "required for this class check");
            if (class_needs_weight(*ct) && !c.h)
                detail::bad("h", "required for this class check");
            if (class_needs_s(*ct)) {
                if (!c.s) detail::bad("s", "required for this class check");
                if (*ct == ClassTarget::sLogConvexFirst && !(*c.s <= 1.0))
                    detail::bad("s", "must lie in (0, 1] for this class check");
            }
            break;
        }
        case Command::checkTheorem: {
            if (!theorem_from_name(c.target))
                detail::bad("target", "unknown theorem \"" + c.target + "\"");
            if (c.target != theorem_name(TheoremId::corollaryReciprocal))
                candidate_from_config(c);
            else if (!c.f)
                detail::bad("f", "required for theorem checks");
            break;
        }
        case Command::search: {
            std::optional<TheoremId> th = theorem_from_name(c.target);
            if (!th) detail::bad("target", "unknown theorem \"" + c.target + "\"");
            if (*th == TheoremId::corollaryReciprocal)
                detail::bad("target", "corollaryReciprocal cannot be a search target");
            const detail::Json* sp = detail::opt_member(doc, "search");
            if (!sp) detail::bad("search", "required for the search command");
            c.searchSpace = detail::parse_search(*sp, *th, c.seed, c.tol);
            break;
        }
        case Command::sweep: {
            const detail::Json* sw = detail::opt_member(doc, "sweep");
            if (!sw) detail::bad("sweep", "required for the sweep command");
            if (!sw->is_object()) detail::bad("sweep", "must be an object");
            detail::check_keys(*sw, "sweep", {"axis", "range", "points"});
            SweepRequest req;
            const detail::Json* axis = detail::opt_member(*sw, "axis");
            if (!axis) detail::bad("axis", "required");
            req.axis = detail::as_string(*axis, "axis");
            const detail::Json* range = detail::opt_member(*sw, "range");
            if (!range) detail::bad("range", "required");
            req.range = detail::as_range(*range, "range");
            if (const detail::Json* pts = detail::opt_member(*sw, "points")) {
                double d = detail::as_number(*pts, "points");
                if (!(d >= 2.0) || d != static_cast<int>(d))
                    detail::bad("points", "must be an integer >= 2");
                req.points = static_cast<int>(d);
            }
            std::optional<TheoremId> th = theorem_from_name(c.target);
            if (!th) detail::bad("target", "unknown theorem \"" + c.target + "\"");
            if (*th == TheoremId::corollaryReciprocal)
                detail::bad("target", "corollaryReciprocal cannot be a sweep target");
            CandidateConfig cc = candidate_from_config(c);
            try {
                detail::axis_from_name(cc, req.axis, req.range);
            } catch (const Error& e) {
                detail::bad("axis", e.what());
            }
            c.sweepRequest = std::move(req);
            break;
        }
    }
    return c;
}

namespace detail {

inline Json function_to_json(const FunctionSpec& f) {
    Json o;
    o["family"] = family_name(f.family);
    o["params"] = f.params;
    return o;
}

inline Json weight_to_json(const WeightSpec& h) {
    Json o;
    o["family"] = family_name(h.family);
    o["params"] = h.params;
    o["clipEpsilon"] = h.clipEpsilon;
    return o;
}

inline Json ranges_to_json(const std::vector<ParamRange>& rs) {
    Json arr = Json::array();
    for (const ParamRange& r : rs) arr.push_back(Json::array({r.lo, r.hi}));
    return arr;
}

inline Json range_to_json(const ParamRange& r) { return Json::array({r.lo, r.hi}); }

}  // namespace detail

inline std::string serialize_config(const RunConfig& c) {
    detail::Json doc;
    doc["command"] = command_name(c.command);
    doc["target"] = c.target;
    doc["interval"] = detail::Json::array({c.iv.lo, c.iv.hi});
    if (c.f) doc["f"] = detail::function_to_json(*c.f);
    if (c.g) doc["g"] = detail::function_to_json(*c.g);
    if (c.h) doc["h"] = detail::weight_to_json(*c.h);
    doc["alpha"] = c.alpha;
    doc["p"] = c.p;
    if (c.s) doc["s"] = *c.s;
    doc["tol"] = c.tol;
    detail::Json grid;
    grid["xN"] = c.grid.xN;
    grid["yN"] = c.grid.yN;
    grid["tN"] = c.grid.tN;
    grid["lambdaValues"] = c.grid.lambdaValues;
    grid["randomSamples"] = c.grid.randomSamples;
    grid["slackTol"] = c.grid.slackTol;
    doc["grid"] = std::move(grid);
    doc["seed"] = c.seed;
    doc["output"] = c.output;
    doc["format"] = format_name(c.format);
    if (c.searchSpace) {
        const SearchSpace& sp = *c.searchSpace;
        detail::Json s;
        detail::Json fns = detail::Json::array();
        for (const FunctionSpace& fs : sp.functions) {
            detail::Json e;
            e["family"] = family_name(fs.family);
            e["params"] = detail::ranges_to_json(fs.params);
            fns.push_back(std::move(e));
        }
        s["functions"] = std::move(fns);
        if (!sp.functions2.empty()) {
            detail::Json fns2 = detail::Json::array();
            for (const FunctionSpace& fs : sp.functions2) {
                detail::Json e;
                e["family"] = family_name(fs.family);
                e["params"] = detail::ranges_to_json(fs.params);
                fns2.push_back(std::move(e));
            }
            s["functions2"] = std::move(fns2);
        }
        if (!sp.weights.empty()) {
            detail::Json ws = detail::Json::array();
            for (const WeightSpace& w : sp.weights) {
                detail::Json e;
                e["family"] = family_name(w.family);
                e["params"] = detail::ranges_to_json(w.params);
                e["clipEpsilon"] = w.clipEpsilon;
                ws.push_back(std::move(e));
            }
            s["weights"] = std::move(ws);
        }
        s["intervalLo"] = detail::range_to_json(sp.intervalLo);
        s["intervalHi"] = detail::range_to_json(sp.intervalHi);
        s["alphaRange"] = detail::range_to_json(sp.alphaRange);
        s["pRange"] = detail::range_to_json(sp.pRange);
        s["budget"] = sp.budget;
        doc["search"] = std::move(s);
    }
    if (c.sweepRequest) {
        detail::Json s;
        s["axis"] = c.sweepRequest->axis;
        s["range"] = detail::range_to_json(c.sweepRequest->range);
        s["points"] = c.sweepRequest->points;
        doc["sweep"] = std::move(s);
    }
    return doc.dump(2) + "\n";
}

}  // namespace ineqforge
