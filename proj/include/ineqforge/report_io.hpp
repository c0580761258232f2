#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ineqforge/classes.hpp"
#include "ineqforge/config.hpp"
#include "ineqforge/errors.hpp"
#include "ineqforge/search.hpp"
#include "ineqforge/theorems.hpp"

namespace ineqforge {

// One row of a report: either a theorem evaluation or a class membership
// verdict, optionally tagged with the sweep-axis value that produced it.
struct ReportEntry {
    std::string id;
    std::optional<InequalityReport> theorem;
    std::optional<ClassVerdict> classCheck;
    std::optional<double> axisValue;
};

inline ReportEntry entry_for(InequalityReport r) {
    ReportEntry e;
    e.id = theorem_name(r.theorem);
    if (r.variant) e.id += "/" + *r.variant;
    e.theorem = std::move(r);
    return e;
}

inline ReportEntry entry_for(const std::string& id, ClassVerdict v) {
    ReportEntry e;
    e.id = id;
    e.classCheck = std::move(v);
    return e;
}

namespace detail {

// All numeric report text uses 9 significant digits.
inline std::string fmt9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

inline Json witness_to_json(const Witness& w) {
    Json o;
    o["x"] = w.x;
    o["y"] = w.y;
    o["t"] = w.t;
    o["lambda"] = w.lambda;
    o["lhs"] = w.lhs;
    o["rhs"] = w.rhs;
    return o;
}

inline Json grid_to_json(const GridSpec& g) {
    Json o;
    o["xN"] = g.xN;
    o["yN"] = g.yN;
    o["tN"] = g.tN;
    o["lambdaValues"] = g.lambdaValues;
    o["randomSamples"] = g.randomSamples;
    o["seed"] = g.seed;
    o["slackTol"] = g.slackTol;
    return o;
}

inline Json class_verdict_to_json(const ClassVerdict& v) {
    Json o;
    o["verdict"] = grid_status_name(v.status);
    o["maxViolation"] = v.maxViolation;  // non-finite renders as null
    if (v.witness) o["witness"] = witness_to_json(*v.witness);
    o["grid"] = grid_to_json(v.grid);
    return o;
}

inline Json theorem_report_to_json(const InequalityReport& r) {
    Json o;
    o["id"] = theorem_name(r.theorem);
    if (r.variant) o["variant"] = *r.variant;
    o["verdict"] = verdict_name(r.verdict);
    o["lhs"] = r.lhs;
    o["rhs"] = r.rhs;
    o["margin"] = r.margin;
    o["quadError"] = r.quadError;
    if (r.productAtLeastOne) o["productAtLeastOne"] = *r.productAtLeastOne;
    Json hyp = Json::object();
    for (const auto& [name, verdict] : r.hypothesisResults)
        hyp[name] = class_verdict_to_json(verdict);
    o["hypotheses"] = std::move(hyp);
    return o;
}

inline Json entry_to_json(const ReportEntry& e) {
    Json o;
    if (e.axisValue) o["axisValue"] = *e.axisValue;
    o["kind"] = e.theorem ? "theorem" : "class";
    if (e.theorem) {
        Json body = theorem_report_to_json(*e.theorem);
        for (auto it = body.begin(); it != body.end(); ++it) o[it.key()] = it.value();
    } else {
        o["id"] = e.id;
        Json body = class_verdict_to_json(*e.classCheck);
        for (auto it = body.begin(); it != body.end(); ++it) o[it.key()] = it.value();
    }
    return o;
}

inline std::string hypothesis_summary(const InequalityReport& r) {
    std::string out;
    for (const auto& [name, verdict] : r.hypothesisResults) {
        if (!out.empty()) out += ';';
        out += name;
        out += '=';
        out += grid_status_name(verdict.status);
    }
    return out;
}

inline Json candidate_to_json(const CandidateConfig& c) {
    Json o;
    o["theorem"] = theorem_name(c.theorem);
    o["f"] = function_to_json(c.f);
    if (c.g) o["g"] = function_to_json(*c.g);
    o["h"] = weight_to_json(c.h);
    o["interval"] = Json::array({c.iv.lo, c.iv.hi});
    if (c.young) o["alpha"] = c.young->alpha;
    if (c.holder) o["p"] = c.holder->p;
    return o;
}

}  // namespace detail

inline std::string render_reports_json(const std::vector<ReportEntry>& entries) {
    detail::Json arr = detail::Json::array();
    for (const ReportEntry& e : entries) arr.push_back(detail::entry_to_json(e));
    return arr.dump(2) + "\n";
}

inline std::string render_reports_csv(const std::vector<ReportEntry>& entries) {
    bool axis = false;
    for (const ReportEntry& e : entries) axis = axis || e.axisValue.has_value();
    std::string out;
    if (axis) out += "axisValue,";
    out += "id,verdict,lhs,rhs,margin,quadError,hypothesisSummary\n";
    for (const ReportEntry& e : entries) {
        if (axis) out += (e.axisValue ? detail::fmt9(*e.axisValue) : "") + ",";
        out += e.id;
        out += ',';
        if (e.theorem) {
            const InequalityReport& r = *e.theorem;
            out += verdict_name(r.verdict);
            out += ',' + detail::fmt9(r.lhs) + ',' + detail::fmt9(r.rhs) + ',' +
                   detail::fmt9(r.margin) + ',' + detail::fmt9(r.quadError) + ',' +
                   detail::hypothesis_summary(r);
        } else {
            const ClassVerdict& v = *e.classCheck;
            out += grid_status_name(v.status);
            out += ',';
            out += v.witness ? detail::fmt9(v.witness->lhs) : "";
            out += ',';
            out += v.witness ? detail::fmt9(v.witness->rhs) : "";
            // A class margin mirrors the theorem convention: how far the
            // worst sample is from violating, negated excess.
            out += ',' + detail::fmt9(-v.maxViolation) + ",0,";
        }
        out += '\n';
    }
    return out;
}

inline detail::Json search_summary_json(const SearchResult& r) {
    detail::Json o;
    o["kind"] = "search";
    o["id"] = theorem_name(r.theorem);
    o["bestMargin"] = r.bestMargin;
    o["feasibleFound"] = r.feasibleFound;
    o["oracleEvaluations"] = r.oracleEvaluations;
    o["budget"] = r.budget;
    o["seed"] = r.seed;
    o["tol"] = r.tol;
    if (r.bestConfig) o["bestConfig"] = detail::candidate_to_json(*r.bestConfig);
    detail::Json trace = detail::Json::array();
    for (const TracePoint& tp : r.trace) {
        detail::Json t;
        t["evaluation"] = tp.evaluation;
        t["margin"] = tp.margin;
        trace.push_back(std::move(t));
    }
    o["trace"] = std::move(trace);
    return o;
}

// Search output: the summary (sampling trace, best configuration) followed
// by the full-resolution replay of the best configuration.
inline std::string render_search_json(const SearchResult& r,
                                      const InequalityReport& replayReport) {
    detail::Json arr = detail::Json::array();
    arr.push_back(search_summary_json(r));
    detail::Json rep = detail::entry_to_json(entry_for(replayReport));
    arr.push_back(std::move(rep));
    return arr.dump(2) + "\n";
}

inline std::string render_search_csv(const SearchResult&,
                                     const InequalityReport& replayReport) {
    return render_reports_csv({entry_for(replayReport)});
}

// Atomic file write: content lands under a temporary name and is renamed
// into place, so a crashed run never leaves a truncated report.
inline void write_text_file(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open " + tmp + " for writing");
        out << content;
        out.flush();
        if (!out) throw IoError("failed writing " + tmp);
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) throw IoError("failed moving " + tmp + " to " + path + ": " + ec.message());
}

inline void write_report_text(const std::string& content, const std::string& path,
                              std::ostream& fallback = std::cout) {
    if (path.empty()) {
        fallback << content;
        fallback.flush();
        return;
    }
    write_text_file(path, content);
}

inline void emit_report(const std::vector<ReportEntry>& entries, OutputFormat format,
                        const std::string& path, std::ostream& fallback = std::cout) {
    if (entries.empty()) throw EmptyReportError("no reports to emit");
    std::string content = format == OutputFormat::json ? render_reports_json(entries)
                                                       : render_reports_csv(entries);
    write_report_text(content, path, fallback);
}

}  // namespace ineqforge
