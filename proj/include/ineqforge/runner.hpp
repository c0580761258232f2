#pragma once

#include <iostream>
#include <string>
#include <vector>

#include "ineqforge/classes.hpp"
#include "ineqforge/config.hpp"
#include "ineqforge/errors.hpp"
#include "ineqforge/report_io.hpp"
#include "ineqforge/search.hpp"
#include "ineqforge/theorems.hpp"

namespace ineqforge {

// Exit code contract: 0 all holds, 2 any violated, 3 hypothesis failures
// only, 1 (from the caller) for IO/parse/validation errors.
inline constexpr int kExitHolds = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitViolated = 2;
inline constexpr int kExitHypothesisFailed = 3;

namespace detail {

inline int exit_code_for_entries(const std::vector<ReportEntry>& entries) {
    bool anyViolated = false, anyHypFailed = false;
    for (const ReportEntry& e : entries) {
        if (e.theorem) {
            if (e.theorem->verdict == ReportVerdict::violated) anyViolated = true;
            if (e.theorem->verdict == ReportVerdict::hypothesisFailed)
                anyHypFailed = true;
        } else if (e.classCheck) {
            if (e.classCheck->status == GridStatus::violated) anyViolated = true;
        }
    }
    if (anyViolated) return kExitViolated;
    if (anyHypFailed) return kExitHypothesisFailed;
    return kExitHolds;
}

}  // namespace detail

inline ClassVerdict run_class_check(const RunConfig& c, ClassTarget target) {
    switch (target) {
        case ClassTarget::hConvex: return check_h_convex(*c.f, *c.h, c.grid);
        case ClassTarget::hLogConvex: return check_h_log_convex(*c.f, *c.h, c.grid);
        case ClassTarget::hGeomConvex: return check_h_geom_convex(*c.f, *c.h, c.grid);
        case ClassTarget::hMultiConvex: return check_h_multi_convex(*c.f, *c.h, c.grid);
        case ClassTarget::sLogConvexFirst:
            return check_s_log_convex_first(*c.f, *c.s, c.grid);
        case ClassTarget::sLogConvexSecond:
            return check_s_log_convex_second(*c.f, *c.s, c.grid);
        case ClassTarget::geomConvex: return check_geom_convex(*c.f, c.grid);
        case ClassTarget::sGeomConvex: return check_s_geom_convex(*c.f, *c.s, c.grid);
        case ClassTarget::superadditive: return check_superadditive(*c.h, c.grid);
        case ClassTarget::symmetricHalf: return check_symmetric_half(*c.h, c.grid);
        case ClassTarget::partitionUnity: return check_partition_unity(*c.h, c.grid);
        case ClassTarget::monotone: return monotone_verdict(*c.f);
    }
    throw InvalidParamsError("unknown class target");
}

// Executes one validated config end to end and writes its report; returns
// the process exit code. Library errors are left to the caller, which maps
// them to exit 1 with a diagnostic.
inline int run(const RunConfig& c, std::ostream& out = std::cout) {
    switch (c.command) {
        case Command::checkClass: {
            ClassTarget target = *class_target_from_name(c.target);
            std::vector<ReportEntry> entries{
                entry_for(c.target, run_class_check(c, target))};
            emit_report(entries, c.format, c.output, out);
            return detail::exit_code_for_entries(entries);
        }
        case Command::checkTheorem: {
            std::vector<ReportEntry> entries;
            if (c.target == theorem_name(TheoremId::corollaryReciprocal)) {
                auto [product, square] =
                    check_corollary_reciprocal(*c.f, c.iv, c.tol, c.grid);
                entries.push_back(entry_for(std::move(product)));
                entries.push_back(entry_for(std::move(square)));
            } else {
                entries.push_back(
                    entry_for(evaluate_theorem(candidate_from_config(c), c.tol, c.grid)));
            }
            emit_report(entries, c.format, c.output, out);
            return detail::exit_code_for_entries(entries);
        }
        case Command::search: {
            SearchResult result = search_violation(*c.searchSpace);
            InequalityReport replayReport = replay(result);
            std::string content = c.format == OutputFormat::json
                                      ? render_search_json(result, replayReport)
                                      : render_search_csv(result, replayReport);
            write_report_text(content, c.output, out);
            std::vector<ReportEntry> entries{entry_for(replayReport)};
            return detail::exit_code_for_entries(entries);
        }
        case Command::sweep: {
            CandidateConfig cc = candidate_from_config(c);
            const SweepRequest& req = *c.sweepRequest;
            std::vector<SweepRow> rows =
                sweep_margin(cc, req.axis, req.range, req.points, c.tol, c.grid);
            std::vector<ReportEntry> entries;
            entries.reserve(rows.size());
            for (SweepRow& row : rows) {
                ReportEntry e = entry_for(std::move(row.report));
                e.axisValue = row.value;
                entries.push_back(std::move(e));
            }
            emit_report(entries, c.format, c.output, out);
            return detail::exit_code_for_entries(entries);
        }
    }
    throw InvalidParamsError("unknown command");
}

}  // namespace ineqforge
