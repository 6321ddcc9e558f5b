#pragma once

#include <string>
#include <vector>

#include "schedlab/engine.hpp"
#include "schedlab/metrics.hpp"
#include "schedlab/policies.hpp"
#include "schedlab/workload.hpp"

namespace schedlab {

// A cell where the bundled reference tables disagree with what the rules
// actually produce. `reference` is the printed value, `computed` ours.
struct DiscrepancyNote {
    std::string cell;
    std::string reference;
    std::string computed;
    std::string note;

    friend bool operator==(const DiscrepancyNote&, const DiscrepancyNote&) = default;
};

struct PolicyRun {
    PolicyConfig policy;
    ExecutionTrace trace;
    ScheduleMetrics metrics;
};

// Side-by-side metrics for several policies run on one workload.
struct ComparisonReport {
    Workload workload;
    std::vector<PolicyRun> runs;
    std::vector<DiscrepancyNote> annotations;
};

// Runs every policy on the same workload (runs share nothing and may
// execute concurrently) and attaches the known reference-table
// discrepancies when the workload is one of the bundled cases.
ComparisonReport build_comparison(const Workload& w,
                                  const std::vector<PolicyConfig>& policies);

// One segment per slice in trace order, space separated: "P1[0–5] P2[5–7]".
// Interval notation keeps the output diff-stable for long traces.
std::string render_gantt_text(const ExecutionTrace& t);

// SVG gantt layout constants (integer pixel arithmetic, no floats).
inline constexpr int kSvgPixelsPerTick = 10;
inline constexpr int kSvgMarginLeft = 70;
inline constexpr int kSvgMarginRight = 20;
inline constexpr int kSvgMarginTop = 30;
inline constexpr int kSvgMarginBottom = 34;
inline constexpr int kSvgLanePitch = 30;
inline constexpr int kSvgBarHeight = 22;

// Standalone to-scale SVG: one rect per slice, x proportional to ticks,
// one lane per process (ordered by first appearance). Byte-identical for
// identical traces.
std::string render_gantt_svg(const ExecutionTrace& t);

// Comparison table with the columns algorithm, avg_turnaround,
// avg_waiting, context_switches, one row per run, plus annotations.
std::string comparison_text(const ComparisonReport& r);
std::string comparison_csv(const ComparisonReport& r);
std::string comparison_json(const ComparisonReport& r);

} // namespace schedlab
