#pragma once

#include <string>
#include <vector>

#include "schedlab/engine.hpp"
#include "schedlab/workload.hpp"

namespace schedlab {

struct ProcessMetrics {
    std::string id;
    Tick completion = 0;
    Tick turnaround = 0;  // completion - arrival, arrival is always 0
    Tick waiting = 0;     // turnaround - burst
    Tick response = 0;    // first slice start - arrival

    friend bool operator==(const ProcessMetrics&, const ProcessMetrics&) = default;
};

// Per-process rows plus exact totals. Averages are exact rationals
// (total / count) rendered half-up to one decimal; trailing ".0" is
// dropped, so 155/5 renders as "31" and 232/5 as "46.4".
struct ScheduleMetrics {
    std::vector<ProcessMetrics> per_process;
    Tick total_turnaround = 0;
    Tick total_waiting = 0;
    Tick context_switches = 0;

    std::string avg_turnaround() const;
    std::string avg_waiting() const;
};

// Renders sum/count half-up to one decimal as described above.
// count must be >= 1, sum >= 0.
std::string render_average(Tick sum, Tick count);

// Completion = end of the process's last slice; TAT, WT, response and
// averages as defined above; context switches counted via
// count_context_switches. Verifies the trace against the workload first
// (every process present, per-process slice lengths sum to its burst,
// slices contiguous from 0) and throws integrity_error on mismatch.
ScheduleMetrics compute_metrics(const ExecutionTrace& trace, const Workload& w);

// Boundaries between consecutive slices: slices - 1. The final completion
// is not a switch. Throws std::invalid_argument on an empty trace.
Tick count_context_switches(const ExecutionTrace& trace);

// {"per_process":[...],"avg_turnaround":"...","avg_waiting":"...",
//  "context_switches":N} with averages as rendered strings.
std::string metrics_json(const ScheduleMetrics& m);
std::string metrics_csv(const ScheduleMetrics& m);
std::string metrics_text(const ScheduleMetrics& m);

} // namespace schedlab
