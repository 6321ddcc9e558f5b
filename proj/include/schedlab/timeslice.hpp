#pragma once

#include <span>
#include <string>
#include <vector>

#include "schedlab/workload.hpp"

namespace schedlab {

// Per-process intelligent time slice breakdown:
//   its = ots + pc + sc + csc, and its >= 1.
// When csc != 0 the slice collapses to the process's full burst.
struct TimeSliceBreakdown {
    Tick ots = 0;
    Tick pc = 0;   // 0 or 1
    Tick sc = 0;   // 0 or 1
    Tick csc = 0;  // may be negative
    Tick its = 0;

    friend bool operator==(const TimeSliceBreakdown&, const TimeSliceBreakdown&) = default;
};

// PC: 1 for every process whose priority number equals the minimum of the
// list (lower number = higher priority, ties all get 1), else 0.
std::vector<Tick> priority_components(std::span<const Tick> priorities);

// SC: 1 when a process's burst is smaller than its predecessor's, else 0.
// The first process has no predecessor and gets 0.
std::vector<Tick> shortness_components(std::span<const Tick> bursts);

// CSC: with r = burst - (ots + pc + sc), returns r when r < ots (r may be
// zero or negative), else 0. A nonzero CSC makes ITS equal the burst, so a
// nearly finished process runs to completion instead of leaving a sliver.
Tick context_switch_component(Tick burst, Tick ots, Tick pc, Tick sc);

// Composes the three components per process, in workload order.
std::vector<TimeSliceBreakdown> compute_its(const Workload& w, Tick ots);

// Breakdown table with columns id,burst,priority,ots,pc,sc,csc,its.
std::string breakdown_table_csv(const Workload& w,
                                const std::vector<TimeSliceBreakdown>& b);
std::string breakdown_table_json(const Workload& w,
                                 const std::vector<TimeSliceBreakdown>& b);
std::string breakdown_table_text(const Workload& w,
                                 const std::vector<TimeSliceBreakdown>& b);

} // namespace schedlab
