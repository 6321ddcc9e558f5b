#pragma once

#include <string>
#include <vector>

#include "schedlab/policies.hpp"
#include "schedlab/timeslice.hpp"
#include "schedlab/workload.hpp"

namespace schedlab {

// One visit of a process to the CPU. `round` is the global 1-based round
// index; end - start is the quantum granted for the visit.
struct Slice {
    std::string pid;
    Tick start = 0;
    Tick end = 0;
    int round = 0;

    friend bool operator==(const Slice&, const Slice&) = default;
};

// The Gantt chart as data. Slices tile [0, sum of bursts) with no gaps
// (all processes arrive at tick 0, so the CPU is never idle). `breakdowns`
// is the ITS table the run used; empty for classic RR, which ignores ITS.
struct ExecutionTrace {
    std::vector<Slice> slices;
    PolicyConfig policy;
    std::vector<TimeSliceBreakdown> breakdowns;
};

// Round-based execution: each round visits every unfinished process once,
// in workload order, for its policy-granted quantum (clamped for PBDRR).
// Consecutive same-process visits are never merged; a lone remaining
// process still receives one growing quantum per round.
ExecutionTrace simulate(const Workload& w, const PolicyConfig& policy);

// Deliberately literal transcription of the published pseudo-code, kept
// structurally independent of simulate() (its own inline ITS, quantum and
// clamp arithmetic). Differential oracle: equal to simulate() on every
// input, for all three policies.
ExecutionTrace naive_reference_simulate(const Workload& w, const PolicyConfig& policy);

// Serialization: rows/objects of {pid, start, end, round} in trace order.
std::string trace_csv(const ExecutionTrace& t);
std::string trace_json(const ExecutionTrace& t);

} // namespace schedlab
