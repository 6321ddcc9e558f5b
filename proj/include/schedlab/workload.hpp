#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace schedlab {

using Tick = long long;

// One process as submitted to the scheduler. Lower priority number means
// higher priority. All processes arrive at tick 0.
struct ProcessSpec {
    std::string id;
    Tick burst = 0;
    Tick priority = 0;

    friend bool operator==(const ProcessSpec&, const ProcessSpec&) = default;
};

// Ordered set of processes. The order is the submission/queue order and is
// significant: shortness components and round iteration both follow it.
struct Workload {
    std::vector<ProcessSpec> processes;

    friend bool operator==(const Workload&, const Workload&) = default;
};

// Inclusive integer interval, e.g. bursts drawn from [lo, hi].
struct IntRange {
    Tick lo = 1;
    Tick hi = 1;
};

enum class WorkloadFormat { csv, json };

// Throws validation_error if any ProcessSpec invariant is broken
// (empty workload, burst < 1, priority < 1, duplicate or malformed id).
void validate_workload(const Workload& w);

// Decodes `text` as CSV (columns id,burst,priority; header optional) or as
// JSON ({"processes":[{"id":...,"burst":...,"priority":...}]}). Row order is
// preserved. Throws parse_error (with line number for CSV) or
// validation_error.
Workload parse_workload(std::string_view text, WorkloadFormat format);

// Inverse of parse_workload: parse(serialize(w)) == w for valid workloads.
std::string serialize_workload(const Workload& w, WorkloadFormat format);

// Seeded deterministic generator: ids P1..Pn, bursts and priorities drawn
// uniformly from the given ranges. A pure function of its arguments.
// Throws std::invalid_argument on n < 1 or an empty/invalid range.
Workload generate_workload(int n, IntRange burst_range, IntRange priority_range,
                           std::uint64_t seed);

} // namespace schedlab
