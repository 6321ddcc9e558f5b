#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "schedlab/report.hpp"
#include "schedlab/workload.hpp"

namespace schedlab {

// One value the repro command checks, frozen from the published reference
// tables for this algorithm family. `reference` is the printed value;
// `derived` is what the rules actually produce. They differ only for the
// three known misprints, in which case `note` explains and the repro
// verdict is FLAG instead of PASS/FAIL.
struct ReferenceCell {
    std::string name;
    std::string reference;
    std::string derived;
    std::string note;

    bool annotated() const { return reference != derived; }
};

// A bundled five-process workload together with everything the reference
// publication printed for it.
struct BuiltinCase {
    std::string name;  // "1", "2", "3" or "illustration"
    Workload workload;
    Tick ots = 4;
    std::vector<ReferenceCell> cells;
};

const std::vector<BuiltinCase>& builtin_cases();

// Throws std::invalid_argument for an unknown name.
const BuiltinCase& builtin_case(std::string_view name);

// Annotations for the cells whose printed reference value is a known
// misprint, for the given bundled case.
std::vector<DiscrepancyNote> case_discrepancies(const BuiltinCase& c);

// The discrepancy notes for `w` if it matches a bundled case's process
// list (ids ignored, bursts and priorities in order), else empty.
std::vector<DiscrepancyNote> known_discrepancies(const Workload& w);

// Formats a value list the way reference cells store them: "[5,4,5,4,4]".
std::string format_tick_list(const std::vector<Tick>& v);

} // namespace schedlab
