#include "schedlab/cases.hpp"

#include <stdexcept>

namespace schedlab {

std::string format_tick_list(const std::vector<Tick>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) s += ',';
        s += std::to_string(v[i]);
    }
    s += ']';
    return s;
}

namespace {

Workload five(const std::vector<Tick>& bursts, const std::vector<Tick>& prios) {
    Workload w;
    for (std::size_t i = 0; i < bursts.size(); ++i) {
        w.processes.push_back({"P" + std::to_string(i + 1), bursts[i], prios[i]});
    }
    return w;
}

ReferenceCell cell(std::string name, std::string value) {
    return {std::move(name), value, value, ""};
}

std::vector<BuiltinCase> make_cases() {
    std::vector<BuiltinCase> cases;

    {
        BuiltinCase c;
        c.name = "1";
        c.workload = five({5, 12, 16, 21, 23}, {2, 3, 1, 4, 5});
        c.cells = {
            cell("its_column", "[5,4,5,4,4]"),
            cell("csc_column", "[1,0,0,0,0]"),
            cell("pbdrr_rounds_P1", "[5]"),
            cell("pbdrr_rounds_P2", "[2,3,7]"),
            cell("pbdrr_rounds_P3", "[3,5,8]"),
            cell("pbdrr_rounds_P4", "[2,3,5,8,3]"),
            cell("pbdrr_rounds_P5", "[2,3,5,8,5]"),
            cell("mrr_avg_turnaround", "51.2"),
            cell("mrr_avg_waiting", "35.8"),
            cell("mrr_context_switches", "19"),
            cell("pbdrr_avg_turnaround", "46.4"),
            cell("pbdrr_avg_waiting", "31"),
            {"pbdrr_context_switches", "17", "16",
             "the 17-slice trace has 16 slice boundaries; the printed count is off by one"},
        };
        cases.push_back(std::move(c));
    }
    {
        BuiltinCase c;
        c.name = "2";
        c.workload = five({31, 23, 16, 9, 1}, {2, 1, 4, 5, 3});
        c.cells = {
            cell("its_column", "[4,6,5,5,1]"),
            {"csc_column", "[0,0,0,0,0]", "[0,0,0,0,-4]",
             "P5's printed CSC contradicts its own ITS: 1 = 4+0+1+csc forces csc = -4"},
            {"pbdrr_rounds_P1", "[2,3,5,21]", "[2,3,5,8,13]",
             "the printed 21 merges rounds 4 and 5 (8 then 13); the growth rules have no merge"},
            cell("pbdrr_rounds_P2", "[6,12,5]"),
            cell("pbdrr_rounds_P3", "[5,11]"),
            cell("pbdrr_rounds_P4", "[5,4]"),
            cell("pbdrr_rounds_P5", "[1]"),
            cell("mrr_avg_turnaround", "54"),
            cell("mrr_avg_waiting", "38"),
            cell("mrr_context_switches", "18"),
            cell("pbdrr_avg_turnaround", "50.4"),
            cell("pbdrr_avg_waiting", "34.4"),
            cell("pbdrr_context_switches", "12"),
        };
        cases.push_back(std::move(c));
    }
    {
        BuiltinCase c;
        c.name = "3";
        c.workload = five({11, 53, 8, 41, 20}, {3, 1, 2, 4, 5});
        c.cells = {
            cell("its_column", "[4,5,8,4,5]"),
            cell("csc_column", "[0,0,3,0,0]"),
            cell("pbdrr_rounds_P1", "[2,3,6]"),
            cell("pbdrr_rounds_P2", "[3,5,8,12,18,7]"),
            cell("pbdrr_rounds_P3", "[8]"),
            cell("pbdrr_rounds_P4", "[2,3,5,8,12,11]"),
            cell("pbdrr_rounds_P5", "[5,10,5]"),
            cell("mrr_avg_turnaround", "80.8"),
            cell("mrr_avg_waiting", "54.2"),
            cell("mrr_context_switches", "29"),
            cell("pbdrr_avg_turnaround", "76"),
            cell("pbdrr_avg_waiting", "49.4"),
            cell("pbdrr_context_switches", "18"),
        };
        cases.push_back(std::move(c));
    }
    {
        BuiltinCase c;
        c.name = "illustration";
        c.workload = five({50, 27, 12, 55, 5}, {1, 2, 1, 3, 4});
        c.cells = {
            cell("its_column", "[5,5,6,4,5]"),
            cell("csc_column", "[0,0,0,0,0]"),
            cell("round1_quanta", "[3,5,6,2,5]"),
        };
        cases.push_back(std::move(c));
    }
    return cases;
}

} // namespace

const std::vector<BuiltinCase>& builtin_cases() {
    static const std::vector<BuiltinCase> cases = make_cases();
    return cases;
}

const BuiltinCase& builtin_case(std::string_view name) {
    for (const auto& c : builtin_cases()) {
        if (c.name == name) return c;
    }
    throw std::invalid_argument("unknown case \"" + std::string(name) +
                                "\" (expected 1, 2, 3 or illustration)");
}

std::vector<DiscrepancyNote> case_discrepancies(const BuiltinCase& c) {
    std::vector<DiscrepancyNote> notes;
    for (const auto& cell : c.cells) {
        if (cell.annotated()) {
            notes.push_back({cell.name, cell.reference, cell.derived, cell.note});
        }
    }
    return notes;
}

std::vector<DiscrepancyNote> known_discrepancies(const Workload& w) {
    for (const auto& c : builtin_cases()) {
        if (c.workload.processes.size() != w.processes.size()) continue;
        bool same = true;
        for (std::size_t i = 0; i < w.processes.size(); ++i) {
            if (w.processes[i].burst != c.workload.processes[i].burst ||
                w.processes[i].priority != c.workload.processes[i].priority) {
                same = false;
                break;
            }
        }
        if (same) return case_discrepancies(c);
    }
    return {};
}

} // namespace schedlab
