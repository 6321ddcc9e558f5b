#include "schedlab/timeslice.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "schedlab/json_io.hpp"

namespace schedlab {

std::vector<Tick> priority_components(std::span<const Tick> priorities) {
    if (priorities.empty()) throw std::invalid_argument("priority list is empty");
    const Tick best = *std::min_element(priorities.begin(), priorities.end());
    std::vector<Tick> pc(priorities.size());
    for (std::size_t i = 0; i < priorities.size(); ++i) {
        pc[i] = priorities[i] == best ? 1 : 0;
    }
    return pc;
}

std::vector<Tick> shortness_components(std::span<const Tick> bursts) {
    if (bursts.empty()) throw std::invalid_argument("burst list is empty");
    std::vector<Tick> sc(bursts.size(), 0);
    for (std::size_t i = 1; i < bursts.size(); ++i) {
        sc[i] = bursts[i] < bursts[i - 1] ? 1 : 0;
    }
    return sc;
}

Tick context_switch_component(Tick burst, Tick ots, Tick pc, Tick sc) {
    const Tick r = burst - (ots + pc + sc);
    return r < ots ? r : 0;
}

std::vector<TimeSliceBreakdown> compute_its(const Workload& w, Tick ots) {
    if (ots < 1) throw std::invalid_argument("ots must be >= 1");
    std::vector<Tick> bursts, priorities;
    bursts.reserve(w.processes.size());
    priorities.reserve(w.processes.size());
    for (const auto& p : w.processes) {
        bursts.push_back(p.burst);
        priorities.push_back(p.priority);
    }
    const auto pc = priority_components(priorities);
    const auto sc = shortness_components(bursts);
    std::vector<TimeSliceBreakdown> out(w.processes.size());
    for (std::size_t i = 0; i < w.processes.size(); ++i) {
        auto& b = out[i];
        b.ots = ots;
        b.pc = pc[i];
        b.sc = sc[i];
        b.csc = context_switch_component(bursts[i], ots, pc[i], sc[i]);
        b.its = b.ots + b.pc + b.sc + b.csc;
    }
    return out;
}

std::string breakdown_table_csv(const Workload& w, const std::vector<TimeSliceBreakdown>& b) {
    std::ostringstream out;
    out << "id,burst,priority,ots,pc,sc,csc,its\n";
    for (std::size_t i = 0; i < w.processes.size(); ++i) {
        const auto& p = w.processes[i];
        out << p.id << ',' << p.burst << ',' << p.priority << ',' << b[i].ots << ',' << b[i].pc
            << ',' << b[i].sc << ',' << b[i].csc << ',' << b[i].its << '\n';
    }
    return out.str();
}

nlohmann::json breakdowns_to_json(const Workload& w, const std::vector<TimeSliceBreakdown>& b) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < w.processes.size(); ++i) {
        const auto& p = w.processes[i];
        rows.push_back({{"id", p.id},
                        {"burst", p.burst},
                        {"priority", p.priority},
                        {"ots", b[i].ots},
                        {"pc", b[i].pc},
                        {"sc", b[i].sc},
                        {"csc", b[i].csc},
                        {"its", b[i].its}});
    }
    return rows;
}

std::string breakdown_table_json(const Workload& w, const std::vector<TimeSliceBreakdown>& b) {
    return breakdowns_to_json(w, b).dump(2) + "\n";
}

std::string breakdown_table_text(const Workload& w, const std::vector<TimeSliceBreakdown>& b) {
    std::ostringstream out;
    out << std::left << std::setw(8) << "id" << std::right << std::setw(7) << "burst"
        << std::setw(10) << "priority" << std::setw(5) << "ots" << std::setw(4) << "pc"
        << std::setw(4) << "sc" << std::setw(5) << "csc" << std::setw(5) << "its" << '\n';
    for (std::size_t i = 0; i < w.processes.size(); ++i) {
        const auto& p = w.processes[i];
        out << std::left << std::setw(8) << p.id << std::right << std::setw(7) << p.burst
            << std::setw(10) << p.priority << std::setw(5) << b[i].ots << std::setw(4) << b[i].pc
            << std::setw(4) << b[i].sc << std::setw(5) << b[i].csc << std::setw(5) << b[i].its
            << '\n';
    }
    return out.str();
}

} // namespace schedlab
