#include "schedlab/metrics.hpp"

#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "schedlab/errors.hpp"
#include "schedlab/json_io.hpp"

namespace schedlab {

std::string render_average(Tick sum, Tick count) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    if (sum < 0) throw std::invalid_argument("sum must be >= 0");
    const Tick scaled = sum * 10;
    Tick tenths = scaled / count;
    if (2 * (scaled % count) >= count) ++tenths;  // half-up
    std::string s = std::to_string(tenths / 10);
    if (tenths % 10 != 0) {
        s += '.';
        s += static_cast<char>('0' + tenths % 10);
    }
    return s;
}

std::string ScheduleMetrics::avg_turnaround() const {
    return render_average(total_turnaround, static_cast<Tick>(per_process.size()));
}

std::string ScheduleMetrics::avg_waiting() const {
    return render_average(total_waiting, static_cast<Tick>(per_process.size()));
}

Tick count_context_switches(const ExecutionTrace& trace) {
    if (trace.slices.empty()) throw std::invalid_argument("trace is empty");
    return static_cast<Tick>(trace.slices.size()) - 1;
}

ScheduleMetrics compute_metrics(const ExecutionTrace& trace, const Workload& w) {
    struct Accum {
        Tick executed = 0;
        Tick completion = 0;
        Tick first_start = -1;
    };
    std::map<std::string, Accum> per_pid;
    Tick expect_start = 0;
    for (const auto& s : trace.slices) {
        if (s.start != expect_start || s.end <= s.start) {
            throw integrity_error("trace is not contiguous at slice starting " +
                                  std::to_string(s.start));
        }
        expect_start = s.end;
        auto& a = per_pid[s.pid];
        a.executed += s.end - s.start;
        a.completion = s.end;
        if (a.first_start < 0) a.first_start = s.start;
    }

    ScheduleMetrics m;
    std::size_t matched = 0;
    for (const auto& p : w.processes) {
        auto it = per_pid.find(p.id);
        if (it == per_pid.end()) {
            throw integrity_error("trace has no slices for process " + p.id);
        }
        const Accum& a = it->second;
        if (a.executed != p.burst) {
            throw integrity_error("process " + p.id + " executed " + std::to_string(a.executed) +
                                  " ticks, burst is " + std::to_string(p.burst));
        }
        ++matched;
        ProcessMetrics pm;
        pm.id = p.id;
        pm.completion = a.completion;
        pm.turnaround = a.completion;  // arrival is always 0
        pm.waiting = pm.turnaround - p.burst;
        pm.response = a.first_start;
        m.total_turnaround += pm.turnaround;
        m.total_waiting += pm.waiting;
        m.per_process.push_back(std::move(pm));
    }
    if (matched != per_pid.size()) {
        throw integrity_error("trace has slices for processes not in the workload");
    }
    m.context_switches = count_context_switches(trace);
    return m;
}

nlohmann::json metrics_to_json(const ScheduleMetrics& m) {
    nlohmann::json doc;
    doc["per_process"] = nlohmann::json::array();
    for (const auto& p : m.per_process) {
        doc["per_process"].push_back({{"id", p.id},
                                      {"completion", p.completion},
                                      {"turnaround", p.turnaround},
                                      {"waiting", p.waiting},
                                      {"response", p.response}});
    }
    doc["avg_turnaround"] = m.avg_turnaround();
    doc["avg_waiting"] = m.avg_waiting();
    doc["context_switches"] = m.context_switches;
    return doc;
}

std::string metrics_json(const ScheduleMetrics& m) {
    return metrics_to_json(m).dump(2) + "\n";
}

std::string metrics_csv(const ScheduleMetrics& m) {
    std::ostringstream out;
    out << "id,completion,turnaround,waiting,response\n";
    for (const auto& p : m.per_process) {
        out << p.id << ',' << p.completion << ',' << p.turnaround << ',' << p.waiting << ','
            << p.response << '\n';
    }
    out << "avg_turnaround,avg_waiting,context_switches\n";
    out << m.avg_turnaround() << ',' << m.avg_waiting() << ',' << m.context_switches << '\n';
    return out.str();
}

std::string metrics_text(const ScheduleMetrics& m) {
    std::ostringstream out;
    out << std::left << std::setw(8) << "id" << std::right << std::setw(11) << "completion"
        << std::setw(11) << "turnaround" << std::setw(9) << "waiting" << std::setw(10)
        << "response" << '\n';
    for (const auto& p : m.per_process) {
        out << std::left << std::setw(8) << p.id << std::right << std::setw(11) << p.completion
            << std::setw(11) << p.turnaround << std::setw(9) << p.waiting << std::setw(10)
            << p.response << '\n';
    }
    out << "avg_turnaround=" << m.avg_turnaround() << " avg_waiting=" << m.avg_waiting()
        << " context_switches=" << m.context_switches << '\n';
    return out.str();
}

} // namespace schedlab
