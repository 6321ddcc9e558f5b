#include "schedlab/report.hpp"

#include <future>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "schedlab/cases.hpp"
#include "schedlab/json_io.hpp"

namespace schedlab {

namespace {

constexpr const char* kLaneColors[] = {
    "#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1",
    "#76b7b2", "#edc948", "#9c755f", "#bab0ac", "#d37295",
};
constexpr std::size_t kLaneColorCount = sizeof(kLaneColors) / sizeof(kLaneColors[0]);

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out.push_back(c); break;
        }
    }
    return out;
}

// Lane per process, ordered by first appearance in the trace.
std::vector<std::string> lane_order(const ExecutionTrace& t) {
    std::vector<std::string> lanes;
    for (const auto& s : t.slices) {
        bool known = false;
        for (const auto& l : lanes) {
            if (l == s.pid) {
                known = true;
                break;
            }
        }
        if (!known) lanes.push_back(s.pid);
    }
    return lanes;
}

std::size_t lane_of(const std::vector<std::string>& lanes, const std::string& pid) {
    for (std::size_t i = 0; i < lanes.size(); ++i) {
        if (lanes[i] == pid) return i;
    }
    return 0;
}

} // namespace

std::string render_gantt_text(const ExecutionTrace& t) {
    if (t.slices.empty()) throw std::invalid_argument("trace is empty");
    std::ostringstream out;
    for (std::size_t i = 0; i < t.slices.size(); ++i) {
        const auto& s = t.slices[i];
        if (i > 0) out << ' ';
        out << s.pid << '[' << s.start << "–" << s.end << ']';
    }
    return out.str();
}

std::string render_gantt_svg(const ExecutionTrace& t) {
    if (t.slices.empty()) throw std::invalid_argument("trace is empty");
    const auto lanes = lane_order(t);
    const Tick total = t.slices.back().end;
    const int width = kSvgMarginLeft + static_cast<int>(total) * kSvgPixelsPerTick + kSvgMarginRight;
    const int height =
        kSvgMarginTop + static_cast<int>(lanes.size()) * kSvgLanePitch + kSvgMarginBottom;
    const int axis_y = kSvgMarginTop + static_cast<int>(lanes.size()) * kSvgLanePitch + 8;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "  <style>text{font-family:monospace;font-size:12px;}</style>\n";
    out << "  <text x=\"" << kSvgMarginLeft << "\" y=\"18\">" << policy_name(t.policy.kind)
        << " schedule, " << total << " ticks</text>\n";
    for (std::size_t i = 0; i < lanes.size(); ++i) {
        const int y = kSvgMarginTop + static_cast<int>(i) * kSvgLanePitch;
        out << "  <text x=\"8\" y=\"" << y + kSvgBarHeight - 6 << "\">" << xml_escape(lanes[i])
            << "</text>\n";
    }
    for (const auto& s : t.slices) {
        const std::size_t lane = lane_of(lanes, s.pid);
        const int x = kSvgMarginLeft + static_cast<int>(s.start) * kSvgPixelsPerTick;
        const int w = static_cast<int>(s.end - s.start) * kSvgPixelsPerTick;
        const int y = kSvgMarginTop + static_cast<int>(lane) * kSvgLanePitch;
        out << "  <rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\""
            << kSvgBarHeight << "\" fill=\"" << kLaneColors[lane % kLaneColorCount]
            << "\" stroke=\"#333\"><title>" << xml_escape(s.pid) << " [" << s.start << ","
            << s.end << ") round " << s.round << "</title></rect>\n";
    }
    out << "  <line x1=\"" << kSvgMarginLeft << "\" y1=\"" << axis_y << "\" x2=\""
        << kSvgMarginLeft + static_cast<int>(total) * kSvgPixelsPerTick << "\" y2=\"" << axis_y
        << "\" stroke=\"#333\"/>\n";
    out << "  <text x=\"" << kSvgMarginLeft << "\" y=\"" << axis_y + 16 << "\">0</text>\n";
    out << "  <text x=\"" << kSvgMarginLeft + static_cast<int>(total) * kSvgPixelsPerTick
        << "\" y=\"" << axis_y + 16 << "\" text-anchor=\"end\">" << total << "</text>\n";
    out << "</svg>\n";
    return out.str();
}

ComparisonReport build_comparison(const Workload& w, const std::vector<PolicyConfig>& policies) {
    if (policies.empty()) throw std::invalid_argument("at least one policy is required");
    validate_workload(w);
    for (const auto& p : policies) validate_policy(p);

    ComparisonReport report;
    report.workload = w;

    // Runs share nothing, so fan them out.
    std::vector<std::future<PolicyRun>> futures;
    futures.reserve(policies.size());
    for (const auto& p : policies) {
        futures.push_back(std::async(std::launch::async, [&w, p] {
            PolicyRun run;
            run.policy = p;
            run.trace = simulate(w, p);
            run.metrics = compute_metrics(run.trace, w);
            return run;
        }));
    }
    for (auto& f : futures) report.runs.push_back(f.get());

    report.annotations = known_discrepancies(w);
    return report;
}

namespace {

std::string policy_label(const PolicyConfig& p) {
    std::string label = policy_name(p.kind);
    if (p.kind == PolicyKind::rr) {
        label += "(q=" + std::to_string(p.fixed_quantum) + ")";
    } else if (p.ots != 4) {
        label += "(ots=" + std::to_string(p.ots) + ")";
    }
    return label;
}

} // namespace

std::string comparison_text(const ComparisonReport& r) {
    std::ostringstream out;
    out << std::left << std::setw(14) << "algorithm" << std::right << std::setw(15)
        << "avg_turnaround" << std::setw(12) << "avg_waiting" << std::setw(18)
        << "context_switches" << '\n';
    for (const auto& run : r.runs) {
        out << std::left << std::setw(14) << policy_label(run.policy) << std::right
            << std::setw(15) << run.metrics.avg_turnaround() << std::setw(12)
            << run.metrics.avg_waiting() << std::setw(18) << run.metrics.context_switches << '\n';
    }
    for (const auto& a : r.annotations) {
        out << "note: " << a.cell << ": reference prints " << a.reference << ", rules give "
            << a.computed << " (" << a.note << ")\n";
    }
    return out.str();
}

std::string comparison_csv(const ComparisonReport& r) {
    std::ostringstream out;
    out << "algorithm,avg_turnaround,avg_waiting,context_switches\n";
    for (const auto& run : r.runs) {
        out << policy_label(run.policy) << ',' << run.metrics.avg_turnaround() << ','
            << run.metrics.avg_waiting() << ',' << run.metrics.context_switches << '\n';
    }
    return out.str();
}

nlohmann::json policy_to_json(const PolicyConfig& p) {
    nlohmann::json doc;
    doc["kind"] = policy_name(p.kind);
    if (p.kind == PolicyKind::rr) {
        doc["quantum"] = p.fixed_quantum;
    } else {
        doc["ots"] = p.ots;
    }
    return doc;
}

nlohmann::json comparison_to_json(const ComparisonReport& r) {
    nlohmann::json doc;
    doc["workload"] = workload_to_json(r.workload)["processes"];
    doc["rows"] = nlohmann::json::array();
    for (const auto& run : r.runs) {
        doc["rows"].push_back({{"algorithm", policy_label(run.policy)},
                               {"avg_turnaround", run.metrics.avg_turnaround()},
                               {"avg_waiting", run.metrics.avg_waiting()},
                               {"context_switches", run.metrics.context_switches}});
    }
    doc["annotations"] = nlohmann::json::array();
    for (const auto& a : r.annotations) {
        doc["annotations"].push_back({{"cell", a.cell},
                                      {"reference", a.reference},
                                      {"computed", a.computed},
                                      {"note", a.note}});
    }
    return doc;
}

std::string comparison_json(const ComparisonReport& r) {
    return comparison_to_json(r).dump(2) + "\n";
}

} // namespace schedlab
