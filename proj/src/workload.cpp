#include "schedlab/workload.hpp"

#include <charconv>
#include <limits>
#include <random>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "schedlab/errors.hpp"
#include "schedlab/json_io.hpp"

namespace schedlab {

namespace {

bool valid_id(const std::string& id) {
    if (id.empty()) return false;
    for (unsigned char c : id) {
        if (c <= ' ' || c == ',' || c == '"' || c == 0x7f) return false;
    }
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

bool parse_tick(std::string_view field, Tick& out) {
    field = trim(field);
    if (field.empty()) return false;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
    return ec == std::errc{} && ptr == field.data() + field.size();
}

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = line.find(sep, pos);
        if (next == std::string_view::npos) {
            fields.push_back(line.substr(pos));
            break;
        }
        fields.push_back(line.substr(pos, next - pos));
        pos = next + 1;
    }
    return fields;
}

Workload parse_csv(std::string_view text) {
    Workload w;
    std::size_t pos = 0;
    int line_no = 0;
    bool first_content_line = true;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (trim(line).empty()) continue;

        auto fields = split(line, ',');
        if (fields.size() != 3) {
            if (first_content_line) {  // a short/long header is still a header
                first_content_line = false;
                continue;
            }
            throw parse_error("line " + std::to_string(line_no) + ": expected 3 fields (id,burst,priority), got " +
                              std::to_string(fields.size()));
        }
        Tick burst = 0;
        Tick priority = 0;
        bool numeric = parse_tick(fields[1], burst) && parse_tick(fields[2], priority);
        if (!numeric) {
            if (first_content_line) {  // optional header row
                first_content_line = false;
                continue;
            }
            throw parse_error("line " + std::to_string(line_no) + ": burst and priority must be integers");
        }
        first_content_line = false;
        w.processes.push_back({std::string(trim(fields[0])), burst, priority});
    }
    return w;
}

Workload parse_json_text(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("processes") || !doc["processes"].is_array()) {
        throw parse_error("expected an object with a \"processes\" array");
    }
    Workload w;
    std::size_t idx = 0;
    for (const auto& entry : doc["processes"]) {
        ++idx;
        if (!entry.is_object() || !entry.contains("id") || !entry.contains("burst") ||
            !entry.contains("priority") || !entry["id"].is_string() ||
            !entry["burst"].is_number_integer() || !entry["priority"].is_number_integer()) {
            throw parse_error("process #" + std::to_string(idx) +
                              ": expected {\"id\":string,\"burst\":int,\"priority\":int}");
        }
        w.processes.push_back({entry["id"].get<std::string>(), entry["burst"].get<Tick>(),
                               entry["priority"].get<Tick>()});
    }
    return w;
}

// Bias-free bounded draw; avoids the implementation-defined mapping of
// std::uniform_int_distribution so identical seeds give identical
// workloads everywhere.
Tick draw_in_range(std::mt19937_64& rng, IntRange r) {
    const std::uint64_t span = static_cast<std::uint64_t>(r.hi - r.lo) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return r.lo + static_cast<Tick>(x % span);
}

} // namespace

void validate_workload(const Workload& w) {
    if (w.processes.empty()) throw validation_error("workload is empty");
    std::unordered_set<std::string> seen;
    for (const auto& p : w.processes) {
        if (!valid_id(p.id)) {
            throw validation_error("process id \"" + p.id +
                                   "\" is invalid (must be non-empty, no spaces, commas or quotes)");
        }
        if (p.burst < 1) {
            throw validation_error("process " + p.id + ": burst must be >= 1, got " +
                                   std::to_string(p.burst));
        }
        if (p.priority < 1) {
            throw validation_error("process " + p.id + ": priority must be >= 1, got " +
                                   std::to_string(p.priority));
        }
        if (!seen.insert(p.id).second) {
            throw validation_error("duplicate process id " + p.id);
        }
    }
}

Workload parse_workload(std::string_view text, WorkloadFormat format) {
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
        throw parse_error("input is empty");
    }
    Workload w = format == WorkloadFormat::csv ? parse_csv(text) : parse_json_text(text);
    validate_workload(w);
    return w;
}

std::string serialize_workload(const Workload& w, WorkloadFormat format) {
    if (format == WorkloadFormat::csv) {
        std::ostringstream out;
        out << "id,burst,priority\n";
        for (const auto& p : w.processes) {
            out << p.id << ',' << p.burst << ',' << p.priority << '\n';
        }
        return out.str();
    }
    return workload_to_json(w).dump(2) + "\n";
}

nlohmann::json workload_to_json(const Workload& w) {
    nlohmann::json doc;
    doc["processes"] = nlohmann::json::array();
    for (const auto& p : w.processes) {
        doc["processes"].push_back({{"id", p.id}, {"burst", p.burst}, {"priority", p.priority}});
    }
    return doc;
}

Workload generate_workload(int n, IntRange burst_range, IntRange priority_range,
                           std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    for (const auto& r : {burst_range, priority_range}) {
        if (r.lo < 1 || r.hi < r.lo) {
            throw std::invalid_argument("range [" + std::to_string(r.lo) + ", " +
                                        std::to_string(r.hi) + "] is invalid (need 1 <= lo <= hi)");
        }
    }
    std::mt19937_64 rng(seed);
    Workload w;
    w.processes.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        ProcessSpec p;
        p.id = "P" + std::to_string(i);
        p.burst = draw_in_range(rng, burst_range);
        p.priority = draw_in_range(rng, priority_range);
        w.processes.push_back(std::move(p));
    }
    return w;
}

} // namespace schedlab
