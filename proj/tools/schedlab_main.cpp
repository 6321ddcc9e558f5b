#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "schedlab/cases.hpp"
#include "schedlab/engine.hpp"
#include "schedlab/errors.hpp"
#include "schedlab/json_io.hpp"
#include "schedlab/metrics.hpp"
#include "schedlab/policies.hpp"
#include "schedlab/report.hpp"
#include "schedlab/timeslice.hpp"
#include "schedlab/workload.hpp"

namespace {

using namespace schedlab;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw io_error("cannot read " + path);
    return buf.str();
}

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw io_error("cannot open " + out_path + " for writing");
    out << content;
    out.flush();
    if (!out) throw io_error("cannot write " + out_path);
}

WorkloadFormat pick_format(const std::string& path, const std::string& explicit_format) {
    if (!explicit_format.empty()) {
        return explicit_format == "json" ? WorkloadFormat::json : WorkloadFormat::csv;
    }
    return path.size() >= 5 && path.substr(path.size() - 5) == ".json" ? WorkloadFormat::json
                                                                       : WorkloadFormat::csv;
}

Workload load_workload(const std::string& path, const std::string& explicit_format) {
    return parse_workload(read_file(path), pick_format(path, explicit_format));
}

Tick parse_tick_arg(std::string_view text, const std::string& what) {
    Tick v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument(what + " must be an integer, got \"" + std::string(text) + "\"");
    }
    return v;
}

IntRange parse_range(const std::string& text) {
    const auto pos = text.find("..");
    if (pos == std::string::npos) {
        throw std::invalid_argument("range must look like LO..HI, got \"" + text + "\"");
    }
    IntRange r;
    r.lo = parse_tick_arg(std::string_view(text).substr(0, pos), "range lower bound");
    r.hi = parse_tick_arg(std::string_view(text).substr(pos + 2), "range upper bound");
    return r;
}

PolicyConfig make_policy(const std::string& name, Tick ots, std::optional<Tick> quantum) {
    const PolicyKind kind = parse_policy_kind(name);
    if (kind == PolicyKind::rr) {
        if (!quantum) throw std::invalid_argument("policy rr requires --quantum");
        return PolicyConfig::rr(*quantum);
    }
    PolicyConfig p{kind, ots, 0};
    validate_policy(p);
    return p;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) items.push_back(item);
    }
    return items;
}

// ---- repro -----------------------------------------------------------

struct CellVerdict {
    std::string verdict;  // PASS | FLAG | FAIL
    const ReferenceCell* cell = nullptr;
    std::string computed;
};

std::vector<Tick> slice_lengths_for(const ExecutionTrace& t, const std::string& pid) {
    std::vector<Tick> lengths;
    for (const auto& s : t.slices) {
        if (s.pid == pid) lengths.push_back(s.end - s.start);
    }
    return lengths;
}

std::map<std::string, std::string> compute_cell_values(const BuiltinCase& c) {
    std::map<std::string, std::string> values;
    const auto breakdowns = compute_its(c.workload, c.ots);
    std::vector<Tick> its_col, csc_col;
    for (const auto& b : breakdowns) {
        its_col.push_back(b.its);
        csc_col.push_back(b.csc);
    }
    values["its_column"] = format_tick_list(its_col);
    values["csc_column"] = format_tick_list(csc_col);

    std::optional<ExecutionTrace> pbdrr_trace;
    std::optional<ScheduleMetrics> pbdrr_metrics, mrr_metrics;
    auto ensure_pbdrr = [&] {
        if (!pbdrr_trace) pbdrr_trace = simulate(c.workload, PolicyConfig::pbdrr(c.ots));
    };
    for (const auto& cell : c.cells) {
        if (cell.name == "round1_quanta") {
            std::vector<Tick> q;
            for (const auto& b : breakdowns) q.push_back(pbdrr_first_quantum(b.its, b.sc));
            values[cell.name] = format_tick_list(q);
        } else if (cell.name.rfind("pbdrr_rounds_", 0) == 0) {
            ensure_pbdrr();
            values[cell.name] =
                format_tick_list(slice_lengths_for(*pbdrr_trace, cell.name.substr(13)));
        } else if (cell.name.rfind("pbdrr_", 0) == 0) {
            ensure_pbdrr();
            if (!pbdrr_metrics) pbdrr_metrics = compute_metrics(*pbdrr_trace, c.workload);
            if (cell.name == "pbdrr_avg_turnaround") values[cell.name] = pbdrr_metrics->avg_turnaround();
            if (cell.name == "pbdrr_avg_waiting") values[cell.name] = pbdrr_metrics->avg_waiting();
            if (cell.name == "pbdrr_context_switches")
                values[cell.name] = std::to_string(pbdrr_metrics->context_switches);
        } else if (cell.name.rfind("mrr_", 0) == 0) {
            if (!mrr_metrics) {
                const auto trace = simulate(c.workload, PolicyConfig::mrr(c.ots));
                mrr_metrics = compute_metrics(trace, c.workload);
            }
            if (cell.name == "mrr_avg_turnaround") values[cell.name] = mrr_metrics->avg_turnaround();
            if (cell.name == "mrr_avg_waiting") values[cell.name] = mrr_metrics->avg_waiting();
            if (cell.name == "mrr_context_switches")
                values[cell.name] = std::to_string(mrr_metrics->context_switches);
        }
    }
    return values;
}

std::vector<CellVerdict> evaluate_case(const BuiltinCase& c) {
    const auto values = compute_cell_values(c);
    std::vector<CellVerdict> verdicts;
    for (const auto& cell : c.cells) {
        CellVerdict v;
        v.cell = &cell;
        v.computed = values.at(cell.name);
        if (cell.annotated()) {
            v.verdict = v.computed == cell.derived ? "FLAG" : "FAIL";
        } else {
            v.verdict = v.computed == cell.reference ? "PASS" : "FAIL";
        }
        verdicts.push_back(std::move(v));
    }
    return verdicts;
}

int do_repro(const std::string& case_name, const std::string& format, const std::string& out) {
    const BuiltinCase& c = builtin_case(case_name);
    const auto verdicts = evaluate_case(c);
    int pass = 0, flag = 0, fail = 0;
    for (const auto& v : verdicts) {
        if (v.verdict == "PASS") ++pass;
        else if (v.verdict == "FLAG") ++flag;
        else ++fail;
    }

    std::string content;
    if (format == "json") {
        nlohmann::json doc;
        doc["case"] = c.name;
        doc["cells"] = nlohmann::json::array();
        for (const auto& v : verdicts) {
            doc["cells"].push_back({{"name", v.cell->name},
                                    {"verdict", v.verdict},
                                    {"reference", v.cell->reference},
                                    {"computed", v.computed},
                                    {"note", v.cell->note}});
        }
        doc["pass"] = pass;
        doc["flag"] = flag;
        doc["fail"] = fail;
        content = doc.dump(2) + "\n";
    } else {
        std::ostringstream text;
        text << "case " << c.name << "\n";
        for (const auto& v : verdicts) {
            text << v.verdict << ' ' << v.cell->name << " reference=" << v.cell->reference
                 << " computed=" << v.computed;
            if (!v.cell->note.empty()) text << " note=" << v.cell->note;
            text << '\n';
        }
        text << "summary pass=" << pass << " flag=" << flag << " fail=" << fail << '\n';
        content = text.str();
    }
    emit(content, out);
    return fail > 0 ? 1 : 0;
}

// ---- run / its / compare / gen ---------------------------------------

int do_run(const std::string& input, const std::string& input_format, const std::string& policy,
           Tick ots, std::optional<Tick> quantum, const std::string& format,
           const std::string& out) {
    const Workload w = load_workload(input, input_format);
    const PolicyConfig p = make_policy(policy, ots, quantum);
    const ExecutionTrace trace = simulate(w, p);
    const ScheduleMetrics metrics = compute_metrics(trace, w);

    std::string content;
    if (format == "json") {
        nlohmann::json doc;
        doc["policy"] = policy_to_json(p);
        doc["trace"] = trace_to_json(trace);
        doc["metrics"] = metrics_to_json(metrics);
        content = doc.dump(2) + "\n";
    } else if (format == "csv") {
        content = "# trace\n" + trace_csv(trace) + "# metrics\n" + metrics_csv(metrics);
    } else if (format == "svg") {
        content = render_gantt_svg(trace);
    } else {
        content = render_gantt_text(trace) + "\n\n" + metrics_text(metrics);
    }
    emit(content, out);
    return 0;
}

int do_its(const std::string& input, const std::string& input_format, Tick ots,
           const std::string& format, const std::string& out) {
    const Workload w = load_workload(input, input_format);
    const auto breakdowns = compute_its(w, ots);
    std::string content;
    if (format == "json") {
        content = breakdown_table_json(w, breakdowns);
    } else if (format == "csv") {
        content = breakdown_table_csv(w, breakdowns);
    } else {
        content = breakdown_table_text(w, breakdowns);
    }
    emit(content, out);
    return 0;
}

int do_compare(const std::string& input, const std::string& input_format,
               const std::string& policies, Tick ots, std::optional<Tick> quantum,
               const std::string& format, const std::string& out) {
    const Workload w = load_workload(input, input_format);
    std::vector<PolicyConfig> configs;
    for (const auto& name : split_list(policies)) {
        configs.push_back(make_policy(name, ots, quantum));
    }
    if (configs.empty()) throw std::invalid_argument("--policies must name at least one policy");
    const ComparisonReport report = build_comparison(w, configs);
    std::string content;
    if (format == "json") {
        content = comparison_json(report);
    } else if (format == "csv") {
        content = comparison_csv(report);
    } else {
        content = comparison_text(report);
    }
    emit(content, out);
    return 0;
}

int do_gen(int n, const std::string& burst, const std::string& prio, std::uint64_t seed,
           const std::string& format, const std::string& out) {
    const Workload w = generate_workload(n, parse_range(burst), parse_range(prio), seed);
    emit(serialize_workload(w, format == "json" ? WorkloadFormat::json : WorkloadFormat::csv), out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"schedlab: deterministic CPU-scheduling simulation lab (PBDRR, MRR, RR)"};
    app.require_subcommand(1);

    std::string input, input_format, policy, out, policies, case_name, burst_range, prio_range;
    std::string run_format, compare_format, repro_format, its_format, gen_format;
    Tick ots = 4;
    std::optional<Tick> quantum;
    int gen_n = 0;
    std::uint64_t seed = 0;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "workload file (CSV or JSON)")->required();
        cmd->add_option("--input-format", input_format, "force input format")
            ->check(CLI::IsMember({"csv", "json"}));
    };
    auto add_out = [&](CLI::App* cmd) {
        cmd->add_option("--out", out, "write output to a file instead of stdout");
    };

    CLI::App* run = app.add_subcommand("run", "simulate one policy and print trace and metrics");
    add_input(run);
    run->add_option("--policy", policy, "pbdrr, mrr or rr")->required();
    run->add_option("--ots", ots, "original time slice for pbdrr/mrr (default 4)");
    run->add_option("--quantum", quantum, "fixed quantum (rr only)");
    run->add_option("--format", run_format, "text, json, csv or svg")
        ->default_val("text")
        ->check(CLI::IsMember({"text", "json", "csv", "svg"}));
    add_out(run);

    CLI::App* compare = app.add_subcommand("compare", "run several policies on one workload");
    add_input(compare);
    compare->add_option("--policies", policies, "comma-separated list (default mrr,pbdrr)")
        ->default_val("mrr,pbdrr");
    compare->add_option("--ots", ots, "original time slice for pbdrr/mrr (default 4)");
    compare->add_option("--quantum", quantum, "fixed quantum for rr entries");
    compare->add_option("--format", compare_format, "text, json or csv")
        ->default_val("text")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    add_out(compare);

    CLI::App* repro = app.add_subcommand("repro", "check bundled reference cases cell by cell");
    repro->add_option("--case", case_name, "1, 2, 3 or illustration")->required();
    repro->add_option("--format", repro_format, "text or json")
        ->default_val("text")
        ->check(CLI::IsMember({"text", "json"}));
    add_out(repro);

    CLI::App* its = app.add_subcommand("its", "print the intelligent-time-slice breakdown table");
    add_input(its);
    its->add_option("--ots", ots, "original time slice (default 4)");
    its->add_option("--format", its_format, "text, json or csv")
        ->default_val("text")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    add_out(its);

    CLI::App* gen = app.add_subcommand("gen", "generate a seeded random workload");
    gen->add_option("--n", gen_n, "number of processes")->required();
    gen->add_option("--burst", burst_range, "burst range LO..HI (default 1..60)")
        ->default_val("1..60");
    gen->add_option("--prio", prio_range, "priority range LO..HI (default 1..9)")
        ->default_val("1..9");
    gen->add_option("--seed", seed, "generator seed (default 0)");
    gen->add_option("--format", gen_format, "csv or json")
        ->default_val("csv")
        ->check(CLI::IsMember({"csv", "json"}));
    add_out(gen);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (run->parsed()) return do_run(input, input_format, policy, ots, quantum, run_format, out);
        if (compare->parsed())
            return do_compare(input, input_format, policies, ots, quantum, compare_format, out);
        if (repro->parsed()) return do_repro(case_name, repro_format, out);
        if (its->parsed()) return do_its(input, input_format, ots, its_format, out);
        if (gen->parsed()) return do_gen(gen_n, burst_range, prio_range, seed, gen_format, out);
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const integrity_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
