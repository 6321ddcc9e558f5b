#include "schedlab/engine.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "schedlab/errors.hpp"
#include "schedlab/json_io.hpp"

namespace schedlab {

namespace {

struct RunState {
    std::size_t index;   // position in the workload
    Tick remaining;
    Tick quantum = 0;    // last PBDRR quantum granted (pre-clamp value survives only unclamped)
};

} // namespace

ExecutionTrace simulate(const Workload& w, const PolicyConfig& policy) {
    validate_workload(w);
    validate_policy(policy);

    ExecutionTrace trace;
    trace.policy = policy;
    if (policy.kind != PolicyKind::rr) {
        trace.breakdowns = compute_its(w, policy.ots);
    }

    std::vector<RunState> queue;
    queue.reserve(w.processes.size());
    for (std::size_t i = 0; i < w.processes.size(); ++i) {
        queue.push_back({i, w.processes[i].burst});
    }

    Tick clock = 0;
    for (int round = 1; !queue.empty(); ++round) {
        for (std::size_t qi = 0; qi < queue.size();) {
            RunState& st = queue[qi];
            const auto& proc = w.processes[st.index];
            Tick granted = 0;
            switch (policy.kind) {
            case PolicyKind::pbdrr: {
                const Tick sc = trace.breakdowns[st.index].sc;
                const Tick raw = round == 1
                                     ? pbdrr_first_quantum(trace.breakdowns[st.index].its, sc)
                                     : pbdrr_next_quantum(st.quantum, sc);
                granted = clamp_quantum(raw, st.remaining);
                st.quantum = granted;
                break;
            }
            case PolicyKind::mrr:
                granted = static_quantum(trace.breakdowns[st.index].its, st.remaining);
                break;
            case PolicyKind::rr:
                granted = static_quantum(policy.fixed_quantum, st.remaining);
                break;
            }
            trace.slices.push_back({proc.id, clock, clock + granted, round});
            clock += granted;
            st.remaining -= granted;
            assert(st.remaining >= 0);
            if (st.remaining == 0) {
                queue.erase(queue.begin() + static_cast<std::ptrdiff_t>(qi));
            } else {
                ++qi;
            }
        }
    }
    return trace;
}

// Literal walk of the published pseudo-code, self-contained on purpose: it
// recomputes PC/SC/CSC and the quantum rules inline instead of calling the
// timeslice/policies functions, so a bug there cannot hide here.
ExecutionTrace naive_reference_simulate(const Workload& w, const PolicyConfig& policy) {
    validate_workload(w);
    validate_policy(policy);

    const std::size_t n = w.processes.size();

    // Step 1: intelligent time slice for every process in the ready queue
    // (classic RR never consults it).
    std::vector<Tick> its(n, 0), sc(n, 0);
    if (policy.kind != PolicyKind::rr) {
        Tick highest = w.processes[0].priority;
        for (const auto& p : w.processes) {
            if (p.priority < highest) highest = p.priority;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const Tick pc_i = w.processes[i].priority == highest ? 1 : 0;
            if (i > 0 && w.processes[i].burst - w.processes[i - 1].burst < 0) sc[i] = 1;
            Tick slice = policy.ots + pc_i + sc[i];
            const Tick diff = w.processes[i].burst - slice;
            if (diff < policy.ots) slice += diff;
            its[i] = slice;
        }
    }

    std::vector<Tick> remaining(n), prev_tq(n, 0);
    std::vector<int> visits(n, 0);
    for (std::size_t i = 0; i < n; ++i) remaining[i] = w.processes[i].burst;

    ExecutionTrace trace;
    trace.policy = policy;
    if (policy.kind != PolicyKind::rr) {
        trace.breakdowns = compute_its(w, policy.ots);
    }

    // Step 2: while the ready queue is not empty, one pass per round.
    std::vector<std::size_t> ready(n);
    for (std::size_t i = 0; i < n; ++i) ready[i] = i;
    Tick now = 0;
    int round = 0;
    while (!ready.empty()) {
        ++round;
        std::vector<std::size_t> next_ready;
        for (std::size_t i : ready) {
            Tick tq = 0;
            if (policy.kind == PolicyKind::pbdrr) {
                if (visits[i] == 0) {
                    tq = sc[i] == 0 ? (its[i] + 1) / 2 : its[i];
                } else {
                    tq = sc[i] == 0 ? prev_tq[i] + (prev_tq[i] + 1) / 2 : 2 * prev_tq[i];
                }
                if (remaining[i] - tq <= 2) tq = remaining[i];
                prev_tq[i] = tq;
            } else {
                const Tick slot = policy.kind == PolicyKind::mrr ? its[i] : policy.fixed_quantum;
                tq = slot <= remaining[i] ? slot : remaining[i];
            }
            ++visits[i];
            trace.slices.push_back({w.processes[i].id, now, now + tq, round});
            now += tq;
            remaining[i] -= tq;
            if (remaining[i] > 0) next_ready.push_back(i);
        }
        ready = std::move(next_ready);
    }
    return trace;
}

std::string trace_csv(const ExecutionTrace& t) {
    std::ostringstream out;
    out << "pid,start,end,round\n";
    for (const auto& s : t.slices) {
        out << s.pid << ',' << s.start << ',' << s.end << ',' << s.round << '\n';
    }
    return out.str();
}

nlohmann::json trace_to_json(const ExecutionTrace& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& s : t.slices) {
        rows.push_back({{"pid", s.pid}, {"start", s.start}, {"end", s.end}, {"round", s.round}});
    }
    return rows;
}

std::string trace_json(const ExecutionTrace& t) {
    return trace_to_json(t).dump(2) + "\n";
}

} // namespace schedlab
