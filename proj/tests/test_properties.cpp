#include "doctest.h"

#include <map>
#include <random>
#include <sstream>

#include "schedlab/engine.hpp"
#include "schedlab/metrics.hpp"
#include "schedlab/timeslice.hpp"

#include "test_util.hpp"
#include "trace_checks.hpp"

using namespace schedlab;

TEST_CASE("differential oracle and invariant pack over a seeded corpus") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        std::mt19937_64 rng(seed);
        const int n = 1 + static_cast<int>(rng() % 8);
        const Workload w = generate_workload(n, {1, 60}, {1, 9}, rng());
        const Tick ots = 1 + static_cast<Tick>(rng() % 8);
        const Tick quantum = 1 + static_cast<Tick>(rng() % 12);

        for (const PolicyConfig& p :
             {PolicyConfig::pbdrr(ots), PolicyConfig::mrr(ots), PolicyConfig::rr(quantum)}) {
            const ExecutionTrace fast = simulate(w, p);
            const ExecutionTrace naive = naive_reference_simulate(w, p);
            const bool equal = fast.slices == naive.slices;
            CHECK_MESSAGE(equal, "engines disagree: seed=", seed, " policy=", policy_name(p.kind));
            if (!equal) continue;

            const std::string violation = testutil::trace_invariant_violation(w, p, fast);
            CHECK_MESSAGE(violation.empty(), "seed=", seed, " policy=", policy_name(p.kind), ": ",
                          violation);

            const ScheduleMetrics m = compute_metrics(fast, w);
            CHECK(m.context_switches == static_cast<Tick>(fast.slices.size()) - 1);
            for (std::size_t k = 0; k < w.processes.size(); ++k) {
                const auto& pm = m.per_process[k];
                CHECK(pm.turnaround == pm.completion);
                CHECK(pm.waiting == pm.turnaround - w.processes[k].burst);
                CHECK(pm.waiting >= 0);
                CHECK(pm.completion >= w.processes[k].burst);
            }
            ++checked;
        }
    }
    CHECK(checked == 3000);
}

TEST_CASE("determinism: identical inputs give identical traces") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 20; ++i) {
        const Workload w = generate_workload(1 + static_cast<int>(rng() % 8), {1, 60}, {1, 9},
                                             rng());
        for (const PolicyConfig& p :
             {PolicyConfig::pbdrr(4), PolicyConfig::mrr(4), PolicyConfig::rr(5)}) {
            CHECK(simulate(w, p).slices == simulate(w, p).slices);
        }
    }
}
