#pragma once

#include <string>
#include <string_view>

#include "schedlab/workload.hpp"

namespace schedlab {

enum class PolicyKind { pbdrr, mrr, rr };

// Which algorithm to run and its parameters. PBDRR and MRR derive quanta
// from the ITS computed with `ots`; classic RR uses `fixed_quantum` for
// every process.
struct PolicyConfig {
    PolicyKind kind = PolicyKind::pbdrr;
    Tick ots = 4;
    Tick fixed_quantum = 0;

    static PolicyConfig pbdrr(Tick ots = 4) { return {PolicyKind::pbdrr, ots, 0}; }
    static PolicyConfig mrr(Tick ots = 4) { return {PolicyKind::mrr, ots, 0}; }
    static PolicyConfig rr(Tick quantum) { return {PolicyKind::rr, 0, quantum}; }

    friend bool operator==(const PolicyConfig&, const PolicyConfig&) = default;
};

// Throws std::invalid_argument when the parameter for the kind is < 1.
void validate_policy(const PolicyConfig& p);

std::string policy_name(PolicyKind k);
PolicyKind parse_policy_kind(std::string_view name);  // throws std::invalid_argument

constexpr Tick ceil_half(Tick x) { return (x + 1) / 2; }

// Round-1 PBDRR quantum, pre-clamp: ceil(its/2) when sc = 0, its when sc = 1.
constexpr Tick pbdrr_first_quantum(Tick its, Tick sc) {
    return sc == 0 ? ceil_half(its) : its;
}

// Growth rule for later rounds, pre-clamp: 1.5x (ceiling) when sc = 0,
// doubling when sc = 1.
constexpr Tick pbdrr_next_quantum(Tick prev, Tick sc) {
    return sc == 0 ? prev + ceil_half(prev) : 2 * prev;
}

// Run-to-completion clamp: granting `raw` must not leave 1 or 2 ticks
// behind, so when remaining - raw <= 2 the whole remainder is granted.
constexpr Tick clamp_quantum(Tick raw, Tick remaining) {
    return remaining - raw <= 2 ? remaining : raw;
}

// MRR / classic RR slice: the per-process slot, truncated to the remainder.
constexpr Tick static_quantum(Tick per_slot, Tick remaining) {
    return per_slot < remaining ? per_slot : remaining;
}

} // namespace schedlab
