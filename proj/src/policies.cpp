#include "schedlab/policies.hpp"

#include <stdexcept>

namespace schedlab {

void validate_policy(const PolicyConfig& p) {
    if (p.kind == PolicyKind::rr) {
        if (p.fixed_quantum < 1) {
            throw std::invalid_argument("rr requires a fixed quantum >= 1");
        }
    } else if (p.ots < 1) {
        throw std::invalid_argument(policy_name(p.kind) + " requires ots >= 1");
    }
}

std::string policy_name(PolicyKind k) {
    switch (k) {
    case PolicyKind::pbdrr: return "pbdrr";
    case PolicyKind::mrr: return "mrr";
    case PolicyKind::rr: return "rr";
    }
    return "?";
}

PolicyKind parse_policy_kind(std::string_view name) {
    if (name == "pbdrr") return PolicyKind::pbdrr;
    if (name == "mrr") return PolicyKind::mrr;
    if (name == "rr") return PolicyKind::rr;
    throw std::invalid_argument("unknown policy \"" + std::string(name) +
                                "\" (expected pbdrr, mrr or rr)");
}

} // namespace schedlab
