#pragma once

#include <nlohmann/json.hpp>

#include "schedlab/engine.hpp"
#include "schedlab/metrics.hpp"
#include "schedlab/report.hpp"
#include "schedlab/timeslice.hpp"
#include "schedlab/workload.hpp"

// nlohmann::json builders backing the string serializers, exposed so
// callers (the CLI) can compose documents without reparsing.

namespace schedlab {

nlohmann::json workload_to_json(const Workload& w);
nlohmann::json breakdowns_to_json(const Workload& w, const std::vector<TimeSliceBreakdown>& b);
nlohmann::json trace_to_json(const ExecutionTrace& t);
nlohmann::json metrics_to_json(const ScheduleMetrics& m);
nlohmann::json policy_to_json(const PolicyConfig& p);
nlohmann::json comparison_to_json(const ComparisonReport& r);

} // namespace schedlab
