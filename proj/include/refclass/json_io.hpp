#pragma once

#include "refclass/consistency.hpp"
#include "refclass/inference.hpp"

#include <json.hpp>

namespace refclass {

// Endpoints are exact strings ("1/2"), never floats.
nlohmann::json to_json(const Interval& iv);
Interval interval_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Trace& trace);
// Inverse of to_json(Trace); throws nlohmann::json::exception or
// std::invalid_argument on malformed input.
Trace trace_from_json(const nlohmann::json& j);

// {query, mode, status, interval?, reference_class?, reason?}
nlohmann::json result_json(const std::string& query, Mode mode, const ProbResult& result);

nlohmann::json to_json(const FiniteModel& model);
nlohmann::json to_json(const SanityReport& report);

}  // namespace refclass
