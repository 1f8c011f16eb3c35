#pragma once

#include <json.hpp>

#include "tropcomm/commutant.hpp"
#include "tropcomm/constraint_system.hpp"
#include "tropcomm/grid_oracle.hpp"
#include "tropcomm/matrix.hpp"
#include "tropcomm/perturb.hpp"
#include "tropcomm/section.hpp"
#include "tropcomm/span.hpp"
#include "tropcomm/winner.hpp"

namespace tropcomm {

// All semiring values are serialized as exact strings ("-5", "-5/2", "-inf"),
// never as floats.  Structural sizes and indices stay JSON numbers.

nlohmann::json matrix_to_json(const TropMatrix& m);
TropMatrix matrix_from_json(const nlohmann::json& j);

// Positions are 1-based in JSON: {"n": 4, "entries": {"1,2": [1, 1], ...}}.
// Missing off-diagonal entries default to the identity map.
nlohmann::json winner_to_json(const Winner& w);
Winner winner_from_json(const nlohmann::json& j);

nlohmann::json system_to_json(const DiffConstraintSystem& s);
DiffConstraintSystem system_from_json(const nlohmann::json& j);

nlohmann::json commute_report_to_json(const CommutationReport& r, std::size_t witness_cap = 16);

nlohmann::json section_to_json(const SpanSection& s);

nlohmann::json span_membership_to_json(const SpanMembership& m);

nlohmann::json pq_report_to_json(const PqReport& r);

nlohmann::json grid_report_to_json(const GridOracleReport& r);

} // namespace tropcomm
