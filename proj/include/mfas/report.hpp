#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "mfas/digraph.hpp"
#include "mfas/generators.hpp"
#include "mfas/solver.hpp"

namespace mfas {

using Json = nlohmann::ordered_json;

Json to_json(const GenSpec& spec);
GenSpec genspec_from_json(const Json& j);

/// Nested trace rooted at result.trace[0]; children serialize depth-first.
Json trace_to_json(const FasResult& result);
/// Inverse of trace_to_json; node ids are re-assigned in pre-order.
std::vector<TraceNode> trace_from_json(const Json& j);

struct SolveReport {
  const Digraph* graph = nullptr;
  const FasResult* result = nullptr;
  bool certificate_ok = false;
  std::optional<Count> exact_beta;
  std::optional<GenSpec> generator;
  std::optional<double> solve_ms;
  std::optional<double> verify_ms;
};

/// Fields: input_digest, m, n, edge_count, gamma, girth, fas_size, bound_value,
/// certificate_ok, exact_beta?, fas_edges, trace, generator?, wall_time_ms?
Json make_report(const SolveReport& r);

/// FasResult stored in a report. Throws BadParameter when a field is missing.
FasResult fas_result_from_report(const Json& report);

Json edges_to_json(const std::vector<Edge>& edges);

}  // namespace mfas
