#include "mfas/report.hpp"

#include <numeric>

#include "mfas/edge_list.hpp"
#include "mfas/errors.hpp"

namespace mfas {
namespace {

Json node_to_json(const FasResult& r, std::size_t id) {
  const TraceNode& node = r.trace.at(id);
  Json j;
  j["id"] = id;
  j["kind"] = to_string(node.kind);
  j["vertex_count"] = node.vertex_count;
  if (node.kind == NodeKind::Trim) j["removed"] = node.removed;
  if (node.kind == NodeKind::Split) {
    const Candidate& c = node.candidate;
    j["candidate"] = {{"v", c.v},
                      {"k", c.k},
                      {"side", to_string(c.side)},
                      {"numerator", c.numerator},
                      {"denominator", c.denominator},
                      {"ratio", c.ratio().str()}};
    j["v1"] = node.part1;
    j["v2"] = node.part2;
    j["x3"] = edges_to_json(node.cut);
    j["missing"] = node.missing;
    j["gamma"] = node.gamma;
    j["gamma_1"] = node.gamma1;
    j["gamma_2"] = node.gamma2;
  }
  if (!node.children.empty()) {
    Json children = Json::array();
    for (std::size_t c : node.children) children.push_back(node_to_json(r, c));
    j["children"] = std::move(children);
  }
  return j;
}

std::vector<Edge> edges_from_json(const Json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) out.push_back({e.at(0).get<Vertex>(), e.at(1).get<Vertex>()});
  return out;
}

NodeKind kind_from(const std::string& s) {
  for (NodeKind k : {NodeKind::Base, NodeKind::Trim, NodeKind::Split}) {
    if (s == to_string(k)) return k;
  }
  throw BadParameter("unknown trace node kind '" + s + "'");
}

std::size_t node_from_json(const Json& j, std::vector<TraceNode>& out) {
  const std::size_t id = out.size();
  out.emplace_back();
  TraceNode node;
  node.kind = kind_from(j.at("kind").get<std::string>());
  node.vertex_count = j.at("vertex_count").get<std::size_t>();
  if (node.kind == NodeKind::Trim) node.removed = j.at("removed").get<std::vector<Vertex>>();
  if (node.kind == NodeKind::Split) {
    const Json& c = j.at("candidate");
    node.candidate.v = c.at("v").get<Vertex>();
    node.candidate.k = c.at("k").get<int>();
    const auto side = c.at("side").get<std::string>();
    if (side != "out" && side != "in") throw BadParameter("unknown side '" + side + "'");
    node.candidate.side = side == "out" ? Direction::Out : Direction::In;
    node.candidate.numerator = c.at("numerator").get<Count>();
    node.candidate.denominator = c.at("denominator").get<Count>();
    node.part1 = j.at("v1").get<std::vector<Vertex>>();
    node.part2 = j.at("v2").get<std::vector<Vertex>>();
    node.cut = edges_from_json(j.at("x3"));
    node.missing = j.at("missing").get<Count>();
    node.gamma = j.at("gamma").get<Count>();
    node.gamma1 = j.at("gamma_1").get<Count>();
    node.gamma2 = j.at("gamma_2").get<Count>();
  }
  if (j.contains("children")) {
    for (const auto& child : j.at("children")) node.children.push_back(node_from_json(child, out));
  }
  out[id] = std::move(node);
  return id;
}

}  // namespace

Json edges_to_json(const std::vector<Edge>& edges) {
  Json arr = Json::array();
  for (const Edge& e : edges) arr.push_back({e.from, e.to});
  return arr;
}

Json to_json(const GenSpec& spec) {
  Json j;
  j["model"] = to_string(spec.model);
  j["n"] = spec.n;
  j["m"] = spec.m;
  switch (spec.model) {
    case Model::Circulant: j["steps"] = spec.steps; break;
    case Model::Blowup: j["sizes"] = spec.sizes; break;
    case Model::ErRepair: j["p"] = spec.p.str(); break;
    case Model::Cycle: break;
  }
  j["seed"] = spec.seed;
  return j;
}

GenSpec genspec_from_json(const Json& j) {
  GenSpec spec;
  spec.model = parse_model(j.at("model").get<std::string>());
  spec.n = j.at("n").get<std::size_t>();
  spec.m = j.at("m").get<int>();
  if (j.contains("steps")) spec.steps = j.at("steps").get<std::vector<std::size_t>>();
  if (j.contains("sizes")) spec.sizes = j.at("sizes").get<std::vector<std::size_t>>();
  if (j.contains("p")) spec.p = Probability::parse(j.at("p").get<std::string>());
  spec.seed = j.at("seed").get<std::uint64_t>();
  return spec;
}

Json trace_to_json(const FasResult& result) {
  if (result.trace.empty()) return Json();
  return node_to_json(result, 0);
}

std::vector<TraceNode> trace_from_json(const Json& j) {
  std::vector<TraceNode> out;
  if (!j.is_null()) node_from_json(j, out);
  return out;
}

Json make_report(const SolveReport& r) {
  const Digraph& g = *r.graph;
  const FasResult& x = *r.result;
  const Count gamma_g = gamma(g);
  Json j;
  j["input_digest"] = input_digest(g);
  j["m"] = x.m;
  j["n"] = g.size();
  j["edge_count"] = g.edge_count();
  j["gamma"] = gamma_g;
  if (auto c = girth(g)) {
    j["girth"] = c->length();
  } else {
    j["girth"] = nullptr;
  }
  j["fas_size"] = x.edges.size();
  j["bound_value"] = x.m > 2 ? gamma_g / static_cast<Count>(x.m - 2) : 0;
  j["certificate_ok"] = r.certificate_ok;
  if (r.exact_beta) j["exact_beta"] = *r.exact_beta;
  j["fas_edges"] = edges_to_json(x.edges);
  j["trace"] = trace_to_json(x);
  if (r.generator) j["generator"] = to_json(*r.generator);
  if (r.solve_ms || r.verify_ms) {
    Json t;
    if (r.solve_ms) t["solve"] = *r.solve_ms;
    if (r.verify_ms) t["verify"] = *r.verify_ms;
    j["wall_time_ms"] = std::move(t);
  }
  return j;
}

FasResult fas_result_from_report(const Json& report) {
  for (const char* field : {"m", "gamma", "fas_edges", "trace"}) {
    if (!report.contains(field)) throw BadParameter(std::string("report has no '") + field + "' field");
  }
  if (report.at("trace").is_null()) throw BadParameter("report has an empty trace");
  FasResult r;
  r.m = report.at("m").get<int>();
  r.gamma_input = report.at("gamma").get<Count>();
  r.edges = edges_from_json(report.at("fas_edges"));
  r.trace = trace_from_json(report.at("trace"));
  return r;
}

}  // namespace mfas
