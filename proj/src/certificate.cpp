#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

#include "mfas/digraph.hpp"
#include "mfas/solver.hpp"

namespace mfas {
namespace {

// Independent of the layers module on purpose: the verifier must not reuse solver code.
std::vector<Vertex> first_layers(const Digraph& h, Vertex root, Direction side, int depth) {
  std::vector<int> dist(h.size(), -1);
  std::deque<Vertex> queue{root};
  dist[root] = 0;
  std::vector<Vertex> reached;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    if (dist[u] == depth) continue;
    for (Vertex w : side == Direction::Out ? h.out(u) : h.in(u)) {
      if (dist[w] >= 0) continue;
      dist[w] = dist[u] + 1;
      reached.push_back(w);
      queue.push_back(w);
    }
  }
  return reached;
}

class Verifier {
 public:
  Verifier(const Digraph& g, int m, const FasResult& r) : g_(g), m_(m), r_(r), visited_(r.trace.size(), false) {
    for (Vertex v = 0; v < g.size(); ++v) by_label_.emplace(g.label(v), v);
  }

  std::vector<std::string> run() {
    if (m_ < 4) fail() << "unsupported m=" << m_;
    if (r_.m != m_) fail() << "result was computed for m=" << r_.m << ", not m=" << m_;
    const Count gamma_g = gamma(g_);
    if (r_.gamma_input != gamma_g) fail() << "gamma_input " << r_.gamma_input << " != γ(G) " << gamma_g;
    if (r_.trace.empty()) {
      fail() << "empty trace";
    } else {
      std::vector<Vertex> all(g_.size());
      for (Vertex v = 0; v < g_.size(); ++v) all[v] = v;
      visit(0, VertexSet(std::move(all)));
      for (std::size_t id = 0; id < visited_.size(); ++id) {
        if (!visited_[id]) fail() << "node " << id << ": unreachable from the root";
      }
    }
    check_global(gamma_g);
    return std::move(messages_);
  }

 private:
  struct Message {
    explicit Message(std::vector<std::string>& sink) : sink_(sink) {}
    ~Message() { sink_.push_back(os_.str()); }
    template <typename T>
    Message& operator<<(const T& x) {
      os_ << x;
      return *this;
    }
    std::vector<std::string>& sink_;
    std::ostringstream os_;
  };

  Message fail() { return Message(messages_); }

  std::optional<VertexSet> to_ids(std::size_t id, const std::vector<Vertex>& labels) {
    std::vector<Vertex> ids;
    for (Vertex l : labels) {
      auto it = by_label_.find(l);
      if (it == by_label_.end()) {
        fail() << "node " << id << ": unknown vertex " << l;
        return std::nullopt;
      }
      ids.push_back(it->second);
    }
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
      fail() << "node " << id << ": repeated vertex";
      return std::nullopt;
    }
    return VertexSet(std::move(ids));
  }

  std::vector<Vertex> labels_of(const Digraph& h, const std::vector<Vertex>& dense) {
    std::vector<Vertex> out;
    for (Vertex v : dense) out.push_back(h.label(v));
    std::sort(out.begin(), out.end());
    return out;
  }

  bool expect_children(std::size_t id, std::size_t count) {
    const auto& node = r_.trace[id];
    if (node.children.size() != count) {
      fail() << "node " << id << ": " << to_string(node.kind) << " node has " << node.children.size()
             << " children, expected " << count;
      return false;
    }
    for (std::size_t c : node.children) {
      if (c >= r_.trace.size()) {
        fail() << "node " << id << ": child id " << c << " out of range";
        return false;
      }
    }
    return true;
  }

  void visit(std::size_t id, const VertexSet& s) {
    if (visited_[id]) {
      fail() << "node " << id << ": reached twice";
      return;
    }
    visited_[id] = true;
    const TraceNode& node = r_.trace[id];
    if (node.vertex_count != s.size()) {
      fail() << "node " << id << ": vertex_count " << node.vertex_count << " != " << s.size();
    }
    const Digraph h = induced(g_, s);
    switch (node.kind) {
      case NodeKind::Base:
        if (!acyclic(h)) fail() << "node " << id << ": base subgraph has a directed cycle";
        expect_children(id, 0);
        return;
      case NodeKind::Trim:
        visit_trim(id, s);
        return;
      case NodeKind::Split:
        visit_split(id, s, h);
        return;
    }
  }

  void visit_trim(std::size_t id, const VertexSet& s) {
    const TraceNode& node = r_.trace[id];
    if (node.removed.empty()) fail() << "node " << id << ": trim removes nothing";
    std::vector<bool> alive(g_.size(), false);
    for (Vertex v : s) alive[v] = true;
    std::vector<Vertex> removed_ids;
    for (Vertex label : node.removed) {
      auto it = by_label_.find(label);
      if (it == by_label_.end() || !alive[it->second]) {
        fail() << "node " << id << ": trimmed vertex " << label << " is not present";
        return;
      }
      const Vertex v = it->second;
      const bool has_in = std::any_of(g_.in(v).begin(), g_.in(v).end(), [&](Vertex u) { return alive[u]; });
      const bool has_out = std::any_of(g_.out(v).begin(), g_.out(v).end(), [&](Vertex w) { return alive[w]; });
      if (has_in && has_out) fail() << "node " << id << ": trimmed vertex " << label << " has both in- and out-edges";
      alive[v] = false;
      removed_ids.push_back(v);
    }
    if (!expect_children(id, 1)) return;
    visit(node.children[0], s.minus(VertexSet(std::move(removed_ids))));
  }

  void visit_split(std::size_t id, const VertexSet& s, const Digraph& h) {
    const TraceNode& node = r_.trace[id];
    const Candidate& c = node.candidate;
    const bool out_side = c.side == Direction::Out;
    if (c.k < 1 || c.k > m_ - 3) {
      fail() << "node " << id << ": k=" << c.k << " outside [1, m-3]";
      return;
    }
    const auto root = h.find_label(c.v);
    if (!root) {
      fail() << "node " << id << ": split vertex " << c.v << " not in the subgraph";
      return;
    }
    std::vector<Vertex> expected1 = labels_of(h, first_layers(h, *root, c.side, c.k + 1));
    if (expected1 != node.part1) {
      fail() << "node " << id << ": V₁ is not the union of the first k+1 layers of v";
    }
    const auto p1 = to_ids(id, node.part1);
    const auto p2 = to_ids(id, node.part2);
    if (!p1 || !p2) return;
    if (p1->united(*p2) != s || p1->size() + p2->size() != s.size()) {
      fail() << "node " << id << ": {V₁, V₂} is not a partition of the node's vertices";
      return;
    }
    if (p1->empty() || p2->empty()) fail() << "node " << id << ": empty side in split";

    auto cut = out_side ? edges_between(g_, *p1, *p2).edges : edges_between(g_, *p2, *p1).edges;
    std::vector<Edge> cut_labels;
    for (const Edge& e : cut) cut_labels.push_back(g_.labeled(e));
    std::sort(cut_labels.begin(), cut_labels.end());
    std::vector<Edge> recorded = node.cut;
    std::sort(recorded.begin(), recorded.end());
    if (recorded != cut_labels) fail() << "node " << id << ": " << (out_side ? "X₃ ≠ E(V₁,V₂)" : "X₃ ≠ E(V₂,V₁)");
    if (c.numerator != recorded.size()) fail() << "node " << id << ": candidate numerator != |X₃|";

    const Count missing = missing_between(g_, *p1, *p2);
    if (node.missing != missing) fail() << "node " << id << ": recorded |Ē(V₁,V₂)| " << node.missing << " != " << missing;
    if (static_cast<WideCount>(m_ - 2) * recorded.size() > missing) {
      fail() << "node " << id << ": (m-2)|X₃| > |Ē(V₁,V₂)|";
    }
    const Count g0 = gamma(h);
    const Count g1 = gamma(induced(g_, *p1));
    const Count g2 = gamma(induced(g_, *p2));
    if (node.gamma != g0 || node.gamma1 != g1 || node.gamma2 != g2) {
      fail() << "node " << id << ": recorded γ values do not match the subgraphs";
    }
    if (node.gamma != node.gamma1 + node.gamma2 + node.missing || g0 != g1 + g2 + missing) {
      fail() << "node " << id << ": γ(G) ≠ γ(G₁) + γ(G₂) + |Ē(V₁,V₂)|";
    }
    for (const Edge& e : recorded) collected_.push_back(e);
    if (!expect_children(id, 2)) return;
    visit(node.children[0], *p1);
    visit(node.children[1], *p2);
  }

  void check_global(Count gamma_g) {
    std::vector<Edge> x = r_.edges;
    std::sort(x.begin(), x.end());
    std::sort(collected_.begin(), collected_.end());
    if (x != collected_) fail() << "X is not the union of the split cuts";
    std::vector<Edge> dense;
    for (const Edge& e : x) {
      auto from = by_label_.find(e.from), to = by_label_.find(e.to);
      if (from == by_label_.end() || to == by_label_.end() || !g_.has_edge(from->second, to->second)) {
        fail() << "X contains " << e << ", which is not an edge of G";
        continue;
      }
      dense.push_back({from->second, to->second});
    }
    if (auto cyc = is_acyclic(remove_edges(g_, dense)); std::holds_alternative<CycleWitness>(cyc)) {
      fail() << "G − X has a directed cycle";
    }
    if (static_cast<WideCount>(m_ - 2) * x.size() > gamma_g) fail() << "(m-2)|X| > γ(G)";
  }

  const Digraph& g_;
  int m_;
  const FasResult& r_;
  std::vector<bool> visited_;
  std::unordered_map<Vertex, Vertex> by_label_;
  std::vector<Edge> collected_;
  std::vector<std::string> messages_;
};

}  // namespace

std::vector<std::string> verify_certificate(const Digraph& g, int m, const FasResult& result) {
  return Verifier(g, m, result).run();
}

}  // namespace mfas
