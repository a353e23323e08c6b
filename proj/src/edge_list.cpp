#include "mfas/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "mfas/errors.hpp"
#include "mfas/report.hpp"

namespace mfas {
namespace {

constexpr std::string_view kGenSpecTag = "# genspec ";
constexpr std::uint64_t kMaxVertices = 1u << 24;

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t number(std::string_view tok, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

EdgeListFile parse_edge_list(std::istream& in) {
  EdgeListFile file;
  std::optional<std::uint64_t> n, declared;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text(raw);
    if (text.substr(0, kGenSpecTag.size()) == kGenSpecTag) {
      try {
        file.generator = genspec_from_json(Json::parse(text.substr(kGenSpecTag.size())));
      } catch (const std::exception& e) {
        throw ParseError(line, std::string("bad genspec comment: ") + e.what());
      }
      continue;
    }
    if (auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
    const auto tok = tokens(text);
    if (tok.empty()) continue;
    if (!n) {
      if (tok.size() != 4 || tok[0] != "n" || tok[2] != "m_edges") {
        throw ParseError(line, "expected header 'n <N> m_edges <M>'");
      }
      n = number(tok[1], line, "vertex count");
      declared = number(tok[3], line, "edge count");
      if (*n > kMaxVertices) throw ParseError(line, "vertex count too large");
      continue;
    }
    if (tok.size() != 2) throw ParseError(line, "expected 'u v'");
    const auto u = number(tok[0], line, "vertex id");
    const auto v = number(tok[1], line, "vertex id");
    if (u >= *n || v >= *n) throw ParseError(line, "vertex id out of range [0," + std::to_string(*n) + ")");
    if (u == v) throw ParseError(line, "loop edge " + std::to_string(u) + " " + std::to_string(v));
    const Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (!seen.insert(e).second) throw ParseError(line, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    if (edges.size() == *declared) throw ParseError(line, "more edges than the declared " + std::to_string(*declared));
    edges.push_back(e);
  }
  if (!n) throw ParseError(line, "missing header 'n <N> m_edges <M>'");
  if (edges.size() != *declared) {
    throw ParseError(line, "declared " + std::to_string(*declared) + " edges, found " + std::to_string(edges.size()));
  }
  file.graph = Digraph::build(*n, edges);
  return file;
}

EdgeListFile parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

EdgeListFile read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return parse_edge_list(in);
}

std::string render_edge_list(const Digraph& g, const std::optional<GenSpec>& generator) {
  std::ostringstream os;
  if (generator) {
    os << kGenSpecTag << to_json(*generator).dump() << '\n';
  }
  os << "n " << g.size() << " m_edges " << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e.from << ' ' << e.to << '\n';
  return os.str();
}

std::string input_digest(const Digraph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : render_edge_list(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

}  // namespace mfas
