#pragma once

#include <filesystem>
#include <istream>
#include <optional>
#include <string>

#include "mfas/digraph.hpp"
#include "mfas/generators.hpp"

namespace mfas {

/// Text edge list:
///
///     # comment (from '#' to end of line)
///     n <N> m_edges <M>
///     u v        (M lines, 0 <= u, v < N, u != v, no repeats)
///
/// Blank lines are ignored. A generated file additionally carries one
/// "# genspec {...}" comment with its generator parameters as JSON.
struct EdgeListFile {
  Digraph graph;
  std::optional<GenSpec> generator;
};

/// Throws ParseError with the offending line number.
EdgeListFile parse_edge_list(std::istream& in);
EdgeListFile parse_edge_list(const std::string& text);
EdgeListFile read_edge_list(const std::filesystem::path& path);

std::string render_edge_list(const Digraph& g, const std::optional<GenSpec>& generator = std::nullopt);

/// "fnv1a64:<16 hex digits>" over the rendered edge list without comments.
std::string input_digest(const Digraph& g);

}  // namespace mfas
