#pragma once

#include <string>
#include <string_view>

#include "aggression/graph.hpp"

namespace aggression {

/// Named board families with a fixed labeling:
///   matching(m)  edges (2i, 2i+1)
///   cycle(n)     edges (i, i+1 mod n), n >= 3
///   path(n)      edges (i, i+1)
///   complete(n)  all pairs
///   star(n)      centre 0 joined to 1..n-1
struct GraphFamily {
  enum class Kind { matching, cycle, path, complete, star };
  Kind kind = Kind::matching;
  int parameter = 1;

  static GraphFamily matching(int m) { return {Kind::matching, m}; }
  static GraphFamily cycle(int n) { return {Kind::cycle, n}; }
  static GraphFamily path(int n) { return {Kind::path, n}; }
  static GraphFamily complete(int n) { return {Kind::complete, n}; }
  static GraphFamily star(int n) { return {Kind::star, n}; }

  /// Parses "matching:3", "cycle:5" and so on.
  static GraphFamily parse(std::string_view spec);
  std::string to_string() const;
};

Graph generate(const GraphFamily& family);

inline Graph matching(int m) { return generate(GraphFamily::matching(m)); }
inline Graph cycle(int n) { return generate(GraphFamily::cycle(n)); }
inline Graph path(int n) { return generate(GraphFamily::path(n)); }
inline Graph complete(int n) { return generate(GraphFamily::complete(n)); }
inline Graph star(int n) { return generate(GraphFamily::star(n)); }

/// {"vertices": N, "edges": [[u, v], ...]}. Errors carry line and column.
Graph parse_graph(std::string_view text);
/// Compact canonical form, edges sorted, no trailing newline.
std::string serialize_graph(const Graph& g);

}  // namespace aggression
