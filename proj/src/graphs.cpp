#include "aggression/graphs.hpp"

#include <charconv>

#include "aggression/errors.hpp"
#include "json_util.hpp"

namespace aggression {

namespace {

const char* kind_name(GraphFamily::Kind k) {
  switch (k) {
    case GraphFamily::Kind::matching: return "matching";
    case GraphFamily::Kind::cycle: return "cycle";
    case GraphFamily::Kind::path: return "path";
    case GraphFamily::Kind::complete: return "complete";
    case GraphFamily::Kind::star: return "star";
  }
  return "?";
}

}  // namespace

GraphFamily GraphFamily::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw RuleError("family-spec", "expected <family>:<n>, got '" + std::string(spec) + "'");
  const auto name = spec.substr(0, colon);
  const auto num = spec.substr(colon + 1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
  if (ec != std::errc() || ptr != num.data() + num.size())
    throw RuleError("family-spec", "bad parameter in '" + std::string(spec) + "'");
  for (auto k : {Kind::matching, Kind::cycle, Kind::path, Kind::complete, Kind::star})
    if (name == kind_name(k)) return {k, value};
  throw RuleError("family-spec", "unknown family '" + std::string(name) + "'");
}

std::string GraphFamily::to_string() const {
  return std::string(kind_name(kind)) + ":" + std::to_string(parameter);
}

Graph generate(const GraphFamily& f) {
  const int p = f.parameter;
  if (p < 1) throw RuleError("family-parameter", "family parameter must be >= 1");
  std::vector<Edge> e;
  switch (f.kind) {
    case GraphFamily::Kind::matching:
      for (int i = 0; i < p; ++i) e.emplace_back(2 * i, 2 * i + 1);
      return Graph(2 * p, std::move(e));
    case GraphFamily::Kind::cycle:
      if (p < 3) throw RuleError("family-parameter", "cycle needs n >= 3");
      for (int i = 0; i < p; ++i) e.emplace_back(i, (i + 1) % p);
      return Graph(p, std::move(e));
    case GraphFamily::Kind::path:
      for (int i = 0; i + 1 < p; ++i) e.emplace_back(i, i + 1);
      return Graph(p, std::move(e));
    case GraphFamily::Kind::complete:
      for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) e.emplace_back(i, j);
      return Graph(p, std::move(e));
    case GraphFamily::Kind::star:
      for (int i = 1; i < p; ++i) e.emplace_back(0, i);
      return Graph(p, std::move(e));
  }
  throw RuleError("family", "unknown family");
}

Graph parse_graph(std::string_view text) {
  using detail::fail_at;
  const auto doc = detail::parse_json(text);
  if (!doc.is_object()) throw ParseError("graph document must be an object", 1, 1);
  const long long n = detail::require_int(doc, "vertices", text);
  if (n < 0 || n > (1 << 24)) fail_at(text, "vertices", -1, "vertex count out of range");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    fail_at(text, "edges", -1, "\"edges\" must be an array");
  std::vector<Edge> edges;
  std::vector<std::pair<Edge, int>> seen;
  int i = 0;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      fail_at(text, "edges", i, "edge must be a pair of integers");
    long long u = e[0].get<long long>(), v = e[1].get<long long>();
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail_at(text, "edges", i, "vertex-out-of-range: edge [" + std::to_string(u) + "," + std::to_string(v) + "]");
    if (u == v) fail_at(text, "edges", i, "self-loop: edge [" + std::to_string(u) + "," + std::to_string(v) + "]");
    Edge norm{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    edges.push_back(norm);
    seen.emplace_back(norm, i);
    ++i;
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t k = 1; k < seen.size(); ++k) {
    if (seen[k].first == seen[k - 1].first)
      fail_at(text, "edges", std::max(seen[k].second, seen[k - 1].second),
              "duplicate-edge: edge [" + std::to_string(seen[k].first.first) + "," +
                  std::to_string(seen[k].first.second) + "]");
  }
  return Graph(static_cast<std::int32_t>(n), std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  detail::ordered_json j;
  j["vertices"] = g.vertex_count();
  auto edges = detail::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j.dump();
}

}  // namespace aggression
