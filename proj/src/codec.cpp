#include "aggression/codec.hpp"

#include <array>

#include "aggression/errors.hpp"
#include "aggression/graphs.hpp"
#include "json_util.hpp"

namespace aggression {

namespace codec {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what, 0, 0); }

const nlohmann::json& need(const nlohmann::json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing \"") + key + "\"");
  return *it;
}

long long need_int(const nlohmann::json& j, const char* key) {
  const auto& v = need(j, key);
  if (!v.is_number_integer()) bad(std::string("\"") + key + "\" must be an integer");
  return v.get<long long>();
}

std::string need_string(const nlohmann::json& j, const char* key) {
  const auto& v = need(j, key);
  if (!v.is_string()) bad(std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

bool need_bool(const nlohmann::json& j, const char* key) {
  const auto& v = need(j, key);
  if (!v.is_boolean()) bad(std::string("\"") + key + "\" must be a boolean");
  return v.get<bool>();
}

const nlohmann::json& need_array(const nlohmann::json& j, const char* key) {
  const auto& v = need(j, key);
  if (!v.is_array()) bad(std::string("\"") + key + "\" must be an array");
  return v;
}

std::vector<std::string> strings(const nlohmann::json& j, const char* key) {
  std::vector<std::string> out;
  for (const auto& s : need_array(j, key)) {
    if (!s.is_string()) bad(std::string("\"") + key + "\" must hold strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

json pair_json(int lata, int raj) { return json{{"lata", lata}, {"raj", raj}}; }

std::array<int, 2> pair_from(const nlohmann::json& j) {
  return {static_cast<int>(need_int(j, "lata")), static_cast<int>(need_int(j, "raj"))};
}

// Sparse per-vertex troop map keyed by decimal vertex id, ascending.
json placement_json(const std::vector<int>& troops) {
  json j = json::object();
  for (std::size_t v = 0; v < troops.size(); ++v)
    if (troops[v] != 0) j[std::to_string(v)] = troops[v];
  return j;
}

std::vector<int> placement_from(const nlohmann::json& j, int n, const char* key) {
  if (!j.is_object()) bad(std::string("\"") + key + "\" must be an object");
  std::vector<int> out(n, 0);
  for (const auto& [k, v] : j.items()) {
    std::size_t used = 0;
    long long id = -1;
    try {
      id = std::stoll(k, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != k.size() || id < 0 || id >= n) bad(std::string("\"") + key + "\" has bad vertex key \"" + k + "\"");
    if (!v.is_number_integer() || v.get<long long>() < 0)
      bad(std::string("\"") + key + "\" troop counts must be non-negative integers");
    out[id] = static_cast<int>(v.get<long long>());
  }
  return out;
}

json moves_json(const std::vector<Move>& moves) {
  json a = json::array();
  for (const auto& m : moves) a.push_back(to_json(m));
  return a;
}

std::vector<Move> moves_from(const nlohmann::json& j) {
  if (!j.is_array()) bad("move list must be an array");
  std::vector<Move> out;
  for (const auto& m : j) out.push_back(move_from_json(m));
  return out;
}

template <class F>
auto guarded(std::string_view text, F&& f) {
  const auto doc = detail::parse_json(text);
  try {
    return f(doc);
  } catch (const RuleError& e) {
    throw ParseError(e.what(), 0, 0);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

template <class E, class P>
E enum_from(const nlohmann::json& j, const char* key, P parse) {
  try {
    return parse(need_string(j, key));
  } catch (const RuleError& e) {
    bad(std::string("\"") + key + "\": " + e.what());
  }
}

}  // namespace

nlohmann::json parse(std::string_view text) { return detail::parse_json(text); }

json to_json(const Graph& g) {
  json j;
  j["vertices"] = g.vertex_count();
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

Graph graph_from_json(const nlohmann::json& j) { return parse_graph(j.dump()); }

json to_json(const Move& m) {
  json j;
  switch (m.kind) {
    case Move::Kind::place:
      j["type"] = "place";
      j["vertex"] = m.vertex;
      j["count"] = m.count;
      break;
    case Move::Kind::pass_placement: j["type"] = "pass_placement"; break;
    case Move::Kind::attack:
      j["type"] = "attack";
      j["vertex"] = m.vertex;
      break;
    case Move::Kind::pass_attack: j["type"] = "pass_attack"; break;
  }
  return j;
}

Move move_from_json(const nlohmann::json& j) {
  const std::string type = need_string(j, "type");
  if (type == "place")
    return Move::place(static_cast<Vertex>(need_int(j, "vertex")), static_cast<int>(need_int(j, "count")));
  if (type == "attack") return Move::attack(static_cast<Vertex>(need_int(j, "vertex")));
  if (type == "pass_placement") return Move::pass_placement();
  if (type == "pass_attack") return Move::pass_attack();
  bad("unknown move type \"" + type + "\"");
}

json to_json(const Payoff& p) { return json{{"territory_diff", p.territory_diff}, {"troop_diff", p.troop_diff}}; }

Payoff payoff_from_json(const nlohmann::json& j) {
  return {static_cast<int>(need_int(j, "territory_diff")), static_cast<int>(need_int(j, "troop_diff"))};
}

json to_json(const Outcome& o) {
  json j;
  j["result"] = to_string(o.result);
  j["strong_win"] = o.strong_win;
  j["territories"] = pair_json(o.territories[0], o.territories[1]);
  j["surviving_troops"] = pair_json(o.surviving_troops[0], o.surviving_troops[1]);
  j["payoff"] = to_json(o.payoff());
  return j;
}

json to_json(const RuleConfig& c) {
  json j;
  j["attack_policy"] = c.attack_policy == AttackPolicy::mandatory ? "mandatory" : "optional";
  j["placement_cap"] = c.placement_cap ? json(*c.placement_cap) : json(nullptr);
  return j;
}

RuleConfig config_from_json(const nlohmann::json& j) {
  RuleConfig c;
  if (!j.is_object()) bad("config must be an object");
  if (j.contains("attack_policy")) {
    const auto p = need_string(j, "attack_policy");
    if (p == "mandatory") c.attack_policy = AttackPolicy::mandatory;
    else if (p == "optional") c.attack_policy = AttackPolicy::optional;
    else bad("attack_policy must be \"mandatory\" or \"optional\"");
  }
  if (j.contains("placement_cap") && !j["placement_cap"].is_null()) {
    const auto cap = need_int(j, "placement_cap");
    if (cap < 1) bad("placement_cap must be at least 1");
    c.placement_cap = static_cast<int>(cap);
  }
  return c;
}

json to_json(const ColoredGraph& g) {
  json j;
  j["k"] = g.k;
  j["n"] = g.n;
  j["classes"] = g.classes;
  json edges = json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

ColoredGraph colored_graph_from_json(const nlohmann::json& j) {
  ColoredGraph g;
  g.k = static_cast<int>(need_int(j, "k"));
  g.n = static_cast<int>(need_int(j, "n"));
  for (const auto& cls : need_array(j, "classes")) {
    if (!cls.is_array()) bad("each class must be an array of vertex ids");
    g.classes.push_back(cls.get<std::vector<Vertex>>());
  }
  for (const auto& e : need_array(j, "edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      bad("edge must be a pair of integers");
    g.edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
  }
  validate(g);
  return g;
}

json to_json(const ORInstance& in) {
  json j;
  j["graph"] = to_json(in.graph);
  j["f1"] = placement_json(in.lata_placement);
  j["f2"] = placement_json(in.raj_placement);
  j["sigma"] = in.sigma;
  return j;
}

ORInstance instance_from_json(const nlohmann::json& j) {
  ORInstance in;
  in.graph = graph_from_json(need(j, "graph"));
  const int n = in.graph.vertex_count();
  in.lata_placement = placement_from(need(j, "f1"), n, "f1");
  in.raj_placement = placement_from(need(j, "f2"), n, "f2");
  for (const auto& v : need_array(j, "sigma")) {
    if (!v.is_number_integer()) bad("sigma entries must be vertex ids");
    in.sigma.push_back(v.get<Vertex>());
  }
  validate(in);
  return in;
}

json to_json(const std::vector<PlannedAttack>& tau) {
  json a = json::array();
  for (const auto& t : tau) a.push_back(t ? json(*t) : json("skip"));
  return a;
}

std::vector<PlannedAttack> tau_from_json(const nlohmann::json& j) {
  if (!j.is_array()) bad("tau must be an array");
  std::vector<PlannedAttack> out;
  for (const auto& t : j) {
    if (t.is_string() && t.get<std::string>() == "skip") out.emplace_back(std::nullopt);
    else if (t.is_number_integer()) out.emplace_back(t.get<Vertex>());
    else bad("tau entries must be vertex ids or \"skip\"");
  }
  return out;
}

json to_json(const ORAnswer& a) {
  json j;
  j["decision"] = a.decision ? "yes" : "no";
  j["tau"] = a.witness_tau ? to_json(*a.witness_tau) : json(nullptr);
  j["nodes"] = a.nodes;
  return j;
}

json to_json(const SolveResult& r) {
  json j;
  j["value"] = to_json(r.value);
  j["result"] = r.value > Payoff{} ? "lata_win" : r.value < Payoff{} ? "raj_win" : "draw";
  j["best_move"] = r.best_move ? to_json(*r.best_move) : json(nullptr);
  j["principal_line"] = moves_json(r.principal_line);
  j["nodes_expanded"] = r.nodes_expanded;
  j["table_hits"] = r.table_hits;
  return j;
}

json to_json(const VerificationReport& r) {
  json j;
  j["strategy"] = to_string(r.strategy);
  j["graph"] = to_json(r.graph);
  j["budgets"] = pair_json(r.budgets.lata, r.budgets.raj);
  j["config"] = to_json(r.config);
  j["mode"] = to_string(r.mode);
  j["guarantee"] = to_string(r.guarantee_claimed);
  j["symmetry_requested"] = to_string(r.symmetry_requested);
  j["symmetry_used"] = to_string(r.symmetry_used);
  j["status"] = to_string(r.status);
  j["holds"] = r.holds;
  j["counterexample"] = r.counterexample ? moves_json(*r.counterexample) : json(nullptr);
  j["counterexample_payoff"] = r.counterexample_payoff ? to_json(*r.counterexample_payoff) : json(nullptr);
  j["strategy_bug"] = r.strategy_bug;
  j["unspecified_lines"] = r.unspecified_lines;
  j["lines_explored"] = r.lines_explored;
  j["states_deduplicated"] = r.states_deduplicated;
  j["positions"] = r.positions;
  const auto& d = r.discrepancies;
  json dj;
  dj["failing_rows"] = d.failing_rows;
  dj["ambiguous_rows"] = d.ambiguous_rows;
  dj["infeasible_rows"] = d.infeasible_rows;
  json un = json::array();
  for (const auto& u : d.unspecified) un.push_back(json{{"message", u.message}, {"count", u.count}});
  dj["unspecified"] = std::move(un);
  dj["repairs"] = d.repairs;
  dj["repair_count"] = d.repair_count;
  j["discrepancies"] = std::move(dj);
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  r.strategy = enum_from<StrategyId>(j, "strategy", parse_strategy);
  r.graph = graph_from_json(need(j, "graph"));
  const auto b = pair_from(need(j, "budgets"));
  r.budgets = {b[0], b[1]};
  r.config = config_from_json(need(j, "config"));
  r.mode = enum_from<StrategyMode>(j, "mode", parse_strategy_mode);
  r.guarantee_claimed = enum_from<Guarantee>(j, "guarantee", parse_guarantee);
  r.symmetry_requested = enum_from<SymmetryGroup>(j, "symmetry_requested", parse_symmetry);
  r.symmetry_used = enum_from<SymmetryGroup>(j, "symmetry_used", parse_symmetry);
  r.status = enum_from<VerificationStatus>(j, "status", parse_verification_status);
  r.holds = need_bool(j, "holds");
  if (const auto& c = need(j, "counterexample"); !c.is_null()) r.counterexample = moves_from(c);
  if (const auto& p = need(j, "counterexample_payoff"); !p.is_null()) r.counterexample_payoff = payoff_from_json(p);
  r.strategy_bug = need_string(j, "strategy_bug");
  r.unspecified_lines = static_cast<std::uint64_t>(need_int(j, "unspecified_lines"));
  r.lines_explored = static_cast<std::uint64_t>(need_int(j, "lines_explored"));
  r.states_deduplicated = static_cast<std::uint64_t>(need_int(j, "states_deduplicated"));
  r.positions = static_cast<std::uint64_t>(need_int(j, "positions"));
  const auto& dj = need(j, "discrepancies");
  auto& d = r.discrepancies;
  d.failing_rows = strings(dj, "failing_rows");
  d.ambiguous_rows = strings(dj, "ambiguous_rows");
  d.infeasible_rows = strings(dj, "infeasible_rows");
  for (const auto& u : need_array(dj, "unspecified"))
    d.unspecified.push_back({need_string(u, "message"), static_cast<std::uint64_t>(need_int(u, "count"))});
  d.repairs = strings(dj, "repairs");
  d.repair_count = static_cast<std::uint64_t>(need_int(dj, "repair_count"));
  return r;
}

}  // namespace codec

std::string serialize_move(const Move& m) { return codec::to_json(m).dump(); }
Move parse_move(std::string_view text) {
  return codec::guarded(text, [](const auto& j) { return codec::move_from_json(j); });
}

std::string serialize_colored_graph(const ColoredGraph& g) { return codec::to_json(g).dump(); }
ColoredGraph parse_colored_graph(std::string_view text) {
  return codec::guarded(text, [](const auto& j) { return codec::colored_graph_from_json(j); });
}

std::string serialize_instance(const ORInstance& in) { return codec::to_json(in).dump(); }
ORInstance parse_instance(std::string_view text) {
  return codec::guarded(text, [](const auto& j) { return codec::instance_from_json(j); });
}

std::string serialize_report(const VerificationReport& r) { return codec::to_json(r).dump(); }
VerificationReport parse_report(std::string_view text) {
  return codec::guarded(text, [](const auto& j) { return codec::report_from_json(j); });
}

std::string serialize_moves(const std::vector<Move>& moves) {
  codec::json a = codec::json::array();
  for (const auto& m : moves) a.push_back(codec::to_json(m));
  return a.dump();
}
std::vector<Move> parse_moves(std::string_view text) {
  return codec::guarded(text, [](const auto& j) {
    if (!j.is_array()) throw ParseError("move log must be an array", 0, 0);
    std::vector<Move> out;
    for (const auto& m : j) out.push_back(codec::move_from_json(m));
    return out;
  });
}

}  // namespace aggression
