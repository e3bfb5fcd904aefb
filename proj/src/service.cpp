#include "aggression/service.hpp"

#include <fstream>

#include "aggression/errors.hpp"
#include "aggression/graphs.hpp"
#include "aggression/solver.hpp"
#include "aggression/symmetry.hpp"
#include "json_util.hpp"

namespace aggression {

namespace {

using codec::json;

Player parse_player(std::string_view s) {
  if (s == "lata") return Player::lata;
  if (s == "raj") return Player::raj;
  throw RuleError("unknown-player", "no player named '" + std::string(s) + "'");
}

Phase parse_phase(std::string_view s) {
  for (auto p : {Phase::placement, Phase::attack, Phase::terminal})
    if (to_string(p) == s) return p;
  throw RuleError("unknown-phase", "no phase named '" + std::string(s) + "'");
}

json pair_json(int lata, int raj) { return json{{"lata", lata}, {"raj", raj}}; }

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing \"") + key + "\"", 0, 0);
  return j.at(key);
}

std::array<int, 2> pair_from(const nlohmann::json& j) {
  return {field(j, "lata").get<int>(), field(j, "raj").get<int>()};
}

json vertex_list(const std::vector<Vertex>& vs) { return json(vs); }

// Wraps any input or rule problem in a body as a 422.
template <class F>
auto unprocessable(F&& f) {
  try {
    return f();
  } catch (const ServiceError&) {
    throw;
  } catch (const RuleError& e) {
    throw ServiceError(422, e.rule(), e.what());
  } catch (const ParseError& e) {
    throw ServiceError(422, "malformed-body", e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ServiceError(422, "malformed-body", e.what());
  }
}

}  // namespace

std::string Opponent::to_string() const {
  switch (kind) {
    case Kind::none: return "none";
    case Kind::solver: return "solver";
    case Kind::strategy: return std::string(aggression::to_string(strategy));
  }
  return "none";
}

Opponent Opponent::parse(std::string_view name) {
  if (name == "none") return {};
  if (name == "solver") return {Kind::solver};
  try {
    return {Kind::strategy, parse_strategy(name)};
  } catch (const RuleError&) {
    throw RuleError("unknown-opponent", "no opponent named '" + std::string(name) + "'");
  }
}

json session_to_json(const SessionView& v) {
  const auto g = std::make_shared<const Graph>(v.graph);
  const GameState s = GameState::from_snapshot(g, v.state, v.config);
  json j;
  j["id"] = v.id;
  j["human"] = to_string(v.human);
  j["opponent"] = v.opponent.to_string();
  j["mode"] = to_string(v.mode);
  j["graph"] = codec::to_json(v.graph);
  j["config"] = codec::to_json(v.config);
  j["phase"] = to_string(s.phase());
  j["to_move"] = to_string(s.to_move());
  j["first_passer"] = s.first_passer() ? json(to_string(*s.first_passer())) : json(nullptr);
  j["placement_passes"] = s.consecutive_placement_passes();
  j["attack_passes"] = s.consecutive_attack_passes();
  j["initial_budget"] = pair_json(s.initial_budget(Player::lata), s.initial_budget(Player::raj));
  j["budget_remaining"] = pair_json(s.budget_remaining(Player::lata), s.budget_remaining(Player::raj));
  j["cells"] = v.state.signed_troops;
  json owners = json::array(), troops = json::array();
  for (Vertex x = 0; x < v.graph.vertex_count(); ++x) {
    const auto o = s.owner(x);
    owners.push_back(o ? json(to_string(*o)) : json(nullptr));
    troops.push_back(s.troops(x));
  }
  j["owners"] = std::move(owners);
  j["troops"] = std::move(troops);
  json legal = json::array();
  if (!s.is_terminal())
    for (const auto& m : s.legal_moves()) legal.push_back(codec::to_json(m));
  j["legal_moves"] = std::move(legal);
  j["vulnerable"] = json{{"lata", vertex_list(s.vulnerable_vertices(Player::lata))},
                         {"raj", vertex_list(s.vulnerable_vertices(Player::raj))}};
  j["score"] = codec::to_json(s.score());
  j["outcome"] = s.is_terminal() ? codec::to_json(s.outcome()) : json(nullptr);
  json log = json::array();
  for (const auto& m : v.move_log) log.push_back(codec::to_json(m));
  j["move_log"] = std::move(log);
  j["last_note"] = v.last_note;
  return j;
}

std::string serialize_session(const SessionView& v) { return session_to_json(v).dump(); }

SessionView parse_session(std::string_view text) {
  const auto j = detail::parse_json(text);
  try {
    SessionView v;
    v.id = field(j, "id").get<std::string>();
    v.human = parse_player(field(j, "human").get<std::string>());
    v.opponent = Opponent::parse(field(j, "opponent").get<std::string>());
    v.mode = parse_strategy_mode(field(j, "mode").get<std::string>());
    v.graph = codec::graph_from_json(field(j, "graph"));
    v.config = codec::config_from_json(field(j, "config"));
    auto& st = v.state;
    st.phase = parse_phase(field(j, "phase").get<std::string>());
    st.to_move = parse_player(field(j, "to_move").get<std::string>());
    if (const auto& fp = field(j, "first_passer"); !fp.is_null()) st.first_passer = parse_player(fp.get<std::string>());
    st.placement_passes = field(j, "placement_passes").get<int>();
    st.attack_passes = field(j, "attack_passes").get<int>();
    st.initial_budget = pair_from(field(j, "initial_budget"));
    st.budget_remaining = pair_from(field(j, "budget_remaining"));
    st.signed_troops = field(j, "cells").get<std::vector<std::int32_t>>();
    for (const auto& m : field(j, "move_log")) v.move_log.push_back(codec::move_from_json(m));
    v.last_note = field(j, "last_note").get<std::string>();
    GameState::from_snapshot(std::make_shared<const Graph>(v.graph), st, v.config);
    return v;
  } catch (const RuleError& e) {
    throw ParseError(e.what(), 0, 0);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what(), 0, 0);
  }
}

struct GameService::Session {
  std::mutex mu;
  std::string id;
  Player human = Player::lata;
  Opponent opponent;
  StrategyMode mode = StrategyMode::paper_faithful;
  GameState initial;
  GameState state;
  std::vector<Move> log;
  std::string last_note;

  std::optional<StrategyContext> ctx;
  StrategyMemory memory;
  bool off_script = false;  // strategy opponent handed over to the solver
  std::unique_ptr<Solver> reply_solver;
  std::unique_ptr<Solver> hint_solver;

  SessionView view() const {
    return {id, human, opponent, mode, state.graph(), state.config(), state.snapshot(), log, last_note};
  }
};

GameService::GameService(ServiceOptions options)
    : options_(std::move(options)), hint_slots_(std::clamp(options_.hint_workers, 1, 64)) {}

GameService::~GameService() = default;

std::size_t GameService::size() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

std::shared_ptr<GameService::Session> GameService::find(const std::string& id) const {
  std::lock_guard lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ServiceError(404, "unknown-session", "no session '" + id + "'");
  return it->second;
}

void GameService::log(const json& entry) {
  if (options_.log_path.empty() || replaying_) return;
  std::lock_guard lock(log_mutex_);
  std::ofstream out(options_.log_path, std::ios::app);
  out << entry.dump() << '\n';
}

json GameService::create(const nlohmann::json& body) {
  auto s = std::make_shared<Session>();
  unprocessable([&] {
    if (!body.is_object()) throw ParseError("request body must be an object", 0, 0);
    Graph g;
    if (body.contains("graph")) g = codec::graph_from_json(body["graph"]);
    else if (body.contains("family")) g = generate(GraphFamily::parse(body["family"].get<std::string>()));
    else throw ParseError("need \"graph\" or \"family\"", 0, 0);
    Budgets b;
    if (body.contains("budgets")) {
      const auto p = pair_from(body["budgets"]);
      b = {p[0], p[1]};
    } else {
      b.lata = b.raj = field(body, "troops").get<int>();
    }
    const RuleConfig config = body.contains("config") ? codec::config_from_json(body["config"]) : RuleConfig{};
    s->human = parse_player(body.value("human", std::string("lata")));
    s->opponent = Opponent::parse(body.value("opponent", std::string("none")));
    s->mode = parse_strategy_mode(body.value("mode", std::string("paper_faithful")));
    s->initial = GameState::new_game(std::move(g), b.lata, b.raj, config);
    s->state = s->initial;
    if (s->opponent.kind == Opponent::Kind::strategy) {
      const Player side = role(s->opponent.strategy);
      if (side == s->human)
        throw RuleError("opponent-side-mismatch", std::string(to_string(s->opponent.strategy)) + " plays " +
                                                      to_string(side) + ", the human's side");
      s->ctx.emplace(s->opponent.strategy, s->initial, s->mode);
      s->memory = initial_memory(s->opponent.strategy, s->initial);
    }
    return 0;
  });
  const auto graph = s->initial.graph_ptr();
  const auto sym = natural_symmetry(*graph);
  s->reply_solver = std::make_unique<Solver>(graph, s->initial.config(), sym,
                                             SolveLimits{options_.opponent_node_limit, 0});
  s->hint_solver = std::make_unique<Solver>(graph, s->initial.config(), sym,
                                            SolveLimits{options_.hint_node_limit, 0});
  {
    std::lock_guard lock(mutex_);
    s->id = "g" + std::to_string(next_id_++);
    sessions_[s->id] = s;
  }
  std::lock_guard lock(s->mu);
  log(json{{"op", "create"}, {"body", body}});
  play_opponent(*s);
  return session_to_json(s->view());
}

json GameService::get(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->mu);
  return session_to_json(s->view());
}

json GameService::move(const std::string& id, const nlohmann::json& body) {
  auto s = find(id);
  std::lock_guard lock(s->mu);
  const Move m = unprocessable([&] { return codec::move_from_json(body); });
  if (s->state.is_terminal()) throw ServiceError(409, "game-over", "the game is already over");
  if (s->opponent.kind != Opponent::Kind::none && s->state.to_move() != s->human)
    throw ServiceError(409, "not-your-turn", "it is " + to_string(s->state.to_move()) + "'s turn");
  if (const auto rule = s->state.violated_rule(m); !rule.empty())
    throw ServiceError(409, rule, to_string(m) + " violates " + rule);

  log(json{{"op", "move"}, {"id", id}, {"move", codec::to_json(m)}});
  if (s->ctx && !s->off_script) s->memory = relabel(s->opponent.strategy, s->memory, m, s->state);
  s->state = s->state.apply(m);
  s->log.push_back(m);
  s->last_note.clear();
  play_opponent(*s);
  return session_to_json(s->view());
}

void GameService::play_opponent(Session& s) {
  if (s.opponent.kind == Opponent::Kind::none) return;
  const Player side = opponent(s.human);
  while (!s.state.is_terminal() && s.state.to_move() == side) {
    Move reply;
    std::string note;
    bool decided = false;
    if (s.ctx && !s.off_script) {
      try {
        Decision d = next_move(s.opponent.strategy, s.state, s.memory, *s.ctx);
        reply = d.move;
        s.memory = std::move(d.memory);
        note = d.note;
        decided = true;
      } catch (const Unspecified& e) {
        s.off_script = true;
        note = std::string("off script (") + e.what() + "); solver takes over";
      }
    }
    if (!decided) {
      try {
        reply = s.reply_solver->best_move(s.state);
      } catch (const LimitExceeded&) {
        reply = s.state.legal_moves().front();
        note += (note.empty() ? "" : "; ") + std::string("search limit reached, first legal move played");
      }
    }
    s.state = s.state.apply(reply);
    s.log.push_back(reply);
    s.last_note = note;
  }
}

json GameService::hint(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->mu);
  if (s->state.is_terminal()) throw ServiceError(409, "game-over", "the game is already over");

  hint_slots_.acquire();
  struct Release {
    std::counting_semaphore<64>& sem;
    ~Release() { sem.release(); }
  } release{hint_slots_};

  try {
    const SolveResult r = s->hint_solver->solve(s->state);
    return json{{"move", codec::to_json(*r.best_move)}, {"source", "solver"}, {"value", codec::to_json(r.value)}};
  } catch (const LimitExceeded&) {
  }

  const Player side = s->state.to_move();
  const Budgets b{s->initial.initial_budget(Player::lata), s->initial.initial_budget(Player::raj)};
  for (StrategyId sid : all_strategies()) {
    if (role(sid) != side || !applicability(sid, s->initial.graph(), b, s->initial.config())) continue;
    try {
      StrategyContext ctx(sid, s->initial, StrategyMode::paper_faithful);
      StrategyMemory mem = initial_memory(sid, s->initial);
      GameState cur = s->initial;
      bool on_script = true;
      for (const Move& m : s->log) {
        if (cur.to_move() == side) {
          const Decision d = next_move(sid, cur, mem, ctx);
          if (d.move != m) {
            on_script = false;
            break;
          }
          mem = d.memory;
        } else {
          mem = relabel(sid, mem, m, cur);
        }
        cur = cur.apply_unchecked(m);
      }
      if (!on_script) continue;
      const Decision d = next_move(sid, cur, mem, ctx);
      return json{{"move", codec::to_json(d.move)},
                  {"source", std::string(to_string(sid))},
                  {"value", nullptr}};
    } catch (const Unspecified&) {
    } catch (const LimitExceeded&) {
    }
  }
  throw ServiceError(503, "limit-exceeded", "no hint within the node limit of " +
                                                std::to_string(options_.hint_node_limit));
}

void GameService::remove(const std::string& id) {
  {
    std::lock_guard lock(mutex_);
    if (sessions_.erase(id) == 0) throw ServiceError(404, "unknown-session", "no session '" + id + "'");
  }
  log(json{{"op", "delete"}, {"id", id}});
}

void GameService::replay_log(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read log " + path);
  replaying_ = true;
  struct Reset {
    bool& flag;
    ~Reset() { flag = false; }
  } reset{replaying_};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto e = detail::parse_json(line);
    const auto op = e.at("op").get<std::string>();
    if (op == "create") create(e.at("body"));
    else if (op == "move") move(e.at("id").get<std::string>(), e.at("move"));
    else if (op == "delete") remove(e.at("id").get<std::string>());
    else throw std::runtime_error("unknown log entry '" + op + "'");
  }
}

}  // namespace aggression
