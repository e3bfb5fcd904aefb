// Command-line front end: solve, verify, reduce, respond, play, serve.
//
// Exit codes: 0 success (value found, guarantee holds, answer yes),
// 1 negative answer (refuted, unspecified, answer no), 2 usage or input
// error, 3 search limit exceeded.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "aggression/codec.hpp"
#include "aggression/errors.hpp"
#include "aggression/graphs.hpp"
#include "aggression/optimal_response.hpp"
#include "aggression/reduction.hpp"
#include "aggression/service.hpp"
#include "aggression/solver.hpp"
#include "aggression/strategies.hpp"
#include "aggression/symmetry.hpp"
#include "aggression/verifier.hpp"

namespace {

using namespace aggression;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kLimit = 3;

struct Board {
  std::string family;
  std::string graph_file;
  int troops = -1;
  int lata = -1;
  int raj = -1;
  std::string attack_policy = "mandatory";
  int placement_cap = 0;
  bool micro = false;

  void add(CLI::App* app) {
    app->add_option("--family", family, "board family, e.g. matching:3 or cycle:5");
    app->add_option("--graph", graph_file, "graph document {\"vertices\":N,\"edges\":[[u,v],...]}");
    app->add_option("--troops", troops, "budget for both players");
    app->add_option("--lata", lata, "Lata's budget");
    app->add_option("--raj", raj, "Raj's budget");
    app->add_option("--attack-policy", attack_policy, "mandatory or optional")
        ->check(CLI::IsMember({"mandatory", "optional"}));
    app->add_option("--placement-cap", placement_cap, "most troops per placement (0 for none)");
    app->add_flag("--micro", micro, "one troop per placement");
  }

  Graph graph() const {
    if (!family.empty() == !graph_file.empty()) throw CLI::ValidationError("give exactly one of --family, --graph");
    if (!family.empty()) return generate(GraphFamily::parse(family));
    return parse_graph(read_file(graph_file));
  }

  Budgets budgets() const {
    Budgets b{troops, troops};
    if (lata >= 0) b.lata = lata;
    if (raj >= 0) b.raj = raj;
    if (b.lata < 0 || b.raj < 0) throw CLI::ValidationError("give --troops or both --lata and --raj");
    return b;
  }

  RuleConfig config() const {
    RuleConfig c;
    c.attack_policy = attack_policy == "optional" ? AttackPolicy::optional : AttackPolicy::mandatory;
    if (placement_cap > 0) c.placement_cap = placement_cap;
    if (micro) c.placement_cap = 1;
    return c;
  }

  static std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
};

std::uint64_t default_node_limit() {
  if (const char* env = std::getenv("AGGRESSION_NODE_LIMIT")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
    std::cerr << "warning: ignoring malformed AGGRESSION_NODE_LIMIT='" << env << "'\n";
  }
  return 0;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw CLI::ValidationError("cannot write " + path);
  out << text << '\n';
}

std::string result_name(const Payoff& p) {
  if (p > Payoff{}) return "LataWin";
  if (p < Payoff{}) return "RajWin";
  return "Draw";
}

std::string line_text(const std::vector<Move>& line) {
  std::string out;
  for (const auto& m : line) out += (out.empty() ? "" : " ") + to_string(m);
  return out;
}

void print_board(const GameState& s) {
  std::cout << "phase " << to_string(s.phase());
  if (!s.is_terminal()) std::cout << ", " << to_string(s.to_move()) << " to move";
  std::cout << "; budgets lata " << s.budget_remaining(Player::lata) << ", raj " << s.budget_remaining(Player::raj)
            << '\n';
  for (Vertex v = 0; v < s.graph().vertex_count(); ++v) {
    const auto o = s.owner(v);
    std::cout << "  " << v << ": " << (o ? to_string(*o) + " " + std::to_string(s.troops(v)) : "-");
    if (s.is_vulnerable(v)) std::cout << " (vulnerable)";
    std::cout << '\n';
  }
}

void print_outcome(const Outcome& o) {
  std::cout << "result " << result_name(o.payoff()) << (o.strong_win ? " (strong)" : "") << ": territories "
            << o.territories[0] << "-" << o.territories[1] << ", troops " << o.surviving_troops[0] << "-"
            << o.surviving_troops[1] << '\n';
}

Move parse_command_move(const std::string& line) {
  std::istringstream in(line);
  std::string word;
  in >> word;
  if (word == "place") {
    int v = -1, c = -1;
    if (in >> v >> c) return Move::place(v, c);
  } else if (word == "attack") {
    int v = -1;
    if (in >> v) return Move::attack(v);
  } else if (word == "pass") {
    return Move::pass_placement();
  } else if (word == "pass_attack") {
    return Move::pass_attack();
  } else if (!word.empty() && word.front() == '{') {
    return parse_move(line);
  }
  throw RuleError("bad-command", "expected 'place V C', 'attack V', 'pass', 'hint', 'show' or 'quit'");
}

// Passes are typed as "pass" in either phase.
Move adapt_pass(const Move& m, const GameState& s) {
  if (m.kind == Move::Kind::pass_placement && s.phase() == Phase::attack) return Move::pass_attack();
  return m;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Aggression: engine, solver, strategy verifier and game server"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  app.add_option("--seed", seed, "accepted for reproducibility; every component is deterministic");

  Board board;
  std::uint64_t node_limit = default_node_limit();
  std::string symmetry = "auto";
  bool as_json = false;

  auto* solve_cmd = app.add_subcommand("solve", "exact game value and principal line");
  board.add(solve_cmd);
  solve_cmd->add_option("--symmetry", symmetry, "auto, identity, matching_edges or cycle_dihedral");
  solve_cmd->add_option("--node-limit", node_limit, "abort after this many nodes (0 for none)");
  solve_cmd->add_flag("--json", as_json, "print the result as JSON");

  std::string strategy, mode = "repaired", guarantee;
  std::uint64_t max_positions = 0;
  double max_seconds = 0;
  auto* verify_cmd = app.add_subcommand("verify", "check a strategy against every opponent line");
  board.add(verify_cmd);
  verify_cmd->add_option("--strategy", strategy, "strategy name")->required();
  verify_cmd->add_option("--mode", mode, "repaired (default) or paper_faithful");
  verify_cmd->add_option("--guarantee", guarantee, "at_least_draw, win or strong_win (default: declared)");
  verify_cmd->add_option("--symmetry", symmetry, "auto, identity, matching_edges or cycle_dihedral");
  verify_cmd->add_option("--max-positions", max_positions, "position limit (0 for none)");
  verify_cmd->add_option("--max-seconds", max_seconds, "time limit (0 for none)");
  verify_cmd->add_flag("--json", as_json, "print the full report as JSON");

  std::string input, output, names_out;
  bool equalize = false;
  auto* reduce_cmd = app.add_subcommand("reduce", "colored graph -> optimal response instance");
  reduce_cmd->add_option("--input", input, "colored graph document")->required();
  reduce_cmd->add_option("--output", output, "instance file (default stdout)");
  reduce_cmd->add_option("--names", names_out, "write the vertex name map here");
  reduce_cmd->add_flag("--equalize-budgets", equalize, "pad so both players hold the same total");

  std::string instance_file;
  bool brute = false;
  auto* respond_cmd = app.add_subcommand("respond", "decide whether Lata can beat a planned attack sequence");
  respond_cmd->add_option("--instance", instance_file, "instance document")->required();
  respond_cmd->add_option("--node-limit", node_limit, "abort after this many nodes (0 for none)");
  respond_cmd->add_flag("--brute-force", brute, "enumerate every reply sequence instead");
  respond_cmd->add_flag("--json", as_json, "print the answer as JSON");

  std::string human = "lata", opponent_name = "solver", replay_file, play_mode = "paper_faithful";
  auto* play_cmd = app.add_subcommand("play", "play in the terminal, or replay a move log");
  board.add(play_cmd);
  play_cmd->add_option("--human", human, "lata or raj")->check(CLI::IsMember({"lata", "raj"}));
  play_cmd->add_option("--opponent", opponent_name, "none, solver or a strategy name");
  play_cmd->add_option("--mode", play_mode, "strategy mode for a strategy opponent");
  play_cmd->add_option("--replay", replay_file, "JSON move log to replay non-interactively");

  std::string host = "127.0.0.1", log_path, replay_log;
  int port = 8080;
  auto* serve_cmd = app.add_subcommand("serve", "JSON game service under /v1");
  serve_cmd->add_option("--host", host, "bind address");
  serve_cmd->add_option("--port", port, "port (0 picks a free one)");
  serve_cmd->add_option("--log", log_path, "append-only request log");
  serve_cmd->add_option("--restore", replay_log, "replay a request log before serving");
  serve_cmd->add_option("--node-limit", node_limit, "node limit for hints and solver replies");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*solve_cmd) {
      const Graph g = board.graph();
      const Budgets b = board.budgets();
      const auto state = GameState::new_game(g, b.lata, b.raj, board.config());
      const SymmetryGroup group = symmetry == "auto" ? natural_symmetry(g) : parse_symmetry(symmetry);
      const SolveResult r = aggression::solve(state, group, {node_limit, 0});
      if (as_json) {
        std::cout << codec::to_json(r).dump() << '\n';
      } else {
        std::cout << result_name(r.value) << " (territory " << r.value.territory_diff << ", troops "
                  << r.value.troop_diff << ")\n";
        std::cout << "line: " << line_text(r.principal_line) << '\n';
        std::cout << "nodes: " << r.nodes_expanded << '\n';
      }
      return kOk;
    }

    if (*verify_cmd) {
      const Graph g = board.graph();
      VerifyOptions opts;
      opts.mode = parse_strategy_mode(mode);
      opts.config = board.config();
      if (!guarantee.empty()) opts.guarantee = parse_guarantee(guarantee);
      opts.max_positions = max_positions;
      opts.max_seconds = max_seconds;
      const SymmetryGroup group = symmetry == "auto" ? natural_symmetry(g) : parse_symmetry(symmetry);
      const auto r = verify_guarantee(parse_strategy(strategy), g, board.budgets(), group, opts);
      if (as_json) {
        std::cout << serialize_report(r) << '\n';
      } else {
        std::cout << to_string(r.strategy) << " " << to_string(r.guarantee_claimed) << ": " << to_string(r.status)
                  << '\n';
        std::cout << "positions " << r.positions << ", lines " << r.lines_explored << ", merged "
                  << r.states_deduplicated << ", symmetry " << to_string(r.symmetry_used) << '\n';
        if (r.counterexample)
          std::cout << "counterexample: " << line_text(*r.counterexample) << " -> territory "
                    << r.counterexample_payoff->territory_diff << ", troops " << r.counterexample_payoff->troop_diff
                    << '\n';
        if (!r.strategy_bug.empty()) std::cout << "strategy bug: " << r.strategy_bug << '\n';
        for (const auto& u : r.discrepancies.unspecified)
          std::cout << "unspecified (" << u.count << "): " << u.message << '\n';
        for (const auto& f : r.discrepancies.failing_rows) std::cout << "failing row: " << f << '\n';
        if (r.discrepancies.repair_count)
          std::cout << "repairs: " << r.discrepancies.repair_count << '\n';
      }
      return r.holds ? kOk : kNegative;
    }

    if (*reduce_cmd) {
      const auto out = reduce_mcc(parse_colored_graph(Board::read_file(input)), {equalize});
      write_output(output, serialize_instance(out.instance));
      if (!names_out.empty()) {
        codec::json names = codec::json::object();
        for (Vertex v = 0; v < out.instance.graph.vertex_count(); ++v)
          for (const auto& [name, id] : out.name_map)
            if (id == v) names[name] = id;
        write_output(names_out, names.dump());
      }
      std::cerr << "k=" << out.params.k << " n=" << out.params.n << " m=" << out.params.m << ": "
                << out.instance.graph.vertex_count() << " vertices, T_L=" << out.instance.lata_total()
                << ", T_R=" << out.instance.raj_total() << ", |sigma|=" << out.instance.sigma.size() << '\n';
      return kOk;
    }

    if (*respond_cmd) {
      const ORInstance in = parse_instance(Board::read_file(instance_file));
      const ORAnswer a = brute ? brute_force_optimal_response(in) : decide_optimal_response(in, {node_limit});
      if (as_json) {
        std::cout << codec::to_json(a).dump() << '\n';
      } else {
        std::cout << (a.decision ? "yes" : "no") << '\n';
        if (a.witness_tau) std::cout << "tau: " << codec::to_json(*a.witness_tau).dump() << '\n';
      }
      return a.decision ? kOk : kNegative;
    }

    if (*play_cmd) {
      const Budgets b = board.budgets();
      codec::json body;
      body["graph"] = codec::to_json(board.graph());
      body["budgets"] = {{"lata", b.lata}, {"raj", b.raj}};
      body["config"] = codec::to_json(board.config());
      body["human"] = replay_file.empty() ? human : "lata";
      body["opponent"] = replay_file.empty() ? opponent_name : "none";
      body["mode"] = play_mode;
      GameService service({node_limit ? node_limit : 2'000'000, node_limit ? node_limit : 2'000'000, 1, ""});
      auto snap = service.create(body);
      const std::string id = snap["id"];
      auto current = [&] { return GameState::from_snapshot(std::make_shared<const Graph>(board.graph()),
                                                           parse_session(snap.dump()).state, board.config()); };

      if (!replay_file.empty()) {
        for (const Move& m : parse_moves(Board::read_file(replay_file))) snap = service.move(id, codec::to_json(m));
        const GameState s = current();
        if (!s.is_terminal()) {
          std::cerr << "error: move log ends before the game is over\n";
          return kUsage;
        }
        print_outcome(s.outcome());
        return kOk;
      }

      std::cout << "commands: place V C | attack V | pass | hint | show | quit\n";
      print_board(current());
      std::string line;
      while (!current().is_terminal() && std::cout << "> " << std::flush && std::getline(std::cin, line)) {
        if (line == "quit") return kOk;
        if (line == "show") {
          print_board(current());
          continue;
        }
        try {
          if (line == "hint") {
            std::cout << service.hint(id).dump() << '\n';
            continue;
          }
          snap = service.move(id, codec::to_json(adapt_pass(parse_command_move(line), current())));
          if (!snap["last_note"].get<std::string>().empty()) std::cout << "opponent: " << snap["last_note"] << '\n';
          print_board(current());
        } catch (const ServiceError& e) {
          std::cout << "rejected (" << e.rule() << "): " << e.what() << '\n';
        } catch (const RuleError& e) {
          std::cout << "rejected (" << e.rule() << "): " << e.what() << '\n';
        }
      }
      const GameState s = current();
      if (s.is_terminal()) print_outcome(s.outcome());
      std::cout << "move log: " << serialize_moves(parse_session(snap.dump()).move_log) << '\n';
      return kOk;
    }

    if (*serve_cmd) {
      ServiceOptions opts;
      if (node_limit) opts.hint_node_limit = opts.opponent_node_limit = node_limit;
      opts.log_path = log_path;
      GameService service(opts);
      if (!replay_log.empty()) service.replay_log(replay_log);
      HttpServer server(service);
      const int bound = server.bind(host, port);
      std::cout << "listening on http://" << host << ":" << bound << "/v1" << std::endl;
      server.listen();
      return kOk;
    }
  } catch (const LimitExceeded& e) {
    std::cerr << "limit-exceeded: " << e.what() << '\n';
    return kLimit;
  } catch (const RuleError& e) {
    std::cerr << "error (" << e.rule() << "): " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error (malformed-document): " << e.what() << '\n';
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ServiceError& e) {
    std::cerr << "error (" << e.rule() << "): " << e.what() << '\n';
    return e.status() == 503 ? kLimit : kUsage;
  }
  return kUsage;
}
