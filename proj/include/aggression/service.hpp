#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <semaphore>
#include <string>
#include <string_view>
#include <vector>

#include "aggression/codec.hpp"
#include "aggression/game.hpp"
#include "aggression/strategies.hpp"

namespace aggression {

/// Error surfaced by the game service; `status` is the HTTP status to send.
class ServiceError : public std::runtime_error {
 public:
  ServiceError(int status, std::string rule, const std::string& message)
      : std::runtime_error(message), status_(status), rule_(std::move(rule)) {}
  int status() const { return status_; }
  const std::string& rule() const { return rule_; }

 private:
  int status_;
  std::string rule_;
};

/// Who answers the human's moves.
struct Opponent {
  enum class Kind : std::uint8_t { none, solver, strategy };
  Kind kind = Kind::none;
  StrategyId strategy = StrategyId::raj_mirror_matching;

  /// "none", "solver", or a strategy name.
  std::string to_string() const;
  static Opponent parse(std::string_view name);  // throws RuleError("unknown-opponent")
  bool operator==(const Opponent&) const = default;
};

/// The persistent part of a session document. Derived fields (legal moves,
/// vulnerability sets, owners, scores) are recomputed when serializing.
struct SessionView {
  std::string id;
  Player human = Player::lata;
  Opponent opponent;
  StrategyMode mode = StrategyMode::paper_faithful;
  Graph graph;
  RuleConfig config;
  GameState::Snapshot state;
  std::vector<Move> move_log;
  std::string last_note;  // opponent's note on its latest reply
};

codec::json session_to_json(const SessionView& v);
std::string serialize_session(const SessionView& v);
SessionView parse_session(std::string_view text);

struct ServiceOptions {
  std::uint64_t hint_node_limit = 2'000'000;      // per hint request
  std::uint64_t opponent_node_limit = 2'000'000;  // per solver reply
  int hint_workers = 4;                           // concurrent hint searches
  std::string log_path;                           // append-only request log, empty for none
};

/// In-memory sessions. Calls on different sessions run concurrently; calls
/// on one session are serialized. Session ids are "g1", "g2", ... in order
/// of creation, so a fixed request sequence always yields the same answers.
class GameService {
 public:
  explicit GameService(ServiceOptions options = {});
  ~GameService();

  /// Body fields: "graph" (document) or "family" ("cycle:5"), "budgets"
  /// {"lata","raj"} or "troops", optional "config", "human" ("lata"|"raj"),
  /// "opponent" ("none"|"solver"|strategy name), "mode".
  codec::json create(const nlohmann::json& body);
  codec::json get(const std::string& id);
  /// Applies the human's move, then the opponent's replies while it is due.
  codec::json move(const std::string& id, const nlohmann::json& move);
  /// Solver move within the node limit; if the search is too large, the
  /// move of an applicable strategy for the side to move that is still on
  /// its script.
  codec::json hint(const std::string& id);
  void remove(const std::string& id);

  std::size_t size() const;

  /// Re-executes a request log written through ServiceOptions::log_path.
  void replay_log(const std::string& path);

 private:
  struct Session;

  std::shared_ptr<Session> find(const std::string& id) const;
  void log(const codec::json& entry);
  void play_opponent(Session& s);

  ServiceOptions options_;
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t next_id_ = 1;
  std::mutex log_mutex_;
  std::counting_semaphore<64> hint_slots_;
  bool replaying_ = false;
};

/// Serves the service under /v1 until stop() is called on the returned
/// server or the process ends. Binds host:port; port 0 picks a free port.
class HttpServer {
 public:
  explicit HttpServer(GameService& service);
  ~HttpServer();
  /// Binds and returns the bound port; throws std::runtime_error on failure.
  int bind(const std::string& host, int port);
  /// Blocks serving requests until stop().
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace aggression
