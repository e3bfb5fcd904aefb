#include <gtest/gtest.h>
#include <httplib.h>

#include <cstdio>
#include <filesystem>
#include <thread>

#include "aggression/errors.hpp"
#include "aggression/service.hpp"

using namespace aggression;
using nlohmann::json;

namespace {

int status_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ServiceError& e) {
    return e.status();
  }
  return 0;
}

std::string rule_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ServiceError& e) {
    return e.rule();
  }
  return "";
}

}  // namespace

TEST(Service, CreateAndPlayHotSeat) {
  GameService svc;
  const auto g = svc.create(json{{"family", "matching:1"}, {"troops", 2}});
  EXPECT_EQ(g["id"], "g1");
  EXPECT_EQ(g["phase"], "placement");
  EXPECT_EQ(g["to_move"], "lata");
  EXPECT_EQ(g["legal_moves"].size(), 4u);
  EXPECT_EQ(svc.create(json{{"family", "cycle:3"}, {"troops", 1}})["id"], "g2");
  EXPECT_EQ(svc.size(), 2u);

  svc.move("g1", json{{"type", "place"}, {"vertex", 0}, {"count", 2}});
  svc.move("g1", json{{"type", "place"}, {"vertex", 1}, {"count", 2}});
  svc.move("g1", json{{"type", "pass_placement"}});
  const auto attack = svc.move("g1", json{{"type", "pass_placement"}});
  EXPECT_EQ(attack["phase"], "attack");
  EXPECT_EQ(attack["first_passer"], "lata");
  svc.move("g1", json{{"type", "pass_attack"}});
  const auto end = svc.move("g1", json{{"type", "pass_attack"}});
  EXPECT_EQ(end["outcome"]["result"], "draw");
  EXPECT_EQ(end["move_log"].size(), 6u);
  EXPECT_EQ(rule_of([&] { svc.move("g1", json{{"type", "pass_attack"}}); }), "game-over");
  EXPECT_EQ(status_of([&] { svc.hint("g1"); }), 409);
}

TEST(Service, Errors) {
  GameService svc;
  svc.create(json{{"family", "path:3"}, {"budgets", {{"lata", 2}, {"raj", 2}}}});
  EXPECT_EQ(status_of([&] { svc.get("g9"); }), 404);
  EXPECT_EQ(status_of([&] { svc.move("g9", json{{"type", "pass_attack"}}); }), 404);
  EXPECT_EQ(status_of([&] { svc.remove("g9"); }), 404);
  EXPECT_EQ(status_of([&] { svc.move("g1", json{{"type", "attack"}, {"vertex", 0}}); }), 409);
  EXPECT_EQ(rule_of([&] { svc.move("g1", json{{"type", "attack"}, {"vertex", 0}}); }), "not-attack-phase");
  EXPECT_EQ(rule_of([&] { svc.move("g1", json{{"type", "place"}, {"vertex", 0}, {"count", 3}}); }),
            "count-exceeds-budget");
  EXPECT_EQ(status_of([&] { svc.move("g1", json{{"type", "jump"}}); }), 422);
  EXPECT_EQ(status_of([&] { svc.create(json{{"troops", 2}}); }), 422);
  EXPECT_EQ(rule_of([&] { svc.create(json{{"family", "cycle:5"}, {"troops", 2}, {"opponent", "nobody"}}); }),
            "unknown-opponent");
  EXPECT_EQ(rule_of([&] {
              svc.create(json{{"family", "matching:3"}, {"troops", 9}, {"human", "raj"}, {"opponent", "raj_three_edges"}});
            }),
            "opponent-side-mismatch");
  EXPECT_EQ(rule_of([&] {
              svc.create(json{{"family", "matching:2"}, {"troops", 9}, {"opponent", "raj_three_edges"}});
            }),
            "strategy-not-applicable");
  svc.remove("g1");
  EXPECT_EQ(svc.size(), 0u);
}

TEST(Service, StrategyOpponentReplies) {
  GameService svc;
  svc.create(json{{"family", "matching:3"}, {"troops", 9}, {"opponent", "raj_three_edges"}});
  const auto s = svc.move("g1", json{{"type", "place"}, {"vertex", 0}, {"count", 5}});
  ASSERT_EQ(s["move_log"].size(), 2u);
  EXPECT_EQ(s["move_log"][1].dump(), R"({"type":"place","vertex":1,"count":1})");
  EXPECT_EQ(s["last_note"], "scary");
  EXPECT_EQ(s["to_move"], "lata");
}

TEST(Service, SolverOpponentFinishesTheGame) {
  GameService svc;
  svc.create(json{{"family", "matching:1"}, {"troops", 1}, {"human", "raj"}, {"opponent", "solver"}});
  auto s = svc.get("g1");
  ASSERT_EQ(s["move_log"].size(), 1u);  // the solver opened for Lata
  while (s["outcome"].is_null()) s = svc.move("g1", s["legal_moves"][0]);
  EXPECT_FALSE(s["outcome"].is_null());
}

TEST(Service, Hints) {
  GameService svc;
  svc.create(json{{"family", "matching:2"}, {"troops", 3}});
  const auto h = svc.hint("g1");
  EXPECT_EQ(h["source"], "solver");
  EXPECT_EQ(h["value"], (json{{"territory_diff", 0}, {"troop_diff", 0}}));

  GameService tight(ServiceOptions{100, 100, 2, ""});
  tight.create(json{{"family", "cycle:5"}, {"troops", 101}});
  const auto c5 = tight.hint("g1");
  EXPECT_EQ(c5["source"], "lata_c5");
  EXPECT_EQ(c5["move"]["count"], 50);
  tight.create(json{{"family", "complete:5"}, {"troops", 60}});
  EXPECT_EQ(status_of([&] { tight.hint("g2"); }), 503);
}

TEST(Service, SessionRoundTrip) {
  GameService svc;
  svc.create(json{{"family", "cycle:4"}, {"troops", 3}, {"config", {{"attack_policy", "optional"}, {"placement_cap", nullptr}}}});
  svc.move("g1", json{{"type", "place"}, {"vertex", 2}, {"count", 2}});
  const std::string text = svc.get("g1").dump();
  const SessionView v = parse_session(text);
  EXPECT_EQ(serialize_session(v), text);
  EXPECT_THROW(parse_session("{\"id\":\"g1\"}"), ParseError);
}

TEST(Service, ReplayLog) {
  const auto path = std::filesystem::temp_directory_path() / "aggression_service_log.jsonl";
  std::filesystem::remove(path);
  std::string before;
  {
    GameService svc(ServiceOptions{2'000'000, 2'000'000, 4, path.string()});
    svc.create(json{{"family", "matching:2"}, {"troops", 2}, {"opponent", "solver"}});
    svc.create(json{{"family", "cycle:3"}, {"troops", 1}});
    svc.move("g1", json{{"type", "place"}, {"vertex", 0}, {"count", 1}});
    svc.remove("g2");
    before = svc.get("g1").dump();
  }
  GameService restored;
  restored.replay_log(path.string());
  EXPECT_EQ(restored.get("g1").dump(), before);
  EXPECT_EQ(restored.size(), 1u);
  std::filesystem::remove(path);
}

TEST(Service, ConcurrentSessions) {
  GameService svc;
  for (int i = 0; i < 8; ++i) svc.create(json{{"family", "cycle:5"}, {"troops", 3}});
  std::vector<std::thread> threads;
  std::vector<std::string> hints(8);
  for (int i = 0; i < 8; ++i)
    threads.emplace_back([&, i] { hints[i] = svc.hint("g" + std::to_string(i + 1)).dump(); });
  for (auto& t : threads) t.join();
  for (const auto& h : hints) EXPECT_EQ(h, hints[0]);
}

TEST(Http, RoundTrip) {
  GameService svc;
  HttpServer server(svc);
  const int port = server.bind("127.0.0.1", 0);
  std::thread worker([&] { server.listen(); });
  httplib::Client cli("127.0.0.1", port);
  for (int i = 0; i < 100 && !cli.Get("/v1/games/none"); ++i)
    std::this_thread::sleep_for(std::chrono::milliseconds(10));

  auto created = cli.Post("/v1/games", R"({"family":"matching:2","troops":3})", "application/json");
  ASSERT_TRUE(created);
  EXPECT_EQ(created->status, 201);
  EXPECT_EQ(created->get_header_value("Access-Control-Allow-Origin"), "*");
  const auto id = json::parse(created->body)["id"].get<std::string>();

  auto moved = cli.Post("/v1/games/" + id + "/moves", R"({"type":"place","vertex":1,"count":2})", "application/json");
  ASSERT_TRUE(moved);
  EXPECT_EQ(moved->status, 200);
  EXPECT_EQ(json::parse(moved->body)["to_move"], "raj");

  auto illegal = cli.Post("/v1/games/" + id + "/moves", R"({"type":"attack","vertex":0})", "application/json");
  EXPECT_EQ(illegal->status, 409);
  EXPECT_EQ(json::parse(illegal->body)["error"], "not-attack-phase");
  EXPECT_EQ(cli.Post("/v1/games/" + id + "/moves", "{oops", "application/json")->status, 422);
  EXPECT_EQ(cli.Get("/v1/games/g77")->status, 404);
  EXPECT_EQ(cli.Get("/v1/games/" + id + "/hint")->status, 200);
  EXPECT_EQ(cli.Options("/v1/games")->status, 204);
  EXPECT_EQ(cli.Delete("/v1/games/" + id)->status, 204);
  EXPECT_EQ(cli.Get("/v1/games/" + id)->status, 404);

  server.stop();
  worker.join();
}
