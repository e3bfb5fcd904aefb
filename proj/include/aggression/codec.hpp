#pragma once

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "aggression/game.hpp"
#include "aggression/optimal_response.hpp"
#include "aggression/reduction.hpp"
#include "aggression/solver.hpp"
#include "aggression/verifier.hpp"

namespace aggression {

/// JSON documents. Every serialize_* emits compact JSON with a fixed key
/// order, so serialize(parse(serialize(x))) reproduces the same bytes.
/// Parsers throw ParseError on malformed input.
namespace codec {

using json = nlohmann::ordered_json;

json to_json(const Graph& g);
json to_json(const Move& m);
json to_json(const Payoff& p);
json to_json(const Outcome& o);
json to_json(const RuleConfig& c);
json to_json(const ColoredGraph& g);
json to_json(const ORInstance& in);
json to_json(const std::vector<PlannedAttack>& tau);
json to_json(const ORAnswer& a);
json to_json(const VerificationReport& r);
json to_json(const SolveResult& r);

Graph graph_from_json(const nlohmann::json& j);
Move move_from_json(const nlohmann::json& j);
Payoff payoff_from_json(const nlohmann::json& j);
RuleConfig config_from_json(const nlohmann::json& j);
ColoredGraph colored_graph_from_json(const nlohmann::json& j);
ORInstance instance_from_json(const nlohmann::json& j);
std::vector<PlannedAttack> tau_from_json(const nlohmann::json& j);
VerificationReport report_from_json(const nlohmann::json& j);

/// Parses text into a DOM, reporting syntax errors with line and column.
nlohmann::json parse(std::string_view text);

}  // namespace codec

std::string serialize_move(const Move& m);
Move parse_move(std::string_view text);

std::string serialize_colored_graph(const ColoredGraph& g);
ColoredGraph parse_colored_graph(std::string_view text);

std::string serialize_instance(const ORInstance& in);
ORInstance parse_instance(std::string_view text);

std::string serialize_report(const VerificationReport& r);
VerificationReport parse_report(std::string_view text);

/// A move log, one Move document per array element.
std::string serialize_moves(const std::vector<Move>& moves);
std::vector<Move> parse_moves(std::string_view text);

}  // namespace aggression
