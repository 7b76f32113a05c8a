#include "game_file.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace ghzgames::cli {

using nlohmann::json;

GeneralGame GameFile::general() const {
  if (const auto* sym = std::get_if<SymmetricGame>(&game)) {
    return symmetric_to_general(*sym);
  }
  return std::get<GeneralGame>(game);
}

namespace {

double finite_number(const json& j, const std::string& what) {
  if (!j.is_number()) throw GameFileError(what + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw GameFileError(what + " must be finite");
  return v;
}

Strategy parse_strategy(const json& j) {
  if (j == "S1") return Strategy::S1;
  if (j == "S2") return Strategy::S2;
  throw GameFileError("strategy symbols must be \"S1\" or \"S2\"");
}

SymmetricGame parse_symmetric(const json& doc) {
  static const std::set<std::string> kAllowed{
      "type", "alpha", "beta", "delta", "epsilon", "theta", "omega"};
  for (const auto& [key, value] : doc.items()) {
    if (!kAllowed.contains(key)) {
      throw GameFileError("unexpected key \"" + key + "\" in symmetric game");
    }
  }
  auto field = [&](const char* name) {
    if (!doc.contains(name)) {
      throw GameFileError(std::string("missing \"") + name + "\"");
    }
    return finite_number(doc.at(name), name);
  };
  return {field("alpha"), field("beta"),  field("delta"),
          field("epsilon"), field("theta"), field("omega")};
}

GeneralGame parse_general(const json& doc) {
  for (const auto& [key, value] : doc.items()) {
    if (key != "type" && key != "entries") {
      throw GameFileError("unexpected key \"" + key + "\" in general game");
    }
  }
  if (!doc.contains("entries") || !doc.at("entries").is_array()) {
    throw GameFileError("general game needs an \"entries\" array");
  }
  const json& entries = doc.at("entries");
  if (entries.size() != 8) {
    throw GameFileError("general game needs exactly 8 entries");
  }
  GeneralGame g;
  std::array<bool, 8> seen{};
  for (const json& e : entries) {
    if (!e.is_object() || !e.contains("strategies") || !e.contains("payoffs")) {
      throw GameFileError("each entry needs \"strategies\" and \"payoffs\"");
    }
    const json& s = e.at("strategies");
    const json& p = e.at("payoffs");
    if (!s.is_array() || s.size() != 3 || !p.is_array() || p.size() != 3) {
      throw GameFileError("strategies and payoffs must have 3 elements each");
    }
    const StrategyTriple triple{parse_strategy(s[0]), parse_strategy(s[1]),
                                parse_strategy(s[2])};
    if (seen[triple.index()]) {
      throw GameFileError("duplicate strategy triple " + triple.to_string());
    }
    seen[triple.index()] = true;
    g[triple] = {finite_number(p[0], "payoff"), finite_number(p[1], "payoff"),
                 finite_number(p[2], "payoff")};
  }
  return g;
}

}  // namespace

GameFile parse_game(const json& doc) {
  if (!doc.is_object() || !doc.contains("type")) {
    throw GameFileError("game file must be an object with a \"type\" field");
  }
  const json& type = doc.at("type");
  if (type == "symmetric") return {parse_symmetric(doc)};
  if (type == "general") return {parse_general(doc)};
  throw GameFileError("game type must be \"symmetric\" or \"general\"");
}

GameFile parse_game(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GameFileError(std::string("malformed game file: ") + e.what());
  }
  return parse_game(doc);
}

GameFile load_game_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GameFileError("cannot open game file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_game(buffer.str());
}

json to_json(const SymmetricGame& g) {
  return {{"type", "symmetric"}, {"alpha", g.alpha},     {"beta", g.beta},
          {"delta", g.delta},    {"epsilon", g.epsilon}, {"theta", g.theta},
          {"omega", g.omega}};
}

json to_json(const GeneralGame& g) {
  json entries = json::array();
  for (int label = 1; label <= 8; ++label) {
    const auto s = StrategyTriple::from_label(label);
    auto name = [](Strategy st) { return st == Strategy::S1 ? "S1" : "S2"; };
    const auto& p = g[s];
    entries.push_back({{"strategies", {name(s.a), name(s.b), name(s.c)}},
                       {"payoffs", {p.pi_a, p.pi_b, p.pi_c}}});
  }
  return {{"type", "general"}, {"entries", entries}};
}

json to_json(const GameFile& f) {
  return std::visit([](const auto& g) { return to_json(g); }, f.game);
}

}  // namespace ghzgames::cli
