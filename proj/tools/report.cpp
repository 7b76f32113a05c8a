#include "report.hpp"

#include <chrono>
#include <ctime>
#include <fmt/format.h>

#ifndef GHZGAMES_VERSION
#define GHZGAMES_VERSION "0.0.0"
#endif

namespace ghzgames::cli {

using nlohmann::json;

std::string tool_version() { return GHZGAMES_VERSION; }

std::string format_real(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  return fmt::format("{:.15g}", v);
}

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_field(fields[i]);
  }
  out += '\n';
  return out;
}

json to_json(const Direction& d) { return {d.x(), d.y(), d.z()}; }

json to_json(const DirectionProfile& p) {
  return {{"a", to_json(p.a)}, {"b", to_json(p.b)}, {"c", to_json(p.c)}};
}

json to_json(const PayoffTriple& p) {
  return {{"pi_a", p.pi_a}, {"pi_b", p.pi_b}, {"pi_c", p.pi_c}};
}

json to_json(const JointDistribution& dist) {
  json out = json::object();
  for (const auto& o : all_outcomes()) out[o.to_string()] = dist[o];
  return out;
}

json to_json(const game::FactorizationReport& r) {
  json equations = json::array();
  for (const auto& eq : r.equations) {
    bool violated = false;
    for (const auto& v : r.violated_equations) violated |= v.id == eq.id;
    equations.push_back({{"id", eq.id},
                         {"quantum", eq.lhs},
                         {"product", eq.rhs},
                         {"residual", eq.residual()},
                         {"violated", violated}});
  }
  json violated = json::array();
  for (const auto& v : r.violated_equations) violated.push_back(v.id);
  json out = {{"consistent", r.consistent},
              {"candidate", r.candidate},
              {"equations", equations},
              {"violated", violated}};
  out["solution"] =
      r.solution ? json{r.solution->x(), r.solution->y(), r.solution->z()}
                 : json(nullptr);
  return out;
}

json to_json(const game::PureEquilibrium& e) {
  return {{"strategies", e.strategies.to_string()},
          {"payoffs", to_json(e.payoffs)},
          {"kind", e.kind == game::EquilibriumKind::Strict ? "strict" : "weak"}};
}

json to_json(const SymmetryReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"equality", v.equality}, {"residual", v.residual}});
  }
  json out = {{"symmetric", r.symmetric}, {"violations", violations}};
  if (r.symmetric) {
    const auto& c = r.constants;
    out["constants"] = {{"alpha", c.alpha}, {"beta", c.beta},
                        {"delta", c.delta}, {"epsilon", c.epsilon},
                        {"theta", c.theta}, {"omega", c.omega}};
  }
  return out;
}

json to_json(const nash::GammaPair& g) {
  return {{"gamma1", g.gamma1}, {"gamma2", g.gamma2}};
}

json to_json(const nash::NEReport& r) {
  json players = json::array();
  for (const auto& pa : r.players) {
    json entry = {{"player", std::string(1, to_char(pa.player))},
                  {"status", nash::to_string(pa.status)},
                  {"gradient", pa.response.gradient},
                  {"angle", pa.angle},
                  {"gain", pa.gain}};
    entry["best_response"] = pa.response.direction
                                 ? to_json(*pa.response.direction)
                                 : json("indifferent");
    players.push_back(entry);
  }
  json out = {{"verdict", nash::to_string(r.verdict)}, {"players", players}};
  if (r.witness) {
    out["witness"] = {{"player", std::string(1, to_char(r.witness->player))},
                      {"direction", to_json(r.witness->direction)},
                      {"gain", r.witness->gain}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json to_json(const nash::PDVerdict& v) {
  return {{"pass", v.pass}, {"violated", v.violated}};
}

json to_json(const nash::SearchResult& r) {
  json points = json::array();
  for (const auto& fp : r.fixed_points) {
    points.push_back({{"seed", fp.seed},
                      {"duplicates", fp.duplicates},
                      {"sweeps", fp.sweeps},
                      {"profile", to_json(fp.profile)},
                      {"report", to_json(fp.report)}});
  }
  json failures = json::array();
  for (const auto& nc : r.non_converged) {
    failures.push_back({{"seed", nc.seed},
                        {"start", to_json(nc.start)},
                        {"last", to_json(nc.last)}});
  }
  return {{"fixed_points", points}, {"non_converged", failures}};
}

namespace {

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

json Report::to_json(bool deterministic) const {
  json out = {{"command", command},
              {"inputs", inputs},
              {"results", results},
              {"version", tool_version()}};
  if (rng_seed) out["rng_seed"] = *rng_seed;
  if (!notes.empty()) out["notes"] = notes;
  if (!deterministic) out["timestamp"] = utc_timestamp();
  return out;
}

}  // namespace ghzgames::cli
