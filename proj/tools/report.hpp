#ifndef GHZGAMES_TOOLS_REPORT_HPP
#define GHZGAMES_TOOLS_REPORT_HPP

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "ghzgames/core.hpp"
#include "ghzgames/game.hpp"
#include "ghzgames/nash.hpp"

namespace ghzgames::cli {

std::string tool_version();

// 15 significant digits, "." decimal separator.
std::string format_real(double v);

// RFC 4180 quoting: fields containing ',', '"', CR or LF are quoted and
// embedded quotes doubled. Rows end with LF.
std::string csv_field(const std::string& field);
std::string csv_row(const std::vector<std::string>& fields);

nlohmann::json to_json(const Direction& d);
nlohmann::json to_json(const DirectionProfile& p);
nlohmann::json to_json(const PayoffTriple& p);
nlohmann::json to_json(const JointDistribution& dist);
nlohmann::json to_json(const game::FactorizationReport& r);
nlohmann::json to_json(const game::PureEquilibrium& e);
nlohmann::json to_json(const SymmetryReport& r);
nlohmann::json to_json(const nash::GammaPair& g);
nlohmann::json to_json(const nash::NEReport& r);
nlohmann::json to_json(const nash::PDVerdict& v);
nlohmann::json to_json(const nash::SearchResult& r);

struct Report {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::optional<std::uint64_t> rng_seed;
  std::vector<std::string> notes;

  // Envelope with tool version; the timestamp is omitted when deterministic.
  nlohmann::json to_json(bool deterministic) const;
};

}  // namespace ghzgames::cli

#endif  // GHZGAMES_TOOLS_REPORT_HPP
