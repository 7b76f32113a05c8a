#ifndef GHZGAMES_TOOLS_GAME_FILE_HPP
#define GHZGAMES_TOOLS_GAME_FILE_HPP

// Game definition files. Two JSON shapes are accepted:
//
//   {"type": "symmetric", "alpha": 7, "beta": 9, "delta": 3,
//    "epsilon": 0, "theta": 5, "omega": 1}
//
//   {"type": "general", "entries": [
//      {"strategies": ["S1", "S1", "S1"], "payoffs": [7, 7, 7]}, ... ]}
//
// The general form must list all eight strategy triples exactly once.

#include <json.hpp>
#include <string>
#include <variant>

#include "ghzgames/core.hpp"

namespace ghzgames::cli {

class GameFileError : public Error {
 public:
  using Error::Error;
};

struct GameFile {
  std::variant<SymmetricGame, GeneralGame> game;

  bool is_symmetric() const {
    return std::holds_alternative<SymmetricGame>(game);
  }
  GeneralGame general() const;
};

GameFile parse_game(const nlohmann::json& doc);
GameFile parse_game(const std::string& text);
GameFile load_game_file(const std::string& path);

nlohmann::json to_json(const SymmetricGame& g);
nlohmann::json to_json(const GeneralGame& g);
nlohmann::json to_json(const GameFile& f);

}  // namespace ghzgames::cli

#endif  // GHZGAMES_TOOLS_GAME_FILE_HPP
