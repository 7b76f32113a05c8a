#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <fmt/format.h>
#include <numbers>
#include <optional>
#include <ostream>

#include "game_file.hpp"
#include "ghzgames/game.hpp"
#include "ghzgames/ghz.hpp"
#include "ghzgames/nash.hpp"
#include "ghzgames/oracle.hpp"
#include "report.hpp"

namespace ghzgames::cli {

using nlohmann::json;

namespace {

class ShapeError : public Error {
 public:
  using Error::Error;
};

constexpr const char* kUnrestrictedEquilibriumNote =
    "This Prisoner's Dilemma game has a direction profile satisfying every "
    "Nash inequality with unrestricted directions. This contradicts the "
    "published claim that no direction triple is an equilibrium of the "
    "three-player quantum Prisoner's Dilemma; the verdict here is computed "
    "from the inequalities themselves.";

std::vector<double> parse_reals(const std::string& text, std::size_t count) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string token = text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw ParseError("empty component in \"" + text + "\"");
    }
    token = token.substr(first, last - first + 1);
    if (!token.empty() && token.front() == '+') token.erase(0, 1);
    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() ||
        !std::isfinite(value)) {
      throw ParseError("malformed number \"" + token + "\" in \"" + text +
                       "\"");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.size() != count) {
    throw ParseError(fmt::format("expected {} comma-separated values in \"{}\"",
                                 count, text));
  }
  return out;
}

enum class Format { Table, Json, Csv };

struct GlobalOptions {
  std::string format = "table";
  bool deterministic = false;
  bool normalize = false;

  Format fmt() const {
    if (format == "json") return Format::Json;
    if (format == "csv") return Format::Csv;
    return Format::Table;
  }
};

// Direction flags for the three players.
struct ProfileFlags {
  std::array<std::string, 3> cartesian;
  std::array<std::string, 3> spherical;

  void add_to(CLI::App* cmd) {
    const char* names[] = {"a", "b", "c"};
    for (std::size_t i = 0; i < 3; ++i) {
      cmd->add_option(std::string("--") + names[i], cartesian[i],
                      fmt::format("player {} direction x,y,z",
                                  static_cast<char>('A' + i)));
      cmd->add_option(std::string("--") + names[i] + "-spherical",
                      spherical[i],
                      fmt::format("player {} direction as theta,phi (radians)",
                                  static_cast<char>('A' + i)));
    }
  }

  bool any() const {
    for (std::size_t i = 0; i < 3; ++i) {
      if (!cartesian[i].empty() || !spherical[i].empty()) return true;
    }
    return false;
  }

  std::optional<Direction> get(std::size_t i, bool normalize) const {
    if (!cartesian[i].empty() && !spherical[i].empty()) {
      throw ParseError(fmt::format("player {} given both Cartesian and "
                                   "spherical directions",
                                   static_cast<char>('A' + i)));
    }
    if (!cartesian[i].empty()) return parse_direction(cartesian[i], normalize);
    if (!spherical[i].empty()) {
      const auto [theta, phi] = parse_pair(spherical[i]);
      return Direction::from_spherical(theta, phi);
    }
    return std::nullopt;
  }

  Direction require(std::size_t i, bool normalize) const {
    auto d = get(i, normalize);
    if (!d) {
      throw ParseError(fmt::format("missing direction for player {} (--{})",
                                   static_cast<char>('A' + i),
                                   static_cast<char>('a' + i)));
    }
    return *d;
  }

  DirectionProfile profile(bool normalize) const {
    return {require(0, normalize), require(1, normalize),
            require(2, normalize)};
  }
};

std::string fmt_direction(const Direction& d) {
  return fmt::format("({}, {}, {})", format_real(d.x()), format_real(d.y()),
                     format_real(d.z()));
}

std::string fmt_payoffs(const PayoffTriple& p) {
  return fmt::format("({}, {}, {})", format_real(p.pi_a), format_real(p.pi_b),
                     format_real(p.pi_c));
}

void emit_json(std::ostream& out, const Report& report, bool deterministic) {
  out << report.to_json(deterministic).dump(2) << '\n';
}

void emit_notes(std::ostream& out, const Report& report) {
  for (const auto& note : report.notes) out << "note: " << note << '\n';
}

SymmetricGame require_symmetric(const GameFile& file) {
  if (const auto* sym = std::get_if<SymmetricGame>(&file.game)) return *sym;
  const SymmetryReport check = check_symmetry(std::get<GeneralGame>(file.game));
  if (!check.symmetric) {
    std::string list;
    for (const auto& v : check.violations) {
      if (!list.empty()) list += ", ";
      list += v.equality;
    }
    throw ShapeError("game is not symmetric; violated: " + list);
  }
  return check.constants;
}

// ---------------------------------------------------------------------------
// probs

struct ProbsCommand {
  ProfileFlags profile;
  bool oracle = false;

  void run(const GlobalOptions& global, std::ostream& out) const {
    const DirectionProfile p = profile.profile(global.normalize);
    const JointDistribution dist = ghz::joint_distribution(p);

    Report report;
    report.command = "probs";
    report.inputs = {{"profile", to_json(p)},
                     {"normalize", global.normalize},
                     {"oracle", oracle}};
    report.results["distribution"] = to_json(dist);

    std::optional<JointDistribution> reference;
    double discrepancy = 0.0;
    if (oracle) {
      reference = oracle::joint_distribution_oracle(p);
      for (const auto& o : all_outcomes()) {
        discrepancy = std::max(discrepancy, std::abs(dist[o] - (*reference)[o]));
      }
      report.results["oracle"] = to_json(*reference);
      report.results["max_discrepancy"] = discrepancy;
    }

    switch (global.fmt()) {
      case Format::Json:
        emit_json(out, report, global.deterministic);
        return;
      case Format::Csv: {
        std::vector<std::string> header{"outcome", "probability"};
        if (reference) header.emplace_back("oracle");
        out << csv_row(header);
        for (const auto& o : all_outcomes()) {
          std::vector<std::string> row{o.to_string(), format_real(dist[o])};
          if (reference) row.push_back(format_real((*reference)[o]));
          out << csv_row(row);
        }
        return;
      }
      case Format::Table:
        out << (reference ? "outcome  probability            oracle\n"
                          : "outcome  probability\n");
        for (const auto& o : all_outcomes()) {
          if (reference) {
            out << fmt::format("{:<8} {:<22} {}", o.to_string(),
                               format_real(dist[o]),
                               format_real((*reference)[o]));
          } else {
            out << fmt::format("{:<8} {}", o.to_string(), format_real(dist[o]));
          }
          out << '\n';
        }
        if (reference) {
          out << "max discrepancy: " << format_real(discrepancy) << '\n';
        }
        return;
    }
  }
};

// ---------------------------------------------------------------------------
// payoffs

struct PayoffsCommand {
  std::string game_path;
  ProfileFlags profile;
  std::string classical;

  void run(const GlobalOptions& global, std::ostream& out) const {
    const GameFile file = load_game_file(game_path);
    const bool use_classical = !classical.empty();
    if (use_classical == profile.any()) {
      throw ParseError(
          "give either the three directions or --classical x,y,z");
    }

    Report report;
    report.command = "payoffs";
    report.inputs["game"] = to_json(file);
    PayoffTriple payoffs;
    if (use_classical) {
      const auto q = parse_triple(classical);
      std::optional<MixedProfile> mixed;
      try {
        mixed = MixedProfile(q[0], q[1], q[2]);
      } catch (const InvalidProbability& e) {
        throw ParseError(e.what());
      }
      payoffs = game::classical_payoffs(file.general(), *mixed);
      report.inputs["classical"] = q;
      report.results["mode"] = "classical";
    } else {
      const DirectionProfile p = profile.profile(global.normalize);
      payoffs = game::quantum_payoffs(file.general(), p);
      report.inputs["profile"] = to_json(p);
      report.inputs["normalize"] = global.normalize;
      report.results["mode"] = "quantum";
    }
    report.results["payoffs"] = to_json(payoffs);

    switch (global.fmt()) {
      case Format::Json:
        emit_json(out, report, global.deterministic);
        return;
      case Format::Csv:
        out << csv_row({"mode", "pi_a", "pi_b", "pi_c"});
        out << csv_row({use_classical ? "classical" : "quantum",
                        format_real(payoffs.pi_a), format_real(payoffs.pi_b),
                        format_real(payoffs.pi_c)});
        return;
      case Format::Table:
        out << (use_classical ? "classical" : "quantum")
            << " payoffs (A, B, C): " << fmt_payoffs(payoffs) << '\n';
        return;
    }
  }
};

// ---------------------------------------------------------------------------
// factorize

struct FactorizeCommand {
  ProfileFlags profile;

  void run(const GlobalOptions& global, std::ostream& out) const {
    const DirectionProfile p = profile.profile(global.normalize);
    const game::FactorizationReport fr = game::factorize(p);

    Report report;
    report.command = "factorize";
    report.inputs = {{"profile", to_json(p)}, {"normalize", global.normalize}};
    report.results = to_json(fr);

    switch (global.fmt()) {
      case Format::Json:
        emit_json(out, report, global.deterministic);
        return;
      case Format::Csv:
        out << csv_row({"equation", "quantum", "product", "residual",
                        "violated"});
        for (const auto& eq : fr.equations) {
          bool violated = false;
          for (const auto& v : fr.violated_equations) violated |= v.id == eq.id;
          out << csv_row({eq.id, format_real(eq.lhs), format_real(eq.rhs),
                          format_real(eq.residual()),
                          violated ? "true" : "false"});
        }
        return;
      case Format::Table: {
        out << "consistent: " << (fr.consistent ? "yes" : "no") << '\n';
        out << fmt::format("candidate (x, y, z): ({}, {}, {})\n",
                           format_real(fr.candidate[0]),
                           format_real(fr.candidate[1]),
                           format_real(fr.candidate[2]));
        if (fr.solution) {
          out << fmt::format("solution (x, y, z): ({}, {}, {})\n",
                             format_real(fr.solution->x()),
                             format_real(fr.solution->y()),
                             format_real(fr.solution->z()));
        }
        out << "equation  quantum                product                "
               "residual\n";
        for (const auto& eq : fr.equations) {
          out << fmt::format("{:<9} {:<22} {:<22} {}\n", eq.id,
                             format_real(eq.lhs), format_real(eq.rhs),
                             format_real(eq.residual()));
        }
        if (!fr.violated_equations.empty()) {
          out << "violated:";
          for (const auto& v : fr.violated_equations) out << ' ' << v.id;
          out << '\n';
        }
        return;
      }
    }
  }
};

// ---------------------------------------------------------------------------
// ne

void print_ne_report(std::ostream& out, const nash::NEReport& r,
                     const std::string& indent) {
  out << indent << "verdict: " << nash::to_string(r.verdict) << '\n';
  for (const auto& pa : r.players) {
    out << indent
        << fmt::format("player {}: {:<12} best response {}", to_char(pa.player),
                       nash::to_string(pa.status),
                       pa.response.direction
                           ? fmt_direction(*pa.response.direction)
                           : std::string("any (indifferent)"));
    if (pa.status == nash::PlayerStatus::Deviates) {
      out << " gain " << format_real(pa.gain);
    }
    out << '\n';
  }
  if (r.witness) {
    out << indent
        << fmt::format("witness: player {} -> {} gains {}\n",
                       to_char(r.witness->player),
                       fmt_direction(r.witness->direction),
                       format_real(r.witness->gain));
  }
}

void print_pd(std::ostream& out, const nash::PDVerdict& v) {
  out << "prisoner's dilemma conditions: " << (v.pass ? "pass" : "fail");
  if (!v.pass) {
    out << " (violated:";
    for (const auto& name : v.violated) out << ' ' << name;
    out << ')';
  }
  out << '\n';
}

struct NeVerifyCommand {
  std::string game_path;
  ProfileFlags profile;
  bool check_pd = false;

  void run(const GlobalOptions& global, std::ostream& out) const {
    const GameFile file = load_game_file(game_path);
    const SymmetricGame g = require_symmetric(file);
    const DirectionProfile p = profile.profile(global.normalize);
    const nash::NEReport ne = nash::verify_ne(g, p);
    const nash::PDVerdict pd = nash::check_pd(g);

    Report report;
    report.command = "ne verify";
    report.inputs = {{"game", to_json(file)},
                     {"profile", to_json(p)},
                     {"normalize", global.normalize},
                     {"check_pd", check_pd}};
    report.results["gammas"] = to_json(nash::gammas(g));
    if (check_pd) report.results["pd"] = to_json(pd);
    report.results["ne"] = to_json(ne);
    if (pd.pass && ne.verdict != nash::Verdict::NotNE) {
      report.notes.emplace_back(kUnrestrictedEquilibriumNote);
    }

    switch (global.fmt()) {
      case Format::Json:
        emit_json(out, report, global.deterministic);
        return;
      case Format::Csv: {
        out << csv_row({"player", "status", "br_x", "br_y", "br_z", "gain"});
        for (const auto& pa : ne.players) {
          const auto& d = pa.response.direction;
          out << csv_row({std::string(1, to_char(pa.player)),
                          nash::to_string(pa.status),
                          d ? format_real(d->x()) : "", d ? format_real(d->y()) : "",
                          d ? format_real(d->z()) : "", format_real(pa.gain)});
        }
        out << csv_row({"verdict", nash::to_string(ne.verdict)});
        return;
      }
      case Format::Table:
        if (check_pd) print_pd(out, pd);
        print_ne_report(out, ne, "");
        emit_notes(out, report);
        return;
    }
  }
};

struct NeFindCommand {
  std::string game_path;
  bool check_pd = false;
  int seeds = 64;
  std::uint64_t rng_seed = 0;
  int threads = 1;
  int max_sweeps = 10000;

  int run(const GlobalOptions& global, std::ostream& out) const {
    const GameFile file = load_game_file(game_path);
    const SymmetricGame g = require_symmetric(file);
    if (seeds < 1) throw ParseError("--seeds must be at least 1");
    if (threads < 1) throw ParseError("--threads must be at least 1");
    if (max_sweeps < 1) throw ParseError("--max-sweeps must be at least 1");

    nash::SearchOptions options;
    options.seeds = seeds;
    options.rng_seed = rng_seed;
    options.threads = threads;
    options.max_sweeps = max_sweeps;
    const nash::SearchResult result = nash::find_ne(g, options);
    const nash::PDVerdict pd = nash::check_pd(g);

    // Thread count is an execution detail and stays out of the report.
    Report report;
    report.command = "ne find";
    report.rng_seed = rng_seed;
    report.inputs = {{"game", to_json(file)},
                     {"seeds", seeds},
                     {"max_sweeps", max_sweeps},
                     {"check_pd", check_pd}};
    report.results["gammas"] = to_json(nash::gammas(g));
    if (check_pd) report.results["pd"] = to_json(pd);
    report.results["search"] = to_json(result);
    bool found_equilibrium = false;
    for (const auto& fp : result.fixed_points) {
      found_equilibrium |= fp.report.verdict != nash::Verdict::NotNE;
    }
    if (pd.pass && found_equilibrium) {
      report.notes.emplace_back(kUnrestrictedEquilibriumNote);
    }

    switch (global.fmt()) {
      case Format::Json:
        emit_json(out, report, global.deterministic);
        break;
      case Format::Csv:
        out << csv_row({"seed", "duplicates", "sweeps", "a_x", "a_y", "a_z",
                        "b_x", "b_y", "b_z", "c_x", "c_y", "c_z", "verdict"});
        for (const auto& fp : result.fixed_points) {
          std::vector<std::string> row{std::to_string(fp.seed),
                                       std::to_string(fp.duplicates),
                                       std::to_string(fp.sweeps)};
          for (Player player : kPlayers) {
            for (double v : fp.profile[player].components()) {
              row.push_back(format_real(v));
            }
          }
          row.push_back(nash::to_string(fp.report.verdict));
          out << csv_row(row);
        }
        break;
      case Format::Table:
        if (check_pd) print_pd(out, pd);
        out << fmt::format("{} fixed point(s), {} non-converged seed(s), "
                           "rng seed {}\n",
                           result.fixed_points.size(),
                           result.non_converged.size(), rng_seed);
        for (const auto& fp : result.fixed_points) {
          out << fmt::format("seed {} ({} duplicate(s), {} sweep(s)): a={} "
                             "b={} c={}\n",
                             fp.seed, fp.duplicates, fp.sweeps,
                             fmt_direction(fp.profile.a),
                             fmt_direction(fp.profile.b),
                             fmt_direction(fp.profile.c));
          print_ne_report(out, fp.report, "  ");
        }
        for (const auto& nc : result.non_converged) {
          out << fmt::format("seed {}: no convergence\n", nc.seed);
        }
        emit_notes(out, report);
        break;
    }
    return result.fixed_points.empty() ? kExitSearch : kExitOk;
  }
};

// ---------------------------------------------------------------------------
// sweep

struct SweepCommand {
  std::string game_path;
  std::string rotate = "player=A";
  std::string plane = "xy";
  int steps = 36;
  ProfileFlags profile;

  Player rotated_player() const {
    std::string name = rotate;
    if (name.rfind("player=", 0) == 0) name = name.substr(7);
    if (name == "A" || name == "a") return Player::A;
    if (name == "B" || name == "b") return Player::B;
    if (name == "C" || name == "c") return Player::C;
    throw ParseError("--rotate expects player=A, player=B or player=C");
  }

  Direction rotated(double angle) const {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    if (plane == "xy") return Direction::make(c, s, 0.0, true);
    if (plane == "xz") return Direction::make(c, 0.0, s, true);
    if (plane == "yz") return Direction::make(0.0, c, s, true);
    throw ParseError("--plane expects xy, xz or yz");
  }

  void run(const GlobalOptions& global, std::ostream& out) const {
    const GameFile file = load_game_file(game_path);
    const Player player = rotated_player();
    if (steps < 1) throw ParseError("--steps must be at least 1");
    rotated(0.0);  // validates --plane before any output

    std::array<Direction, 3> fixed{Direction::z_axis(), Direction::z_axis(),
                                   Direction::z_axis()};
    for (Player p : kPlayers) {
      if (p != player) fixed[index_of(p)] = profile.require(index_of(p), global.normalize);
    }
    const GeneralGame g = file.general();

    const bool json_lines = global.fmt() == Format::Json;
    if (!json_lines) {
      std::vector<std::string> header{"angle"};
      for (const auto& o : all_outcomes()) header.push_back("p" + o.to_string());
      header.insert(header.end(), {"pi_a", "pi_b", "pi_c"});
      out << csv_row(header);
    }
    for (int step = 0; step < steps; ++step) {
      const double angle = 2.0 * std::numbers::pi * step / steps;
      DirectionProfile p{fixed[0], fixed[1], fixed[2]};
      p = p.with(player, rotated(angle));
      const JointDistribution dist = ghz::joint_distribution(p);
      const PayoffTriple payoffs = game::expected_payoffs(g, dist);
      if (json_lines) {
        json record = {{"angle", angle},
                       {"profile", to_json(p)},
                       {"probabilities", to_json(dist)},
                       {"payoffs", to_json(payoffs)}};
        out << record.dump() << '\n';
      } else {
        std::vector<std::string> row{format_real(angle)};
        for (const auto& o : all_outcomes()) row.push_back(format_real(dist[o]));
        row.insert(row.end(), {format_real(payoffs.pi_a),
                               format_real(payoffs.pi_b),
                               format_real(payoffs.pi_c)});
        out << csv_row(row);
      }
    }
  }
};

// ---------------------------------------------------------------------------
// check-game

struct CheckGameCommand {
  std::string game_path;

  void run(const GlobalOptions& global, std::ostream& out) const {
    const GameFile file = load_game_file(game_path);
    const GeneralGame g = file.general();
    const SymmetryReport symmetry = check_symmetry(g);
    const auto equilibria = game::classical_pure_ne(g);

    Report report;
    report.command = "check-game";
    report.inputs["game"] = to_json(file);
    report.results["symmetry"] = to_json(symmetry);
    json pure = json::array();
    for (const auto& e : equilibria) pure.push_back(to_json(e));
    report.results["classical_pure_ne"] = pure;
    std::optional<nash::PDVerdict> pd;
    if (symmetry.symmetric) {
      pd = nash::check_pd(symmetry.constants);
      report.results["gammas"] = to_json(nash::gammas(symmetry.constants));
      report.results["pd"] = to_json(*pd);
    }

    switch (global.fmt()) {
      case Format::Json:
        emit_json(out, report, global.deterministic);
        return;
      case Format::Csv:
        out << csv_row({"strategies", "pi_a", "pi_b", "pi_c", "kind"});
        for (const auto& e : equilibria) {
          out << csv_row({e.strategies.to_string(), format_real(e.payoffs.pi_a),
                          format_real(e.payoffs.pi_b),
                          format_real(e.payoffs.pi_c),
                          e.kind == game::EquilibriumKind::Strict ? "strict"
                                                                  : "weak"});
        }
        return;
      case Format::Table: {
        out << "symmetric: " << (symmetry.symmetric ? "yes" : "no") << '\n';
        if (symmetry.symmetric) {
          const auto& c = symmetry.constants;
          out << fmt::format(
              "alpha={} beta={} delta={} epsilon={} theta={} omega={}\n",
              format_real(c.alpha), format_real(c.beta), format_real(c.delta),
              format_real(c.epsilon), format_real(c.theta),
              format_real(c.omega));
          const auto gm = nash::gammas(c);
          out << fmt::format("gamma1={} gamma2={}\n", format_real(gm.gamma1),
                             format_real(gm.gamma2));
          print_pd(out, *pd);
        }
        for (const auto& v : symmetry.violations) {
          out << "violated: " << v.equality << " (residual "
              << format_real(v.residual) << ")\n";
        }
        out << "classical pure-strategy equilibria:\n";
        for (const auto& e : equilibria) {
          out << fmt::format(
              "  ({}) payoffs {} {}\n", e.strategies.to_string(),
              fmt_payoffs(e.payoffs),
              e.kind == game::EquilibriumKind::Strict ? "strict" : "weak");
        }
        return;
      }
    }
  }
};

}  // namespace

std::array<double, 3> parse_triple(const std::string& text) {
  const auto v = parse_reals(text, 3);
  return {v[0], v[1], v[2]};
}

std::array<double, 2> parse_pair(const std::string& text) {
  const auto v = parse_reals(text, 2);
  return {v[0], v[1]};
}

Direction parse_direction(const std::string& text, bool normalize) {
  const auto v = parse_triple(text);
  return Direction::make(v[0], v[1], v[2], normalize);
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Three-player quantum games on a shared GHZ state", "ghzgames"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  GlobalOptions global;
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_flag("--deterministic", global.deterministic,
               "omit the timestamp from reports");
  app.add_flag("--normalize", global.normalize,
               "normalize direction vectors instead of rejecting them");

  ProbsCommand probs;
  auto* probs_cmd = app.add_subcommand("probs", "GHZ outcome distribution");
  probs.profile.add_to(probs_cmd);
  probs_cmd->add_flag("--oracle", probs.oracle,
                      "add the Hilbert-space oracle column");

  PayoffsCommand payoffs;
  auto* payoffs_cmd = app.add_subcommand("payoffs", "expected payoffs");
  payoffs_cmd->add_option("--game", payoffs.game_path, "game file")->required();
  payoffs.profile.add_to(payoffs_cmd);
  payoffs_cmd->add_option("--classical", payoffs.classical,
                          "mixed strategy probabilities x,y,z");

  FactorizeCommand factorize;
  auto* factorize_cmd =
      app.add_subcommand("factorize", "product-distribution analysis");
  factorize.profile.add_to(factorize_cmd);

  auto* ne_cmd = app.add_subcommand("ne", "Nash equilibrium analysis");
  ne_cmd->require_subcommand(1);
  NeVerifyCommand verify;
  auto* verify_cmd = ne_cmd->add_subcommand("verify", "classify one profile");
  verify_cmd->add_option("--game", verify.game_path, "game file")->required();
  verify.profile.add_to(verify_cmd);
  verify_cmd->add_flag("--check-pd", verify.check_pd,
                       "evaluate the Prisoner's Dilemma conditions");
  NeFindCommand find;
  auto* find_cmd = ne_cmd->add_subcommand("find", "best-response search");
  find_cmd->add_option("--game", find.game_path, "game file")->required();
  find_cmd->add_flag("--check-pd", find.check_pd,
                     "evaluate the Prisoner's Dilemma conditions");
  find_cmd->add_option("--seeds", find.seeds, "number of random starts");
  find_cmd->add_option("--rng-seed", find.rng_seed, "random seed");
  find_cmd->add_option("--threads", find.threads, "worker threads");
  find_cmd->add_option("--max-sweeps", find.max_sweeps,
                       "iteration cap per start");

  SweepCommand sweep;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "rotate one player's direction");
  sweep_cmd->add_option("--game", sweep.game_path, "game file")->required();
  sweep_cmd->add_option("--rotate", sweep.rotate, "player=A|B|C");
  sweep_cmd->add_option("--plane", sweep.plane, "xy, xz or yz");
  sweep_cmd->add_option("--steps", sweep.steps, "records over [0, 2pi)");
  sweep.profile.add_to(sweep_cmd);

  CheckGameCommand check;
  auto* check_cmd =
      app.add_subcommand("check-game", "symmetry and equilibrium summary");
  check_cmd->add_option("--game", check.game_path, "game file")->required();

  for (auto* cmd : {probs_cmd, payoffs_cmd, factorize_cmd, ne_cmd, verify_cmd,
                    find_cmd, sweep_cmd, check_cmd}) {
    cmd->fallthrough();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << tool_version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    if (*probs_cmd) probs.run(global, out);
    if (*payoffs_cmd) payoffs.run(global, out);
    if (*factorize_cmd) factorize.run(global, out);
    if (*verify_cmd) verify.run(global, out);
    if (*find_cmd) {
      const int code = find.run(global, out);
      if (code != kExitOk) {
        err << "error: no start converged to a fixed point\n";
        return code;
      }
    }
    if (*sweep_cmd) sweep.run(global, out);
    if (*check_cmd) check.run(global, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const GameFileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const NotUnit& e) {
    err << "error: " << e.what() << " (use --normalize to rescale)\n";
    return kExitDirection;
  } catch (const ZeroVector& e) {
    err << "error: " << e.what() << '\n';
    return kExitDirection;
  } catch (const ShapeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitGameShape;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitOk;
}

}  // namespace ghzgames::cli
