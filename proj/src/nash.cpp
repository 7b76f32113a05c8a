#include "ghzgames/nash.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "ghzgames/ghz.hpp"

namespace ghzgames::nash {

GammaPair gammas(const SymmetricGame& g) {
  return {g.alpha - g.beta - g.epsilon + g.omega,
          g.alpha - 2.0 * g.delta - g.beta + g.epsilon + 2.0 * g.theta -
              g.omega};
}

DeltaSet delta_set(const DirectionProfile& p) {
  const auto& a = p.a;
  const auto& b = p.b;
  const auto& c = p.c;
  DeltaSet d;
  d.d1 = b.z() + c.z();
  d.d2 = b.x() * c.x() - b.y() * c.y();
  d.d3 = b.x() * c.y() + b.y() * c.x();
  d.d1p = a.z() + c.z();
  d.d2p = a.x() * c.y() + a.y() * c.x();
  d.d3p = a.x() * c.x() - a.y() * c.y();
  d.d1pp = a.z() + b.z();
  d.d2pp = a.x() * b.y() + a.y() * b.x();
  d.d3pp = a.x() * b.x() - a.y() * b.y();
  return d;
}

double payoff_diff(const SymmetricGame& g, const DirectionProfile& starred,
                   Player deviator, const Direction& alt) {
  const auto [g1, g2] = gammas(g);
  const DeltaSet d = delta_set(starred);
  const Direction& s = starred[deviator];
  const double dx = s.x() - alt.x();
  const double dy = s.y() - alt.y();
  const double dz = s.z() - alt.z();
  switch (deviator) {
    case Player::A:
      return (dz * d.d1 * g1 + g2 * dx * d.d2 - g2 * dy * d.d3) / 8.0;
    case Player::B:
      return (dz * d.d1p * g1 - g2 * dy * d.d2p + g2 * dx * d.d3p) / 8.0;
    case Player::C:
      return (dz * d.d1pp * g1 - g2 * dy * d.d2pp + g2 * dx * d.d3pp) / 8.0;
  }
  return 0.0;
}

std::array<double, 3> payoff_gradient(const SymmetricGame& g,
                                      const DirectionProfile& p,
                                      Player player) {
  const auto [g1, g2] = gammas(g);
  const DeltaSet d = delta_set(p);
  switch (player) {
    case Player::A:
      return {g2 * d.d2, -g2 * d.d3, g1 * d.d1};
    case Player::B:
      return {g2 * d.d3p, -g2 * d.d2p, g1 * d.d1p};
    case Player::C:
      return {g2 * d.d3pp, -g2 * d.d2pp, g1 * d.d1pp};
  }
  return {};
}

BestResponse best_response(const SymmetricGame& g, const DirectionProfile& p,
                           Player player) {
  BestResponse out;
  out.gradient = payoff_gradient(g, p, player);
  const auto& v = out.gradient;
  const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  if (norm > kGradientTolerance) {
    out.direction = Direction::make(v[0], v[1], v[2], true);
  }
  return out;
}

BestResponse best_response(const SymmetricGame& g, const Direction& first,
                           const Direction& second, Player player) {
  // The player's own slot does not enter the gradient.
  DirectionProfile p;
  switch (player) {
    case Player::A:
      p = {Direction::z_axis(), first, second};
      break;
    case Player::B:
      p = {first, Direction::z_axis(), second};
      break;
    case Player::C:
      p = {first, second, Direction::z_axis()};
      break;
  }
  return best_response(g, p, player);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Strict:
      return "strict";
    case Verdict::Weak:
      return "weak";
    case Verdict::NotNE:
      return "not_ne";
  }
  return "unknown";
}

std::string to_string(PlayerStatus s) {
  switch (s) {
    case PlayerStatus::Aligned:
      return "aligned";
    case PlayerStatus::Indifferent:
      return "indifferent";
    case PlayerStatus::Tied:
      return "tied";
    case PlayerStatus::Deviates:
      return "deviates";
  }
  return "unknown";
}

NEReport verify_ne(const SymmetricGame& g, const DirectionProfile& p) {
  NEReport report;
  bool all_aligned = true;
  bool any_deviation = false;
  for (Player player : kPlayers) {
    PlayerAssessment& pa = report.players[index_of(player)];
    pa.player = player;
    pa.response = best_response(g, p, player);
    const Direction& played = p[player];
    if (pa.response.indifferent()) {
      pa.status = PlayerStatus::Indifferent;
      all_aligned = false;
      continue;
    }
    const auto& v = pa.response.gradient;
    const double norm = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    const double along =
        v[0] * played.x() + v[1] * played.y() + v[2] * played.z();
    pa.angle = played.angle_to(*pa.response.direction);
    pa.gain = std::max(0.0, (norm - along) / 8.0);
    if (pa.angle <= kAlignmentTolerance) {
      pa.status = PlayerStatus::Aligned;
    } else if (pa.gain <= kGainTolerance) {
      pa.status = PlayerStatus::Tied;
      all_aligned = false;
    } else {
      pa.status = PlayerStatus::Deviates;
      any_deviation = true;
    }
  }

  if (any_deviation) {
    report.verdict = Verdict::NotNE;
    const PlayerAssessment* best = nullptr;
    for (const auto& pa : report.players) {
      if (pa.status == PlayerStatus::Deviates &&
          (best == nullptr || pa.gain > best->gain)) {
        best = &pa;
      }
    }
    report.witness = Witness{best->player, *best->response.direction,
                             best->gain};
  } else {
    report.verdict = all_aligned ? Verdict::Strict : Verdict::Weak;
  }
  return report;
}

DynamicsOutcome run_best_response_dynamics(const SymmetricGame& g,
                                           const DirectionProfile& start,
                                           int max_sweeps,
                                           double move_tolerance) {
  DynamicsOutcome out;
  out.profile = start;
  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    double largest_move = 0.0;
    for (Player player : kPlayers) {
      const BestResponse br = best_response(g, out.profile, player);
      if (br.indifferent()) continue;
      largest_move =
          std::max(largest_move, out.profile[player].angle_to(*br.direction));
      out.profile = out.profile.with(player, *br.direction);
    }
    out.sweeps = sweep;
    if (largest_move < move_tolerance) {
      out.converged = true;
      return out;
    }
  }
  return out;
}

DirectionProfile search_start(std::uint64_t rng_seed, int seed_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(rng_seed & 0xffffffffu),
                    static_cast<std::uint32_t>(rng_seed >> 32),
                    static_cast<std::uint32_t>(seed_index)};
  std::mt19937_64 gen(seq);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto draw = [&] {
    for (;;) {
      const double x = normal(gen);
      const double y = normal(gen);
      const double z = normal(gen);
      if (x * x + y * y + z * z > 1e-12) return Direction::make(x, y, z, true);
    }
  };
  const Direction a = draw();
  const Direction b = draw();
  const Direction c = draw();
  return {a, b, c};
}

namespace {

double profile_distance(const DirectionProfile& p, const DirectionProfile& q) {
  double d = 0.0;
  for (Player player : kPlayers) {
    d = std::max(d, p[player].angle_to(q[player]));
  }
  return d;
}

}  // namespace

SearchResult find_ne(const SymmetricGame& g, const SearchOptions& options) {
  if (options.seeds < 1) throw Error("at least one seed is required");

  std::vector<DirectionProfile> starts;
  starts.reserve(static_cast<std::size_t>(options.seeds));
  for (int i = 0; i < options.seeds; ++i) {
    starts.push_back(search_start(options.rng_seed, i));
  }

  std::vector<DynamicsOutcome> outcomes(starts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < starts.size(); i = next++) {
      outcomes[i] = run_best_response_dynamics(g, starts[i], options.max_sweeps,
                                               options.move_tolerance);
    }
  };
  const int threads = std::clamp(options.threads, 1, options.seeds);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  SearchResult result;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const int seed = static_cast<int>(i);
    const auto& outcome = outcomes[i];
    if (!outcome.converged) {
      result.non_converged.push_back({seed, starts[i], outcome.profile});
      continue;
    }
    auto same = std::find_if(
        result.fixed_points.begin(), result.fixed_points.end(),
        [&](const FixedPoint& fp) {
          return profile_distance(fp.profile, outcome.profile) <
                 options.dedup_tolerance;
        });
    if (same != result.fixed_points.end()) {
      ++same->duplicates;
      continue;
    }
    result.fixed_points.push_back({seed, 0, outcome.sweeps, outcome.profile,
                                   verify_ne(g, outcome.profile)});
  }
  return result;
}

std::array<double, 3> case_a_constraints(const SymmetricGame& g,
                                         const DirectionProfile& starred,
                                         const DirectionProfile& alt) {
  if (!starred.in_plane() || !alt.in_plane()) {
    throw NotInPlane("constraint analysis requires x-y plane directions");
  }
  const double g2 = gammas(g).gamma2;
  const DeltaSet d = delta_set(starred);
  auto sigma = [&](Player deviator) {
    return -ghz::delta(starred.with(deviator, alt[deviator]));
  };
  const auto& a = starred.a;
  const auto& b = starred.b;
  const auto& c = starred.c;
  return {g2 * (a.x() * d.d2 - a.y() * d.d3 + sigma(Player::A)),
          g2 * (-b.y() * d.d2p + b.x() * d.d3p + sigma(Player::B)),
          g2 * (-c.y() * d.d2pp + c.x() * d.d3pp + sigma(Player::C))};
}

bool case_b_check(const SymmetricGame& g, const DirectionProfile& p) {
  return std::abs(gammas(g).gamma2) <= kPayoffTolerance && p.in_plane();
}

PDVerdict check_pd(const SymmetricGame& g) {
  const auto& [alpha, beta, delta, epsilon, theta, omega] = g;
  const std::array<std::pair<const char*, bool>, 11> conditions{{
      // Defection dominates.
      {"β>α", beta > alpha},
      {"ω>ε", omega > epsilon},
      {"θ>δ", theta > delta},
      // More cooperating opponents is better.
      {"β>θ", beta > theta},
      {"θ>ω", theta > omega},
      {"α>δ", alpha > delta},
      {"δ>ε", delta > epsilon},
      // Fixing one player leaves a two-player dilemma.
      {"δ>ω", delta > omega},
      {"α>θ", alpha > theta},
      {"δ>(ε+θ)/2", delta > (epsilon + theta) / 2.0},
      {"α>(δ+β)/2", alpha > (delta + beta) / 2.0},
  }};
  PDVerdict verdict;
  for (const auto& [name, holds] : conditions) {
    if (!holds) verdict.violated.emplace_back(name);
  }
  verdict.pass = verdict.violated.empty();
  return verdict;
}

}  // namespace ghzgames::nash
