#ifndef GHZGAMES_NASH_HPP
#define GHZGAMES_NASH_HPP

// Nash analysis of the symmetric quantum game whose strategies are
// measurement directions. Each player's payoff is affine in their own
// direction, so the best response is the normalized gradient and the
// equilibrium conditions reduce to alignment checks.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghzgames/core.hpp"

namespace ghzgames::nash {

inline constexpr double kGradientTolerance = 1e-12;
inline constexpr double kAlignmentTolerance = 1e-9;  // radians
inline constexpr double kGainTolerance = 1e-12;

struct GammaPair {
  double gamma1 = 0.0;  // alpha - beta - epsilon + omega
  double gamma2 = 0.0;  // alpha - 2 delta - beta + epsilon + 2 theta - omega
};

GammaPair gammas(const SymmetricGame& g);

// Opponent-dependent coefficients of the payoff differences. Unprimed from
// (b, c), primed from (a, c), double-primed from (a, b).
struct DeltaSet {
  double d1 = 0.0, d2 = 0.0, d3 = 0.0;
  double d1p = 0.0, d2p = 0.0, d3p = 0.0;
  double d1pp = 0.0, d2pp = 0.0, d3pp = 0.0;
};

DeltaSet delta_set(const DirectionProfile& p);

// Pi_X(starred) - Pi_X(starred with X's direction replaced by alt), for the
// deviating player X, evaluated from the gamma/delta expansion.
double payoff_diff(const SymmetricGame& g, const DirectionProfile& starred,
                   Player deviator, const Direction& alt);

// Coefficient vector v such that 8 * Pi_X = const + v . x for the player's
// own direction x, given the other two directions.
std::array<double, 3> payoff_gradient(const SymmetricGame& g,
                                      const DirectionProfile& p, Player player);

struct BestResponse {
  std::array<double, 3> gradient{};
  std::optional<Direction> direction;  // empty: every direction is optimal

  bool indifferent() const { return !direction.has_value(); }
};

// `first` and `second` are the other two players' directions in A, B, C
// order (for B: a then c).
BestResponse best_response(const SymmetricGame& g, const Direction& first,
                           const Direction& second, Player player);
BestResponse best_response(const SymmetricGame& g, const DirectionProfile& p,
                           Player player);

enum class Verdict { Strict, Weak, NotNE };
std::string to_string(Verdict v);

enum class PlayerStatus {
  Aligned,      // unique best response is the played direction
  Indifferent,  // zero gradient
  Tied,         // not aligned, yet no deviation gains more than tolerance
  Deviates,     // a profitable deviation exists
};
std::string to_string(PlayerStatus s);

struct PlayerAssessment {
  Player player = Player::A;
  PlayerStatus status = PlayerStatus::Indifferent;
  BestResponse response;
  double angle = 0.0;  // between played direction and best response
  double gain = 0.0;   // payoff gain of switching to the best response
};

struct Witness {
  Player player = Player::A;
  Direction direction = Direction::z_axis();
  double gain = 0.0;
};

struct NEReport {
  Verdict verdict = Verdict::NotNE;
  std::array<PlayerAssessment, 3> players{};
  std::optional<Witness> witness;  // present iff verdict is NotNE
};

NEReport verify_ne(const SymmetricGame& g, const DirectionProfile& p);

// Best-response dynamics with cyclic A, B, C updates.
struct DynamicsOutcome {
  bool converged = false;
  int sweeps = 0;
  DirectionProfile profile;
};

DynamicsOutcome run_best_response_dynamics(const SymmetricGame& g,
                                           const DirectionProfile& start,
                                           int max_sweeps = 10000,
                                           double move_tolerance = 1e-10);

struct SearchOptions {
  int seeds = 64;
  std::uint64_t rng_seed = 0;
  int threads = 1;
  int max_sweeps = 10000;
  double move_tolerance = 1e-10;    // radians
  double dedup_tolerance = 1e-6;    // radians, max over players
};

struct FixedPoint {
  int seed = 0;  // first seed that reached this point
  int duplicates = 0;
  int sweeps = 0;
  DirectionProfile profile;
  NEReport report;
};

struct NonConvergence {
  int seed = 0;
  DirectionProfile start;
  DirectionProfile last;
};

struct SearchResult {
  std::vector<FixedPoint> fixed_points;
  std::vector<NonConvergence> non_converged;
};

// Start profile used for a given seed index; independent of threading.
DirectionProfile search_start(std::uint64_t rng_seed, int seed_index);

// Runs the dynamics from options.seeds random starts. Results are merged in
// seed order, so the output does not depend on options.threads.
SearchResult find_ne(const SymmetricGame& g, const SearchOptions& options);

// In-plane constraint values gamma2 [x1* D - x2* D' + s] per player, where s
// is minus the three-way correlation with the deviator playing alt against
// the starred opponents. Each equals 8 * payoff_diff for that deviation.
std::array<double, 3> case_a_constraints(const SymmetricGame& g,
                                         const DirectionProfile& starred,
                                         const DirectionProfile& alt);

// gamma2 == 0 with every direction in the x-y plane: every profile is an
// equilibrium.
bool case_b_check(const SymmetricGame& g, const DirectionProfile& p);

struct PDVerdict {
  bool pass = false;
  std::vector<std::string> violated;
};

// Dominance, monotonicity in cooperating opponents, and pairwise dilemma
// conditions for a symmetric three-player game.
PDVerdict check_pd(const SymmetricGame& g);

}  // namespace ghzgames::nash

#endif  // GHZGAMES_NASH_HPP
