#ifndef GHZGAMES_CORE_HPP
#define GHZGAMES_CORE_HPP

// Domain types shared by the GHZ game library: measurement directions,
// outcome/strategy triples, three-player payoff tables and probability
// distributions over the eight outcomes.

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ghzgames {

// Tolerances.
inline constexpr double kUnitNormTolerance = 1e-9;
inline constexpr double kProbabilityTolerance = 1e-12;
inline constexpr double kPayoffTolerance = 1e-12;

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroVector : public Error {
 public:
  ZeroVector() : Error("cannot normalize the zero vector") {}
};

class NotUnit : public Error {
 public:
  explicit NotUnit(double norm);
  double norm() const { return norm_; }

 private:
  double norm_;
};

class NotInPlane : public Error {
 public:
  using Error::Error;
};

class InvalidProbability : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Players and strategies

enum class Player { A = 0, B = 1, C = 2 };
inline constexpr std::array<Player, 3> kPlayers{Player::A, Player::B,
                                                Player::C};

inline constexpr std::size_t index_of(Player p) {
  return static_cast<std::size_t>(p);
}
char to_char(Player p);

// S1 is "cooperate"-like first strategy, S2 the second one.
enum class Strategy { S1 = 0, S2 = 1 };

struct StrategyTriple {
  Strategy a = Strategy::S1;
  Strategy b = Strategy::S1;
  Strategy c = Strategy::S1;

  Strategy operator[](Player p) const;
  StrategyTriple with(Player p, Strategy s) const;

  // Canonical index in [0, 8): player A is the most significant bit and S2
  // sets the bit. This matches the outcome ordering and the qubit ordering
  // used by the Hilbert-space oracle.
  std::size_t index() const;
  static StrategyTriple from_index(std::size_t i);

  // Row label 1..8 in the customary listing
  // (S1S1S1, S2S1S1, S1S2S1, S1S1S2, S1S2S2, S2S1S2, S2S2S1, S2S2S2).
  int label() const;
  static StrategyTriple from_label(int label);

  std::string to_string() const;  // e.g. "S1,S2,S1"

  friend bool operator==(const StrategyTriple&, const StrategyTriple&) = default;
};

// Measurement outcome triple (m, l, k), each +1 or -1.
class OutcomeTriple {
 public:
  OutcomeTriple(int m, int l, int k);

  int m() const { return m_; }
  int l() const { return l_; }
  int k() const { return k_; }
  int product() const { return m_ * l_ * k_; }

  // m = +1 <-> S1, m = -1 <-> S2, for every player.
  StrategyTriple strategies() const;
  static OutcomeTriple from_strategies(const StrategyTriple& s);

  std::size_t index() const { return strategies().index(); }
  static OutcomeTriple from_index(std::size_t i);

  std::string to_string() const;  // e.g. "+-+"

  friend bool operator==(const OutcomeTriple&, const OutcomeTriple&) = default;

 private:
  int m_;
  int l_;
  int k_;
};

// All eight outcomes in canonical index order.
const std::array<OutcomeTriple, 8>& all_outcomes();

// ---------------------------------------------------------------------------
// Directions

// A unit vector in R^3 chosen by a player as the measurement axis.
class Direction {
 public:
  // Unit-norm check against kUnitNormTolerance, or normalize when asked.
  static Direction make(double x, double y, double z, bool normalize = false);
  static Direction from_spherical(double theta, double phi);

  static Direction x_axis() { return Direction(1.0, 0.0, 0.0); }
  static Direction y_axis() { return Direction(0.0, 1.0, 0.0); }
  static Direction z_axis() { return Direction(0.0, 0.0, 1.0); }

  double x() const { return c_[0]; }
  double y() const { return c_[1]; }
  double z() const { return c_[2]; }
  double operator[](std::size_t i) const { return c_[i]; }
  const std::array<double, 3>& components() const { return c_; }

  Direction operator-() const { return Direction(-c_[0], -c_[1], -c_[2]); }

  double dot(const Direction& other) const;
  // Angle in radians, robust near 0 and pi.
  double angle_to(const Direction& other) const;

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  Direction(double x, double y, double z) : c_{x, y, z} {}
  std::array<double, 3> c_;
};

Direction make_direction(double x, double y, double z, bool normalize);

struct DirectionProfile {
  Direction a = Direction::z_axis();
  Direction b = Direction::z_axis();
  Direction c = Direction::z_axis();

  const Direction& operator[](Player p) const;
  DirectionProfile with(Player p, const Direction& d) const;

  bool in_plane(double tol = kUnitNormTolerance) const;

  static DirectionProfile uniform(const Direction& d) { return {d, d, d}; }

  friend bool operator==(const DirectionProfile&,
                         const DirectionProfile&) = default;
};

// ---------------------------------------------------------------------------
// Games

struct PayoffTriple {
  double pi_a = 0.0;
  double pi_b = 0.0;
  double pi_c = 0.0;

  double operator[](Player p) const;
  double& operator[](Player p);

  PayoffTriple& operator+=(const PayoffTriple& o);
  friend PayoffTriple operator*(double w, const PayoffTriple& p);
  friend bool operator==(const PayoffTriple&, const PayoffTriple&) = default;
};

// Six constants defining a symmetric three-player two-strategy game.
// alpha: everybody plays S1; omega: everybody plays S2; beta: lone S2 player
// against two S1; delta: S1 player facing one S2; epsilon: lone S1 player
// against two S2; theta: S2 player facing one S2 and one S1.
struct SymmetricGame {
  double alpha = 0.0;
  double beta = 0.0;
  double delta = 0.0;
  double epsilon = 0.0;
  double theta = 0.0;
  double omega = 0.0;

  SymmetricGame scaled(double factor) const;

  friend bool operator==(const SymmetricGame&, const SymmetricGame&) = default;
};

// The canonical Prisoner's Dilemma instance (alpha..omega = 7,9,3,0,5,1).
SymmetricGame prisoners_dilemma();

// Payoff triple for each of the eight pure-strategy triples.
class GeneralGame {
 public:
  GeneralGame() = default;

  const PayoffTriple& operator[](const StrategyTriple& s) const {
    return entries_[s.index()];
  }
  PayoffTriple& operator[](const StrategyTriple& s) {
    return entries_[s.index()];
  }
  const std::array<PayoffTriple, 8>& entries() const { return entries_; }

  friend bool operator==(const GeneralGame&, const GeneralGame&) = default;

 private:
  std::array<PayoffTriple, 8> entries_{};
};

GeneralGame symmetric_to_general(const SymmetricGame& g);

struct SymmetryViolation {
  std::string equality;  // e.g. "β₁ = α₁"
  double residual = 0.0;
};

struct SymmetryReport {
  bool symmetric = false;
  SymmetricGame constants;  // meaningful only when symmetric
  std::vector<SymmetryViolation> violations;
};

// Tests the eighteen equalities that make a general game symmetric.
SymmetryReport check_symmetry(const GeneralGame& g,
                              double tol = kPayoffTolerance);

// ---------------------------------------------------------------------------
// Probabilities

// Probabilities x, y, z of playing S1 for A, B, C.
class MixedProfile {
 public:
  MixedProfile(double x, double y, double z);

  double x() const { return p_[0]; }
  double y() const { return p_[1]; }
  double z() const { return p_[2]; }
  double operator[](Player p) const { return p_[index_of(p)]; }

  // Factorizable probability of a pure-strategy triple.
  double probability(const StrategyTriple& s) const;

  friend bool operator==(const MixedProfile&, const MixedProfile&) = default;

 private:
  std::array<double, 3> p_;
};

// Distribution over the eight outcome triples. Entries in
// [-kProbabilityTolerance, 0) are read as 0.
class JointDistribution {
 public:
  explicit JointDistribution(const std::array<double, 8>& probs);

  double operator[](const OutcomeTriple& o) const { return at(o.index()); }
  double at(std::size_t index) const;
  // Raw stored values, without clamping.
  const std::array<double, 8>& raw() const { return probs_; }

  double sum() const;
  // Probability that m*l*k equals parity (+1 or -1).
  double parity_probability(int parity) const;

 private:
  std::array<double, 8> probs_;
};

}  // namespace ghzgames

#endif  // GHZGAMES_CORE_HPP
