#include "ghzgames/core.hpp"

#include <cmath>
#include <numeric>

namespace ghzgames {

NotUnit::NotUnit(double norm)
    : Error("direction is not a unit vector (norm " + std::to_string(norm) +
            ")"),
      norm_(norm) {}

char to_char(Player p) {
  switch (p) {
    case Player::A:
      return 'A';
    case Player::B:
      return 'B';
    case Player::C:
      return 'C';
  }
  return '?';
}

// ---------------------------------------------------------------------------
// StrategyTriple

Strategy StrategyTriple::operator[](Player p) const {
  switch (p) {
    case Player::A:
      return a;
    case Player::B:
      return b;
    case Player::C:
      return c;
  }
  return a;
}

StrategyTriple StrategyTriple::with(Player p, Strategy s) const {
  StrategyTriple out = *this;
  switch (p) {
    case Player::A:
      out.a = s;
      break;
    case Player::B:
      out.b = s;
      break;
    case Player::C:
      out.c = s;
      break;
  }
  return out;
}

std::size_t StrategyTriple::index() const {
  return (static_cast<std::size_t>(a) << 2) |
         (static_cast<std::size_t>(b) << 1) | static_cast<std::size_t>(c);
}

StrategyTriple StrategyTriple::from_index(std::size_t i) {
  if (i >= 8) throw Error("strategy triple index out of range");
  return {static_cast<Strategy>((i >> 2) & 1u),
          static_cast<Strategy>((i >> 1) & 1u), static_cast<Strategy>(i & 1u)};
}

namespace {

// Customary row order: label n (1-based) -> canonical index.
constexpr std::array<std::size_t, 8> kLabelToIndex{
    0b000,  // S1 S1 S1
    0b100,  // S2 S1 S1
    0b010,  // S1 S2 S1
    0b001,  // S1 S1 S2
    0b011,  // S1 S2 S2
    0b101,  // S2 S1 S2
    0b110,  // S2 S2 S1
    0b111,  // S2 S2 S2
};

}  // namespace

int StrategyTriple::label() const {
  const std::size_t idx = index();
  for (std::size_t n = 0; n < kLabelToIndex.size(); ++n) {
    if (kLabelToIndex[n] == idx) return static_cast<int>(n) + 1;
  }
  return 0;
}

StrategyTriple StrategyTriple::from_label(int label) {
  if (label < 1 || label > 8) throw Error("strategy triple label out of range");
  return from_index(kLabelToIndex[static_cast<std::size_t>(label - 1)]);
}

std::string StrategyTriple::to_string() const {
  auto name = [](Strategy s) { return s == Strategy::S1 ? "S1" : "S2"; };
  return std::string(name(a)) + "," + name(b) + "," + name(c);
}

// ---------------------------------------------------------------------------
// OutcomeTriple

OutcomeTriple::OutcomeTriple(int m, int l, int k) : m_(m), l_(l), k_(k) {
  auto ok = [](int v) { return v == 1 || v == -1; };
  if (!ok(m) || !ok(l) || !ok(k)) {
    throw Error("outcome components must be +1 or -1");
  }
}

StrategyTriple OutcomeTriple::strategies() const {
  auto s = [](int v) { return v == 1 ? Strategy::S1 : Strategy::S2; };
  return {s(m_), s(l_), s(k_)};
}

OutcomeTriple OutcomeTriple::from_strategies(const StrategyTriple& s) {
  auto v = [](Strategy st) { return st == Strategy::S1 ? 1 : -1; };
  return {v(s.a), v(s.b), v(s.c)};
}

OutcomeTriple OutcomeTriple::from_index(std::size_t i) {
  return from_strategies(StrategyTriple::from_index(i));
}

std::string OutcomeTriple::to_string() const {
  auto c = [](int v) { return v == 1 ? '+' : '-'; };
  return {c(m_), c(l_), c(k_)};
}

const std::array<OutcomeTriple, 8>& all_outcomes() {
  static const std::array<OutcomeTriple, 8> kAll{
      OutcomeTriple::from_index(0), OutcomeTriple::from_index(1),
      OutcomeTriple::from_index(2), OutcomeTriple::from_index(3),
      OutcomeTriple::from_index(4), OutcomeTriple::from_index(5),
      OutcomeTriple::from_index(6), OutcomeTriple::from_index(7)};
  return kAll;
}

// ---------------------------------------------------------------------------
// Direction

Direction Direction::make(double x, double y, double z, bool normalize) {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
    throw Error("direction components must be finite");
  }
  const double norm = std::sqrt(x * x + y * y + z * z);
  if (normalize) {
    if (norm == 0.0) throw ZeroVector();
    return Direction(x / norm, y / norm, z / norm);
  }
  if (std::abs(norm - 1.0) > kUnitNormTolerance) throw NotUnit(norm);
  return Direction(x, y, z);
}

Direction Direction::from_spherical(double theta, double phi) {
  return make(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
              std::cos(theta), true);
}

double Direction::dot(const Direction& other) const {
  return c_[0] * other.c_[0] + c_[1] * other.c_[1] + c_[2] * other.c_[2];
}

double Direction::angle_to(const Direction& other) const {
  const double cx = c_[1] * other.c_[2] - c_[2] * other.c_[1];
  const double cy = c_[2] * other.c_[0] - c_[0] * other.c_[2];
  const double cz = c_[0] * other.c_[1] - c_[1] * other.c_[0];
  return std::atan2(std::sqrt(cx * cx + cy * cy + cz * cz), dot(other));
}

Direction make_direction(double x, double y, double z, bool normalize) {
  return Direction::make(x, y, z, normalize);
}

const Direction& DirectionProfile::operator[](Player p) const {
  switch (p) {
    case Player::A:
      return a;
    case Player::B:
      return b;
    case Player::C:
      return c;
  }
  return a;
}

DirectionProfile DirectionProfile::with(Player p, const Direction& d) const {
  DirectionProfile out = *this;
  switch (p) {
    case Player::A:
      out.a = d;
      break;
    case Player::B:
      out.b = d;
      break;
    case Player::C:
      out.c = d;
      break;
  }
  return out;
}

bool DirectionProfile::in_plane(double tol) const {
  return std::abs(a.z()) <= tol && std::abs(b.z()) <= tol &&
         std::abs(c.z()) <= tol;
}

// ---------------------------------------------------------------------------
// Payoffs and games

double PayoffTriple::operator[](Player p) const {
  switch (p) {
    case Player::A:
      return pi_a;
    case Player::B:
      return pi_b;
    case Player::C:
      return pi_c;
  }
  return pi_a;
}

double& PayoffTriple::operator[](Player p) {
  switch (p) {
    case Player::A:
      return pi_a;
    case Player::B:
      return pi_b;
    case Player::C:
      return pi_c;
  }
  return pi_a;
}

PayoffTriple& PayoffTriple::operator+=(const PayoffTriple& o) {
  pi_a += o.pi_a;
  pi_b += o.pi_b;
  pi_c += o.pi_c;
  return *this;
}

PayoffTriple operator*(double w, const PayoffTriple& p) {
  return {w * p.pi_a, w * p.pi_b, w * p.pi_c};
}

SymmetricGame SymmetricGame::scaled(double factor) const {
  return {factor * alpha, factor * beta,  factor * delta,
          factor * epsilon, factor * theta, factor * omega};
}

SymmetricGame prisoners_dilemma() {
  return {.alpha = 7, .beta = 9, .delta = 3, .epsilon = 0, .theta = 5,
          .omega = 1};
}

GeneralGame symmetric_to_general(const SymmetricGame& g) {
  using S = Strategy;
  GeneralGame out;
  out[{S::S1, S::S1, S::S1}] = {g.alpha, g.alpha, g.alpha};
  out[{S::S2, S::S1, S::S1}] = {g.beta, g.delta, g.delta};
  out[{S::S1, S::S2, S::S1}] = {g.delta, g.beta, g.delta};
  out[{S::S1, S::S1, S::S2}] = {g.delta, g.delta, g.beta};
  out[{S::S1, S::S2, S::S2}] = {g.epsilon, g.theta, g.theta};
  out[{S::S2, S::S1, S::S2}] = {g.theta, g.epsilon, g.theta};
  out[{S::S2, S::S2, S::S1}] = {g.theta, g.theta, g.epsilon};
  out[{S::S2, S::S2, S::S2}] = {g.omega, g.omega, g.omega};
  return out;
}

namespace {

// One equality "lhs_player[lhs_label] = A[rhs_label]" where player 0 is A
// (alpha), 1 is B (beta), 2 is C (gamma).
struct SymmetryEquality {
  Player lhs_player;
  int lhs_label;
  int rhs_label;
};

constexpr std::array<SymmetryEquality, 18> kSymmetryEqualities{{
    {Player::B, 1, 1}, {Player::B, 2, 3}, {Player::B, 3, 2},
    {Player::B, 4, 3}, {Player::B, 5, 6}, {Player::B, 6, 5},
    {Player::B, 7, 6}, {Player::B, 8, 8}, {Player::C, 1, 1},
    {Player::C, 2, 3}, {Player::C, 3, 3}, {Player::C, 4, 2},
    {Player::C, 5, 6}, {Player::C, 6, 6}, {Player::C, 7, 5},
    {Player::C, 8, 8}, {Player::A, 6, 7}, {Player::A, 3, 4},
}};

std::string subscript(int n) {
  // U+2080 + n, encoded as UTF-8.
  std::string s = "\xE2\x82";
  s.push_back(static_cast<char>(0x80 + n));
  return s;
}

std::string payoff_symbol(Player p, int label) {
  const char* greek = p == Player::A ? "α" : (p == Player::B ? "β" : "γ");
  return std::string(greek) + subscript(label);
}

}  // namespace

SymmetryReport check_symmetry(const GeneralGame& g, double tol) {
  auto value = [&](Player p, int label) {
    return g[StrategyTriple::from_label(label)][p];
  };

  SymmetryReport report;
  for (const auto& eq : kSymmetryEqualities) {
    const double lhs = value(eq.lhs_player, eq.lhs_label);
    const double rhs = value(Player::A, eq.rhs_label);
    const double residual = lhs - rhs;
    if (!(std::abs(residual) <= tol)) {
      report.violations.push_back(
          {payoff_symbol(eq.lhs_player, eq.lhs_label) + " = " +
               payoff_symbol(Player::A, eq.rhs_label),
           residual});
    }
  }
  report.symmetric = report.violations.empty();
  if (report.symmetric) {
    report.constants = {value(Player::A, 1), value(Player::A, 2),
                        value(Player::A, 3), value(Player::A, 5),
                        value(Player::A, 6), value(Player::A, 8)};
  }
  return report;
}

// ---------------------------------------------------------------------------
// Probabilities

MixedProfile::MixedProfile(double x, double y, double z) : p_{x, y, z} {
  for (double v : p_) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw InvalidProbability("mixed strategy probabilities must lie in [0, 1]");
    }
  }
}

double MixedProfile::probability(const StrategyTriple& s) const {
  double prob = 1.0;
  for (Player p : kPlayers) {
    prob *= s[p] == Strategy::S1 ? (*this)[p] : 1.0 - (*this)[p];
  }
  return prob;
}

JointDistribution::JointDistribution(const std::array<double, 8>& probs)
    : probs_(probs) {
  for (double v : probs_) {
    if (!std::isfinite(v) || v < -kProbabilityTolerance) {
      throw InvalidProbability("negative or non-finite outcome probability");
    }
  }
  if (std::abs(sum() - 1.0) > kProbabilityTolerance) {
    throw InvalidProbability("outcome probabilities do not sum to 1");
  }
}

double JointDistribution::at(std::size_t index) const {
  const double v = probs_.at(index);
  if (v < -kProbabilityTolerance) {
    throw InvalidProbability("negative outcome probability");
  }
  return v < 0.0 ? 0.0 : v;
}

double JointDistribution::sum() const {
  return std::accumulate(probs_.begin(), probs_.end(), 0.0);
}

double JointDistribution::parity_probability(int parity) const {
  double total = 0.0;
  for (const auto& o : all_outcomes()) {
    if (o.product() == parity) total += (*this)[o];
  }
  return total;
}

}  // namespace ghzgames
