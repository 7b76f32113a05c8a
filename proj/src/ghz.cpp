#include "ghzgames/ghz.hpp"

namespace ghzgames::ghz {

double delta(const DirectionProfile& p) {
  const auto& a = p.a;
  const auto& b = p.b;
  const auto& c = p.c;
  return a.x() * b.x() * c.x() - a.x() * b.y() * c.y() -
         a.y() * b.x() * c.y() - a.y() * b.y() * c.x();
}

double kz_probability(const OutcomeTriple& o, const DirectionProfile& p) {
  const double ab = p.a.z() * p.b.z();
  const double ac = p.a.z() * p.c.z();
  const double bc = p.b.z() * p.c.z();
  return (1.0 + o.m() * o.l() * ab + o.m() * o.k() * ac + o.l() * o.k() * bc +
          o.product() * delta(p)) /
         8.0;
}

JointDistribution joint_distribution(const DirectionProfile& p) {
  std::array<double, 8> probs{};
  for (const auto& o : all_outcomes()) probs[o.index()] = kz_probability(o, p);
  return JointDistribution(probs);
}

std::array<double, 2> marginal_single(const DirectionProfile& p,
                                      Player player) {
  const auto dist = joint_distribution(p);
  std::array<double, 2> out{};
  for (const auto& o : all_outcomes()) {
    const int sign = o.strategies()[player] == Strategy::S1 ? 0 : 1;
    out[static_cast<std::size_t>(sign)] += dist[o];
  }
  return out;
}

std::array<double, 4> marginal_pair(const DirectionProfile& p, Pair pair) {
  const auto dist = joint_distribution(p);
  Player first = Player::A;
  Player second = Player::B;
  switch (pair) {
    case Pair::AB:
      break;
    case Pair::AC:
      second = Player::C;
      break;
    case Pair::BC:
      first = Player::B;
      second = Player::C;
      break;
  }
  std::array<double, 4> out{};
  for (const auto& o : all_outcomes()) {
    const auto s = o.strategies();
    const std::size_t slot = (static_cast<std::size_t>(s[first]) << 1) |
                             static_cast<std::size_t>(s[second]);
    out[slot] += dist[o];
  }
  return out;
}

}  // namespace ghzgames::ghz
