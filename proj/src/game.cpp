#include "ghzgames/game.hpp"

#include <cmath>

#include "ghzgames/ghz.hpp"

namespace ghzgames::game {

PayoffTriple classical_payoffs(const GeneralGame& g, const MixedProfile& m) {
  PayoffTriple total;
  for (std::size_t i = 0; i < 8; ++i) {
    const auto s = StrategyTriple::from_index(i);
    total += m.probability(s) * g[s];
  }
  return total;
}

PayoffTriple expected_payoffs(const GeneralGame& g,
                              const JointDistribution& dist) {
  PayoffTriple total;
  for (const auto& o : all_outcomes()) total += dist[o] * g[o.strategies()];
  return total;
}

PayoffTriple quantum_payoffs(const GeneralGame& g, const DirectionProfile& p) {
  return expected_payoffs(g, ghz::joint_distribution(p));
}

PayoffTriple quantum_payoffs_inplane(const SymmetricGame& g,
                                     const DirectionProfile& p) {
  if (!p.in_plane()) {
    throw NotInPlane("all three directions must lie in the x-y plane");
  }
  const double d = ghz::delta(p);
  const double plus = (1.0 + d) / 8.0;
  const double minus = (1.0 - d) / 8.0;

  // Rows with an even number of S2 choices carry (1 + delta), the others
  // (1 - delta).
  PayoffTriple total = plus * PayoffTriple{g.alpha, g.alpha, g.alpha};
  total += minus * PayoffTriple{g.delta, g.beta, g.delta};
  total += minus * PayoffTriple{g.delta, g.delta, g.beta};
  total += plus * PayoffTriple{g.epsilon, g.theta, g.theta};
  total += minus * PayoffTriple{g.beta, g.delta, g.delta};
  total += plus * PayoffTriple{g.theta, g.theta, g.epsilon};
  total += plus * PayoffTriple{g.theta, g.epsilon, g.theta};
  total += minus * PayoffTriple{g.omega, g.omega, g.omega};
  return total;
}

FactorizationReport factorize(const DirectionProfile& p, double tol) {
  const auto dist = ghz::joint_distribution(p);
  // Quantum side of the equation for row label n.
  auto row = [&](int label) {
    return dist[OutcomeTriple::from_strategies(
        StrategyTriple::from_label(label))];
  };

  // Pairwise sums of the eight equations leave equations of the form
  // (1 +/- t) / 4 = product of two factors, t a pairwise z-product:
  //   E1 + E2 = x z           (1 + ac) / 4
  //   E3 + E4 = x (1 - z)     (1 - ac) / 4
  //   E7 + E8 = (1 - x)(1 - z) (1 + ac) / 4
  //   E2 + E4 = x (1 - y)     (1 - ab) / 4
  //   E6 + E8 = (1 - x)(1 - y) (1 + ab) / 4
  // Adding two of them collects the constants and cancels t.
  struct Reduced {
    double constant;
    double correlation;
    Reduced operator+(const Reduced& o) const {
      return {constant + o.constant, correlation + o.correlation};
    }
    double value() const { return (constant + correlation) / 4.0; }
  };
  const double ab = p.a.z() * p.b.z();
  const double ac = p.a.z() * p.c.z();
  const Reduced e12{1.0, ac};
  const Reduced e34{1.0, -ac};
  const Reduced e78{1.0, ac};
  const Reduced e24{1.0, -ab};
  const Reduced e68{1.0, ab};
  const double x = (e12 + e34).value();
  const double z = 1.0 - (e34 + e78).value();
  const double y = 1.0 - (e24 + e68).value();

  FactorizationReport report;
  report.candidate = {x, y, z};

  auto product = [&](const StrategyTriple& s) {
    auto f = [](Strategy st, double q) {
      return st == Strategy::S1 ? q : 1.0 - q;
    };
    return f(s.a, x) * f(s.b, y) * f(s.c, z);
  };
  for (int label = 1; label <= 8; ++label) {
    const auto s = StrategyTriple::from_label(label);
    EquationResidual eq{"E" + std::to_string(label), row(label), product(s)};
    if (!(std::abs(eq.residual()) <= tol)) {
      report.violated_equations.push_back(eq);
    }
    report.equations.push_back(std::move(eq));
  }

  const bool in_range = x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0 &&
                        z >= 0.0 && z <= 1.0;
  report.consistent = in_range && report.violated_equations.empty();
  if (report.consistent) report.solution = MixedProfile(x, y, z);
  return report;
}

std::vector<PureEquilibrium> classical_pure_ne(const GeneralGame& g,
                                               double tol) {
  std::vector<PureEquilibrium> out;
  for (std::size_t i = 0; i < 8; ++i) {
    const auto s = StrategyTriple::from_index(i);
    bool equilibrium = true;
    bool strict = true;
    for (Player p : kPlayers) {
      const Strategy other = s[p] == Strategy::S1 ? Strategy::S2 : Strategy::S1;
      const double gain = g[s.with(p, other)][p] - g[s][p];
      if (gain > tol) {
        equilibrium = false;
        break;
      }
      if (gain >= -tol) strict = false;
    }
    if (equilibrium) {
      out.push_back({s, g[s],
                     strict ? EquilibriumKind::Strict : EquilibriumKind::Weak});
    }
  }
  return out;
}

}  // namespace ghzgames::game
