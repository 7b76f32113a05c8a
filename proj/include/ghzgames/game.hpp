#ifndef GHZGAMES_GAME_HPP
#define GHZGAMES_GAME_HPP

#include <optional>
#include <string>
#include <vector>

#include "ghzgames/core.hpp"

namespace ghzgames::game {

inline constexpr double kFactorizationTolerance = 1e-9;

// Expected payoffs under the product distribution of a mixed profile.
PayoffTriple classical_payoffs(const GeneralGame& g, const MixedProfile& m);

// Expected payoffs under an arbitrary outcome distribution, outcome o being
// played as strategy triple o.strategies().
PayoffTriple expected_payoffs(const GeneralGame& g,
                              const JointDistribution& dist);

// Expected payoffs when the outcome distribution is the GHZ distribution for
// the players' measurement directions.
PayoffTriple quantum_payoffs(const GeneralGame& g, const DirectionProfile& p);

// Same as quantum_payoffs for a symmetric game with every direction in the
// x-y plane, written in terms of the three-way correlation only.
// Throws NotInPlane when a third component exceeds kUnitNormTolerance.
PayoffTriple quantum_payoffs_inplane(const SymmetricGame& g,
                                     const DirectionProfile& p);

struct EquationResidual {
  std::string id;  // "E1".."E8", E_n equating outcome row n
  double lhs = 0.0;  // quantum probability
  double rhs = 0.0;  // product probability at the candidate
  double residual() const { return lhs - rhs; }
};

struct FactorizationReport {
  bool consistent = false;
  std::optional<MixedProfile> solution;
  // Candidate forced by the pairwise sums, whether or not it is consistent.
  std::array<double, 3> candidate{};
  std::vector<EquationResidual> equations;           // all eight
  std::vector<EquationResidual> violated_equations;  // |residual| > tol
};

// Decides whether a product of independent per-player distributions
// reproduces the GHZ distribution of the profile.
FactorizationReport factorize(const DirectionProfile& p,
                              double tol = kFactorizationTolerance);

enum class EquilibriumKind { Strict, Weak };

struct PureEquilibrium {
  StrategyTriple strategies;
  PayoffTriple payoffs;
  EquilibriumKind kind = EquilibriumKind::Strict;
};

// Exhaustive check of the eight pure profiles against unilateral pure
// deviations.
std::vector<PureEquilibrium> classical_pure_ne(const GeneralGame& g,
                                               double tol = kPayoffTolerance);

}  // namespace ghzgames::game

#endif  // GHZGAMES_GAME_HPP
