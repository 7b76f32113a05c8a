#ifndef GHZGAMES_GHZ_HPP
#define GHZGAMES_GHZ_HPP

// Closed-form outcome probabilities for three spin measurements along
// directions a, b, c on the GHZ state (|000> + |111>)/sqrt(2).

#include <array>

#include "ghzgames/core.hpp"

namespace ghzgames::ghz {

// Three-way correlation a1 b1 c1 - a1 b2 c2 - a2 b1 c2 - a2 b2 c1.
// Symmetric in (a, b, c); |delta| <= 1 for unit vectors.
double delta(const DirectionProfile& p);

// (1/8) [1 + m l a3 b3 + m k a3 c3 + l k b3 c3 + m l k delta].
double kz_probability(const OutcomeTriple& o, const DirectionProfile& p);

JointDistribution joint_distribution(const DirectionProfile& p);

// Player's (+1, -1) probabilities. Always (1/2, 1/2) for this state.
std::array<double, 2> marginal_single(const DirectionProfile& p, Player player);

enum class Pair { AB, AC, BC };

// Probabilities of the pair's outcomes ordered (++, +-, -+, --).
// Closed form (1 + s t u3 v3) / 4 for outcome signs s, t.
std::array<double, 4> marginal_pair(const DirectionProfile& p, Pair pair);

}  // namespace ghzgames::ghz

#endif  // GHZGAMES_GHZ_HPP
