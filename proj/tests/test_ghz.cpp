#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>

#include "ghzgames/ghz.hpp"
#include "ghzgames/oracle.hpp"
#include "test_support.hpp"

using namespace ghzgames;

namespace {

const Direction kX = Direction::x_axis();
const Direction kY = Direction::y_axis();
const Direction kZ = Direction::z_axis();

double max_abs_diff(const JointDistribution& p, const JointDistribution& q) {
  double d = 0.0;
  for (std::size_t i = 0; i < 8; ++i) d = std::max(d, std::abs(p.at(i) - q.at(i)));
  return d;
}

}  // namespace

TEST_CASE("delta") {
  CHECK(ghz::delta(DirectionProfile::uniform(kX)) == 1.0);
  CHECK(ghz::delta({kX, kY, kY}) == -1.0);
  CHECK(ghz::delta(DirectionProfile::uniform(kZ)) == 0.0);
}

TEST_CASE("delta is symmetric under permutations and bounded") {
  testing::Generator gen(21);
  for (int i = 0; i < 1000; ++i) {
    const auto [a, b, c] = gen.profile();
    const double d = ghz::delta({a, b, c});
    CHECK(std::abs(d) <= 1.0 + 1e-15);
    for (const DirectionProfile& p :
         {DirectionProfile{a, c, b}, DirectionProfile{b, a, c},
          DirectionProfile{b, c, a}, DirectionProfile{c, a, b},
          DirectionProfile{c, b, a}}) {
      CHECK(std::abs(ghz::delta(p) - d) <= 1e-15);
    }
  }
}

TEST_CASE("in-plane delta is the cosine of the summed azimuths") {
  testing::Generator gen(22);
  for (int i = 0; i < 200; ++i) {
    const double pa = gen.uniform(0, 7), pb = gen.uniform(0, 7), pc = gen.uniform(0, 7);
    const DirectionProfile p{testing::Generator::planar(pa),
                             testing::Generator::planar(pb),
                             testing::Generator::planar(pc)};
    CHECK(std::abs(ghz::delta(p) - std::cos(pa + pb + pc)) < 1e-14);
  }
}

TEST_CASE("reduced form agrees with the correlation tensor form") {
  const testing::CorrelationTensor tensor;
  CHECK(tensor.nonzero_count() == 4);
  CHECK(tensor.m[0][0][0] == 1.0);
  CHECK(tensor.m[0][1][1] == -1.0);
  CHECK(tensor.m[1][0][1] == -1.0);
  CHECK(tensor.m[1][1][0] == -1.0);

  testing::Generator gen(23);
  for (int i = 0; i < 1000; ++i) {
    const DirectionProfile p = gen.profile();
    CHECK(std::abs(tensor.contract(p) - ghz::delta(p)) <= 1e-15);
    for (const auto& o : all_outcomes()) {
      CHECK(std::abs(tensor.probability(o, p) - ghz::kz_probability(o, p)) <=
            1e-15);
    }
  }
}

TEST_CASE("kz_probability spot values") {
  CHECK(ghz::kz_probability({1, 1, 1}, DirectionProfile::uniform(kZ)) == 0.5);
  CHECK(ghz::kz_probability({1, 1, -1}, DirectionProfile::uniform(kZ)) == 0.0);

  // Frozen from the Hilbert-space oracle.
  const DirectionProfile xxx = DirectionProfile::uniform(kX);
  const double expected =
      oracle::joint_distribution_oracle(xxx)[OutcomeTriple(1, -1, -1)];
  CHECK(std::abs(expected - 0.25) < 1e-15);
  CHECK(ghz::kz_probability({1, -1, -1}, xxx) == 0.25);
}

TEST_CASE("joint_distribution spot values") {
  const auto zzz = ghz::joint_distribution(DirectionProfile::uniform(kZ));
  for (const auto& o : all_outcomes()) {
    const bool aligned = o.m() == o.l() && o.l() == o.k();
    CHECK(zzz[o] == (aligned ? 0.5 : 0.0));
  }

  const auto xxx = ghz::joint_distribution(DirectionProfile::uniform(kX));
  for (const auto& o : all_outcomes()) {
    CHECK(xxx[o] == (o.product() == 1 ? 0.25 : 0.0));
  }

  const DirectionProfile zzx{kZ, kZ, kX};
  const auto mixed = ghz::joint_distribution(zzx);
  for (const auto& o : all_outcomes()) {
    CHECK(mixed[o] == (o.m() == o.l() ? 0.25 : 0.0));
  }
  CHECK(max_abs_diff(mixed, oracle::joint_distribution_oracle(zzx)) < 1e-15);
  CHECK(max_abs_diff(xxx, oracle::joint_distribution_oracle(
                              DirectionProfile::uniform(kX))) < 1e-15);
}

TEST_CASE("GHZ paradox parities") {
  CHECK(std::abs(ghz::joint_distribution(DirectionProfile::uniform(kX))
                     .parity_probability(1) -
                 1.0) <= 1e-12);
  for (const DirectionProfile& p : {DirectionProfile{kX, kY, kY},
                                    DirectionProfile{kY, kX, kY},
                                    DirectionProfile{kY, kY, kX}}) {
    CHECK(std::abs(ghz::joint_distribution(p).parity_probability(-1) - 1.0) <=
          1e-12);
  }
}

TEST_CASE("distributions are normalized, non-negative and match the oracle") {
  testing::Generator gen(24);
  for (int i = 0; i < 1000; ++i) {
    const DirectionProfile p = gen.profile();
    const auto dist = ghz::joint_distribution(p);
    CHECK(std::abs(dist.sum() - 1.0) <= 1e-12);
    CHECK(*std::min_element(dist.raw().begin(), dist.raw().end()) >= -1e-12);
    CHECK(max_abs_diff(dist, oracle::joint_distribution_oracle(p)) <= 1e-12);
  }
}

TEST_CASE("single-party marginals are maximally mixed") {
  const auto zzz = DirectionProfile::uniform(kZ);
  CHECK(ghz::marginal_single(zzz, Player::A) == std::array<double, 2>{0.5, 0.5});
  CHECK(ghz::marginal_single(DirectionProfile::uniform(kX), Player::C) ==
        std::array<double, 2>{0.5, 0.5});

  testing::Generator gen(25);
  for (int i = 0; i < 1000; ++i) {
    const DirectionProfile p = gen.profile();
    for (Player player : kPlayers) {
      const auto m = ghz::marginal_single(p, player);
      CHECK(std::abs(m[0] - 0.5) <= 1e-12);
      CHECK(std::abs(m[1] - 0.5) <= 1e-12);
    }
  }
}

TEST_CASE("pair marginals") {
  using ghz::Pair;
  const auto zz = ghz::marginal_pair(DirectionProfile::uniform(kZ), Pair::AB);
  CHECK(zz == std::array<double, 4>{0.5, 0.0, 0.0, 0.5});
  const auto xx = ghz::marginal_pair(DirectionProfile::uniform(kX), Pair::AB);
  CHECK(xx == std::array<double, 4>{0.25, 0.25, 0.25, 0.25});
  const auto anti = ghz::marginal_pair({kZ, kX, -kZ}, Pair::AC);
  CHECK(anti == std::array<double, 4>{0.0, 0.5, 0.5, 0.0});

  testing::Generator gen(26);
  for (int i = 0; i < 1000; ++i) {
    const DirectionProfile p = gen.profile();
    const std::array<std::pair<Pair, double>, 3> pairs{{
        {Pair::AB, p.a.z() * p.b.z()},
        {Pair::AC, p.a.z() * p.c.z()},
        {Pair::BC, p.b.z() * p.c.z()},
    }};
    for (const auto& [pair, corr] : pairs) {
      const auto m = ghz::marginal_pair(p, pair);
      CHECK(std::abs(m[0] - (1 + corr) / 4) <= 1e-12);
      CHECK(std::abs(m[1] - (1 - corr) / 4) <= 1e-12);
      CHECK(std::abs(m[2] - (1 - corr) / 4) <= 1e-12);
      CHECK(std::abs(m[3] - (1 + corr) / 4) <= 1e-12);
    }
  }
}
