#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ghzgames/game.hpp"
#include "ghzgames/nash.hpp"
#include "test_support.hpp"

using namespace ghzgames;
using namespace ghzgames::nash;

namespace {

const Direction kX = Direction::x_axis();
const Direction kY = Direction::y_axis();
const Direction kZ = Direction::z_axis();

double direct_diff(const SymmetricGame& g, const DirectionProfile& starred,
                   Player deviator, const Direction& alt) {
  const GeneralGame general = symmetric_to_general(g);
  return game::quantum_payoffs(general, starred)[deviator] -
         game::quantum_payoffs(general, starred.with(deviator, alt))[deviator];
}

// Largest gain any grid direction offers any player.
double grid_max_gain(const SymmetricGame& g, const DirectionProfile& p,
                     const std::vector<Direction>& grid) {
  const GeneralGame general = symmetric_to_general(g);
  const PayoffTriple base = game::quantum_payoffs(general, p);
  double best = -1e300;
  for (Player player : kPlayers) {
    for (const auto& d : grid) {
      best = std::max(best,
                      game::quantum_payoffs(general, p.with(player, d))[player] -
                          base[player]);
    }
  }
  return best;
}

const SymmetricGame kCaseB{3, 1, 1, 0, 0, 0};

}  // namespace

TEST_CASE("gammas") {
  const GammaPair pd = gammas(prisoners_dilemma());
  CHECK(pd.gamma1 == -1.0);
  CHECK(pd.gamma2 == 1.0);
  const GammaPair zero = gammas(SymmetricGame{});
  CHECK(zero.gamma1 == 0.0);
  CHECK(zero.gamma2 == 0.0);
  const GammaPair b = gammas(kCaseB);
  CHECK(b.gamma1 == 2.0);
  CHECK(b.gamma2 == 0.0);

  testing::Generator gen(51);
  for (int i = 0; i < 100; ++i) {
    const SymmetricGame g = gen.symmetric_game();
    const double lambda = gen.uniform(0.1, 10.0);
    const GammaPair s = gammas(g.scaled(lambda));
    const GammaPair o = gammas(g);
    CHECK(std::abs(s.gamma1 - lambda * o.gamma1) <= 1e-12 * (1 + std::abs(s.gamma1)));
    CHECK(std::abs(s.gamma2 - lambda * o.gamma2) <= 1e-12 * (1 + std::abs(s.gamma2)));
  }
}

TEST_CASE("delta_set") {
  const DeltaSet xxx = delta_set(DirectionProfile::uniform(kX));
  CHECK(xxx.d1 == 0);
  CHECK(xxx.d2 == 1);
  CHECK(xxx.d3 == 0);
  CHECK(xxx.d1p == 0);
  CHECK(xxx.d2p == 0);
  CHECK(xxx.d3p == 1);
  CHECK(xxx.d1pp == 0);
  CHECK(xxx.d2pp == 0);
  CHECK(xxx.d3pp == 1);

  const DeltaSet zzz = delta_set(DirectionProfile::uniform(kZ));
  CHECK(zzz.d1 == 2);
  CHECK(zzz.d1p == 2);
  CHECK(zzz.d1pp == 2);
  for (double v : {zzz.d2, zzz.d3, zzz.d2p, zzz.d3p, zzz.d2pp, zzz.d3pp}) {
    CHECK(v == 0);
  }

  const DeltaSet flipped = delta_set({kZ, kZ, -kZ});
  CHECK(flipped.d1 == 0);
  CHECK(flipped.d1p == 0);
  CHECK(flipped.d1pp == 2);
}

TEST_CASE("payoff_diff spot values") {
  const SymmetricGame pd = prisoners_dilemma();
  const auto xxx = DirectionProfile::uniform(kX);
  CHECK(std::abs(payoff_diff(pd, xxx, Player::A, kZ) - 0.125) <= 1e-15);
  CHECK(std::abs((17.0 / 4.0 - 33.0 / 8.0) - 0.125) <= 1e-15);
  CHECK(payoff_diff(pd, xxx, Player::A, kX) == 0.0);
  const auto zzz = DirectionProfile::uniform(kZ);
  CHECK(std::abs(payoff_diff(pd, zzz, Player::A, -kZ) + 0.5) <= 1e-15);
  CHECK(std::abs(direct_diff(pd, zzz, Player::A, -kZ) + 0.5) <= 1e-12);
}

TEST_CASE("payoff_diff matches direct payoff differences") {
  testing::Generator gen(52);
  for (int i = 0; i < 1000; ++i) {
    const SymmetricGame g = gen.symmetric_game();
    const DirectionProfile p = gen.profile();
    const Direction alt = gen.direction();
    for (Player player : kPlayers) {
      CHECK(std::abs(payoff_diff(g, p, player, alt) - direct_diff(g, p, player, alt)) <=
            1e-12);
    }
  }
}

TEST_CASE("B and C lines follow from A's by relabelling players") {
  // Pi_B(a, b, c) = Pi_A(b, a, c) and Pi_C(a, b, c) = Pi_A(c, a, b) in a
  // symmetric game, because the three-way correlation is symmetric.
  testing::Generator gen(53);
  for (int i = 0; i < 300; ++i) {
    const SymmetricGame g = gen.symmetric_game();
    const GeneralGame general = symmetric_to_general(g);
    const auto [a, b, c] = gen.profile();
    const PayoffTriple pi = game::quantum_payoffs(general, {a, b, c});
    CHECK(std::abs(pi.pi_b - game::quantum_payoffs(general, {b, a, c}).pi_a) <= 1e-12);
    CHECK(std::abs(pi.pi_c - game::quantum_payoffs(general, {c, a, b}).pi_a) <= 1e-12);
    const Direction alt = gen.direction();
    CHECK(std::abs(payoff_diff(g, {a, b, c}, Player::B, alt) -
                   payoff_diff(g, {b, a, c}, Player::A, alt)) <= 1e-12);
    CHECK(std::abs(payoff_diff(g, {a, b, c}, Player::C, alt) -
                   payoff_diff(g, {c, a, b}, Player::A, alt)) <= 1e-12);
  }
}

TEST_CASE("best_response spot values") {
  const SymmetricGame pd = prisoners_dilemma();
  const BestResponse xx = best_response(pd, kX, kX, Player::A);
  REQUIRE_FALSE(xx.indifferent());
  CHECK(xx.direction->angle_to(kX) < 1e-15);
  CHECK(xx.gradient == std::array<double, 3>{1, 0, 0});

  const BestResponse zz = best_response(pd, kZ, kZ, Player::A);
  REQUIRE_FALSE(zz.indifferent());
  CHECK(zz.direction->angle_to(-kZ) < 1e-15);
  CHECK(zz.gradient == std::array<double, 3>{0, 0, -2});

  CHECK(best_response(pd, kZ, -kZ, Player::A).indifferent());

  // The two-direction overload matches the profile overload for B and C.
  testing::Generator gen(54);
  for (int i = 0; i < 100; ++i) {
    const DirectionProfile p = gen.profile();
    CHECK(best_response(pd, p.a, p.c, Player::B).gradient ==
          best_response(pd, p, Player::B).gradient);
    CHECK(best_response(pd, p.a, p.b, Player::C).gradient ==
          best_response(pd, p, Player::C).gradient);
  }
}

TEST_CASE("best_response beats a sphere grid") {
  const auto grid = testing::sphere_grid(10000);
  testing::Generator gen(55);
  const auto pd = prisoners_dilemma();
  for (int i = 0; i < 60; ++i) {
    const SymmetricGame g = i < 10 ? pd : gen.symmetric_game();
    const GeneralGame general = symmetric_to_general(g);
    const DirectionProfile p = gen.profile();
    const Player player = kPlayers[static_cast<std::size_t>(i % 3)];
    const BestResponse br = best_response(g, p, player);
    const Direction chosen = br.direction.value_or(p[player]);
    const double value = game::quantum_payoffs(general, p.with(player, chosen))[player];
    double best_grid = -1e300;
    for (const auto& d : grid) {
      best_grid = std::max(best_grid,
                           game::quantum_payoffs(general, p.with(player, d))[player]);
    }
    CHECK(value >= best_grid - 1e-9);
  }
}

TEST_CASE("verify_ne on the Prisoner's Dilemma fixtures") {
  const SymmetricGame pd = prisoners_dilemma();
  const auto grid = testing::sphere_grid(10000);

  const NEReport xxx = verify_ne(pd, DirectionProfile::uniform(kX));
  CHECK(xxx.verdict == Verdict::Strict);
  CHECK_FALSE(xxx.witness.has_value());
  for (const auto& pa : xxx.players) CHECK(pa.status == PlayerStatus::Aligned);
  CHECK(grid_max_gain(pd, DirectionProfile::uniform(kX), grid) <= 1e-9);

  const NEReport zzz = verify_ne(pd, DirectionProfile::uniform(kZ));
  CHECK(zzz.verdict == Verdict::NotNE);
  REQUIRE(zzz.witness.has_value());
  CHECK(zzz.witness->player == Player::A);
  CHECK(zzz.witness->direction.angle_to(-kZ) < 1e-15);
  CHECK(std::abs(zzz.witness->gain - 0.5) <= 1e-12);

  const DirectionProfile flipped{kZ, kZ, -kZ};
  const NEReport weak = verify_ne(pd, flipped);
  CHECK(weak.verdict == Verdict::Weak);
  CHECK(weak.players[0].status == PlayerStatus::Indifferent);
  CHECK(weak.players[1].status == PlayerStatus::Indifferent);
  CHECK(weak.players[2].status == PlayerStatus::Aligned);
  CHECK(grid_max_gain(pd, flipped, grid) <= 1e-9);
}

TEST_CASE("verify_ne witnesses are real improvements") {
  testing::Generator gen(56);
  for (int i = 0; i < 500; ++i) {
    const SymmetricGame g = gen.symmetric_game();
    const DirectionProfile p = gen.profile();
    const NEReport r = verify_ne(g, p);
    if (r.verdict != Verdict::NotNE) continue;
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->gain > 1e-12);
    const double direct = -direct_diff(g, p, r.witness->player, r.witness->direction);
    CHECK(std::abs(direct - r.witness->gain) <= 1e-12);
  }
}

TEST_CASE("verify_ne verdicts are invariant under positive scaling") {
  testing::Generator gen(57);
  const SymmetricGame pd = prisoners_dilemma();
  for (int i = 0; i < 300; ++i) {
    const SymmetricGame g = i % 2 ? pd : gen.symmetric_game();
    const double lambda = gen.uniform(0.1, 10.0);
    DirectionProfile p = gen.profile();
    if (i % 3 == 0) p = DirectionProfile::uniform(kX);
    CHECK(verify_ne(g, p).verdict == verify_ne(g.scaled(lambda), p).verdict);
  }
}

TEST_CASE("best-response dynamics fixed points") {
  const SymmetricGame pd = prisoners_dilemma();
  const auto xxx = run_best_response_dynamics(pd, DirectionProfile::uniform(kX));
  CHECK(xxx.converged);
  CHECK(xxx.sweeps == 1);
  CHECK(xxx.profile == DirectionProfile::uniform(kX));

  // Symmetric in-plane fixed points: azimuth phi with -2 phi = phi mod 2 pi.
  for (double phi : {2 * std::numbers::pi / 3, 4 * std::numbers::pi / 3}) {
    const auto start = DirectionProfile::uniform(testing::Generator::planar(phi));
    const auto out = run_best_response_dynamics(pd, start);
    CHECK(out.converged);
    for (Player player : kPlayers) {
      CHECK(out.profile[player].angle_to(start[player]) < 1e-9);
    }
    CHECK(verify_ne(pd, start).verdict == Verdict::Strict);
  }

  // Off-solution azimuths are not fixed points.
  const auto off = DirectionProfile::uniform(testing::Generator::planar(1.0));
  CHECK(verify_ne(pd, off).verdict == Verdict::NotNE);
}

TEST_CASE("find_ne on the Prisoner's Dilemma") {
  const SymmetricGame pd = prisoners_dilemma();
  SearchOptions options;
  options.seeds = 64;
  options.rng_seed = 7;
  const SearchResult result = find_ne(pd, options);
  CHECK(result.fixed_points.size() + result.non_converged.size() <= 64);
  CHECK_FALSE(result.fixed_points.empty());

  int accounted = static_cast<int>(result.non_converged.size());
  const auto grid = testing::sphere_grid(2000);
  for (const auto& fp : result.fixed_points) {
    accounted += 1 + fp.duplicates;
    CHECK(fp.report.verdict != Verdict::NotNE);
    CHECK(grid_max_gain(pd, fp.profile, grid) <= 1e-9);
  }
  CHECK(accounted == 64);

  // Fixed points are pairwise distinct.
  for (std::size_t i = 0; i < result.fixed_points.size(); ++i) {
    for (std::size_t j = i + 1; j < result.fixed_points.size(); ++j) {
      double d = 0;
      for (Player player : kPlayers) {
        d = std::max(d, result.fixed_points[i].profile[player].angle_to(
                            result.fixed_points[j].profile[player]));
      }
      CHECK(d >= 1e-6);
    }
  }
}

TEST_CASE("find_ne is deterministic and independent of thread count") {
  const SymmetricGame pd = prisoners_dilemma();
  SearchOptions options;
  options.seeds = 48;
  options.rng_seed = 99;
  const SearchResult one = find_ne(pd, options);
  const SearchResult again = find_ne(pd, options);
  options.threads = 4;
  const SearchResult four = find_ne(pd, options);
  for (const SearchResult* other : {&again, &four}) {
    REQUIRE(other->fixed_points.size() == one.fixed_points.size());
    REQUIRE(other->non_converged.size() == one.non_converged.size());
    for (std::size_t i = 0; i < one.fixed_points.size(); ++i) {
      CHECK(other->fixed_points[i].seed == one.fixed_points[i].seed);
      CHECK(other->fixed_points[i].profile == one.fixed_points[i].profile);
      CHECK(other->fixed_points[i].report.verdict == one.fixed_points[i].report.verdict);
    }
  }
  CHECK(search_start(99, 3) == search_start(99, 3));
  CHECK_FALSE(search_start(99, 3) == search_start(99, 4));
  CHECK_FALSE(search_start(98, 3) == search_start(99, 3));
}

TEST_CASE("find_ne on the zero game reports every start as weak") {
  SearchOptions options;
  options.seeds = 16;
  const SearchResult r = find_ne(SymmetricGame{}, options);
  CHECK(r.non_converged.empty());
  CHECK(r.fixed_points.size() == 16);
  for (const auto& fp : r.fixed_points) {
    CHECK(fp.report.verdict == Verdict::Weak);
    CHECK(fp.sweeps == 1);
    CHECK(fp.profile == search_start(options.rng_seed, fp.seed));
  }
}

TEST_CASE("find_ne lists non-converged seeds") {
  SearchOptions options;
  options.seeds = 8;
  options.max_sweeps = 1;
  const SearchResult r = find_ne(prisoners_dilemma(), options);
  CHECK(r.fixed_points.size() + r.non_converged.size() >= 1);
  CHECK(r.non_converged.size() == 8);
  options.seeds = 0;
  CHECK_THROWS_AS(find_ne(prisoners_dilemma(), options), Error);
}

TEST_CASE("case (a) constraints") {
  const SymmetricGame pd = prisoners_dilemma();
  const auto starred = DirectionProfile::uniform(kX);
  CHECK(case_a_constraints(pd, starred, DirectionProfile::uniform(kY))[0] == 1.0);
  CHECK(case_a_constraints(pd, starred, starred)[0] == 0.0);
  CHECK(case_a_constraints(pd, starred, DirectionProfile::uniform(-kX))[0] == 2.0);
  CHECK_THROWS_AS(case_a_constraints(pd, DirectionProfile::uniform(kZ), starred),
                  NotInPlane);
  CHECK_THROWS_AS(case_a_constraints(pd, starred, DirectionProfile::uniform(kZ)),
                  NotInPlane);

  testing::Generator gen(58);
  for (int i = 0; i < 1000; ++i) {
    const SymmetricGame g = gen.symmetric_game();
    const DirectionProfile s = gen.planar_profile();
    const DirectionProfile alt = gen.planar_profile();
    const auto values = case_a_constraints(g, s, alt);
    for (Player player : kPlayers) {
      CHECK(std::abs(values[index_of(player)] / 8.0 -
                     payoff_diff(g, s, player, alt[player])) <= 1e-12);
    }
  }
}

TEST_CASE("case (b): gamma2 = 0 makes every in-plane profile weak") {
  testing::Generator gen(59);
  for (int i = 0; i < 200; ++i) {
    const DirectionProfile p = gen.planar_profile();
    CHECK(case_b_check(kCaseB, p));
    CHECK(verify_ne(kCaseB, p).verdict == Verdict::Weak);
  }
  CHECK_FALSE(case_b_check(prisoners_dilemma(), gen.planar_profile()));
  CHECK_FALSE(case_b_check(kCaseB, DirectionProfile::uniform(kZ)));
}

TEST_CASE("check_pd") {
  CHECK(check_pd(prisoners_dilemma()).pass);
  CHECK(check_pd(prisoners_dilemma()).violated.empty());

  const PDVerdict bad = check_pd({7, 9, 3, 0, 5, 8});
  CHECK_FALSE(bad.pass);
  CHECK(bad.violated == std::vector<std::string>{"θ>ω", "δ>ω"});

  const PDVerdict flat = check_pd({1, 1, 1, 1, 1, 1});
  CHECK_FALSE(flat.pass);
  CHECK(flat.violated.size() == 11);
}
