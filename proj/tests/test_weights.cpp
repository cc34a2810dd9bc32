#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "dyb/weights.hpp"

using namespace dyb;

TEST_SUITE("weights") {

TEST_CASE("two-weight A_p constant by hand") {
  const DyadicDomain d = DyadicDomain::uniform(2);
  const GridFunction w({4, 4, 1, 1});
  // [w]_{A_2} with v = w: root gives avg(w) avg(1/w) = 2.5 * 0.625 = 25/16
  const WitnessedConstant c = two_weight_ap_constant(d, w, w, 2.0);
  CHECK(c.value == doctest::Approx(25.0 / 16.0).epsilon(1e-12));
  CHECK(c.witness.level == 0);
  const WitnessedConstant one =
      two_weight_ap_constant(d, GridFunction::constant(d, 3.0),
                             GridFunction::constant(d, 5.0), 2.0);
  CHECK(one.value == doctest::Approx(3.0 / 5.0).epsilon(1e-12));
  CHECK_THROWS_AS(two_weight_ap_constant(d, w, w, 1.0), std::domain_error);
}

TEST_CASE("Neugebauer constant for constant weights is w/v") {
  const DyadicDomain d(3, {1, 2, 1, 1, 3, 1, 1, 2});
  const WitnessedConstant c =
      neugebauer_constant(d, GridFunction::constant(d, 2.0),
                          GridFunction::constant(d, 1.0), 2.0, 1.5);
  CHECK(c.value == doctest::Approx(2.0).epsilon(1e-12));
  // power-mean monotonicity: the constant is nondecreasing in r
  const GridFunction w = GridFunction::lognormal(d, 12);
  const GridFunction v = GridFunction::lognormal(d, 13);
  CHECK(neugebauer_constant(d, w, v, 2.0, 2.0).value >=
        neugebauer_constant(d, w, v, 2.0, 1.5).value - 1e-12);
}

TEST_CASE("bump constant by hand on a depth-1 domain") {
  const DyadicDomain d = DyadicDomain::uniform(1);
  const WeightPair pair{GridFunction({1, 2}), GridFunction({2, 1}),
                        BanachSpaceSpec::Lr(2.0), 2.0};
  // cells: 1*1/2 and 2*1; root: sqrt(2.5) sqrt(0.625) = 1.25; sup = 2
  const WitnessedConstant c = bump_constant(d, pair, 2.0);
  CHECK(c.value == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(c.witness.level == 1);
  CHECK(c.witness.index == 1);
}

TEST_CASE("bump constant agrees between the L^r fast path and Orlicz path") {
  const DyadicDomain d(3, {1, 2, 1, 3, 1, 1, 2, 1});
  const GridFunction w = GridFunction::lognormal(d, 21);
  const GridFunction v = GridFunction::lognormal(d, 22);
  const WeightPair lr{w, v, BanachSpaceSpec::Lr(1.8), 2.2};
  const WeightPair po{w, v, BanachSpaceSpec::orlicz(YoungFunction::power(1.8)), 2.2};
  CHECK(bump_constant(d, lr, 2.2).value ==
        doctest::Approx(bump_constant(d, po, 2.2).value).epsilon(1e-8));
}

TEST_CASE("reverse Holder and A_1 constants are 1 for constants") {
  const DyadicDomain d(3, {1, 2, 1, 1, 3, 1, 1, 2});
  const GridFunction one = GridFunction::constant(d, 4.0);
  CHECK(reverse_holder_constant(d, one, 2.0).value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(a1_constant(d, one) == doctest::Approx(1.0).epsilon(1e-12));
  const GridFunction rho = GridFunction::lognormal(d, 31);
  CHECK(reverse_holder_constant(d, rho, 2.0).value >= 1.0 - 1e-12);
  CHECK(reverse_holder_constant(d, rho, 2.0, 0).value <=
        reverse_holder_constant(d, rho, 2.0).value + 1e-12);
  CHECK(a1_constant(d, rho) >= 1.0);
  CHECK(a1_constant(d, rho, 0) <= a1_constant(d, rho) + 1e-12);
}

TEST_CASE("M_q pair satisfies the bump condition with constant at most 1") {
  const DyadicDomain d(4, {1, 2, 1, 1, 3, 1, 2, 1, 1, 1, 2, 4, 1, 1, 1, 2});
  Rng rng(61);
  for (int trial = 0; trial < 5; ++trial) {
    const GridFunction u = GridFunction::lognormal(d, rng.next_u64());
    const double q = rng.uniform(1.5, 3.0);
    const WeightPair pair = make_pair_mq(d, u, q, BanachSpaceSpec::Lr(2.0));
    CHECK(bump_constant(d, pair, q).value <= 1.0 + 1e-10);
    const double p = rng.uniform(1.1, q - 0.05);
    CHECK(bump_constant(d, pair, p).value <= 1.0 + 1e-10);
  }
  CHECK_THROWS_AS(make_pair_mq(d, GridFunction::constant(d, 1.0), 2.0,
                               BanachSpaceSpec::orlicz(YoungFunction::log_bump(2.0, 1.0))),
                  std::invalid_argument);
  CHECK_NOTHROW(make_pair_mq(
      d, GridFunction::constant(d, 1.0), 2.0,
      BanachSpaceSpec::orlicz(YoungFunction::log_bump(2.0, 1.0).normalized())));
}

TEST_CASE("M_A-inverse pair bump is bounded by its hypothesis constant") {
  const DyadicDomain d(3, {1, 2, 1, 3, 1, 1, 2, 1});
  Rng rng(77);
  const YoungFunction a = YoungFunction::power(2.0).normalized();
  for (int trial = 0; trial < 5; ++trial) {
    const GridFunction u = GridFunction::lognormal(d, rng.next_u64());
    const GridFunction w = GridFunction::lognormal(d, rng.next_u64());
    const double p = rng.uniform(1.3, 2.5);
    const auto [pair, hyp] =
        make_pair_ma_inv(d, u, a, p, w, BanachSpaceSpec::Lr(2.0), 2.0);
    CHECK(pair.q == doctest::Approx(2.0));
    CHECK(bump_constant(d, pair, pair.q).value <= hyp * (1.0 + 1e-9));
  }
  // p = 1 collapses the first weight to the constant 1
  const auto [pair1, hyp1] =
      make_pair_ma_inv(d, GridFunction::lognormal(d, 5), a, 1.0,
                       GridFunction::constant(d, 1.0), BanachSpaceSpec::Lr(2.0));
  for (std::int64_t i = 0; i < d.size(); ++i) {
    CHECK(pair1.w[i] == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(hyp1 > 0.0);
}

TEST_CASE("power weight products blow up at rate 2^{alpha-beta}") {
  const std::vector<int> depths = {6, 7, 8, 9, 10};
  const std::vector<double> seq = power_weight_blowup(0.4, 0.2, 2.0, depths);
  REQUIRE(seq.size() == depths.size());
  for (std::size_t i = 1; i < seq.size(); ++i) {
    CHECK(seq[i] / seq[i - 1] == doctest::Approx(std::pow(2.0, 0.2)).epsilon(1e-9));
  }
  const std::vector<double> flat = power_weight_blowup(0.3, 0.3, 2.0, depths);
  for (std::size_t i = 1; i < flat.size(); ++i) {
    CHECK(flat[i] == doctest::Approx(flat[0]).epsilon(1e-6));
  }
}

}  // TEST_SUITE
