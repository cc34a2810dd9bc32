#include <cmath>
#include <set>

#include <doctest.h>

#include "dyb/orlicz.hpp"

using namespace dyb;

TEST_SUITE("orlicz") {

TEST_CASE("power Luxemburg norm equals the L^p norm") {
  const DyadicDomain d(3, {1, 2, 1, 3, 2, 1, 1, 4});
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const GridFunction f = GridFunction::lognormal(d, rng.next_u64());
    const double p = rng.uniform(1.2, 3.5);
    const CubeId q{int(rng.uniform_int(2)), int(rng.uniform_int(4)), 0};
    CHECK(orlicz_norm_on_cube(d, f, q, YoungFunction::power(p)) ==
          doctest::Approx(lp_norm_on_cube(d, f, q, p)).epsilon(1e-10));
  }
}

TEST_CASE("indicator norm has the closed form 1/A^{-1}(mu(Q)/mu(E))") {
  const DyadicDomain d = DyadicDomain::uniform(2);
  const GridFunction chi = GridFunction::indicator(d, {0});
  CHECK(orlicz_norm_on_cube(d, chi, CubeId{0, 0, 0}, YoungFunction::power(2.0)) ==
        doctest::Approx(0.5).epsilon(1e-9));
  CHECK(orlicz_norm_on_cube(d, GridFunction::constant(d, 0.0), CubeId{0, 0, 0},
                            YoungFunction::power(2.0)) == 0.0);
}

TEST_CASE("log-bump Luxemburg norm against an independent root finder") {
  const DyadicDomain d = DyadicDomain::uniform(2);
  const GridFunction f({1, 2, 3, 4});
  CHECK(orlicz_norm_on_cube(d, f, CubeId{0, 0, 0}, YoungFunction::log_bump(3.0, 1.0)) ==
        doctest::Approx(4.33776110758796).epsilon(1e-9));
}

TEST_CASE("sup norm on cubes") {
  const DyadicDomain d(2, {1, 2, 3, 4});
  const GridFunction f({1, 5, 2, 0});
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(lp_norm_on_cube(d, f, CubeId{0, 0, 0}, inf) == 5.0);
  CHECK(lp_norm_on_cube(d, f, CubeId{0, 1, 1}, inf) == 2.0);
}

TEST_CASE("associate spaces") {
  CHECK(BanachSpaceSpec::Lr(2.0).associate().r() == doctest::Approx(2.0));
  CHECK(BanachSpaceSpec::Lr(3.0).associate().r() == doctest::Approx(1.5));
  const BanachSpaceSpec y = BanachSpaceSpec::orlicz(YoungFunction::power(2.0));
  CHECK(!y.associate().is_lr());
  // conjugate of t^2 is s^2/4, so the associate norm of 1 on any cube is 1/2
  const DyadicDomain d = DyadicDomain::uniform(2);
  CHECK(y.associate().norm_on_cube(d, GridFunction::constant(d, 1.0), CubeId{0, 0, 0}) ==
        doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("generalized Holder gap") {
  const DyadicDomain d = DyadicDomain::uniform(3);
  const YoungFunction a = YoungFunction::power(2.0);
  // constants: 2 |1|_A |1|_conj - 1 = 2 * 1 * 1/2 - 1 = 0
  CHECK(generalized_holder_gap(d, GridFunction::constant(d, 1.0),
                               GridFunction::constant(d, 1.0), CubeId{0, 0, 0}, a) ==
        doctest::Approx(0.0).epsilon(1e-4));
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const GridFunction f = GridFunction::lognormal(d, rng.next_u64());
    const GridFunction g = GridFunction::lognormal(d, rng.next_u64());
    CHECK(generalized_holder_gap(d, f, g, CubeId{0, 1, 0}, a) >= -1e-8);
  }
}

TEST_CASE("HL and L^q maximal against brute-force enumeration") {
  const DyadicDomain d(2, {1, 2, 3, 4});
  const GridFunction f({1, 0, 2, 0});
  const GridFunction mhl = maximal(d, f, MaximalSpec::hl());
  const double hl_expected[] = {1.0, 1.2, 2.0, 0.857142857142857};
  const GridFunction ml2 = maximal(d, f, MaximalSpec::lq(2.0));
  const double l2_expected[] = {1.14017542509914, 1.54919333848297, 2.0, 1.30930734141595};
  for (int i = 0; i < 4; ++i) {
    CHECK(mhl[i] == doctest::Approx(hl_expected[i]).epsilon(1e-12));
    CHECK(ml2[i] == doctest::Approx(l2_expected[i]).epsilon(1e-12));
  }
}

TEST_CASE("maximal dominates the function and grows with more shifts") {
  const DyadicDomain d(3, {2, 1, 1, 1, 3, 1, 1, 2});
  const GridFunction f = GridFunction::lognormal(d, 17);
  const GridFunction m = maximal(d, f, MaximalSpec::hl());
  const GridFunction m0 = maximal(d, f, MaximalSpec::hl(), 0);
  for (std::int64_t i = 0; i < d.size(); ++i) {
    CHECK(m[i] >= f[i] - 1e-12);
    CHECK(m0[i] <= m[i] + 1e-12);
  }
  const GridFunction it1 = iterated_maximal(d, f, 1);
  for (std::int64_t i = 0; i < d.size(); ++i) CHECK(it1[i] == doctest::Approx(m[i]));
}

TEST_CASE("Orlicz maximal with a power function matches the L^q maximal") {
  const DyadicDomain d(3, {1, 1, 2, 1, 1, 3, 1, 1});
  const GridFunction f = GridFunction::lognormal(d, 23);
  const GridFunction a = maximal(d, f, MaximalSpec::orlicz(YoungFunction::power(2.5)));
  const GridFunction b = maximal(d, f, MaximalSpec::lq(2.5));
  for (std::int64_t i = 0; i < d.size(); ++i) {
    CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-9));
  }
}

TEST_CASE("associate maximal of L^r is the L^{r'} maximal") {
  const DyadicDomain d = DyadicDomain::uniform(4);
  const GridFunction f = GridFunction::lognormal(d, 31);
  const GridFunction a =
      maximal(d, f, MaximalSpec::associate(BanachSpaceSpec::Lr(3.0)));
  const GridFunction b = maximal(d, f, MaximalSpec::lq(1.5));
  for (std::int64_t i = 0; i < d.size(); ++i) {
    CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-12));
  }
}

TEST_CASE("normalized maximal is L^inf bounded") {
  const DyadicDomain d(3, {1, 2, 1, 1, 1, 4, 1, 1});
  CHECK(linfty_bound_check(d, GridFunction::lognormal(d, 3), YoungFunction::power(2.0)));
}

TEST_CASE("closed-form indicator maximal matches the generic operator") {
  const DyadicDomain d(4, {1, 2, 1, 1, 3, 1, 1, 1, 1, 1, 2, 1, 1, 1, 1, 4});
  const std::set<std::int64_t> b = {2, 3, 9};
  const GridFunction chi = GridFunction::indicator(d, b);
  for (const auto& a : {YoungFunction::power(2.0), YoungFunction::log_bump(3.0, 1.0)}) {
    const GridFunction cf = maximal_indicator_closed_form(d, b, a);
    const GridFunction gen = maximal(d, chi, MaximalSpec::orlicz(a));
    for (std::int64_t i = 0; i < d.size(); ++i) {
      CHECK(cf[i] == doctest::Approx(gen[i]).epsilon(1e-8));
    }
  }
}

}  // TEST_SUITE
