#include <cmath>
#include <fstream>
#include <stdexcept>

#include <doctest.h>

#include "dyb/domain.hpp"

using namespace dyb;

TEST_SUITE("domain") {

TEST_CASE("shift offsets reduce to whole cells") {
  const DyadicDomain d(2, {1, 2, 3, 4});
  CHECK(d.num_shifts() == 2);
  CHECK(d.shift_cells(0) == 0);
  CHECK(d.shift_cells(1) == 1);  // floor(4/3)
  CHECK(d.total_mass() == doctest::Approx(10.0));
}

TEST_CASE("cube cells wrap cyclically on shifted grids") {
  const DyadicDomain d(2, {1, 2, 3, 4});
  const auto [s0, w0] = d.cube_cells(CubeId{1, 1, 0});
  CHECK(s0 == 1);
  CHECK(w0 == 2);
  CHECK(d.cube_measure(CubeId{1, 1, 0}) == doctest::Approx(5.0));  // cells 1,2
  CHECK(d.cube_measure(CubeId{1, 1, 1}) == doctest::Approx(5.0));  // cells 3,0 wrap
  CHECK(d.contains(CubeId{1, 1, 1}, std::int64_t(0)));
  CHECK(d.contains(CubeId{0, 0, 0}, CubeId{0, 2, 3}));
}

TEST_CASE("integrate and average") {
  const DyadicDomain d(2, {1, 2, 3, 4});
  const GridFunction f({1, 0, 2, 0});
  CHECK(d.integrate(f, CubeId{0, 0, 0}) == doctest::Approx(7.0));
  CHECK(d.average(f, CubeId{0, 0, 0}) == doctest::Approx(0.7));
  CHECK(d.average(f, CubeId{0, 2, 2}) == doctest::Approx(2.0));
}

TEST_CASE("ancestors are leaf-first") {
  const DyadicDomain d = DyadicDomain::uniform(3);
  const auto anc = d.ancestors(5, 0);
  REQUIRE(anc.size() == 4);
  CHECK(anc.front().level == 3);
  CHECK(anc.back().level == 0);
  for (const auto& q : anc) CHECK(d.contains(q, std::int64_t(5)));
}

TEST_CASE("doubling constants") {
  CHECK(DyadicDomain::uniform(1).doubling_constant() == doctest::Approx(2.0));
  const DyadicDomain d(2, {1, 1, 1, 100});
  CHECK(d.doubling_constant() == doctest::Approx(51.5).epsilon(1e-12));
}

TEST_CASE("interval mass with fractional coverage") {
  const DyadicDomain d(2, {1, 2, 3, 4});
  // coordinates are in cell units: [1, 3) covers cells 1 and 2
  CHECK(d.interval_mass(1.0, 3.0) == doctest::Approx(5.0));
  CHECK(d.interval_mass(0.4, 1.4) == doctest::Approx(1.4));
  CHECK(d.interval_mass(-1.0, 5.0) == doctest::Approx(d.total_mass()));  // full wrap
  CHECK(d.interval_mass(3.5, 4.5) == doctest::Approx(2.0 + 0.5));        // wraps to cell 0
}

TEST_CASE("validation") {
  const DyadicDomain d = DyadicDomain::uniform(2);
  CHECK(!d.valid(CubeId{0, 1, 5}));
  CHECK_THROWS_AS(d.check(CubeId{0, 1, 5}), std::out_of_range);
  CHECK_THROWS_AS(DyadicDomain(2, {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(DyadicDomain(2, {1, 2, 3, -1}), std::invalid_argument);
  CHECK_THROWS_AS(GridFunction({1.0, -2.0}), std::invalid_argument);
}

TEST_CASE("power singularity is capped and finite") {
  const DyadicDomain d = DyadicDomain::uniform(5);
  const GridFunction f = GridFunction::power_singularity(d, 0.5, 0.4);
  for (std::int64_t i = 0; i < d.size(); ++i) CHECK(std::isfinite(f[i]));
  const std::int64_t j = d.size() / 2;  // cells adjacent to 1/2 are symmetric
  CHECK(f[j] == doctest::Approx(f[j - 1]));
}

TEST_CASE("csv round trip") {
  const DyadicDomain d = DyadicDomain::uniform(2);
  {
    std::ofstream out("gf_test.csv");
    out << "1.5\n2\n0.25\n3\n";
  }
  const GridFunction f = GridFunction::from_csv(d, "gf_test.csv");
  CHECK(f[2] == doctest::Approx(0.25));
  const DyadicDomain d3 = DyadicDomain::uniform(3);
  CHECK_THROWS_AS(GridFunction::from_csv(d3, "gf_test.csv"), std::invalid_argument);
}

TEST_CASE("rng is deterministic and in range") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    const double u = a.uniform();
    CHECK(u == b.uniform());
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  Rng c(7);
  for (int i = 0; i < 100; ++i) {
    const auto k = c.uniform_int(10);
    CHECK(k >= 0);
    CHECK(k < 10);
    CHECK(std::isfinite(c.normal()));
  }
  const DyadicDomain d = DyadicDomain::uniform(4);
  const GridFunction f1 = GridFunction::lognormal(d, 9);
  const GridFunction f2 = GridFunction::lognormal(d, 9);
  for (std::int64_t i = 0; i < d.size(); ++i) {
    CHECK(f1[i] == f2[i]);
    CHECK(f1[i] > 0.0);
  }
}

}  // TEST_SUITE
