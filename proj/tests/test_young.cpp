#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "dyb/young.hpp"

using namespace dyb;

TEST_SUITE("young") {

TEST_CASE("power family evaluates exactly") {
  const YoungFunction a = YoungFunction::power(2.0);
  CHECK(a(0.0) == 0.0);
  CHECK(a(3.0) == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(a.is_normalized());
  CHECK(YoungFunction::power(1.7)(1.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("log bump value at 1 is 1/ln^2(2)") {
  const YoungFunction a = YoungFunction::log_bump(2.0, 1.0);
  CHECK(a(1.0) == doctest::Approx(2.0813689810056077).epsilon(1e-12));
}

TEST_CASE("family validation") {
  CHECK_THROWS_AS(YoungFunction::power(1.0), std::invalid_argument);
  CHECK_THROWS_AS(YoungFunction::log_bump(1.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(YoungFunction::power(2.0)(-1.0), std::domain_error);
}

TEST_CASE("table family interpolates and extrapolates the last slope") {
  const YoungFunction a = YoungFunction::table({{1.0, 1.0}, {2.0, 3.0}});
  CHECK(a(0.0) == 0.0);
  CHECK(a(0.5) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(a(1.5) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(a(3.0) == doctest::Approx(5.0).epsilon(1e-14));
  // decreasing slopes are not convex
  CHECK_THROWS_AS(YoungFunction::table({{1.0, 2.0}, {2.0, 3.0}}), std::invalid_argument);
  CHECK_THROWS_AS(YoungFunction::table({{1.0, 1.0}, {2.0, 1.0}}), std::invalid_argument);
}

TEST_CASE("normalization rescales the value") {
  const YoungFunction a = YoungFunction::log_bump(2.0, 1.0).normalized();
  CHECK(a(1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(a.is_normalized());
}

TEST_CASE("power conjugates in closed form") {
  CHECK(YoungFunction::power(2.0).conjugate(2.0) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(YoungFunction::power(3.0).conjugate(3.0) == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(YoungFunction::power(2.0).conjugate(0.0) == 0.0);
}

TEST_CASE("log bump conjugate against an independent optimizer") {
  const YoungFunction a = YoungFunction::log_bump(2.0, 1.0);
  CHECK(a.conjugate(2.0) == doctest::Approx(2.74711900625568).epsilon(1e-8));
  CHECK(a.conjugate(5.0) == doctest::Approx(88.471105079489).epsilon(1e-8));
}

TEST_CASE("Young's inequality gap is nonnegative, zero at the touching point") {
  const YoungFunction a = YoungFunction::power(2.0);
  for (double s : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    for (double t : {0.25, 0.5, 1.0, 2.0, 4.0}) {
      CHECK(a.young_gap(s, t) >= -1e-10);
    }
  }
  // b = A'(a): equality in Young's inequality
  CHECK(a.young_gap(1.0, 2.0) == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("inverse round trips") {
  CHECK(YoungFunction::power(2.0).inverse(4.0) == doctest::Approx(2.0).epsilon(1e-10));
  const YoungFunction lb = YoungFunction::log_bump(3.0, 1.0);
  CHECK(lb.inverse(lb(5.0)) == doctest::Approx(5.0).epsilon(1e-8));
  CHECK(lb.inverse(0.0) == 0.0);
}

TEST_CASE("biconjugation recovers a convex function") {
  const YoungFunction a = YoungFunction::power(2.0);
  const YoungFunction conj = a.conjugate_table(65536, 1e-4, 1e4);
  for (double t : {0.5, 1.0, 2.0}) {
    CHECK(conj.conjugate(t) == doctest::Approx(a(t)).epsilon(1e-5));
  }
}

TEST_CASE("B_p verdicts") {
  auto verdict = [](const YoungFunction& a, double p) { return a.bp_test(p); };

  const BpTestResult pow15 = verdict(YoungFunction::power(1.5), 2.0);
  CHECK(pow15.numeric == BpVerdict::member);
  REQUIRE(pow15.analytic.has_value());
  CHECK(*pow15.analytic == BpVerdict::member);
  // I(10) = 2 (1 - 10^{-1/2}) for A = t^{3/2}, p = 2
  REQUIRE(!pow15.tail_integrals.empty());
  CHECK(pow15.tail_integrals.front() ==
        doctest::Approx(1.3675444679663242).epsilon(1e-10));

  const BpTestResult pow2 = verdict(YoungFunction::power(2.0), 2.0);
  CHECK(pow2.numeric == BpVerdict::non_member);
  CHECK(*pow2.analytic == BpVerdict::non_member);

  CHECK(verdict(YoungFunction::log_bump(2.0, 1.0), 2.0).verdict == BpVerdict::member);
  CHECK(verdict(YoungFunction::loglog_bump(2.0, 0.5), 2.0).verdict == BpVerdict::member);
  CHECK(verdict(YoungFunction::power(2.5), 2.0).verdict == BpVerdict::non_member);
  CHECK(verdict(YoungFunction::power(2.5), 3.0).verdict == BpVerdict::member);

  // table families carry no analytic verdict
  const BpTestResult tab = verdict(YoungFunction::table({{1.0, 1.0}, {2.0, 4.0}}), 2.0);
  CHECK(!tab.analytic.has_value());
}

TEST_CASE("doubling ratio") {
  const auto [ok2, r2] = YoungFunction::power(2.0).doubling_ratio();
  CHECK(ok2);
  CHECK(r2 == doctest::Approx(4.0).epsilon(1e-9));
  const auto [oklb, rlb] = YoungFunction::log_bump(2.0, 1.0).doubling_ratio();
  CHECK(oklb);
  CHECK(rlb <= 4.0 + 1e-9);
}

TEST_CASE("describe is informative") {
  CHECK(YoungFunction::power(2.0).describe().find("power") != std::string::npos);
  CHECK(YoungFunction::log_bump(2.0, 1.0).describe().find("log_bump") != std::string::npos);
}

}  // TEST_SUITE
