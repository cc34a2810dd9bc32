#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "dyb/rubio.hpp"

using namespace dyb;

TEST_SUITE("rubio") {

TEST_CASE("maximal norm bound is the dual exponent") {
  CHECK(maximal_norm_bound(2.0) == doctest::Approx(2.0));
  CHECK(maximal_norm_bound(4.0 / 3.0) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK_THROWS_AS(maximal_norm_bound(1.0), std::domain_error);
}

TEST_CASE("config validation") {
  CHECK_NOTHROW(RdFConfig(2.0, 3.0));
  CHECK_THROWS_AS(RdFConfig(2.0, 2.0), std::domain_error);  // endpoint q = p
  CHECK_THROWS_AS(RdFConfig(1.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(RdFConfig(2.0, 3.0, 0.5, 40, 1e-9), std::domain_error);
  CHECK_THROWS_AS(RdFConfig(2.0, 3.0, 4.0, 0, 1e-9), std::domain_error);
  CHECK_THROWS_AS(RdFConfig(2.0, 3.0, 4.0, 40, 0.0), std::domain_error);
  const RdFConfig cfg(2.0, 3.0);
  CHECK(cfg.b == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(cfg.p_prime() == doctest::Approx(2.0));
  CHECK(cfg.q_prime() == doctest::Approx(1.5));
}

TEST_CASE("constant input sums the geometric series") {
  const DyadicDomain d = DyadicDomain::uniform(4);
  const RdFConfig cfg(2.0, 3.0);  // 2B = 8
  const GridFunction r = rubio_operator(d, GridFunction::constant(d, 3.0), cfg);
  for (std::int64_t i = 0; i < d.size(); ++i) {
    CHECK(r[i] == doctest::Approx(3.0 * 8.0 / 7.0).epsilon(1e-12));
  }
  const GridFunction rt = tilde_r(d, GridFunction::constant(d, 3.0), cfg);
  for (std::int64_t i = 0; i < d.size(); ++i) {
    CHECK(rt[i] == doctest::Approx(3.0 * std::pow(8.0 / 7.0, 2.0 / 3.0)).epsilon(1e-12));
  }
}

TEST_CASE("truncation is monotone in the number of terms") {
  const DyadicDomain d(4, {1, 2, 1, 1, 3, 1, 2, 1, 1, 1, 2, 4, 1, 1, 1, 2});
  const GridFunction h = GridFunction::lognormal(d, 42);
  // tail_tol = 1 keeps the requested truncation as-is
  GridFunction prev = rubio_operator(d, h, RdFConfig(2.0, 3.0, 4.0, 1, 1.0));
  for (int k = 2; k <= 6; ++k) {
    const GridFunction cur = rubio_operator(d, h, RdFConfig(2.0, 3.0, 4.0, k, 1.0));
    for (std::int64_t i = 0; i < d.size(); ++i) {
      CHECK(cur[i] >= prev[i] - 1e-13);
    }
    prev = cur;
  }
}

TEST_CASE("positive homogeneity and subadditivity") {
  const DyadicDomain d(5, std::vector<double>(32, 1.0));
  const RdFConfig cfg(2.0, 3.0, 4.0, 8, 1.0, 1);
  const GridFunction f = GridFunction::lognormal(d, 7);
  const GridFunction g = GridFunction::lognormal(d, 8);
  const GridFunction rf = rubio_operator(d, f, cfg);
  const GridFunction rg = rubio_operator(d, g, cfg);
  GridFunction f3 = f;
  for (auto& x : f3.values()) x *= 3.0;
  const GridFunction r3f = rubio_operator(d, f3, cfg);
  GridFunction sum = f;
  for (std::int64_t i = 0; i < d.size(); ++i) sum[i] += g[i];
  const GridFunction rsum = rubio_operator(d, sum, cfg);
  for (std::int64_t i = 0; i < d.size(); ++i) {
    CHECK(r3f[i] == doctest::Approx(3.0 * rf[i]).epsilon(1e-12));
    CHECK(rsum[i] <= (rf[i] + rg[i]) * (1.0 + 1e-12));
  }
}

TEST_CASE("certification of the constant function is strict") {
  const DyadicDomain d = DyadicDomain::uniform(5);
  const RdFReport rep = certify_properties(d, GridFunction::constant(d, 1.0),
                                           RdFConfig(2.0, 3.0));
  CHECK(rep.certified());
  CHECK(rep.a1 == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(rep.rh == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(rep.norm_ratio == doctest::Approx(std::pow(8.0 / 7.0, 2.0 / 3.0)).epsilon(1e-10));
}

TEST_CASE("indicator inputs certify on nonuniform domains") {
  const DyadicDomain d(5, {1, 2, 1, 1, 3, 1, 2, 1, 1, 1, 2, 4, 1, 1, 1, 2,
                           2, 1, 1, 3, 1, 1, 1, 2, 5, 1, 1, 1, 2, 1, 1, 1});
  for (const auto& cfg : {RdFConfig(2.0, 3.0), RdFConfig(1.5, 4.0),
                          RdFConfig(2.0, 3.0, 4.0, 40, 1e-9, 1)}) {
    const RdFReport rep =
        certify_properties(d, GridFunction::indicator(d, {11}), cfg);
    CHECK(rep.certified());
  }
  CHECK_THROWS_AS(certify_properties(d, GridFunction::constant(d, 0.0),
                                     RdFConfig(2.0, 3.0)),
                  std::invalid_argument);
}

TEST_CASE("norm ratio sweep stays below 2^{1/q'}") {
  Rng rng(314);
  const DyadicDomain d(6, [] {
    Rng mr(11);
    std::vector<double> m(64, 0.0);
    for (auto& x : m) x = std::exp(0.5 * mr.normal());
    return m;
  }());
  for (int trial = 0; trial < 30; ++trial) {
    const double p = rng.uniform(1.3, 2.5);
    const double q = p + rng.uniform(0.5, 1.5);
    const RdFConfig cfg(p, q);
    const GridFunction h = GridFunction::lognormal(d, rng.next_u64());
    const RdFReport rep = certify_properties(d, h, cfg);
    CHECK(rep.certified());
    CHECK(rep.norm_ratio <= std::pow(2.0, 1.0 / cfg.q_prime()) + 1e-6);
  }
}

}  // TEST_SUITE
