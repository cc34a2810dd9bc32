#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyb/rubio.hpp"
#include "dyb/sparse.hpp"
#include "dyb/weights.hpp"

namespace dyb {

/// Weight-pair families used by the randomized theorem sweeps.
enum class PairPreset { mq, ma_inv, constant };

inline PairPreset pair_preset_from_string(const std::string& s) {
  if (s == "mq-pair" || s == "mq") return PairPreset::mq;
  if (s == "ma-pair" || s == "ma-inv" || s == "ma_inv") return PairPreset::ma_inv;
  if (s == "constant") return PairPreset::constant;
  throw std::invalid_argument("unknown pair preset: " + s);
}

inline std::string to_string(PairPreset p) {
  switch (p) {
    case PairPreset::mq: return "mq-pair";
    case PairPreset::ma_inv: return "ma-pair";
    default: return "constant";
  }
}

/// One randomized theorem instance: domain, weight pair, data, sparse family
/// and matching iteration parameters, all derived from a single seed.
struct VerifyInstance {
  DyadicDomain d;
  WeightPair pair;
  GridFunction f;
  GridFunction rho;
  SparseFamily s;
  double p;
  RdFConfig cfg;
};

inline VerifyInstance make_verify_instance(std::uint64_t seed, int depth, PairPreset preset) {
  Rng rng(seed);
  const std::int64_t n = std::int64_t(1) << depth;
  std::vector<double> mass(std::size_t(n), 0.0);
  for (auto& m : mass) m = std::exp(0.5 * rng.normal());
  DyadicDomain d(depth, std::move(mass));

  const double p = rng.uniform(1.4, 2.4);
  const double q = p + rng.uniform(0.6, 1.4);

  BanachSpaceSpec y = rng.uniform() < 0.25
                          ? BanachSpaceSpec::orlicz(YoungFunction::power(rng.uniform(1.5, 3.0)))
                          : BanachSpaceSpec::Lr(rng.uniform(1.5, 3.0));

  const GridFunction u = GridFunction::lognormal(d, rng.next_u64());
  WeightPair pair = [&] {
    switch (preset) {
      case PairPreset::mq:
        return make_pair_mq(d, u, q, y);
      case PairPreset::ma_inv: {
        const GridFunction w2 = GridFunction::lognormal(d, rng.next_u64(), 0.5);
        return make_pair_ma_inv(d, u, YoungFunction::power(2.0), p, w2, y, q).first;
      }
      default:
        return WeightPair{GridFunction::constant(d, rng.uniform(0.5, 2.0)),
                          GridFunction::constant(d, rng.uniform(0.5, 2.0)), y, q};
    }
  }();

  GridFunction f = GridFunction::lognormal(d, rng.next_u64(), 1.0);
  GridFunction rho = GridFunction::lognormal(d, rng.next_u64(), 0.5);

  const int shift = int(rng.uniform_int(d.num_shifts()));
  SparseFamily s = rng.uniform() < 0.5 ? build_cz_sparse(d, f, rng.uniform(2.0, 4.0), shift)
                                       : random_sparse(d, rng, shift);

  RdFConfig cfg(p, q);
  cfg.shift = shift;
  return VerifyInstance{std::move(d), std::move(pair), std::move(f), std::move(rho),
                        std::move(s), p,  cfg};
}

}  // namespace dyb
