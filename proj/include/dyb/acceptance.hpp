#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dyb/instances.hpp"
#include "dyb/verify.hpp"
#include "dyb/young.hpp"

namespace dyb {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceConfig {
  double scale = 1.0;   // multiplies instance counts
  int max_depth = 14;   // cap for the resolution ladders
  int jobs = 1;
  std::uint64_t seed = 20240901;
};

namespace detail {

inline void parallel_for(int n, int jobs, const std::function<void(int)>& body) {
  jobs = std::max(1, std::min(jobs, n));
  if (jobs == 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(std::size_t(jobs));
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

inline int scaled(double scale, int n) { return std::max(1, int(std::lround(n * scale))); }

template <class F>
CriterionResult timed(int id, std::string name, F&& run) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream detail;
  r.pass = run(detail);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.detail = detail.str();
  return r;
}

}  // namespace detail

// 1. Luxemburg norm with a power Young function reproduces the L^p norm.
inline CriterionResult criterion_power_agreement(const AcceptanceConfig& cfg) {
  return detail::timed(1, "orlicz/lp agreement", [&](std::ostringstream& out) {
    const DyadicDomain d = DyadicDomain::uniform(std::min(12, cfg.max_depth));
    Rng rng(cfg.seed + 1);
    const int samples = detail::scaled(cfg.scale, 1000);
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
      const GridFunction f = GridFunction::lognormal(d, rng.next_u64(), 1.0);
      const double p = rng.uniform(1.2, 3.0);
      const int shift = int(rng.uniform_int(d.num_shifts()));
      const int level = int(rng.uniform_int(d.depth() + 1));
      const CubeId q{shift, level, rng.uniform_int(std::int64_t(1) << level)};
      const double a = orlicz_norm_on_cube(d, f, q, YoungFunction::power(p));
      const double b = lp_norm_on_cube(d, f, q, p);
      worst = std::max(worst, std::abs(a - b) / b);
    }
    out << "max relative difference " << worst << " over " << samples << " samples";
    return worst <= 1e-9;
  });
}

// 2. Numeric B_p verdicts agree with the analytic ones.
inline CriterionResult criterion_bp_classifier(const AcceptanceConfig& cfg) {
  (void)cfg;
  return detail::timed(2, "B_p classifier", [&](std::ostringstream& out) {
    int checked = 0, agreed = 0;
    auto check = [&](const YoungFunction& a, double p) {
      const BpTestResult r = a.bp_test(p);
      ++checked;
      if (r.analytic && r.numeric == *r.analytic) ++agreed;
    };
    for (double r : {1.5, 2.0, 2.5}) {
      for (double p : {2.0, 3.0}) check(YoungFunction::power(r), p);
    }
    for (double p : {2.0, 3.0}) check(YoungFunction::log_bump(2.0, 1.0), p);
    out << agreed << "/" << checked << " numeric verdicts match the analytic ones";
    return agreed == checked;
  });
}

// 3. Closed-form indicator maximal equals the generic Orlicz maximal.
inline CriterionResult criterion_indicator_closed_form(const AcceptanceConfig& cfg) {
  return detail::timed(3, "indicator maximal closed form", [&](std::ostringstream& out) {
    const DyadicDomain d = DyadicDomain::uniform(std::min(10, cfg.max_depth));
    Rng rng(cfg.seed + 3);
    const int trials = detail::scaled(cfg.scale, 50);
    const std::vector<YoungFunction> as = {YoungFunction::power(2.0),
                                           YoungFunction::log_bump(2.0, 1.0)};
    double worst = 0.0;
    for (int i = 0; i < trials; ++i) {
      std::set<std::int64_t> b;
      const double density = rng.uniform(0.02, 0.5);
      for (std::int64_t c = 0; c < d.size(); ++c) {
        if (rng.uniform() < density) b.insert(c);
      }
      if (b.empty()) b.insert(rng.uniform_int(d.size()));
      const GridFunction chi = GridFunction::indicator(d, b);
      for (const auto& a : as) {
        const GridFunction closed = maximal_indicator_closed_form(d, b, a);
        const GridFunction generic = maximal(d, chi, MaximalSpec::orlicz(a));
        for (std::int64_t c = 0; c < d.size(); ++c) {
          worst = std::max(worst, std::abs(closed[c] - generic[c]));
        }
      }
    }
    out << "sup-norm difference " << worst << " over " << trials << " indicator sets";
    return worst <= 1e-7;
  });
}

// 4. Stopping-time families are sparse with the predicted ratio; exceptional
//    sets carry at least half of each cube.
inline CriterionResult criterion_sparse_structure(const AcceptanceConfig& cfg) {
  return detail::timed(4, "sparse structure", [&](std::ostringstream& out) {
    Rng rng(cfg.seed + 4);
    const int trials = detail::scaled(cfg.scale, 100);
    for (int i = 0; i < trials; ++i) {
      const int depth = 6 + int(rng.uniform_int(3));
      std::vector<double> mass(std::size_t(1) << depth, 0.0);
      for (auto& m : mass) m = std::exp(0.6 * rng.normal());
      const DyadicDomain d(depth, std::move(mass));
      const GridFunction f = GridFunction::lognormal(d, rng.next_u64(), 1.0);
      const double lambda = rng.uniform(2.0, 4.0);
      const int shift = int(rng.uniform_int(d.num_shifts()));
      const SparseFamily s = build_cz_sparse(d, f, lambda, shift);
      const auto [ok, worst] = verify_sparsity(d, s);
      if (!ok || worst > 1.0 / lambda + 1e-12) {
        out << "instance " << i << ": worst covered ratio " << worst << " vs 1/lambda "
            << 1.0 / lambda;
        return false;
      }
      const auto es = exceptional_sets(d, s);  // throws if mu(E) constraints fail
      for (const auto& [q, cells] : es) {
        double me = 0.0;
        for (auto c : cells) me += d.cell_mass(c);
        const double mq = d.cube_measure(q);
        // Summation-order rounding: E(Q) = Q makes the two sums differ in ulps.
        if (!(me <= mq * (1.0 + 1e-12) && mq <= 2.0 * me * (1.0 + 1e-12))) {
          out << "instance " << i << ": exceptional-set mass out of range";
          return false;
        }
      }
    }
    out << trials << " stopping-time families verified";
    return true;
  });
}

// 5. Rubio de Francia certification across (p, q) pairs.
inline CriterionResult criterion_rubio(const AcceptanceConfig& cfg) {
  return detail::timed(5, "Rubio de Francia certification", [&](std::ostringstream& out) {
    const std::vector<std::pair<double, double>> pqs = {{2, 3}, {2, 4}, {3, 4}};
    const int trials = detail::scaled(cfg.scale, 1000);
    std::atomic<bool> ok{true};
    std::vector<double> worst_ratio(pqs.size(), 0.0);
    for (std::size_t j = 0; j < pqs.size(); ++j) {
      const auto [p, q] = pqs[j];
      const double limit = std::pow(2.0, (q - 1.0) / q) + 1e-6;
      std::vector<double> ratios(std::size_t(trials), 0.0);
      detail::parallel_for(trials, cfg.jobs, [&, p = p, q = q](int i) {
        Rng rng(cfg.seed + 5000 + std::uint64_t(j) * 100000 + std::uint64_t(i));
        const DyadicDomain d = DyadicDomain::uniform(8);
        GridFunction h = GridFunction::lognormal(d, rng.next_u64(), 1.0);
        const double style = rng.uniform();
        if (style < 0.2) {
          h = GridFunction::indicator(d, {rng.uniform_int(d.size())});
        } else if (style < 0.3) {
          h = GridFunction::constant(d, rng.uniform(0.1, 5.0));
        }
        const RdFReport rep = certify_properties(d, h, RdFConfig(p, q));
        if (!rep.certified() || rep.norm_ratio > limit) ok = false;
        ratios[std::size_t(i)] = rep.norm_ratio;
      });
      for (double w : ratios) worst_ratio[j] = std::max(worst_ratio[j], w);
    }
    out << trials << " trials per (p,q); worst norm ratios";
    for (std::size_t j = 0; j < pqs.size(); ++j) {
      out << " " << worst_ratio[j] << "/(bound "
          << std::pow(2.0, (pqs[j].second - 1.0) / pqs[j].second) << ")";
    }
    return ok.load();
  });
}

// 6. Step-1 weighted-L^1 inequality on randomized instances.
inline CriterionResult criterion_step1(const AcceptanceConfig& cfg) {
  return detail::timed(6, "step-1 inequality sweep", [&](std::ostringstream& out) {
    const int trials = detail::scaled(cfg.scale, 500);
    const PairPreset presets[] = {PairPreset::mq, PairPreset::ma_inv, PairPreset::constant};
    std::atomic<int> violations{0};
    detail::parallel_for(trials, cfg.jobs, [&](int i) {
      const VerifyInstance inst =
          make_verify_instance(cfg.seed + 6000 + std::uint64_t(i), 10, presets[i % 3]);
      const Step1Report rep =
          step1_check(inst.d, inst.s, inst.pair, inst.f, inst.rho, inst.p);
      if (!rep.pass) ++violations;
    });
    out << violations.load() << " violations in " << trials << " instances";
    return violations.load() == 0;
  });
}

// 7. Main theorem sweep plus resolution stability of the ratio.
inline CriterionResult criterion_main_theorem(const AcceptanceConfig& cfg) {
  return detail::timed(7, "main theorem sweep + stability", [&](std::ostringstream& out) {
    const int trials = detail::scaled(cfg.scale, 200);
    const PairPreset presets[] = {PairPreset::mq, PairPreset::ma_inv, PairPreset::constant};
    std::atomic<int> violations{0};
    detail::parallel_for(trials, cfg.jobs, [&](int i) {
      const VerifyInstance inst =
          make_verify_instance(cfg.seed + 7000 + std::uint64_t(i), 9, presets[i % 3]);
      const MainTheoremReport rep =
          main_theorem_check(inst.d, inst.s, inst.pair, inst.f, inst.p, inst.cfg);
      if (!rep.tight_pass) ++violations;
    });
    std::vector<int> depths;
    for (int l = 8; l <= cfg.max_depth; ++l) depths.push_back(l);
    const StabilityReport stab = main_theorem_stability(2.0, 3.0, depths);
    out << violations.load() << " violations in " << trials << " instances; ratio drift "
        << stab.drift << " across depths 8.." << cfg.max_depth;
    return violations.load() == 0 && stab.pass;
  });
}

// 8. Two-weight maximal theorem: empirical constant stable across resolutions.
inline CriterionResult criterion_perez(const AcceptanceConfig& cfg) {
  return detail::timed(8, "maximal-theorem stability", [&](std::ostringstream& out) {
    std::vector<int> depths;
    for (int l = 8; l <= cfg.max_depth; ++l) depths.push_back(l);
    const StabilityReport stab = perez_stability(2.0, 1.5, 3.0, depths);
    out << "empirical constant drift " << stab.drift << " across depths 8.." << cfg.max_depth;
    return stab.pass;
  });
}

// 9. Centered power-weight products: geometric blow-up when the exponents
//    differ, boundedness when they match.
inline CriterionResult criterion_blowup(const AcceptanceConfig& cfg) {
  (void)cfg;
  return detail::timed(9, "power-weight blow-up", [&](std::ostringstream& out) {
    std::vector<int> depths;
    for (int l = 8; l <= 16; ++l) depths.push_back(l);
    const std::vector<double> grow = power_weight_blowup(0.4, 0.2, 2.0, depths);
    const double target = std::pow(2.0, 0.2);
    double worst_rel = 0.0;
    for (std::size_t i = 1; i < grow.size(); ++i) {
      worst_rel = std::max(worst_rel, std::abs(grow[i] / grow[i - 1] - target) / target);
    }
    const std::vector<double> flat = power_weight_blowup(0.3, 0.3, 2.0, depths);
    const auto [lo, hi] = std::minmax_element(flat.begin(), flat.end());
    const double variation = *hi / *lo - 1.0;
    out << "growth-ratio deviation " << worst_rel << " (limit 0.1); equal-exponent variation "
        << variation << " (limit 0.05)";
    return worst_rel <= 0.1 && variation <= 0.05;
  });
}

// 10. Non-B_p witness: the single-cell indicator at A = Power(p) should make
//     the maximal ratio grow by a factor >= 2 between N = 2^8 and N = 2^14.
inline CriterionResult criterion_non_bp_witness(const AcceptanceConfig& cfg) {
  (void)cfg;
  return detail::timed(10, "non-B_p witness growth", [&](std::ostringstream& out) {
    const double p = 2.0;
    const YoungFunction a = YoungFunction::power(p);
    auto ratio = [&](int depth) {
      const DyadicDomain d = DyadicDomain::uniform(depth);
      const std::set<std::int64_t> b = {d.size() / 2};
      const GridFunction f = GridFunction::indicator(d, b);
      const GridFunction m = maximal_indicator_closed_form(d, b, a);
      return lp_norm_global(d, m, p) / lp_norm_global(d, f, p);
    };
    const double r8 = ratio(8), r14 = ratio(14);
    out << "ratio " << r8 << " at N=2^8, " << r14 << " at N=2^14; factor " << r14 / r8
        << " (needs >= 2)";
    return r14 / r8 >= 2.0;
  });
}

inline std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg,
                                                   const std::vector<int>& only = {}) {
  using Fn = CriterionResult (*)(const AcceptanceConfig&);
  const Fn fns[] = {criterion_power_agreement, criterion_bp_classifier,
                    criterion_indicator_closed_form, criterion_sparse_structure,
                    criterion_rubio, criterion_step1, criterion_main_theorem,
                    criterion_perez, criterion_blowup, criterion_non_bp_witness};
  std::vector<CriterionResult> out;
  for (int i = 0; i < 10; ++i) {
    if (!only.empty() && std::find(only.begin(), only.end(), i + 1) == only.end()) continue;
    out.push_back(fns[i](cfg));
  }
  return out;
}

}  // namespace dyb
