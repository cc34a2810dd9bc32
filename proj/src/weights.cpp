#include "dyb/weights.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dyb {

namespace {

void require_positive(const GridFunction& g, const char* what) {
  for (std::int64_t i = 0; i < g.size(); ++i) {
    if (!(g[i] > 0.0)) throw std::invalid_argument(std::string(what) + " must be strictly positive");
  }
}

GridFunction reciprocal(const GridFunction& g) {
  GridFunction out = g;
  for (auto& x : out.values()) x = 1.0 / x;
  return out;
}

// Enumerate all cubes of all shifts, feeding (cube, avg of a, avg of b)
// computed from rotated prefix sums of the two supplied densities.
template <class F>
void scan_cubes(const DyadicDomain& d, const std::vector<double>& a,
                const std::vector<double>& b, F&& visit) {
  const std::int64_t n = d.size();
  for (int s = 0; s < d.num_shifts(); ++s) {
    const std::int64_t off = d.shift_cells(s);
    std::vector<double> pa(std::size_t(n) + 1, 0.0), pb(std::size_t(n) + 1, 0.0),
        pm(std::size_t(n) + 1, 0.0);
    for (std::int64_t rel = 0; rel < n; ++rel) {
      const std::int64_t cell = rel + off < n ? rel + off : rel + off - n;
      const double m = d.cell_mass(cell);
      pa[std::size_t(rel) + 1] = pa[std::size_t(rel)] + a[std::size_t(cell)] * m;
      pb[std::size_t(rel) + 1] = pb[std::size_t(rel)] + b[std::size_t(cell)] * m;
      pm[std::size_t(rel) + 1] = pm[std::size_t(rel)] + m;
    }
    for (int level = 0; level <= d.depth(); ++level) {
      const std::int64_t w = n >> level;
      for (std::int64_t i = 0; i < (std::int64_t(1) << level); ++i) {
        const std::int64_t lo = i * w, hi = lo + w;
        const double mu = pm[std::size_t(hi)] - pm[std::size_t(lo)];
        visit(CubeId{s, level, i}, (pa[std::size_t(hi)] - pa[std::size_t(lo)]) / mu,
              (pb[std::size_t(hi)] - pb[std::size_t(lo)]) / mu);
      }
    }
  }
}

std::vector<double> pointwise_pow(const GridFunction& g, double e) {
  std::vector<double> out(g.values());
  for (auto& x : out) x = std::pow(x, e);
  return out;
}

}  // namespace

WitnessedConstant two_weight_ap_constant(const DyadicDomain& d, const GridFunction& w,
                                         const GridFunction& v, double p) {
  if (!(p > 1.0)) throw std::domain_error("needs p > 1");
  require_positive(w, "w");
  require_positive(v, "v");
  const double pprime = p / (p - 1.0);
  WitnessedConstant best;
  scan_cubes(d, w.values(), pointwise_pow(v, -pprime / p),
             [&](const CubeId& q, double avg_w, double avg_v) {
               const double val = avg_w * std::pow(avg_v, p - 1.0);
               if (val > best.value) best = {val, q};
             });
  return best;
}

WitnessedConstant neugebauer_constant(const DyadicDomain& d, const GridFunction& w,
                                      const GridFunction& v, double p, double r) {
  if (!(p > 1.0)) throw std::domain_error("needs p > 1");
  if (!(r > 1.0)) throw std::domain_error("needs r > 1");
  require_positive(w, "w");
  require_positive(v, "v");
  const double pprime = p / (p - 1.0);
  WitnessedConstant best;
  scan_cubes(d, pointwise_pow(w, p * r), pointwise_pow(v, -pprime * r),
             [&](const CubeId& q, double avg_w, double avg_v) {
               const double val =
                   std::pow(avg_w, 1.0 / (p * r)) * std::pow(avg_v, 1.0 / (pprime * r));
               if (val > best.value) best = {val, q};
             });
  return best;
}

WitnessedConstant bump_constant(const DyadicDomain& d, const WeightPair& pair,
                                double exponent) {
  if (!(exponent > 1.0)) throw std::domain_error("bump exponent must be > 1");
  require_positive(pair.w, "w");
  require_positive(pair.v, "v");
  const GridFunction v_inv = reciprocal(pair.v);
  WitnessedConstant best;
  if (pair.y.is_lr()) {
    // Both factors reduce to power averages: one fused prefix-sum scan.
    scan_cubes(d, pointwise_pow(pair.w, exponent), pointwise_pow(v_inv, pair.y.r()),
               [&](const CubeId& q, double avg_w, double avg_vi) {
                 const double val = std::pow(avg_w, 1.0 / exponent) *
                                    std::pow(avg_vi, 1.0 / pair.y.r());
                 if (val > best.value) best = {val, q};
               });
    return best;
  }
  for (int s = 0; s < d.num_shifts(); ++s) {
    for (int level = 0; level <= d.depth(); ++level) {
      for (std::int64_t i = 0; i < (std::int64_t(1) << level); ++i) {
        const CubeId q{s, level, i};
        const double val =
            lp_norm_on_cube(d, pair.w, q, exponent) * pair.y.norm_on_cube(d, v_inv, q);
        if (val > best.value) best = {val, q};
      }
    }
  }
  return best;
}

WitnessedConstant reverse_holder_constant(const DyadicDomain& d, const GridFunction& rho,
                                          double p, std::optional<int> only_shift) {
  if (!(p > 1.0)) throw std::domain_error("needs p > 1");
  require_positive(rho, "rho");
  WitnessedConstant best;
  scan_cubes(d, pointwise_pow(rho, p), rho.values(),
             [&](const CubeId& q, double avg_p, double avg) {
               if (only_shift && q.shift != *only_shift) return;
               const double val = std::pow(avg_p, 1.0 / p) / avg;
               if (val > best.value) best = {val, q};
             });
  return best;
}

double a1_constant(const DyadicDomain& d, const GridFunction& w,
                   std::optional<int> only_shift) {
  require_positive(w, "w");
  const GridFunction mw = maximal(d, w, MaximalSpec::hl(), only_shift);
  double c = 1.0;
  for (std::int64_t i = 0; i < d.size(); ++i) c = std::max(c, mw[i] / w[i]);
  return c;
}

WeightPair make_pair_mq(const DyadicDomain& d, const GridFunction& u, double q,
                        BanachSpaceSpec y) {
  if (!(q > 1.0)) throw std::domain_error("needs q > 1");
  require_positive(u, "u");
  if (!y.is_lr() && !y.young().is_normalized()) {
    throw std::invalid_argument("Orlicz space for this pair must be normalized");
  }
  GridFunction v = maximal(d, u, MaximalSpec::lq(q));
  return WeightPair{u, std::move(v), std::move(y), q};
}

std::pair<WeightPair, double> make_pair_ma_inv(const DyadicDomain& d, const GridFunction& u,
                                               const YoungFunction& a, double p,
                                               const GridFunction& w, BanachSpaceSpec y,
                                               std::optional<double> q) {
  require_positive(u, "u");
  require_positive(w, "w");
  if (!(p >= 1.0)) throw std::domain_error("needs p >= 1");
  GridFunction first = maximal(d, u, MaximalSpec::orlicz(a)).pow(1.0 - p);
  const GridFunction w_inv = reciprocal(w);
  double hypothesis = 0.0;
  for (int s = 0; s < d.num_shifts(); ++s) {
    for (int level = 0; level <= d.depth(); ++level) {
      for (std::int64_t i = 0; i < (std::int64_t(1) << level); ++i) {
        const CubeId cq{s, level, i};
        const double val = std::pow(orlicz_norm_on_cube(d, u, cq, a), 1.0 - p) *
                           y.norm_on_cube(d, w_inv, cq);
        hypothesis = std::max(hypothesis, val);
      }
    }
  }
  WeightPair pair{std::move(first), w, std::move(y), q.value_or(std::max(p, 1.0 + 1e-9))};
  return {std::move(pair), hypothesis};
}

std::vector<double> power_weight_blowup(double alpha, double beta, double p,
                                        const std::vector<int>& depths) {
  if (!(p > 1.0)) throw std::domain_error("needs p > 1");
  const double pprime = p / (p - 1.0);
  std::vector<double> out;
  out.reserve(depths.size());
  for (int depth : depths) {
    const DyadicDomain d = DyadicDomain::uniform(depth, {0.0});
    const GridFunction w = GridFunction::power_singularity(d, 0.5, alpha);
    const GridFunction v = GridFunction::power_singularity(d, 0.5, beta);
    // smallest shift-0 cube whose interior meets the center: the leaf at 1/2
    const CubeId q0{0, depth, d.size() / 2};
    out.push_back(lp_norm_on_cube(d, w, q0, p) *
                  lp_norm_on_cube(d, reciprocal(v), q0, pprime));
  }
  return out;
}

}  // namespace dyb
