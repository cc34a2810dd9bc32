#include "dyb/verify.hpp"

#include <cmath>
#include <stdexcept>

namespace dyb {

namespace {

constexpr double kSlack = 1e-8;

GridFunction product(const GridFunction& a, const GridFunction& b) {
  GridFunction out = a;
  for (std::int64_t i = 0; i < a.size(); ++i) out[i] *= b[i];
  return out;
}

double weighted_sum(const DyadicDomain& d, const GridFunction& a, const GridFunction& b) {
  double s = 0.0;
  for (std::int64_t i = 0; i < d.size(); ++i) s += a[i] * b[i] * d.cell_mass(i);
  return s;
}

bool within(double lhs, double constant, double rhs) {
  return lhs <= constant * rhs * (1.0 + kSlack) + 1e-12;
}

}  // namespace

Step1Report step1_check(const DyadicDomain& d, const SparseFamily& s, const WeightPair& pair,
                        const GridFunction& f, const GridFunction& rho, double p) {
  if (!(p > 1.0) || !(pair.q > p)) throw std::domain_error("needs 1 < p < q");
  if (f.size() != d.size() || rho.size() != d.size()) {
    throw std::invalid_argument("grid function size mismatch");
  }
  const double qp = pair.q / (pair.q - 1.0);

  Step1Report rep;
  const GridFunction tf = sparse_operator(d, s, f);
  rep.lhs = weighted_sum(d, product(tf, pair.w), rho);
  const GridFunction m = maximal(d, product(f, pair.v), MaximalSpec::associate(pair.y));
  rep.rhs = weighted_sum(d, m, rho);

  rep.gamma = ainfty_gamma(d, s, rho);
  rep.bump_k = bump_constant(d, pair, pair.q).value;
  rep.rh_kappa = reverse_holder_constant(d, rho, qp, s.shift()).value;
  rep.tracked_constant = 2.0 * rep.gamma * rep.bump_k * rep.rh_kappa;
  rep.pass = within(rep.lhs, rep.tracked_constant, rep.rhs);
  return rep;
}

MainTheoremReport main_theorem_check(const DyadicDomain& d, const SparseFamily& s,
                                     const WeightPair& pair, const GridFunction& f, double p,
                                     const RdFConfig& cfg) {
  if (!(p > 1.0) || !(pair.q > p)) throw std::domain_error("needs 1 < p < q");
  if (std::abs(cfg.p - p) > 1e-12 || std::abs(cfg.q - pair.q) > 1e-12) {
    throw std::invalid_argument("iteration parameters must match the pair");
  }
  if (cfg.shift != s.shift()) {
    throw std::invalid_argument("iteration must run on the sparse family's grid");
  }
  if (f.size() != d.size()) throw std::invalid_argument("grid function size mismatch");
  const double qp = cfg.q_prime();

  MainTheoremReport rep;
  const GridFunction tfw = product(sparse_operator(d, s, f), pair.w);
  rep.lhs = lp_norm_global(d, tfw, p);
  rep.rhs =
      lp_norm_global(d, maximal(d, product(f, pair.v), MaximalSpec::associate(pair.y)), p);
  rep.bump_k = bump_constant(d, pair, pair.q).value;

  if (rep.lhs == 0.0) {
    rep.tight_pass = rep.coarse_pass = rep.pass = true;
    return rep;
  }

  // Extremal dual function for |T^S f w|_p, majorized by its own iterate.
  GridFunction h = tfw.pow(p - 1.0);
  const double scale = std::pow(rep.lhs, p - 1.0);
  for (auto& x : h.values()) x /= scale;
  const GridFunction rt = tilde_r(d, h, cfg);

  rep.gamma_star = ainfty_gamma(d, s, rt);
  rep.kappa_star = reverse_holder_constant(d, rt, qp, cfg.shift).value;
  const double base = 2.0 * std::pow(2.0, 1.0 / qp) * rep.bump_k * rep.gamma_star;
  rep.tight_constant = base * rep.kappa_star;
  rep.coarse_constant = base * std::pow(2.0 * cfg.b, 1.0 / qp);
  rep.tight_pass = within(rep.lhs, rep.tight_constant, rep.rhs);
  rep.coarse_pass = within(rep.lhs, rep.coarse_constant, rep.rhs);
  rep.pass = rep.tight_pass && rep.coarse_pass;
  return rep;
}

PerezReport perez_theorem_check(const DyadicDomain& d, const WeightPair& pair,
                                const GridFunction& f, double p) {
  if (!(p > 1.0)) throw std::domain_error("needs p > 1");
  if (f.size() != d.size()) throw std::invalid_argument("grid function size mismatch");
  PerezReport rep;
  const GridFunction m = maximal(d, f, MaximalSpec::associate(pair.y));
  const double num = lp_norm_global(d, product(m, pair.w), p);
  const double den = lp_norm_global(d, product(f, pair.v), p);
  if (!(den > 0.0)) throw std::invalid_argument("needs a nonzero input");
  rep.ratio = std::pow(num / den, p);
  rep.bump = bump_constant(d, pair, p).value;
  return rep;
}

RhExtrapolationReport rh_extrapolation_check(const DyadicDomain& d, const GridFunction& s1,
                                             const GridFunction& s2, double p, double q,
                                             const std::vector<GridFunction>& rho_samples,
                                             double rh_ceiling) {
  if (!(p > 1.0) || !(q > p)) throw std::domain_error("needs 1 < p < q");
  if (s1.size() != d.size() || s2.size() != d.size()) {
    throw std::invalid_argument("grid function size mismatch");
  }
  const double qp = q / (q - 1.0);

  RhExtrapolationReport rep;
  rep.c_bound = std::pow(2.0, p / qp);

  bool violated = false;
  for (const GridFunction& rho : rho_samples) {
    if (rho.size() != d.size()) throw std::invalid_argument("grid function size mismatch");
    if (reverse_holder_constant(d, rho, qp).value > rh_ceiling) {
      ++rep.discarded;
      continue;
    }
    ++rep.admitted;
    if (weighted_sum(d, s1, rho) > weighted_sum(d, s2, rho) * (1.0 + kSlack)) violated = true;
  }
  rep.hypothesis_pass = rep.admitted > 0 && !violated;

  const double int1 = weighted_sum(d, s1.pow(p), GridFunction::constant(d, 1.0));
  const double int2 = weighted_sum(d, s2.pow(p), GridFunction::constant(d, 1.0));
  rep.conclusion_checked = int2 > 0.0;
  if (rep.conclusion_checked) {
    rep.c_emp = int1 / int2;
    rep.conclusion_pass = int1 <= rep.c_bound * int2 * (1.0 + kSlack);
  }

  // The dual extremal weight: if the hypothesis also holds at tilde_r of the
  // normalized (p-1) power of s1, the conclusion is forced by duality.
  const double n1 = lp_norm_global(d, s1, p);
  if (n1 > 0.0) {
    GridFunction h = s1.pow(p - 1.0);
    const double scale = std::pow(n1, p - 1.0);
    for (auto& x : h.values()) x /= scale;
    const GridFunction rt = tilde_r(d, h, RdFConfig(p, q));
    rep.witness_hypothesis_pass =
        weighted_sum(d, s1, rt) <= weighted_sum(d, s2, rt) * (1.0 + kSlack);
  } else {
    rep.witness_hypothesis_pass = true;
  }
  rep.flags_bug = rep.hypothesis_pass && rep.witness_hypothesis_pass &&
                  rep.conclusion_checked && !rep.conclusion_pass;
  return rep;
}

GridFunction smooth_weight_profile(const DyadicDomain& d) {
  const double pi = std::acos(-1.0);
  std::vector<double> v(std::size_t(d.size()), 0.0);
  for (std::int64_t i = 0; i < d.size(); ++i) {
    const double x = (double(i) + 0.5) / double(d.size());
    v[std::size_t(i)] = 1.5 + 0.7 * std::sin(2.0 * pi * x) + 0.3 * std::sin(6.0 * pi * x + 1.0);
  }
  return GridFunction(std::move(v));
}

GridFunction smooth_test_function(const DyadicDomain& d) {
  std::vector<double> v(std::size_t(d.size()), 0.0);
  auto bump = [](double x, double c, double s) {
    return std::exp(-(x - c) * (x - c) / (2.0 * s * s));
  };
  for (std::int64_t i = 0; i < d.size(); ++i) {
    const double x = (double(i) + 0.5) / double(d.size());
    v[std::size_t(i)] = 0.2 + 20.0 * bump(x, 0.37, 0.03) + 5.0 * bump(x, 0.71, 0.01);
  }
  return GridFunction(std::move(v));
}

namespace {

StabilityReport finish_stability(StabilityReport rep, double drift_limit) {
  rep.drift = 0.0;
  for (double r : rep.ratios) {
    rep.drift = std::max(rep.drift, std::abs(r - rep.ratios.front()) / rep.ratios.front());
  }
  rep.pass = rep.drift < drift_limit;
  return rep;
}

}  // namespace

StabilityReport main_theorem_stability(double p, double q, const std::vector<int>& depths,
                                       double drift_limit) {
  StabilityReport rep;
  for (int depth : depths) {
    const DyadicDomain d = DyadicDomain::uniform(depth);
    const GridFunction u = smooth_weight_profile(d);
    const GridFunction f = smooth_test_function(d);
    const WeightPair pair = make_pair_mq(d, u, q, BanachSpaceSpec::Lr(2.0));
    const SparseFamily s = build_cz_sparse(d, f, 2.0, 0);
    const MainTheoremReport r = main_theorem_check(d, s, pair, f, p, RdFConfig(p, q));
    if (!(r.rhs > 0.0)) throw std::logic_error("degenerate stability instance");
    rep.depths.push_back(depth);
    rep.ratios.push_back(r.lhs / r.rhs);
  }
  return finish_stability(std::move(rep), drift_limit);
}

StabilityReport perez_stability(double p, double r_prime, double q,
                                const std::vector<int>& depths, double drift_limit) {
  if (!(r_prime > 1.0) || !(r_prime < p / (p - 1.0))) {
    throw std::domain_error("needs 1 < r' < p'");
  }
  const double r = r_prime / (r_prime - 1.0);
  StabilityReport rep;
  for (int depth : depths) {
    const DyadicDomain d = DyadicDomain::uniform(depth);
    const GridFunction u = smooth_weight_profile(d);
    const GridFunction f = smooth_test_function(d);
    const WeightPair pair = make_pair_mq(d, u, q, BanachSpaceSpec::Lr(r));
    const PerezReport pr = perez_theorem_check(d, pair, f, p);
    rep.depths.push_back(depth);
    rep.ratios.push_back(pr.ratio);
  }
  return finish_stability(std::move(rep), drift_limit);
}

}  // namespace dyb
