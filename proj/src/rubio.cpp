#include "dyb/rubio.hpp"

#include <cmath>
#include <stdexcept>

#include "dyb/weights.hpp"

namespace dyb {

double maximal_norm_bound(double s) {
  if (!(s > 1.0)) throw std::domain_error("maximal norm bound needs s > 1");
  return s / (s - 1.0);
}

RdFConfig::RdFConfig(double p_, double q_)
    : RdFConfig(p_, q_, 0.0, 40, 1e-9, 0) {
  b = maximal_norm_bound(p_prime() / q_prime());
}

RdFConfig::RdFConfig(double p_, double q_, double b_, int truncation_, double tail_tol_,
                     int shift_)
    : p(p_), q(q_), b(b_), truncation(truncation_), tail_tol(tail_tol_), shift(shift_) {
  if (!(p > 1.0)) throw std::domain_error("needs p > 1");
  if (!(q > p)) throw std::domain_error("needs q > p; the endpoint q = p is rejected");
  if (b != 0.0 && !(b >= 1.0)) throw std::domain_error("needs B >= 1");
  if (truncation < 1) throw std::domain_error("truncation length must be >= 1");
  if (!(tail_tol > 0.0)) throw std::domain_error("tail tolerance must be positive");
}

namespace {

GridFunction truncated_series(const DyadicDomain& d, const GridFunction& g,
                              const RdFConfig& cfg, int terms) {
  GridFunction sum = g;  // k = 0 term
  GridFunction iter = g;
  double denom = 1.0;
  for (int k = 1; k <= terms; ++k) {
    iter = maximal(d, iter, MaximalSpec::hl(), cfg.shift);
    denom *= 2.0 * cfg.b;
    for (std::int64_t i = 0; i < d.size(); ++i) sum[i] += iter[i] / denom;
  }
  return sum;
}

int effective_truncation(const RdFConfig& cfg) {
  // tail <= max(g) 2^{-K}; enlarge K until the guarantee meets tail_tol
  int k = cfg.truncation;
  while (std::pow(2.0, -k) > cfg.tail_tol && k < 1024) ++k;
  return k;
}

}  // namespace

GridFunction rubio_operator(const DyadicDomain& d, const GridFunction& h,
                            const RdFConfig& cfg) {
  if (h.size() != d.size()) throw std::invalid_argument("grid function size mismatch");
  return truncated_series(d, h, cfg, effective_truncation(cfg));
}

GridFunction tilde_r(const DyadicDomain& d, const GridFunction& h, const RdFConfig& cfg) {
  return rubio_operator(d, h.pow(cfg.q_prime()), cfg).pow(1.0 / cfg.q_prime());
}

RdFReport certify_properties(const DyadicDomain& d, const GridFunction& h,
                             const RdFConfig& cfg) {
  if (h.size() != d.size()) throw std::invalid_argument("grid function size mismatch");
  if (h.max() == 0.0) throw std::invalid_argument("needs a nonzero input");
  const int k = effective_truncation(cfg);
  const double qp = cfg.q_prime();
  const GridFunction g = h.pow(qp);
  const GridFunction rk = truncated_series(d, g, cfg, k);
  const GridFunction rk1 = truncated_series(d, g, cfg, k + 1);
  const GridFunction rt = rk.pow(1.0 / qp);

  RdFReport rep;

  rep.pointwise_lower = true;
  for (std::int64_t i = 0; i < d.size(); ++i) {
    if (h[i] > rt[i] * (1.0 + 1e-10)) rep.pointwise_lower = false;
  }

  const double pp = cfg.p_prime();
  const double num = lp_norm_global(d, rt, pp);
  const double den = lp_norm_global(d, h, pp);
  rep.norm_ratio = num / den;
  rep.norm_bound = rep.norm_ratio <= std::pow(2.0, 1.0 / qp) * (1.0 + 1e-8) + cfg.tail_tol;

  const GridFunction m_rk = maximal(d, rk, MaximalSpec::hl(), cfg.shift);
  rep.self_control = true;
  for (std::int64_t i = 0; i < d.size(); ++i) {
    if (m_rk[i] > 2.0 * cfg.b * rk1[i] * (1.0 + 1e-10)) rep.self_control = false;
  }

  rep.a1 = a1_constant(d, rt, cfg.shift);
  rep.rh = reverse_holder_constant(d, rt, qp, cfg.shift).value;
  rep.rh_chain = rep.rh <= rep.a1 * (1.0 + 1e-8) && rep.a1 <= 2.0 * cfg.b * (1.0 + 1e-8);

  return rep;
}

}  // namespace dyb
