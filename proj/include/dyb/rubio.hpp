#pragma once

#include "dyb/domain.hpp"
#include "dyb/orlicz.hpp"

namespace dyb {

/// Parameters of the truncated iteration sum_k M^k h / (2^k B^k) on one
/// dyadic grid.  Requires p < q so that p'/q' > 1.
struct RdFConfig {
  double p;
  double q;
  double b;            // bound used for the L^{p'/q'} norm of M
  int truncation = 40; // number of maximal iterates kept
  double tail_tol = 1e-9;
  int shift = 0;       // grid the iteration runs on

  RdFConfig(double p_, double q_);
  RdFConfig(double p_, double q_, double b_, int truncation_, double tail_tol_,
            int shift_ = 0);

  double p_prime() const { return p / (p - 1.0); }
  double q_prime() const { return q / (q - 1.0); }
};

// s' = s/(s-1): upper bound for the one-grid dyadic maximal norm on L^s.
double maximal_norm_bound(double s);

// Truncated series R_K h = sum_{k<=K} M^k h / (2B)^k; omitted tail is at
// most max(h) 2^{-K}.
GridFunction rubio_operator(const DyadicDomain& d, const GridFunction& h,
                            const RdFConfig& cfg);

// R(h^{q'})^{1/q'}.
GridFunction tilde_r(const DyadicDomain& d, const GridFunction& h, const RdFConfig& cfg);

struct RdFReport {
  bool pointwise_lower = false;   // h <= tilde_r(h)
  bool norm_bound = false;        // |tilde_r h|_{p'} <= 2^{1/q'} |h|_{p'}
  bool self_control = false;      // M(R_K g) <= 2B R_{K+1} g, g = h^{q'}
  bool rh_chain = false;          // [.]_{RH_{q'}} <= [.]_{A_1} <= 2B
  double norm_ratio = 0.0;        // |tilde_r h|_{p'} / |h|_{p'}
  double a1 = 0.0;                // [tilde_r h]_{A_1} on the iteration grid
  double rh = 0.0;                // [tilde_r h]_{RH_{q'}} on the iteration grid
  bool certified() const { return pointwise_lower && norm_bound && self_control && rh_chain; }
};

RdFReport certify_properties(const DyadicDomain& d, const GridFunction& h,
                             const RdFConfig& cfg);

}  // namespace dyb
