#pragma once

#include <vector>

#include "dyb/domain.hpp"
#include "dyb/rubio.hpp"
#include "dyb/sparse.hpp"
#include "dyb/weights.hpp"

namespace dyb {

/// Weighted-L^1 inequality for the sparse operator against the associate
/// maximal function, with the tracked constant 2 gamma K_q kappa.
struct Step1Report {
  double lhs = 0.0;
  double rhs = 0.0;
  double gamma = 0.0;
  double bump_k = 0.0;
  double rh_kappa = 0.0;
  double tracked_constant = 0.0;
  bool pass = false;
};

Step1Report step1_check(const DyadicDomain& d, const SparseFamily& s, const WeightPair& pair,
                        const GridFunction& f, const GridFunction& rho, double p);

/// L^p bound for the sparse operator via the iterated-maximal majorant of the
/// extremal dual function, with both the tight and the coarse constants.
struct MainTheoremReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double bump_k = 0.0;
  double gamma_star = 0.0;
  double kappa_star = 0.0;
  double tight_constant = 0.0;
  double coarse_constant = 0.0;
  bool tight_pass = false;
  bool coarse_pass = false;
  bool pass = false;
};

MainTheoremReport main_theorem_check(const DyadicDomain& d, const SparseFamily& s,
                                     const WeightPair& pair, const GridFunction& f, double p,
                                     const RdFConfig& cfg);

/// Two-weight bound for the associate maximal function itself.
struct PerezReport {
  double ratio = 0.0;  // |M_{Y'} f w|_p^p / |f v|_p^p
  double bump = 0.0;   // bump constant of the pair at exponent p
};

PerezReport perez_theorem_check(const DyadicDomain& d, const WeightPair& pair,
                                const GridFunction& f, double p);

/// Extrapolation harness: a weighted-L^1 comparison over reverse-Holder
/// weights upgraded to an L^p comparison.
struct RhExtrapolationReport {
  int admitted = 0;
  int discarded = 0;
  bool hypothesis_pass = false;
  bool witness_hypothesis_pass = false;
  double c_emp = 0.0;    // integral ratio of p-th powers
  double c_bound = 0.0;  // 2^{p/q'}
  bool conclusion_checked = false;
  bool conclusion_pass = false;
  bool flags_bug = false;  // hypothesis held on the witness but conclusion failed
};

RhExtrapolationReport rh_extrapolation_check(const DyadicDomain& d, const GridFunction& s1,
                                             const GridFunction& s2, double p, double q,
                                             const std::vector<GridFunction>& rho_samples,
                                             double rh_ceiling = 8.0);

/// Fixed smooth test instances sampled at several grid depths; used by the
/// resolution-stability checks.
struct StabilityReport {
  std::vector<int> depths;
  std::vector<double> ratios;
  double drift = 0.0;  // max |ratio - ratio_0| / ratio_0
  bool pass = false;   // drift below the given limit
};

StabilityReport main_theorem_stability(double p, double q, const std::vector<int>& depths,
                                       double drift_limit = 0.25);
StabilityReport perez_stability(double p, double r_prime, double q,
                                const std::vector<int>& depths, double drift_limit = 0.25);

// The smooth profiles behind the stability instances.
GridFunction smooth_weight_profile(const DyadicDomain& d);
GridFunction smooth_test_function(const DyadicDomain& d);

}  // namespace dyb
