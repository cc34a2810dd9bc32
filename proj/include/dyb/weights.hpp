#pragma once

#include <optional>
#include <vector>

#include "dyb/domain.hpp"
#include "dyb/orlicz.hpp"

namespace dyb {

/// Candidate weight pair (w, v) with the space Y and exponent q used in the
/// bump condition sup_Q |w|_{q,Q} |v^{-1}|_{Y,Q}.
struct WeightPair {
  GridFunction w;
  GridFunction v;
  BanachSpaceSpec y;
  double q;
};

struct WitnessedConstant {
  double value = 0.0;
  CubeId witness;
};

// sup_Q (avg_Q w) (avg_Q v^{-p'/p})^{p-1} over all cubes of all shifts.
WitnessedConstant two_weight_ap_constant(const DyadicDomain& d, const GridFunction& w,
                                         const GridFunction& v, double p);

// sup_Q (avg_Q w^{pr})^{1/pr} (avg_Q v^{-p'r})^{1/p'r}.
WitnessedConstant neugebauer_constant(const DyadicDomain& d, const GridFunction& w,
                                      const GridFunction& v, double p, double r);

// sup_Q |w|_{exponent,Q} |v^{-1}|_{Y,Q}.
WitnessedConstant bump_constant(const DyadicDomain& d, const WeightPair& pair, double exponent);

// sup_Q (avg_Q rho^p)^{1/p} / avg_Q rho.
WitnessedConstant reverse_holder_constant(const DyadicDomain& d, const GridFunction& rho,
                                          double p, std::optional<int> only_shift = std::nullopt);

// max over cells of (M w) / w.
double a1_constant(const DyadicDomain& d, const GridFunction& w,
                   std::optional<int> only_shift = std::nullopt);

// The pair (u, M_q u); needs |chi_Q|_{Y,Q} = 1, so an Orlicz Y must be
// normalized.  Satisfies the bump condition with constant 1 at exponents q
// and any p < q.
WeightPair make_pair_mq(const DyadicDomain& d, const GridFunction& u, double q,
                        BanachSpaceSpec y);

// The pair ((M_A u)^{1-p}, w); the returned constant is
// sup_Q |u|_{A,Q}^{1-p} |w^{-1}|_{Y,Q} and bounds the pair's bump constant.
std::pair<WeightPair, double> make_pair_ma_inv(const DyadicDomain& d, const GridFunction& u,
                                               const YoungFunction& a, double p,
                                               const GridFunction& w, BanachSpaceSpec y,
                                               std::optional<double> q = std::nullopt);

// Centered power-weight bump products across grid depths; the sequence grows
// geometrically when alpha != beta and stays bounded when alpha == beta.
std::vector<double> power_weight_blowup(double alpha, double beta, double p,
                                        const std::vector<int>& depths);

}  // namespace dyb
