#pragma once

#include <memory>
#include <optional>
#include <set>

#include "dyb/domain.hpp"
#include "dyb/young.hpp"

namespace dyb {

/// L^r (1 < r <= inf) or an Orlicz space; carries the norm used on cubes.
class BanachSpaceSpec {
 public:
  static BanachSpaceSpec Lr(double r);
  static BanachSpaceSpec orlicz(YoungFunction a);

  bool is_lr() const { return !young_.has_value(); }
  double r() const { return r_; }
  const YoungFunction& young() const { return *young_; }

  // L^r -> L^{r'}; Orlicz(A) -> Orlicz(conjugate of A as a table).
  BanachSpaceSpec associate() const;

  double norm_on_cube(const DyadicDomain& d, const GridFunction& f, const CubeId& q) const;

  std::string describe() const;

 private:
  BanachSpaceSpec() = default;
  double r_ = 0.0;
  std::optional<YoungFunction> young_;
};

// Ceiling for cube norms: degenerate Young functions with A(0+) >= 1 (e.g.
// the log bump at p = 1 + delta) give infinite indicator norms on fully
// covered cubes; both the Luxemburg bisection and the closed-form indicator
// maximal saturate at this value so the two stay comparable.
inline constexpr double norm_cap = 1e30;

// (avg_Q f^p)^{1/p}; p = inf gives the sup over cells of Q.
double lp_norm_on_cube(const DyadicDomain& d, const GridFunction& f, const CubeId& q, double p);

// Luxemburg norm inf{lambda : avg_Q A(f/lambda) <= 1}, bracketed bisection.
double orlicz_norm_on_cube(const DyadicDomain& d, const GridFunction& f, const CubeId& q,
                           const YoungFunction& a);

// 2 |f|_{A,Q} |g|_{conj A,Q} - avg_Q f g; nonnegative up to tolerance.
double generalized_holder_gap(const DyadicDomain& d, const GridFunction& f,
                              const GridFunction& g, const CubeId& q, const YoungFunction& a);

struct MaximalSpec {
  enum class Kind { hl, lq, orlicz, associate };
  Kind kind = Kind::hl;
  double q = 0.0;
  std::optional<YoungFunction> young;
  std::optional<BanachSpaceSpec> space;

  static MaximalSpec hl();
  static MaximalSpec lq(double q);
  static MaximalSpec orlicz(YoungFunction a);
  static MaximalSpec associate(BanachSpaceSpec y);
};

// Pointwise sup over dyadic cubes containing each cell (all configured
// shifts, or one grid when `only_shift` is set) of the cube norm.
GridFunction maximal(const DyadicDomain& d, const GridFunction& f, const MaximalSpec& spec,
                     std::optional<int> only_shift = std::nullopt);

// k-fold composition of the averaging maximal operator.
GridFunction iterated_maximal(const DyadicDomain& d, const GridFunction& f, int k,
                              std::optional<int> only_shift = std::nullopt);

// sup over cubes meeting B of 1 / A^{-1}(mu(Q)/mu(Q inter B)).
GridFunction maximal_indicator_closed_form(const DyadicDomain& d,
                                           const std::set<std::int64_t>& b_cells,
                                           const YoungFunction& a);

// max M_A f <= max f up to slack; A must be normalized.
bool linfty_bound_check(const DyadicDomain& d, const GridFunction& f, const YoungFunction& a);

// Unnormalized global norm (sum f^p dmu)^{1/p}.
double lp_norm_global(const DyadicDomain& d, const GridFunction& f, double p);

}  // namespace dyb
