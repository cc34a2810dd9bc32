#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dyb {

enum class BpVerdict { member, non_member, inconclusive };

std::string to_string(BpVerdict v);

struct BpTestResult {
  BpVerdict verdict;                  // analytic when available, else numeric
  BpVerdict numeric;                  // ladder-based heuristic verdict
  std::optional<BpVerdict> analytic;  // closed-form verdict for built-in families
  std::vector<double> tail_integrals; // cumulative integral at each ladder endpoint
};

/// A convex increasing function A on [0,inf) with A(0) = 0, used to generate
/// Luxemburg norms.  Built-in families: power t^r, log bump t^p/ln^{1+d}(1+t)
/// and loglog bump t^p/(ln(e+t) (ln ln(e^e+t))^{1+d}), plus convex
/// piecewise-linear tables.  Values are immutable after construction.
class YoungFunction {
 public:
  static YoungFunction power(double r);
  static YoungFunction log_bump(double p, double delta);
  static YoungFunction loglog_bump(double p, double delta);
  // Breakpoints must be strictly increasing in both coordinates beyond the
  // first; (0,0) is prepended when absent.  Extrapolates the last slope.
  static YoungFunction table(std::vector<std::pair<double, double>> pts);
  // Two-column CSV: t,A(t) per row.
  static YoungFunction table_from_csv(const std::string& path);

  // Value-rescaled copy with A(1) == 1.
  YoungFunction normalized() const;
  bool is_normalized() const;

  double operator()(double t) const;

  // Generalized inverse inf{t : A(t) >= s}, bracketed bisection.
  double inverse(double s) const;

  // Convex conjugate sup_t {s t - A(t)}.  Closed form for the power family,
  // golden-section search otherwise.  Throws if the supremum is infinite.
  double conjugate(double s) const;

  // A(a) + conj(A)(b) - a b; nonnegative up to search tolerance.
  double young_gap(double a, double b) const;

  // Sampled sup of A(2t)/A(t); a heuristic, not a proof of doubling.
  std::pair<bool, double> doubling_ratio(std::span<const double> t_grid = {},
                                         double ceiling = 256.0) const;

  // Tests convergence of int_1^inf A(t)/t^p dt/t by a geometric ladder of
  // truncations.  Analytic verdicts are attached for built-in families and
  // take precedence in `verdict`.
  BpTestResult bp_test(double p) const;

  // Conjugate sampled on a log-spaced grid and packaged as a table family.
  YoungFunction conjugate_table(std::size_t points = 512, double t_lo = 1e-6,
                                double t_hi = 1e6) const;

  // Sampled check that A(t)/t is nondecreasing.
  bool ratio_increasing(std::span<const double> t_grid = {}) const;

  std::string describe() const;

 private:
  enum class Family { power, log_bump, loglog_bump, table };

  YoungFunction() = default;

  double raw(double t) const;

  Family family_ = Family::power;
  double par0_ = 2.0;  // r, or p for the bump families
  double par1_ = 0.0;  // delta for the bump families
  std::vector<std::pair<double, double>> pts_;
  double scale_ = 1.0;
};

}  // namespace dyb
