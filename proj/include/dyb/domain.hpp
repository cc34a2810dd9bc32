#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace dyb {

/// Address of a dyadic interval: grid shift, refinement level (0 = root) and
/// position within the level.
struct CubeId {
  int shift = 0;
  int level = 0;
  std::int64_t index = 0;
  auto operator<=>(const CubeId&) const = default;
};

class DyadicDomain;

/// Cell-constant nonnegative function on the leaves of a domain.
class GridFunction {
 public:
  GridFunction() = default;
  explicit GridFunction(std::vector<double> values);

  static GridFunction constant(const DyadicDomain& d, double c);
  static GridFunction indicator(const DyadicDomain& d, const std::set<std::int64_t>& cells);
  // |x - x0|^{-alpha} sampled at cell centers; the cell containing x0 takes
  // the value at the nearest other cell center.
  static GridFunction power_singularity(const DyadicDomain& d, double x0, double alpha);
  static GridFunction lognormal(const DyadicDomain& d, std::uint64_t seed, double sigma = 0.75);
  static GridFunction from_csv(const DyadicDomain& d, const std::string& path);

  std::int64_t size() const { return std::int64_t(v_.size()); }
  double operator[](std::int64_t i) const { return v_[std::size_t(i)]; }
  double& operator[](std::int64_t i) { return v_[std::size_t(i)]; }
  const std::vector<double>& values() const { return v_; }
  std::vector<double>& values() { return v_; }

  double max() const;
  GridFunction pow(double e) const;

 private:
  std::vector<double> v_;
};

/// Depth-L binary grid on [0,1) with positive per-cell masses and a list of
/// cyclically shifted dyadic grids over the same cells.
class DyadicDomain {
 public:
  // `shifts` are offsets in [0,1); each is reduced to a whole number of cells.
  DyadicDomain(int depth, std::vector<double> cell_mass,
               std::vector<double> shifts = {0.0, 1.0 / 3.0});
  static DyadicDomain uniform(int depth, std::vector<double> shifts = {0.0, 1.0 / 3.0});

  int depth() const { return depth_; }
  std::int64_t size() const { return n_; }
  int num_shifts() const { return int(shift_cells_.size()); }
  std::int64_t shift_cells(int s) const { return shift_cells_[std::size_t(s)]; }
  double cell_mass(std::int64_t i) const { return mass_[std::size_t(i)]; }
  double total_mass() const { return prefix_.back(); }

  bool valid(const CubeId& q) const;
  void check(const CubeId& q) const;

  // First cell and cell count of a cube; cells wrap cyclically.
  std::pair<std::int64_t, std::int64_t> cube_cells(const CubeId& q) const;
  bool contains(const CubeId& q, std::int64_t cell) const;
  bool contains(const CubeId& outer, const CubeId& inner) const;

  double cube_measure(const CubeId& q) const;
  double integrate(const GridFunction& f, const CubeId& q) const;
  double average(const GridFunction& f, const CubeId& q) const;

  // The depth+1 cubes of one grid containing a cell, leaf first.
  std::vector<CubeId> ancestors(std::int64_t cell, int shift) const;
  CubeId ancestor_at(std::int64_t cell, int shift, int level) const;

  // Measure of doubled concentric intervals over measure of the interval,
  // maximized over all cubes of all shifts.  Doubled intervals that stick out
  // of [0,1) are translated back inside; wrapped cubes double cyclically.
  double doubling_constant() const;

  // Mass of [a,b] in cell units with fractional cell coverage, cyclic.
  double interval_mass(double a, double b) const;

 private:
  int depth_;
  std::int64_t n_;
  std::vector<double> mass_;
  std::vector<double> prefix_;  // prefix_[i] = sum of mass_[0..i)
  std::vector<std::int64_t> shift_cells_;
};

// Deterministic helper RNG (splitmix-seeded xorshift) so that reports are
// byte-identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next_u64();
  double uniform();                    // [0,1)
  double uniform(double a, double b);
  std::int64_t uniform_int(std::int64_t n);  // [0,n)
  double normal();
 private:
  std::uint64_t s_[4];
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace dyb
