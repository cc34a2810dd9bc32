#pragma once

#include <map>
#include <string>
#include <vector>

#include "dyb/domain.hpp"

namespace dyb {

/// A verified-at-construction set of dyadic cubes of one grid whose strict
/// subfamilies cover at most half of each cube.
class SparseFamily {
 public:
  SparseFamily(const DyadicDomain& d, int shift, std::vector<CubeId> cubes);

  int shift() const { return shift_; }
  const std::vector<CubeId>& cubes() const { return cubes_; }
  std::size_t size() const { return cubes_.size(); }

  std::string serialize() const;
  static SparseFamily deserialize(const DyadicDomain& d, const std::string& text);

 private:
  int shift_;
  std::vector<CubeId> cubes_;  // sorted by (level, index)
};

// Calderon-Zygmund style stopping cubes: children of each selected cube whose
// average of f first exceeds lambda times the parent's average.
SparseFamily build_cz_sparse(const DyadicDomain& d, const GridFunction& f, double lambda,
                             int shift = 0);

// Exact half-measure check; worst ratio of covered strict-subcube mass.
std::pair<bool, double> verify_sparsity(const DyadicDomain& d, const SparseFamily& s);

// E(Q) = Q minus the union of strict subcubes of Q in the family.
std::map<CubeId, std::vector<std::int64_t>> exceptional_sets(const DyadicDomain& d,
                                                             const SparseFamily& s);

// T^S f = sum over Q of (avg_Q f) chi_Q.
GridFunction sparse_operator(const DyadicDomain& d, const SparseFamily& s,
                             const GridFunction& f);

// max over Q of w(Q) / w(E(Q)); the empirical exceptional-set constant.
double ainfty_gamma(const DyadicDomain& d, const SparseFamily& s, const GridFunction& w);

// Random sparse family for fuzzing: a subtree keeping at most one selected
// child per half, re-verified.
SparseFamily random_sparse(const DyadicDomain& d, Rng& rng, int shift = 0);

}  // namespace dyb
