#include "dyb/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dyb {

namespace {

struct RotatedSums {
  std::vector<double> fm_prefix, m_prefix;  // over rotated coords
  std::int64_t n;

  RotatedSums(const DyadicDomain& d, const GridFunction& f, int shift) : n(d.size()) {
    fm_prefix.assign(std::size_t(n) + 1, 0.0);
    m_prefix.assign(std::size_t(n) + 1, 0.0);
    const std::int64_t off = d.shift_cells(shift);
    for (std::int64_t rel = 0; rel < n; ++rel) {
      const std::int64_t cell = rel + off < n ? rel + off : rel + off - n;
      fm_prefix[std::size_t(rel) + 1] = fm_prefix[std::size_t(rel)] + f[cell] * d.cell_mass(cell);
      m_prefix[std::size_t(rel) + 1] = m_prefix[std::size_t(rel)] + d.cell_mass(cell);
    }
  }

  double mass(std::int64_t a, std::int64_t w) const {
    return m_prefix[std::size_t(a + w)] - m_prefix[std::size_t(a)];
  }
  double integral(std::int64_t a, std::int64_t w) const {
    return fm_prefix[std::size_t(a + w)] - fm_prefix[std::size_t(a)];
  }
  double avg(const DyadicDomain& d, const CubeId& q) const {
    const std::int64_t w = n >> q.level;
    const std::int64_t a = q.index * w;
    return integral(a, w) / mass(a, w);
  }
};

// Mass of the union of strict subcubes of each cube, in one pass per cube.
std::vector<double> covered_masses(const DyadicDomain& d, const SparseFamily& s) {
  const std::int64_t n = d.size();
  const auto& cubes = s.cubes();
  std::vector<double> out(cubes.size(), 0.0);
  RotatedSums sums(d, GridFunction::constant(d, 0.0), s.shift());
  std::vector<char> mark(std::size_t(n), 0);
  for (std::size_t qi = 0; qi < cubes.size(); ++qi) {
    const CubeId& q = cubes[qi];
    const std::int64_t w = n >> q.level;
    const std::int64_t a = q.index * w;
    std::vector<std::pair<std::int64_t, std::int64_t>> ranges;
    for (const CubeId& p : cubes) {
      if (p.level <= q.level) continue;
      const std::int64_t pw = n >> p.level;
      const std::int64_t pa = p.index * pw;
      if (pa >= a && pa + pw <= a + w) ranges.emplace_back(pa, pw);
    }
    for (auto [pa, pw] : ranges) {
      for (std::int64_t k = pa; k < pa + pw; ++k) mark[std::size_t(k)] = 1;
    }
    double covered = 0.0;
    for (std::int64_t k = a; k < a + w; ++k) {
      if (mark[std::size_t(k)]) covered += sums.mass(k, 1);
    }
    out[qi] = covered;
    for (auto [pa, pw] : ranges) {
      for (std::int64_t k = pa; k < pa + pw; ++k) mark[std::size_t(k)] = 0;
    }
  }
  return out;
}

}  // namespace

SparseFamily::SparseFamily(const DyadicDomain& d, int shift, std::vector<CubeId> cubes)
    : shift_(shift), cubes_(std::move(cubes)) {
  if (shift < 0 || shift >= d.num_shifts()) throw std::out_of_range("bad shift");
  for (auto& q : cubes_) {
    if (q.shift != shift) throw std::invalid_argument("sparse family spans shifts");
    d.check(q);
  }
  std::sort(cubes_.begin(), cubes_.end(),
            [](const CubeId& a, const CubeId& b) {
              return std::tie(a.level, a.index) < std::tie(b.level, b.index);
            });
  cubes_.erase(std::unique(cubes_.begin(), cubes_.end()), cubes_.end());
}

std::string SparseFamily::serialize() const {
  std::ostringstream out;
  for (const auto& q : cubes_) {
    out << q.shift << " " << q.level << " " << q.index << "\n";
  }
  return out.str();
}

SparseFamily SparseFamily::deserialize(const DyadicDomain& d, const std::string& text) {
  std::istringstream in(text);
  std::vector<CubeId> cubes;
  int shift, level;
  std::int64_t index;
  int family_shift = -1;
  while (in >> shift >> level >> index) {
    if (family_shift < 0) family_shift = shift;
    cubes.push_back(CubeId{shift, level, index});
  }
  if (cubes.empty()) throw std::invalid_argument("empty sparse family text");
  return SparseFamily(d, family_shift, std::move(cubes));
}

SparseFamily build_cz_sparse(const DyadicDomain& d, const GridFunction& f, double lambda,
                             int shift) {
  if (!(lambda >= 2.0)) throw std::invalid_argument("stopping parameter must be >= 2");
  if (f.size() != d.size()) throw std::invalid_argument("grid function size mismatch");
  bool all_zero = true;
  for (std::int64_t i = 0; i < f.size() && all_zero; ++i) all_zero = f[i] == 0.0;
  if (all_zero) throw std::invalid_argument("cannot decompose the zero function");

  RotatedSums sums(d, f, shift);
  std::vector<CubeId> selected;
  const CubeId root{shift, 0, 0};
  selected.push_back(root);

  // For each selected cube, pick the maximal descendants whose average first
  // exceeds lambda times the selected cube's average, then recurse on those.
  std::vector<std::pair<CubeId, double>> work;  // (selected cube, its average)
  work.emplace_back(root, sums.avg(d, root));
  while (!work.empty()) {
    auto [q, base] = work.back();
    work.pop_back();
    std::vector<CubeId> scan;
    if (q.level < d.depth()) {
      scan.push_back(CubeId{shift, q.level + 1, 2 * q.index});
      scan.push_back(CubeId{shift, q.level + 1, 2 * q.index + 1});
    }
    while (!scan.empty()) {
      const CubeId c = scan.back();
      scan.pop_back();
      const double a = sums.avg(d, c);
      if (a > lambda * base) {
        selected.push_back(c);
        work.emplace_back(c, a);
      } else if (c.level < d.depth()) {
        scan.push_back(CubeId{shift, c.level + 1, 2 * c.index});
        scan.push_back(CubeId{shift, c.level + 1, 2 * c.index + 1});
      }
    }
  }

  SparseFamily s(d, shift, std::move(selected));
  const auto [ok, worst] = verify_sparsity(d, s);
  if (!ok) {
    throw std::logic_error("stopping-time family failed the sparseness check, ratio " +
                           std::to_string(worst));
  }
  return s;
}

std::pair<bool, double> verify_sparsity(const DyadicDomain& d, const SparseFamily& s) {
  const auto covered = covered_masses(d, s);
  double worst = 0.0;
  for (std::size_t i = 0; i < s.cubes().size(); ++i) {
    worst = std::max(worst, covered[i] / d.cube_measure(s.cubes()[i]));
  }
  return {worst <= 0.5 + 1e-12, worst};
}

std::map<CubeId, std::vector<std::int64_t>> exceptional_sets(const DyadicDomain& d,
                                                             const SparseFamily& s) {
  if (!verify_sparsity(d, s).first) {
    throw std::logic_error("family is not sparse");
  }
  const std::int64_t n = d.size();
  const std::int64_t off = d.shift_cells(s.shift());
  std::map<CubeId, std::vector<std::int64_t>> out;
  std::vector<char> seen(std::size_t(n), 0);
  for (const CubeId& q : s.cubes()) {
    const std::int64_t w = n >> q.level;
    const std::int64_t a = q.index * w;
    std::vector<char> inner(std::size_t(w), 0);
    for (const CubeId& p : s.cubes()) {
      if (p.level <= q.level) continue;
      const std::int64_t pw = n >> p.level;
      const std::int64_t pa = p.index * pw;
      if (pa >= a && pa + pw <= a + w) {
        for (std::int64_t k = pa; k < pa + pw; ++k) inner[std::size_t(k - a)] = 1;
      }
    }
    std::vector<std::int64_t> cells;
    double e_mass = 0.0;
    for (std::int64_t k = 0; k < w; ++k) {
      if (inner[std::size_t(k)]) continue;
      const std::int64_t rel = a + k;
      const std::int64_t cell = rel + off < n ? rel + off : rel + off - n;
      if (seen[std::size_t(cell)]) {
        throw std::logic_error("exceptional sets are not disjoint");
      }
      seen[std::size_t(cell)] = 1;
      cells.push_back(cell);
      e_mass += d.cell_mass(cell);
    }
    const double mu_q = d.cube_measure(q);
    if (!(e_mass <= mu_q * (1.0 + 1e-12)) || !(mu_q <= 2.0 * e_mass * (1.0 + 1e-12))) {
      throw std::logic_error("exceptional set measure bound violated");
    }
    out.emplace(q, std::move(cells));
  }
  return out;
}

GridFunction sparse_operator(const DyadicDomain& d, const SparseFamily& s,
                             const GridFunction& f) {
  if (f.size() != d.size()) throw std::invalid_argument("grid function size mismatch");
  const std::int64_t n = d.size();
  RotatedSums sums(d, f, s.shift());
  std::vector<double> diff(std::size_t(n) + 1, 0.0);
  for (const CubeId& q : s.cubes()) {
    const std::int64_t w = n >> q.level;
    const std::int64_t a = q.index * w;
    const double avg = sums.integral(a, w) / sums.mass(a, w);
    diff[std::size_t(a)] += avg;
    diff[std::size_t(a + w)] -= avg;
  }
  GridFunction out = GridFunction::constant(d, 0.0);
  const std::int64_t off = d.shift_cells(s.shift());
  double acc = 0.0;
  for (std::int64_t rel = 0; rel < n; ++rel) {
    acc += diff[std::size_t(rel)];
    const std::int64_t cell = rel + off < n ? rel + off : rel + off - n;
    out[cell] = acc;
  }
  return out;
}

double ainfty_gamma(const DyadicDomain& d, const SparseFamily& s, const GridFunction& w) {
  for (std::int64_t i = 0; i < w.size(); ++i) {
    if (!(w[i] > 0.0)) throw std::invalid_argument("weight must be strictly positive");
  }
  const auto es = exceptional_sets(d, s);
  double gamma = 1.0;
  for (const CubeId& q : s.cubes()) {
    const double wq = d.integrate(w, q);
    double we = 0.0;
    for (std::int64_t cell : es.at(q)) we += w[cell] * d.cell_mass(cell);
    if (!(we > 0.0)) throw std::logic_error("exceptional set carries no weight mass");
    gamma = std::max(gamma, wq / we);
  }
  return gamma;
}

SparseFamily random_sparse(const DyadicDomain& d, Rng& rng, int shift) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<CubeId> cubes;
    std::vector<CubeId> work;
    const CubeId root{shift, 0, 0};
    cubes.push_back(root);
    work.push_back(root);
    while (!work.empty()) {
      const CubeId q = work.back();
      work.pop_back();
      if (q.level >= d.depth()) continue;
      for (int half = 0; half < 2; ++half) {
        if (rng.uniform() > 0.55) continue;
        // one cube somewhere strictly inside this half
        const int level = q.level + 1 + int(rng.uniform_int(d.depth() - q.level));
        const int drop = level - (q.level + 1);
        const std::int64_t base = (2 * q.index + half) << drop;
        const CubeId pick{shift, level, base + rng.uniform_int(std::int64_t(1) << drop)};
        cubes.push_back(pick);
        work.push_back(pick);
      }
    }
    SparseFamily s(d, shift, std::move(cubes));
    if (verify_sparsity(d, s).first) return s;
  }
  return SparseFamily(d, shift, {CubeId{shift, 0, 0}});
}

}  // namespace dyb
