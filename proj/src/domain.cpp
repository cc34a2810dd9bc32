#include "dyb/domain.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dyb {

namespace {

std::int64_t pow2(int e) { return std::int64_t(1) << e; }

std::int64_t mod_n(std::int64_t x, std::int64_t n) {
  const std::int64_t r = x % n;
  return r < 0 ? r + n : r;
}

}  // namespace

GridFunction::GridFunction(std::vector<double> values) : v_(std::move(values)) {
  for (double x : v_) {
    if (!std::isfinite(x) || x < 0.0) {
      throw std::invalid_argument("grid function values must be finite and >= 0");
    }
  }
}

GridFunction GridFunction::constant(const DyadicDomain& d, double c) {
  return GridFunction(std::vector<double>(std::size_t(d.size()), c));
}

GridFunction GridFunction::indicator(const DyadicDomain& d, const std::set<std::int64_t>& cells) {
  std::vector<double> v(std::size_t(d.size()), 0.0);
  for (auto c : cells) {
    if (c < 0 || c >= d.size()) throw std::out_of_range("indicator cell out of range");
    v[std::size_t(c)] = 1.0;
  }
  return GridFunction(std::move(v));
}

GridFunction GridFunction::power_singularity(const DyadicDomain& d, double x0, double alpha) {
  const std::int64_t n = d.size();
  std::vector<double> v(std::size_t(n), 0.0);
  const double h = 1.0 / double(n);
  for (std::int64_t i = 0; i < n; ++i) {
    const double c = (double(i) + 0.5) * h;
    v[std::size_t(i)] = std::pow(std::abs(c - x0), -alpha);
  }
  const std::int64_t j = std::clamp<std::int64_t>(std::int64_t(std::floor(x0 * double(n))), 0, n - 1);
  if (!std::isfinite(v[std::size_t(j)])) {
    const double cl = j > 0 ? std::abs((double(j) - 0.5) * h - x0) : 2.0;
    const double cr = j + 1 < n ? std::abs((double(j) + 1.5) * h - x0) : 2.0;
    const std::int64_t k = cl <= cr ? j - 1 : j + 1;
    v[std::size_t(j)] = v[std::size_t(k)];
  }
  return GridFunction(std::move(v));
}

GridFunction GridFunction::lognormal(const DyadicDomain& d, std::uint64_t seed, double sigma) {
  Rng rng(seed);
  std::vector<double> v(std::size_t(d.size()), 0.0);
  for (auto& x : v) x = std::exp(sigma * rng.normal());
  return GridFunction(std::move(v));
}

GridFunction GridFunction::from_csv(const DyadicDomain& d, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<double> v;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    v.push_back(std::stod(line));
  }
  if (std::int64_t(v.size()) != d.size()) {
    throw std::invalid_argument("csv has " + std::to_string(v.size()) +
                                " rows, domain has " + std::to_string(d.size()) + " cells");
  }
  return GridFunction(std::move(v));
}

double GridFunction::max() const {
  double m = 0.0;
  for (double x : v_) m = std::max(m, x);
  return m;
}

GridFunction GridFunction::pow(double e) const {
  GridFunction g = *this;
  for (auto& x : g.v_) x = std::pow(x, e);
  return g;
}

DyadicDomain::DyadicDomain(int depth, std::vector<double> cell_mass,
                           std::vector<double> shifts)
    : depth_(depth), n_(pow2(depth)), mass_(std::move(cell_mass)) {
  if (depth < 1 || depth > 30) throw std::invalid_argument("depth must be in [1,30]");
  if (std::int64_t(mass_.size()) != n_) {
    throw std::invalid_argument("need 2^depth cell masses");
  }
  prefix_.assign(std::size_t(n_) + 1, 0.0);
  for (std::int64_t i = 0; i < n_; ++i) {
    const double m = mass_[std::size_t(i)];
    if (!(m > 0.0) || !std::isfinite(m)) {
      throw std::invalid_argument("cell masses must be positive and finite");
    }
    prefix_[std::size_t(i) + 1] = prefix_[std::size_t(i)] + m;
  }
  if (shifts.empty()) throw std::invalid_argument("need at least one grid shift");
  for (double s : shifts) {
    if (!(s >= 0.0) || !(s < 1.0)) throw std::invalid_argument("shifts must lie in [0,1)");
    shift_cells_.push_back(std::int64_t(std::floor(s * double(n_))) % n_);
  }
}

DyadicDomain DyadicDomain::uniform(int depth, std::vector<double> shifts) {
  const std::int64_t n = pow2(depth);
  return DyadicDomain(depth, std::vector<double>(std::size_t(n), 1.0 / double(n)),
                      std::move(shifts));
}

bool DyadicDomain::valid(const CubeId& q) const {
  return q.shift >= 0 && q.shift < num_shifts() && q.level >= 0 && q.level <= depth_ &&
         q.index >= 0 && q.index < pow2(q.level);
}

void DyadicDomain::check(const CubeId& q) const {
  if (!valid(q)) throw std::out_of_range("invalid cube id");
}

std::pair<std::int64_t, std::int64_t> DyadicDomain::cube_cells(const CubeId& q) const {
  check(q);
  const std::int64_t w = pow2(depth_ - q.level);
  const std::int64_t start = mod_n(shift_cells_[std::size_t(q.shift)] + q.index * w, n_);
  return {start, w};
}

bool DyadicDomain::contains(const CubeId& q, std::int64_t cell) const {
  const auto [start, w] = cube_cells(q);
  return mod_n(cell - start, n_) < w;
}

bool DyadicDomain::contains(const CubeId& outer, const CubeId& inner) const {
  if (outer.shift != inner.shift || inner.level < outer.level) return false;
  const auto [os, ow] = cube_cells(outer);
  const auto [is, iw] = cube_cells(inner);
  const std::int64_t rel = mod_n(is - os, n_);
  return rel + iw <= ow;
}

double DyadicDomain::cube_measure(const CubeId& q) const {
  const auto [start, w] = cube_cells(q);
  if (start + w <= n_) {
    return prefix_[std::size_t(start + w)] - prefix_[std::size_t(start)];
  }
  return (prefix_.back() - prefix_[std::size_t(start)]) + prefix_[std::size_t(start + w - n_)];
}

double DyadicDomain::integrate(const GridFunction& f, const CubeId& q) const {
  if (f.size() != n_) throw std::invalid_argument("grid function size mismatch");
  const auto [start, w] = cube_cells(q);
  double s = 0.0;
  for (std::int64_t k = 0; k < w; ++k) {
    const std::int64_t i = start + k < n_ ? start + k : start + k - n_;
    s += f[i] * mass_[std::size_t(i)];
  }
  return s;
}

double DyadicDomain::average(const GridFunction& f, const CubeId& q) const {
  return integrate(f, q) / cube_measure(q);
}

CubeId DyadicDomain::ancestor_at(std::int64_t cell, int shift, int level) const {
  if (cell < 0 || cell >= n_) throw std::out_of_range("cell out of range");
  if (shift < 0 || shift >= num_shifts()) throw std::out_of_range("shift out of range");
  const std::int64_t rel = mod_n(cell - shift_cells_[std::size_t(shift)], n_);
  return CubeId{shift, level, rel >> (depth_ - level)};
}

std::vector<CubeId> DyadicDomain::ancestors(std::int64_t cell, int shift) const {
  std::vector<CubeId> out;
  out.reserve(std::size_t(depth_) + 1);
  for (int level = depth_; level >= 0; --level) {
    out.push_back(ancestor_at(cell, shift, level));
  }
  return out;
}

double DyadicDomain::interval_mass(double a, double b) const {
  const double len = b - a;
  if (len <= 0.0) return 0.0;
  if (len >= double(n_)) return total_mass();
  const auto cum = [&](double x) {
    const double wraps = std::floor(x / double(n_));
    double r = x - wraps * double(n_);
    r = std::clamp(r, 0.0, double(n_));
    const std::int64_t i = std::min<std::int64_t>(std::int64_t(std::floor(r)), n_ - 1);
    return wraps * total_mass() + prefix_[std::size_t(i)] +
           (r - double(i)) * mass_[std::size_t(i)];
  };
  return cum(b) - cum(a);
}

double DyadicDomain::doubling_constant() const {
  double worst = 1.0;
  for (int s = 0; s < num_shifts(); ++s) {
    for (int level = 1; level <= depth_; ++level) {
      for (std::int64_t i = 0; i < pow2(level); ++i) {
        const CubeId q{s, level, i};
        const auto [start, w] = cube_cells(q);
        const double m = double(w);
        double lo = double(start) + 0.5 * m - m;
        double hi = double(start) + 0.5 * m + m;
        if (start + w <= n_) {
          // Non-wrapped cube: translate the doubled interval back into [0,1).
          if (2.0 * m >= double(n_)) {
            lo = 0.0;
            hi = double(n_);
          } else if (lo < 0.0) {
            hi -= lo;
            lo = 0.0;
          } else if (hi > double(n_)) {
            lo -= hi - double(n_);
            hi = double(n_);
          }
        }
        worst = std::max(worst, interval_mass(lo, hi) / cube_measure(q));
      }
    }
  }
  return worst;
}

Rng::Rng(std::uint64_t seed) {
  // splitmix64 expansion of the seed into xoshiro256** state
  std::uint64_t x = seed;
  for (auto& si : s_) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    si = z ^ (z >> 31);
  }
}

std::uint64_t Rng::next_u64() {
  const auto rotl = [](std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double a, double b) { return a + (b - a) * uniform(); }

std::int64_t Rng::uniform_int(std::int64_t n) {
  return std::int64_t(uniform() * double(n)) % n;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform(), u2 = uniform();
  while (u1 <= 1e-300) u1 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  have_spare_ = true;
  spare_ = r * std::sin(6.283185307179586 * u2);
  return r * std::cos(6.283185307179586 * u2);
}

}  // namespace dyb
