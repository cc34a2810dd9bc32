#include "dyb/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dyb {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Luxemburg bisection over a contiguous slice of rotated cell data.
double luxemburg(const YoungFunction& a, const double* f, const double* m,
                 std::int64_t w, double mu_q) {
  double fmax = 0.0;
  for (std::int64_t i = 0; i < w; ++i) fmax = std::max(fmax, f[i]);
  if (fmax == 0.0) return 0.0;
  // A degenerate Young function (A(0+) > 0, probed at t = 1e-7) makes the constraint
  // unsatisfiable when A(0+) mu(supp f) >= mu(Q): the norm is infinite.
  const double a0 = a(1e-7);
  if (a0 > 0.0) {
    double supp = 0.0, mu_loop = 0.0;
    for (std::int64_t i = 0; i < w; ++i) {
      if (f[i] > 0.0) supp += m[i];
      mu_loop += m[i];
    }
    if (a0 * supp >= mu_loop) return norm_cap;
  }
  const auto phi = [&](double lambda) {
    double s = 0.0;
    for (std::int64_t i = 0; i < w; ++i) {
      if (f[i] > 0.0) s += a(f[i] / lambda) * m[i];
    }
    return s / mu_q;
  };
  double hi = fmax;
  for (int i = 0; i < 200 && phi(hi) > 1.0; ++i) {
    hi *= 2.0;
    if (hi >= norm_cap) return norm_cap;
  }
  double lo = hi;
  for (int i = 0; i < 2000; ++i) {
    const double next = lo * 0.5;
    if (phi(next) > 1.0) break;
    lo = next;
    if (lo < 1e-300) return 0.0;
  }
  lo *= 0.5;
  for (int i = 0; i < 200 && hi - lo > 1e-13 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (phi(mid) <= 1.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

struct Rotated {
  std::vector<double> f, fm, m;  // values, value*mass, mass in grid order
};

Rotated rotate(const DyadicDomain& d, const GridFunction& f, int shift) {
  const std::int64_t n = d.size();
  const std::int64_t off = d.shift_cells(shift);
  Rotated r;
  r.f.resize(std::size_t(n));
  r.fm.resize(std::size_t(n));
  r.m.resize(std::size_t(n));
  for (std::int64_t rel = 0; rel < n; ++rel) {
    const std::int64_t cell = rel + off < n ? rel + off : rel + off - n;
    r.f[std::size_t(rel)] = f[cell];
    r.m[std::size_t(rel)] = d.cell_mass(cell);
    r.fm[std::size_t(rel)] = f[cell] * d.cell_mass(cell);
  }
  return r;
}

}  // namespace

BanachSpaceSpec BanachSpaceSpec::Lr(double r) {
  if (!(r > 1.0)) throw std::invalid_argument("L^r space needs r > 1");
  BanachSpaceSpec s;
  s.r_ = r;
  return s;
}

BanachSpaceSpec BanachSpaceSpec::orlicz(YoungFunction a) {
  BanachSpaceSpec s;
  s.young_ = std::move(a);
  return s;
}

BanachSpaceSpec BanachSpaceSpec::associate() const {
  if (is_lr()) {
    if (r_ == kInf) return Lr(1.0 + 1e-12);  // L^1, kept representable
    BanachSpaceSpec s;
    s.r_ = r_ / (r_ - 1.0);
    return s;
  }
  return orlicz(young_->conjugate_table());
}

double BanachSpaceSpec::norm_on_cube(const DyadicDomain& d, const GridFunction& f,
                                     const CubeId& q) const {
  if (is_lr()) return lp_norm_on_cube(d, f, q, r_);
  return orlicz_norm_on_cube(d, f, q, *young_);
}

std::string BanachSpaceSpec::describe() const {
  if (is_lr()) return "L^" + std::to_string(r_);
  return "Orlicz(" + young_->describe() + ")";
}

double lp_norm_on_cube(const DyadicDomain& d, const GridFunction& f, const CubeId& q,
                       double p) {
  if (!(p >= 1.0)) throw std::domain_error("cube norm needs p >= 1");
  d.check(q);
  const auto [start, w] = d.cube_cells(q);
  const std::int64_t n = d.size();
  if (p == kInf) {
    double m = 0.0;
    for (std::int64_t k = 0; k < w; ++k) {
      const std::int64_t i = start + k < n ? start + k : start + k - n;
      m = std::max(m, f[i]);
    }
    return m;
  }
  double s = 0.0;
  for (std::int64_t k = 0; k < w; ++k) {
    const std::int64_t i = start + k < n ? start + k : start + k - n;
    s += std::pow(f[i], p) * d.cell_mass(i);
  }
  return std::pow(s / d.cube_measure(q), 1.0 / p);
}

double orlicz_norm_on_cube(const DyadicDomain& d, const GridFunction& f, const CubeId& q,
                           const YoungFunction& a) {
  d.check(q);
  const auto [start, w] = d.cube_cells(q);
  const std::int64_t n = d.size();
  std::vector<double> fv(std::size_t(w), 0.0), mv(std::size_t(w), 0.0);
  for (std::int64_t k = 0; k < w; ++k) {
    const std::int64_t i = start + k < n ? start + k : start + k - n;
    fv[std::size_t(k)] = f[i];
    mv[std::size_t(k)] = d.cell_mass(i);
  }
  return luxemburg(a, fv.data(), mv.data(), w, d.cube_measure(q));
}

double generalized_holder_gap(const DyadicDomain& d, const GridFunction& f,
                              const GridFunction& g, const CubeId& q,
                              const YoungFunction& a) {
  const YoungFunction conj = a.conjugate_table(2048, 1e-8, 1e8);
  const double nf = orlicz_norm_on_cube(d, f, q, a);
  const double ng = orlicz_norm_on_cube(d, g, q, conj);
  const auto [start, w] = d.cube_cells(q);
  const std::int64_t n = d.size();
  double prod = 0.0;
  for (std::int64_t k = 0; k < w; ++k) {
    const std::int64_t i = start + k < n ? start + k : start + k - n;
    prod += f[i] * g[i] * d.cell_mass(i);
  }
  prod /= d.cube_measure(q);
  return 2.0 * nf * ng - prod;
}

MaximalSpec MaximalSpec::hl() { return MaximalSpec{Kind::hl, 0.0, {}, {}}; }

MaximalSpec MaximalSpec::lq(double q) {
  if (!(q >= 1.0)) throw std::invalid_argument("M_q needs q >= 1");
  return MaximalSpec{Kind::lq, q, {}, {}};
}

MaximalSpec MaximalSpec::orlicz(YoungFunction a) {
  return MaximalSpec{Kind::orlicz, 0.0, std::move(a), {}};
}

MaximalSpec MaximalSpec::associate(BanachSpaceSpec y) {
  return MaximalSpec{Kind::associate, 0.0, {}, std::move(y)};
}

GridFunction maximal(const DyadicDomain& d, const GridFunction& f, const MaximalSpec& spec,
                     std::optional<int> only_shift) {
  if (f.size() != d.size()) throw std::invalid_argument("grid function size mismatch");
  const std::int64_t n = d.size();
  const int L = d.depth();

  // Resolve the cube norm actually used.
  const MaximalSpec* use = &spec;
  MaximalSpec realized;
  if (spec.kind == MaximalSpec::Kind::associate) {
    const BanachSpaceSpec assoc = spec.space->associate();
    realized = assoc.is_lr() ? MaximalSpec::lq(assoc.r()) : MaximalSpec::orlicz(assoc.young());
    use = &realized;
  }

  GridFunction out = GridFunction::constant(d, 0.0);
  std::vector<int> shifts;
  if (only_shift) {
    shifts.push_back(*only_shift);
  } else {
    for (int s = 0; s < d.num_shifts(); ++s) shifts.push_back(s);
  }

  std::vector<double> norms(std::size_t(n), 0.0);     // per-level cube norms
  std::vector<double> cube_sum, cube_mass, best(std::size_t(n), 0.0);
  for (int s : shifts) {
    Rotated rot = rotate(d, f, s);
    std::vector<double> pow_fm;
    if (use->kind == MaximalSpec::Kind::lq && use->q != kInf) {
      pow_fm.resize(std::size_t(n));
      for (std::int64_t i = 0; i < n; ++i) {
        pow_fm[std::size_t(i)] = std::pow(rot.f[std::size_t(i)], use->q) * rot.m[std::size_t(i)];
      }
    }
    std::fill(best.begin(), best.end(), 0.0);
    for (int level = 0; level <= L; ++level) {
      const std::int64_t w = n >> level;
      const std::int64_t count = std::int64_t(1) << level;
      for (std::int64_t i = 0; i < count; ++i) {
        const double* mp = rot.m.data() + i * w;
        double mu = 0.0;
        for (std::int64_t k = 0; k < w; ++k) mu += mp[k];
        double norm = 0.0;
        switch (use->kind) {
          case MaximalSpec::Kind::hl: {
            const double* fp = rot.fm.data() + i * w;
            double sum = 0.0;
            for (std::int64_t k = 0; k < w; ++k) sum += fp[k];
            norm = sum / mu;
            break;
          }
          case MaximalSpec::Kind::lq: {
            if (use->q == kInf) {
              const double* fp = rot.f.data() + i * w;
              for (std::int64_t k = 0; k < w; ++k) norm = std::max(norm, fp[k]);
            } else {
              const double* fp = pow_fm.data() + i * w;
              double sum = 0.0;
              for (std::int64_t k = 0; k < w; ++k) sum += fp[k];
              norm = std::pow(sum / mu, 1.0 / use->q);
            }
            break;
          }
          case MaximalSpec::Kind::orlicz:
            norm = luxemburg(*use->young, rot.f.data() + i * w, mp, w, mu);
            break;
          case MaximalSpec::Kind::associate:
            break;  // unreachable, resolved above
        }
        for (std::int64_t k = i * w; k < (i + 1) * w; ++k) {
          best[std::size_t(k)] = std::max(best[std::size_t(k)], norm);
        }
      }
    }
    const std::int64_t off = d.shift_cells(s);
    for (std::int64_t rel = 0; rel < n; ++rel) {
      const std::int64_t cell = rel + off < n ? rel + off : rel + off - n;
      out[cell] = std::max(out[cell], best[std::size_t(rel)]);
    }
  }
  return out;
}

GridFunction iterated_maximal(const DyadicDomain& d, const GridFunction& f, int k,
                              std::optional<int> only_shift) {
  if (k < 0) throw std::domain_error("iteration count must be >= 0");
  GridFunction g = f;
  for (int i = 0; i < k; ++i) g = maximal(d, g, MaximalSpec::hl(), only_shift);
  return g;
}

GridFunction maximal_indicator_closed_form(const DyadicDomain& d,
                                           const std::set<std::int64_t>& b_cells,
                                           const YoungFunction& a) {
  if (b_cells.empty()) throw std::domain_error("indicator set must be nonempty");
  const std::int64_t n = d.size();
  const int L = d.depth();
  const GridFunction chi = GridFunction::indicator(d, b_cells);
  const double a0 = a(1e-7);
  GridFunction out = GridFunction::constant(d, 0.0);
  for (int s = 0; s < d.num_shifts(); ++s) {
    Rotated rot = rotate(d, chi, s);
    std::vector<double> best(std::size_t(n), 0.0);
    for (int level = 0; level <= L; ++level) {
      const std::int64_t w = n >> level;
      const std::int64_t count = std::int64_t(1) << level;
      for (std::int64_t i = 0; i < count; ++i) {
        double mu = 0.0, mu_b = 0.0;
        for (std::int64_t k = i * w; k < (i + 1) * w; ++k) {
          mu += rot.m[std::size_t(k)];
          mu_b += rot.fm[std::size_t(k)];
        }
        if (mu_b <= 0.0) continue;
        // Same degeneracy test as the Luxemburg bisection (see luxemburg()).
        double val = a0 > 0.0 && a0 * mu_b >= mu ? norm_cap : 1.0 / a.inverse(mu / mu_b);
        if (!(val < norm_cap)) val = norm_cap;
        for (std::int64_t k = i * w; k < (i + 1) * w; ++k) {
          best[std::size_t(k)] = std::max(best[std::size_t(k)], val);
        }
      }
    }
    const std::int64_t off = d.shift_cells(s);
    for (std::int64_t rel = 0; rel < n; ++rel) {
      const std::int64_t cell = rel + off < n ? rel + off : rel + off - n;
      out[cell] = std::max(out[cell], best[std::size_t(rel)]);
    }
  }
  return out;
}

bool linfty_bound_check(const DyadicDomain& d, const GridFunction& f, const YoungFunction& a) {
  if (!a.is_normalized()) throw std::invalid_argument("needs a normalized Young function");
  const GridFunction m = maximal(d, f, MaximalSpec::orlicz(a));
  return m.max() <= f.max() + 1e-8;
}

double lp_norm_global(const DyadicDomain& d, const GridFunction& f, double p) {
  if (!(p >= 1.0)) throw std::domain_error("global norm needs p >= 1");
  double s = 0.0;
  for (std::int64_t i = 0; i < d.size(); ++i) {
    s += std::pow(f[i], p) * d.cell_mass(i);
  }
  return std::pow(s, 1.0 / p);
}

}  // namespace dyb
