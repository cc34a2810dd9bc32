#include "dyb/young.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dyb {

namespace {

void require_finite_nonneg(double t, const char* what) {
  if (!std::isfinite(t) || t < 0.0) {
    throw std::domain_error(std::string(what) + " must be finite and >= 0");
  }
}

std::vector<double> default_log_grid(double lo, double hi, std::size_t n) {
  std::vector<double> g(n);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = std::exp(llo + (lhi - llo) * double(i) / double(n - 1));
  }
  return g;
}

// Adaptive Simpson on [a,b] with relative tolerance.
template <class F>
double simpson_segment(const F& f, double a, double m, double b, double fa,
                       double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm,
                        double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson_segment(f, a, lm, m, fa, flm, fm);
  const double right = simpson_segment(f, m, rm, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol * std::abs(left + right)) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, m, fa, flm, fm, left, tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, tol, depth - 1);
}

template <class F>
double integrate(const F& f, double a, double b, double tol = 1e-10) {
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = simpson_segment(f, a, m, b, fa, fm, fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

std::string to_string(BpVerdict v) {
  switch (v) {
    case BpVerdict::member: return "member";
    case BpVerdict::non_member: return "non_member";
    default: return "inconclusive";
  }
}

YoungFunction YoungFunction::power(double r) {
  if (!(r > 1.0)) throw std::invalid_argument("power family needs r > 1");
  YoungFunction y;
  y.family_ = Family::power;
  y.par0_ = r;
  return y;
}

YoungFunction YoungFunction::log_bump(double p, double delta) {
  if (!(p > 1.0)) throw std::invalid_argument("log bump needs p > 1");
  if (!(delta > 0.0)) throw std::invalid_argument("log bump needs delta > 0");
  // For p < 1 + delta the formula decreases near zero and is not a Young
  // function anywhere on [0,inf).
  if (p < 1.0 + delta - 1e-12) {
    throw std::invalid_argument("log bump needs p >= 1 + delta");
  }
  YoungFunction y;
  y.family_ = Family::log_bump;
  y.par0_ = p;
  y.par1_ = delta;
  return y;
}

YoungFunction YoungFunction::loglog_bump(double p, double delta) {
  if (!(p > 1.0)) throw std::invalid_argument("loglog bump needs p > 1");
  if (!(delta > 0.0)) throw std::invalid_argument("loglog bump needs delta > 0");
  YoungFunction y;
  y.family_ = Family::loglog_bump;
  y.par0_ = p;
  y.par1_ = delta;
  return y;
}

YoungFunction YoungFunction::table(std::vector<std::pair<double, double>> pts) {
  if (pts.empty()) throw std::invalid_argument("empty table");
  std::sort(pts.begin(), pts.end());
  if (!(pts.front().first >= 0.0)) {
    throw std::invalid_argument("table breakpoints must be >= 0");
  }
  if (pts.front().first > 0.0 || pts.front().second > 0.0) {
    if (pts.front().second < 0.0) throw std::invalid_argument("negative table value");
    pts.insert(pts.begin(), {0.0, 0.0});
  }
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i].first > pts[i - 1].first) || !(pts[i].second > pts[i - 1].second)) {
      throw std::invalid_argument("table breakpoints must be strictly increasing");
    }
  }
  // Convexity of the polyline: slopes nondecreasing.
  double prev = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double s = (pts[i].second - pts[i - 1].second) / (pts[i].first - pts[i - 1].first);
    if (s + 1e-12 * std::max(1.0, prev) < prev) {
      throw std::invalid_argument("table is not convex");
    }
    prev = std::max(prev, s);
  }
  if (pts.size() < 2) throw std::invalid_argument("table needs a positive breakpoint");
  YoungFunction y;
  y.family_ = Family::table;
  y.pts_ = std::move(pts);
  return y;
}

YoungFunction YoungFunction::table_from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::pair<double, double>> pts;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream row(line);
    double t, v;
    if (row >> t >> v) pts.emplace_back(t, v);
  }
  return table(std::move(pts));
}

double YoungFunction::raw(double t) const {
  switch (family_) {
    case Family::power:
      return std::pow(t, par0_);
    case Family::log_bump: {
      if (t == 0.0) return 0.0;
      return std::pow(t, par0_) / std::pow(std::log1p(t), 1.0 + par1_);
    }
    case Family::loglog_bump: {
      if (t == 0.0) return 0.0;
      const double l1 = std::log(std::exp(1.0) + t);
      const double l2 = std::log(std::log(std::exp(std::exp(1.0)) + t));
      return std::pow(t, par0_) / (l1 * std::pow(l2, 1.0 + par1_));
    }
    case Family::table: {
      auto it = std::lower_bound(pts_.begin(), pts_.end(), std::make_pair(t, -1.0));
      if (it == pts_.end()) {
        const auto& [t1, v1] = pts_[pts_.size() - 2];
        const auto& [t2, v2] = pts_.back();
        return v2 + (t - t2) * (v2 - v1) / (t2 - t1);
      }
      if (it->first == t) return it->second;
      if (it == pts_.begin()) return 0.0;  // t < 0 guarded by callers
      const auto& [t1, v1] = *(it - 1);
      const auto& [t2, v2] = *it;
      return v1 + (t - t1) * (v2 - v1) / (t2 - t1);
    }
  }
  return 0.0;
}

double YoungFunction::operator()(double t) const {
  require_finite_nonneg(t, "argument of a Young function");
  if (t == 0.0) return 0.0;
  return scale_ * raw(t);
}

YoungFunction YoungFunction::normalized() const {
  YoungFunction y = *this;
  const double v = (*this)(1.0);
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw std::domain_error("cannot normalize: A(1) not positive finite");
  }
  y.scale_ = scale_ / v;
  return y;
}

bool YoungFunction::is_normalized() const {
  return std::abs((*this)(1.0) - 1.0) <= 1e-12;
}

double YoungFunction::inverse(double s) const {
  require_finite_nonneg(s, "inverse argument");
  if (s == 0.0) return 0.0;
  double hi = 1.0;
  int guard = 0;
  while ((*this)(hi) < s) {
    hi *= 2.0;
    if (++guard > 4000) throw std::domain_error("inverse bracket failed");
  }
  double lo = 0.0;
  for (int i = 0; i < 200 && hi - lo > 1e-12 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((*this)(mid) >= s) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double YoungFunction::conjugate(double s) const {
  require_finite_nonneg(s, "conjugate argument");
  if (s == 0.0) return 0.0;
  if (family_ == Family::power) {
    const double r = par0_, c = scale_;
    const double tstar = std::pow(s / (c * r), 1.0 / (r - 1.0));
    return s * tstar - c * std::pow(tstar, r);
  }
  const auto obj = [&](double t) { return s * t - (*this)(t); };
  // Grow the bracket until the objective starts decreasing.
  double t = 1.0;
  int guard = 0;
  while (obj(2.0 * t) > obj(t)) {
    t *= 2.0;
    if (++guard >= 200) {
      throw std::domain_error("conjugate is unbounded at s=" + std::to_string(s));
    }
  }
  double lo = 0.0, hi = 2.0 * t;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = obj(x1), f2 = obj(x2);
  while (hi - lo > 1e-10 * std::max(1.0, hi)) {
    if (f1 < f2) {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + gr * (hi - lo); f2 = obj(x2);
    } else {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - gr * (hi - lo); f1 = obj(x1);
    }
  }
  return std::max(0.0, std::max(f1, f2));
}

double YoungFunction::young_gap(double a, double b) const {
  require_finite_nonneg(a, "a");
  require_finite_nonneg(b, "b");
  return (*this)(a) + conjugate(b) - a * b;
}

std::pair<bool, double> YoungFunction::doubling_ratio(
    std::span<const double> t_grid, double ceiling) const {
  std::vector<double> fallback;
  if (t_grid.empty()) {
    fallback = default_log_grid(1e-6, 1e6, 241);
    t_grid = fallback;
  }
  double worst = 0.0;
  for (double t : t_grid) {
    if (!(t > 0.0)) throw std::domain_error("doubling grid must be positive");
    const double a = (*this)(t);
    if (a > 0.0) worst = std::max(worst, (*this)(2.0 * t) / a);
  }
  return {worst <= ceiling, worst};
}

bool YoungFunction::ratio_increasing(std::span<const double> t_grid) const {
  std::vector<double> fallback;
  if (t_grid.empty()) {
    fallback = default_log_grid(1e-6, 1e6, 241);
    t_grid = fallback;
  }
  double prev = -std::numeric_limits<double>::infinity();
  for (double t : t_grid) {
    const double q = (*this)(t) / t;
    if (q < prev * (1.0 - 1e-10)) return false;
    prev = std::max(prev, q);
  }
  return true;
}

BpTestResult YoungFunction::bp_test(double p) const {
  if (!(p > 1.0)) throw std::domain_error("bp_test needs p > 1");
  BpTestResult res;

  // Analytic verdicts for the closed families.  Scaling by a constant does
  // not change membership.
  switch (family_) {
    case Family::power:
      res.analytic = par0_ < p - 1e-12 ? BpVerdict::member : BpVerdict::non_member;
      break;
    case Family::log_bump:
    case Family::loglog_bump:
      if (par0_ < p + 1e-9) {
        res.analytic = BpVerdict::member;  // at p0 == p the log factor converges
      } else {
        res.analytic = BpVerdict::non_member;
      }
      break;
    case Family::table:
      break;
  }

  // Ladder of truncations T = 10^k; integrate in u = ln t.
  const auto integrand = [&](double u) {
    const double t = std::exp(u);
    return (*this)(t) * std::exp(-p * u);
  };
  const double ln10 = std::log(10.0);
  std::vector<double> increments;
  double total = 0.0;
  bool quad_ok = true;
  for (int k = 1; k <= 12; ++k) {
    const double d = integrate(integrand, (k - 1) * ln10, k * ln10, 1e-11);
    if (!std::isfinite(d) || d < 0.0) {
      quad_ok = false;
      break;
    }
    increments.push_back(d);
    total += d;
    res.tail_integrals.push_back(total);
  }

  if (!quad_ok || increments.size() < 8) {
    res.numeric = BpVerdict::inconclusive;
  } else {
    std::vector<double> ratios;
    for (std::size_t k = increments.size() - 6; k < increments.size(); ++k) {
      const double prev = increments[k - 1];
      if (prev <= 1e-280) {
        ratios.push_back(0.0);
      } else {
        ratios.push_back(increments[k] / prev);
      }
    }
    const double rmax = *std::max_element(ratios.begin(), ratios.end());
    const double rmin = *std::min_element(ratios.begin(), ratios.end());
    if (rmax <= 0.97) {
      res.numeric = BpVerdict::member;
    } else if (rmin >= 0.995) {
      res.numeric = BpVerdict::non_member;
    } else {
      res.numeric = BpVerdict::inconclusive;
    }
  }

  res.verdict = res.analytic.value_or(res.numeric);
  return res;
}

YoungFunction YoungFunction::conjugate_table(std::size_t points, double t_lo,
                                             double t_hi) const {
  if (points < 8) throw std::invalid_argument("conjugate table too small");
  std::vector<std::pair<double, double>> pts;
  pts.reserve(points);
  const auto grid = default_log_grid(t_lo, t_hi, points);
  double prev = 0.0;
  for (double s : grid) {
    const double v = conjugate(s);
    if (v > prev * (1.0 + 1e-12) && v > 0.0) {
      pts.emplace_back(s, v);
      prev = v;
    }
  }
  if (pts.empty()) {
    throw std::domain_error("conjugate vanishes on the whole sampling range");
  }
  return table(std::move(pts));
}

std::string YoungFunction::describe() const {
  std::ostringstream out;
  switch (family_) {
    case Family::power: out << "power(r=" << par0_ << ")"; break;
    case Family::log_bump: out << "log_bump(p=" << par0_ << ",delta=" << par1_ << ")"; break;
    case Family::loglog_bump: out << "loglog_bump(p=" << par0_ << ",delta=" << par1_ << ")"; break;
    case Family::table: out << "table(" << pts_.size() << " pts)"; break;
  }
  if (scale_ != 1.0) out << "*" << scale_;
  return out.str();
}

}  // namespace dyb
