#pragma once

// Orbit sampling of mu(exp(span h)) and empirical growth windows.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "cartanlab/cartan.hpp"
#include "cartanlab/error.hpp"
#include "cartanlab/subalgebra.hpp"
#include "cartanlab/verdict.hpp"

namespace cartanlab {

struct OrbitPoint {
  double t = 0;
  int direction = 0;
  ChamberPoint c;
};

struct OrbitSample {
  std::string label;
  std::uint64_t seed = 0;
  std::vector<double> t_grid;
  int directions = 0;
  std::vector<OrbitPoint> points;  // ordered by direction, then t

  std::vector<ChamberPoint> chamber_points() const {
    std::vector<ChamberPoint> out;
    for (auto& p : points) out.push_back(p.c);
    return out;
  }
};

// Geometric grid from t0 to t1 with `steps` points.
inline std::vector<double> default_t_grid(double t0 = 1, double t1 = 24, int steps = 40) {
  if (steps < 2 || t0 <= 0 || t1 <= t0) throw Error(ErrorCode::invalid_params, "t grid needs 0 < t0 < t1 and steps >= 2");
  std::vector<double> g(steps);
  const double r = std::log(t1 / t0) / (steps - 1);
  for (int i = 0; i < steps; ++i) g[i] = t0 * std::exp(r * i);
  g.back() = t1;
  return g;
}

inline long double operator_norm(const WideMatrix& m) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<WideMatrix> svd(m);
  return svd.singularValues()(0);
}

struct SampleOptions {
  int random_directions = 32;
  int products = 32;
};

// Points mu(exp(tX)) for the basis directions and random unit directions
// X in span(h), and mu(exp(tX1/2) exp(tX2/2)) for random unit pairs.
inline OrbitSample sample_orbit(const Subalgebra& h, const std::vector<double>& t_grid, std::uint64_t seed,
                                const SampleOptions& opt = {}) {
  if (h.ambient().kind != AmbientKind::so2n)
    throw Error(ErrorCode::unsupported_input, "orbit sampling is implemented for so(2,n)");
  for (std::size_t i = 0; i < t_grid.size(); ++i)
    if (t_grid[i] <= 0 || (i > 0 && t_grid[i] <= t_grid[i - 1]))
      throw Error(ErrorCode::invalid_params, "t grid must be positive and increasing");
  OrbitSample s;
  s.label = h.label();
  s.seed = seed;
  s.t_grid = t_grid;
  const Ambient amb = h.ambient();
  const int N = amb.size();
  if (h.dim() == 0) {
    for (double t : t_grid) s.points.push_back({t, 0, {0, 0}});
    s.directions = 1;
    return s;
  }
  std::vector<WideMatrix> basis;
  for (auto& b : h.basis()) basis.push_back(b.numeric());
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  auto unit = [&](WideMatrix m) {
    long double nrm = operator_norm(m);
    return nrm > 0 ? WideMatrix(m / nrm) : m;
  };
  auto random_unit = [&]() {
    WideMatrix m = WideMatrix::Zero(N, N);
    for (auto& b : basis) m += static_cast<long double>(nd(rng)) * b;
    return unit(m);
  };
  std::vector<WideMatrix> dirs;
  for (auto& b : basis) dirs.push_back(unit(b));
  for (int i = 0; i < opt.random_directions; ++i) dirs.push_back(random_unit());
  int id = 0;
  for (auto& X : dirs) {
    for (double t : t_grid) s.points.push_back({t, id, mu_so2n(GroupElement{amb, expm(WideMatrix(t * X))})});
    ++id;
  }
  for (int i = 0; i < opt.products && h.dim() >= 2; ++i) {
    WideMatrix X1 = random_unit(), X2 = random_unit();
    for (double t : t_grid) {
      WideMatrix g = expm(WideMatrix(0.5L * t * X1)) * expm(WideMatrix(0.5L * t * X2));
      s.points.push_back({t, id, mu_so2n(GroupElement{amb, g})});
    }
    ++id;
  }
  s.directions = id;
  return s;
}

// Sample of a reductive subgroup L through mu(L) ≈ mu(A_L): K exp(t a_L) K
// for a unit a_L in the split torus of L.
inline OrbitSample sample_reductive(const Subalgebra& l, const std::vector<double>& t_grid, std::uint64_t seed) {
  const int n = l.n();
  double a1 = 1, a2 = 0;
  switch (l.reductive()) {
    case ReductiveKind::so1n: a1 = 1, a2 = 0; break;
    case ReductiveKind::su1m: a1 = 1, a2 = 1; break;
    case ReductiveKind::l5: a1 = 2, a2 = 1; break;
    case ReductiveKind::none: throw Error(ErrorCode::unsupported_input, "not a reductive catalog subgroup");
  }
  double scale = std::max(a1, a2);
  OrbitSample s;
  s.label = l.label();
  s.seed = seed;
  s.t_grid = t_grid;
  s.directions = 1;
  std::mt19937_64 rng(seed);
  for (double t : t_grid) {
    auto g = random_compact(l.ambient(), rng) * torus_group_element(n, t * a1 / scale, t * a2 / scale) *
             random_compact(l.ambient(), rng);
    s.points.push_back({t, 0, mu_so2n(g)});
  }
  return s;
}

struct FitOptions {
  double t_min = 12;            // minimal u1 for a point to enter the fit
  std::size_t min_trajectories = 1;
};

namespace detail {

// Least-squares slope of y against x.
inline double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sx += x[i], sy += y[i], sxx += x[i] * x[i], sxy += x[i] * y[i];
  double den = n * sxx - sx * sx;
  if (std::fabs(den) < 1e-12) return sy / sx;
  return (n * sxy - sx * sy) / den;
}

// Fit r = a + c / log u1; returns c and the residual improvement over a constant.
inline std::pair<double, double> per_log_fit(const std::vector<double>& u1, const std::vector<double>& r) {
  std::vector<double> z;
  for (double u : u1) z.push_back(1.0 / std::log(u));
  double c = ls_slope(z, r);
  double mean = 0;
  for (double v : r) mean += v;
  mean /= r.size();
  double mz = 0;
  for (double v : z) mz += v;
  mz /= z.size();
  double res0 = 0, res1 = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    res0 += (r[i] - mean) * (r[i] - mean);
    double f = mean + c * (z[i] - mz);
    res1 += (r[i] - f) * (r[i] - f);
  }
  return {c, res0 > 0 ? 1 - res1 / res0 : 0};
}

}  // namespace detail

// Per trajectory: slope of u1+u2 against u1 over points with u1 >= t_min
// (the ratio for a single point).  p and q are the extreme slopes.
inline GrowthWindow fit_window(const OrbitSample& s, const FitOptions& opt = {}) {
  std::vector<double> slopes;
  struct Traj {
    std::vector<double> u1, r;
    double slope;
  };
  std::vector<Traj> trajs;
  for (int d = 0; d < s.directions; ++d) {
    Traj tr;
    std::vector<double> ys;
    for (auto& p : s.points)
      if (p.direction == d && p.c.u1 >= opt.t_min) {
        tr.u1.push_back(p.c.u1);
        ys.push_back(p.c.u1 + p.c.u2);
        tr.r.push_back((p.c.u1 + p.c.u2) / p.c.u1);
      }
    if (tr.u1.empty()) continue;
    tr.slope = tr.u1.size() == 1 ? tr.r[0] : detail::ls_slope(tr.u1, ys);
    trajs.push_back(std::move(tr));
  }
  if (trajs.size() < std::max<std::size_t>(1, opt.min_trajectories))
    throw Error(ErrorCode::insufficient_data, "no sampled points beyond u1 = " + std::to_string(opt.t_min));
  auto lo = std::min_element(trajs.begin(), trajs.end(), [](auto& a, auto& b) { return a.slope < b.slope; });
  auto hi = std::max_element(trajs.begin(), trajs.end(), [](auto& a, auto& b) { return a.slope < b.slope; });
  GrowthWindow w;
  w.p = std::clamp(lo->slope, 1.0, 2.0);
  w.q = std::clamp(hi->slope, 1.0, 2.0);
  w.confidence = Confidence::fitted;
  w.notes.push_back(std::to_string(trajs.size()) + " trajectories beyond u1 = " + std::to_string(opt.t_min));
  // heuristic log-correction flags: the extreme trajectory still drifts like c / log u1
  // r approaching its limit from below reads as |h|^e / log, from above as |h|^e log
  auto drift = [&](const Traj& t) {
    if (t.u1.size() < 4) return Correction::none;
    auto [c, gain] = detail::per_log_fit(t.u1, t.r);
    if (gain < 0.9 || std::fabs(c) < 0.25) return Correction::none;
    return c < 0 ? Correction::per_log : Correction::log;
  };
  w.lower = drift(*lo);
  w.upper = drift(*hi);
  if (w.lower != Correction::none || w.upper != Correction::none)
    w.notes.push_back("log-type drift detected; correction flags are heuristic");
  return w;
}

// CSV columns direction_id,t,u1,u2 with round-trip precision.
inline void write_orbit_csv(std::ostream& os, const OrbitSample& s) {
  os << "direction_id,t,u1,u2\n";
  char buf[128];
  for (auto& p : s.points) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g\n", p.direction, p.t, p.c.u1, p.c.u2);
    os << buf;
  }
}

}  // namespace cartanlab
