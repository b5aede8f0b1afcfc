#pragma once

// Properness evidence: the window-based prediction, the empirical separation
// of two mu-images, and the SL(3,R) B+ crossing and perturbation constant.

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "cartanlab/cartan.hpp"
#include "cartanlab/classify.hpp"
#include "cartanlab/growth.hpp"
#include "cartanlab/verdict.hpp"

namespace cartanlab {

enum class Prediction { proper, not_proper, unknown };

inline std::string prediction_name(Prediction p) {
  switch (p) {
    case Prediction::proper: return "proper";
    case Prediction::not_proper: return "not-proper";
    case Prediction::unknown: return "unknown";
  }
  return "?";
}

namespace detail {

inline bool slower_than_power(Correction c) { return c == Correction::per_log || c == Correction::per_log2; }
inline bool faster_than_power(Correction c) { return c == Correction::log || c == Correction::log2; }

}  // namespace detail

// Disjoint exponent intervals: proper.  Overlap along a positive-length
// interval, or two identical single rates sharing a bare side: not proper.
// A single shared endpoint is unknown unless the log corrections at that
// endpoint push the two regions apart.
inline Prediction proper_pair_predicted(const GrowthWindow& a, const GrowthWindow& b) {
  if (a.confidence != Confidence::exact || b.confidence != Confidence::exact || !a.p_exact || !b.p_exact)
    return Prediction::unknown;
  const Q6 &p1 = *a.p_exact, &q1 = *a.q_exact, &p2 = *b.p_exact, &q2 = *b.q_exact;
  if (q1 < p2 || q2 < p1) return Prediction::proper;
  Q6 lo = p1 > p2 ? p1 : p2;
  Q6 hi = q1 < q2 ? q1 : q2;
  if (lo < hi) return Prediction::not_proper;
  // single common exponent e = lo = hi; a point window strictly inside the other says nothing
  if ((p1 < lo && lo < q1) || (p2 < lo && lo < q2)) return Prediction::unknown;
  const bool pa = p1 == q1, pb = p2 == q2;
  if (pa && pb) {
    if (a.upper == b.upper || a.lower == b.lower) return Prediction::not_proper;
    return Prediction::unknown;
  }
  // w1 lies below w2 and they meet at e
  const GrowthWindow& below = (q1 == lo && p2 == lo && !(pa && p1 == q2)) ? a : b;
  const GrowthWindow& above = (&below == &a) ? b : a;
  if (detail::slower_than_power(below.upper) && !detail::slower_than_power(above.lower)) return Prediction::proper;
  if (detail::faster_than_power(above.lower) && !detail::faster_than_power(below.upper)) return Prediction::proper;
  return Prediction::unknown;
}

inline Prediction proper_pair_predicted(const TypeVerdict& v1, const TypeVerdict& v2) {
  return proper_pair_predicted(predicted_window(v1), predicted_window(v2));
}

// Exact window of a named reductive subgroup (mu(L) ≈ mu(A_L)).
inline GrowthWindow reductive_window(ReductiveKind k) {
  switch (k) {
    case ReductiveKind::so1n: return exact_window(1, 1);
    case ReductiveKind::su1m: return exact_window(2, 2);
    case ReductiveKind::l5: return exact_window(Q6::ratio(3, 2), Q6::ratio(3, 2));
    case ReductiveKind::none: break;
  }
  throw Error(ErrorCode::no_prediction, "not a reductive catalog subgroup");
}

// Window of any catalog subalgebra of so(2,n): reductive table or classification.
inline GrowthWindow window_of(const Subalgebra& h) {
  if (h.reductive() != ReductiveKind::none) return reductive_window(h.reductive());
  if (h.in_an() && static_cast<int>(h.dim()) == 2 * h.n()) return exact_window(1, 2);
  return predicted_window(classify_type(h));
}

struct AnnulusDistance {
  double radius = 0;
  double distance = 0;
  std::size_t left_points = 0, right_points = 0;
};

struct PropernessReport {
  std::string left, right;
  Prediction predicted = Prediction::unknown;
  double slope = 0;
  double intercept = 0;
  std::vector<AnnulusDistance> annuli;
  std::size_t left_samples = 0, right_samples = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> notes;
};

inline std::vector<double> default_radii() { return {2, 3, 4, 5, 6, 8, 10, 12}; }

// Distance between the two point sets inside each annulus R <= |u| < 2R,
// then the least-squares slope of distance against R.
inline PropernessReport cone_separation(const OrbitSample& left, const OrbitSample& right,
                                        const std::vector<double>& radii = default_radii()) {
  PropernessReport rep;
  rep.left = left.label;
  rep.right = right.label;
  rep.left_samples = left.points.size();
  rep.right_samples = right.points.size();
  rep.seed = left.seed;
  auto rad = [](const ChamberPoint& c) { return std::hypot(c.u1, c.u2); };
  std::vector<double> xs, ys;
  for (double R : radii) {
    std::vector<ChamberPoint> L, Rt;
    for (auto& p : left.points)
      if (rad(p.c) >= R && rad(p.c) < 2 * R) L.push_back(p.c);
    for (auto& p : right.points)
      if (rad(p.c) >= R && rad(p.c) < 2 * R) Rt.push_back(p.c);
    if (L.empty() || Rt.empty())
      throw Error(ErrorCode::insufficient_data, "annulus [" + std::to_string(R) + ", " + std::to_string(2 * R) + ") is empty");
    double d = std::numeric_limits<double>::infinity();
    for (auto& a : L)
      for (auto& b : Rt) d = std::min(d, std::hypot(a.u1 - b.u1, a.u2 - b.u2));
    rep.annuli.push_back({R, d, L.size(), Rt.size()});
    xs.push_back(R);
    ys.push_back(d);
  }
  if (xs.size() >= 2) {
    rep.slope = detail::ls_slope(xs, ys);
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) mx += xs[i], my += ys[i];
    rep.intercept = (my - rep.slope * mx) / xs.size();
  } else if (xs.size() == 1) {
    rep.slope = ys[0] / xs[0];
  }
  if (rep.slope > 0.05 && rep.slope < 0.3) rep.notes.push_back("slope between 0.05 and 0.3: evidence inconclusive");
  return rep;
}

// Orbit sample of any so(2,n) catalog subgroup.
inline OrbitSample sample_any(const Subalgebra& h, const std::vector<double>& grid, std::uint64_t seed,
                              const SampleOptions& opt = {}) {
  if (h.reductive() != ReductiveKind::none) return sample_reductive(h, grid, seed);
  return sample_orbit(h, grid, seed, opt);
}

// ---------------------------------------------------------------------------
// SL(3,R): the path exp(t (cos(pi s) X + sin(pi s) Y)), s in [0,1], joins
// h_t = exp(tX) to h_t^{-1} inside exp(span h).

struct CrossingPoint {
  double t = 0;
  double min_distance = 0;
  double argmin_s = 0;
};

struct CrossingReport {
  std::string label;
  int d = 0;
  std::vector<CrossingPoint> points;
};

inline CrossingReport sl3_bplus_crossing(const Subalgebra& h, double t_max, int steps, int s_samples = 721) {
  if (h.ambient().kind != AmbientKind::sl3) throw Error(ErrorCode::ambient_mismatch, "B+ crossing needs an sl(3) subalgebra");
  if (steps < 1 || t_max <= 0) throw Error(ErrorCode::invalid_params, "need t_max > 0 and steps >= 1");
  auto d = sl3_characteristic_index(h);
  if (!d || *d < 2) throw Error(ErrorCode::hypothesis_violated, "B+ crossing needs d(H) >= 2");
  // X: first non-compact basis element; Y: a compact element if h has one, else the next basis element
  const auto& B = h.basis();
  auto skew = [](const ExactMatrix& m) { return m.transpose() == -m; };
  int ix = -1, iy = -1;
  for (std::size_t i = 0; i < B.size() && ix < 0; ++i)
    if (!skew(B[i].matrix())) ix = static_cast<int>(i);
  ExactMatrix Ysum(3, 3);
  for (auto& b : B) {
    ExactMatrix k = b.matrix() - b.matrix().transpose();
    if (h.contains(make_element(h.ambient(), k)) && !k.is_zero()) {
      Ysum = k;
      break;
    }
  }
  WideMatrix X = B[ix].numeric(), Y;
  if (!Ysum.is_zero()) {
    Y = make_element(h.ambient(), Ysum).numeric();
  } else {
    for (std::size_t i = 0; i < B.size(); ++i)
      if (static_cast<int>(i) != ix) {
        iy = static_cast<int>(i);
        break;
      }
    Y = B[iy].numeric();
  }
  X /= operator_norm(X);
  Y /= operator_norm(Y);
  CrossingReport rep;
  rep.label = h.label();
  rep.d = *d;
  const long double pi = std::acos(-1.0L);
  auto dist = [&](long double t, long double s) {
    WideMatrix Z = t * (std::cos(pi * s) * X + std::sin(pi * s) * Y);
    return bplus_distance(mu_sl3(GroupElement{h.ambient(), expm(Z)}));
  };
  for (int k = 1; k <= steps; ++k) {
    double t = t_max * k / steps;
    double best = std::numeric_limits<double>::infinity(), bs = 0;
    for (int j = 0; j < s_samples; ++j) {
      double s = static_cast<double>(j) / (s_samples - 1);
      double v = dist(t, s);
      if (v < best) best = v, bs = s;
    }
    // golden-section refinement around the grid minimum
    double a = std::max(0.0, bs - 1.0 / (s_samples - 1)), b = std::min(1.0, bs + 1.0 / (s_samples - 1));
    const double gr = (std::sqrt(5.0) - 1) / 2;
    for (int it = 0; it < 60; ++it) {
      double c = b - gr * (b - a), e = a + gr * (b - a);
      if (dist(t, c) < dist(t, e)) b = e;
      else a = c;
    }
    double m = (a + b) / 2, vm = dist(t, m);
    if (vm < best) best = vm, bs = m;
    rep.points.push_back({t, best, bs});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Perturbation constant: |mu(g)^{-1} mu(gh)| and |mu(g)^{-1} mu(hg)| against
// max(|h|, |h^{-1}|).

struct AppendixReport {
  double g_scale = 0;
  double constant = 0;
  std::size_t samples = 0;
};

namespace detail {

inline std::vector<double> full_log_diagonal(const GroupElement& g) {
  if (g.ambient.kind == AmbientKind::sl3) {
    auto c = mu_sl3(g);
    return {c.v1, c.v2, c.v3};
  }
  auto c = mu_so2n(g);
  return {c.u1, c.u2, -c.u2, -c.u1};
}

}  // namespace detail

inline AppendixReport appendix_constant(const Ambient& amb, int n_samples, double g_scale, std::uint64_t seed) {
  if (n_samples < 1 || g_scale < 1) throw Error(ErrorCode::invalid_params, "need n_samples >= 1 and g_scale >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  const double L = std::log(g_scale);
  auto diagonal = [&](double top) {
    if (amb.kind == AmbientKind::sl3) {
      double a = top, b = ud(rng) * top;  // v1 = a, v3 = -b, v2 = b - a ordering by sort in mu
      return sl3_diagonal(a, b - a, -b);
    }
    double a = top, b = ud(rng) * top;
    return torus_group_element(amb.n, a, b);
  };
  AppendixReport rep;
  rep.g_scale = g_scale;
  rep.samples = static_cast<std::size_t>(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    GroupElement g = random_compact(amb, rng) * diagonal(L * ud(rng)) * random_compact(amb, rng);
    GroupElement h = random_compact(amb, rng) * diagonal(std::log(4.0) * ud(rng)) * random_compact(amb, rng);
    auto mg = detail::full_log_diagonal(g);
    auto mgh = detail::full_log_diagonal(g * h);
    auto mhg = detail::full_log_diagonal(h * g);
    double num = 0;
    for (std::size_t k = 0; k < mg.size(); ++k)
      num = std::max({num, mgh[k] - mg[k], mhg[k] - mg[k]});
    double hn = static_cast<double>(std::max(operator_norm(h.g), operator_norm(inverse(h).g)));
    rep.constant = std::max(rep.constant, std::exp(num) / hn);
  }
  return rep;
}

}  // namespace cartanlab
