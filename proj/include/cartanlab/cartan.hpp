#pragma once

// Cartan projection mu for SO(2,n) and SL(3,R), chamber coordinates and the
// SL(3,R) opposition geometry.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include <Eigen/SVD>

#include "cartanlab/error.hpp"
#include "cartanlab/expm.hpp"
#include "cartanlab/lie_core.hpp"

namespace cartanlab {

inline constexpr double kWallSlack = 1e-9;
inline constexpr double kPatternTol = 1e-7;

struct ChamberPoint {
  double u1 = 0, u2 = 0;
};

struct SL3ChamberPoint {
  double v1 = 0, v2 = 0, v3 = 0;
};

namespace detail {

inline WideVector singular_values(const WideMatrix& g) {
  Eigen::JacobiSVD<WideMatrix> svd(g);
  return svd.singularValues();  // descending
}

}  // namespace detail

// In the signature-diagonal basis (an orthogonal change of basis, so the
// singular values are unchanged) K is O(2)xO(n) and mu is read off the SVD.
// The small singular values carry absolute error ~ eps*sigma1; the pairing
// check accounts for that.
inline ChamberPoint mu_so2n(const GroupElement& g, double tol = kPatternTol) {
  if (g.ambient.kind != AmbientKind::so2n) throw Error(ErrorCode::ambient_mismatch, "mu_so2n needs an SO(2,n) element");
  const long N = g.g.rows();
  WideVector s = detail::singular_values(g.g);
  const long double eps = std::numeric_limits<long double>::epsilon();
  for (long i = 0; i < N / 2; ++i) {
    long double prod = s(i) * s(N - 1 - i);
    long double slack = tol + 64 * eps * s(0) * s(i) * N;
    if (std::fabs(prod - 1) > slack)
      throw Error(ErrorCode::not_in_group, "singular values do not pair as {sigma, 1/sigma}");
  }
  for (long i = 2; i < N - 2; ++i)
    if (std::fabs(s(i) - 1) > tol + 64 * eps * s(0) * N)
      throw Error(ErrorCode::not_in_group, "middle singular values differ from 1");
  ChamberPoint c{static_cast<double>(std::log(s(0))), static_cast<double>(std::log(s(1)))};
  if (c.u2 < 0) {
    if (c.u2 < -kWallSlack - tol) throw Error(ErrorCode::not_in_group, "second singular value below 1");
    c.u2 = 0;
  }
  return c;
}

inline SL3ChamberPoint mu_sl3(const GroupElement& g) {
  if (g.ambient.kind != AmbientKind::sl3) throw Error(ErrorCode::ambient_mismatch, "mu_sl3 needs an SL(3,R) element");
  WideVector s = detail::singular_values(g.g);
  if (std::fabs(s(0) * s(1) * s(2) - 1) > kPatternTol * std::max<long double>(1, s(0)))
    throw Error(ErrorCode::not_in_group, "determinant differs from 1");
  SL3ChamberPoint c{static_cast<double>(std::log(s(0))), static_cast<double>(std::log(s(1))),
                    static_cast<double>(std::log(s(2)))};
  double shift = (c.v1 + c.v2 + c.v3) / 3;  // remove rounding drift off the trace-zero plane
  c.v1 -= shift, c.v2 -= shift, c.v3 -= shift;
  return c;
}

// log of the operator norm of a ^ a for a in A+.
inline double rho_norm(const ChamberPoint& c) { return c.u1 + c.u2; }

inline SL3ChamberPoint opposition_involution(const SL3ChamberPoint& c) { return {-c.v3, -c.v2, -c.v1}; }

// Distance to the ray {(s, 0, -s) : s >= 0}.
inline double bplus_distance(const SL3ChamberPoint& c) {
  double s = std::max(0.0, (c.v1 - c.v3) / 2);
  double d1 = c.v1 - s, d2 = c.v2, d3 = c.v3 + s;
  return std::sqrt(d1 * d1 + d2 * d2 + d3 * d3);
}

// Operator norm of the diagonal matrix exp of the chamber point.
inline double diag_norm_log(const ChamberPoint& c) { return std::max(std::fabs(c.u1), std::fabs(c.u2)); }

// ---------------------------------------------------------------------------
// Sector coverage test

enum class CDSResult { fills, thin, inconclusive };

inline std::string cds_name(CDSResult r) {
  switch (r) {
    case CDSResult::fills: return "fills";
    case CDSResult::thin: return "thin";
    case CDSResult::inconclusive: return "inconclusive";
  }
  return "?";
}

struct CDSOptions {
  int bins = 4;           // partition of u2/u1 in [0,1]
  double r_min = 2;       // first dyadic annulus [r_min, 2 r_min)
  std::size_t min_points = 16;
};

inline CDSResult cds_criterion(const std::vector<ChamberPoint>& pts, const CDSOptions& opt = {}) {
  if (pts.size() < opt.min_points)
    throw Error(ErrorCode::insufficient_data, "cds_criterion needs at least " + std::to_string(opt.min_points) + " points");
  double rmax = 0;
  for (auto& p : pts) rmax = std::max(rmax, p.u1);
  // only annuli [r_min 2^j, r_min 2^(j+1)) lying inside the sampled horizon count
  int annuli = rmax >= 2 * opt.r_min ? static_cast<int>(std::floor(std::log2(rmax / opt.r_min) + 1e-12)) : 0;
  if (annuli < 1) throw Error(ErrorCode::insufficient_data, "sampling horizon does not cover one dyadic annulus");
  std::vector<std::vector<bool>> hit(annuli, std::vector<bool>(opt.bins, false));
  for (auto& p : pts) {
    if (p.u1 < opt.r_min) continue;
    int a = static_cast<int>(std::floor(std::log2(p.u1 / opt.r_min)));
    if (a >= annuli) continue;
    double r = std::clamp(p.u2 / p.u1, 0.0, 1.0);
    int b = std::min(opt.bins - 1, static_cast<int>(r * opt.bins));
    hit[a][b] = true;
  }
  bool all = true;
  for (auto& row : hit)
    for (bool h : row) all = all && h;
  if (all) return CDSResult::fills;
  // a bin missed in each of the outermost two annuli
  int from = std::max(0, annuli - 2);
  for (int b = 0; b < opt.bins; ++b) {
    bool empty = true;
    for (int a = from; a < annuli; ++a) empty = empty && !hit[a][b];
    if (empty) return CDSResult::thin;
  }
  return CDSResult::inconclusive;
}

// ---------------------------------------------------------------------------
// Random elements of the maximal compact subgroup

// exp of a random skew-symmetric element of the Lie algebra (for so(2,n):
// X - X^T with X = Q S, S skew, which is in so(2,n) and in k).
inline GroupElement random_compact(const Ambient& amb, std::mt19937_64& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  const int N = amb.size();
  WideMatrix S = WideMatrix::Zero(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      S(i, j) = nd(rng);
      S(j, i) = -S(i, j);
    }
  if (amb.kind == AmbientKind::sl3) return GroupElement{amb, expm(S)};
  auto f = form_matrix(amb.n);
  WideMatrix Q(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) Q(i, j) = f.Q(i, j).to_long_double();
  WideMatrix X = Q * S;
  WideMatrix K = 0.5L * (X - X.transpose());
  return GroupElement{amb, expm(K)};
}

// exp of the a-element (t1, t2) of so(2,n).
inline GroupElement torus_group_element(int n, double t1, double t2) {
  const int N = n + 2;
  WideMatrix d = WideMatrix::Identity(N, N);
  d(0, 0) = std::exp(static_cast<long double>(t1));
  d(1, 1) = std::exp(static_cast<long double>(t2));
  d(N - 2, N - 2) = std::exp(static_cast<long double>(-t2));
  d(N - 1, N - 1) = std::exp(static_cast<long double>(-t1));
  return GroupElement{so2n_ambient(n), d};
}

inline GroupElement sl3_diagonal(double v1, double v2, double v3) {
  WideMatrix d = WideMatrix::Zero(3, 3);
  d(0, 0) = std::exp(static_cast<long double>(v1));
  d(1, 1) = std::exp(static_cast<long double>(v2));
  d(2, 2) = std::exp(static_cast<long double>(v3));
  return GroupElement{sl3_ambient(), d};
}

inline GroupElement inverse(const GroupElement& g) { return GroupElement{g.ambient, g.g.inverse()}; }

}  // namespace cartanlab
