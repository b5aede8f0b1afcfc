#pragma once

// Structural classification of subalgebras of a+n in so(2,n), recognition of
// orthogonal and unitary types, and the compact Clifford-Klein form verdict.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "cartanlab/catalog.hpp"
#include "cartanlab/exact.hpp"
#include "cartanlab/lie_core.hpp"
#include "cartanlab/subalgebra.hpp"
#include "cartanlab/verdict.hpp"
#include "cartanlab/windows.hpp"

namespace cartanlab {

// ---------------------------------------------------------------------------
// Splitting h into torus and nilpotent parts

struct Split {
  int n = 0;
  std::vector<ExactVector> rows;   // coordinates of the basis of h
  std::vector<ExactVector> nil;    // basis of h∩n
  std::vector<ExactVector> in_a;   // basis of h∩a
  int torus_dim = 0;               // dim of the projection of h to a
  std::optional<ExactVector> x0;   // an element with nonzero torus part (torus_dim == 1)
  bool semidirect = false;
  bool compatible = false;
};

namespace detail {

inline ExactVector combine(const std::vector<ExactVector>& rows, const ExactVector& coef, std::size_t width) {
  ExactVector v(width, Q6(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (coef[i].is_zero()) continue;
    for (std::size_t j = 0; j < width; ++j)
      if (!rows[i][j].is_zero()) v[j] += coef[i] * rows[i][j];
  }
  return v;
}

// Basis of the elements of span(rows) whose entries vanish on `zero_idx`.
inline std::vector<ExactVector> sub_where_zero(const std::vector<ExactVector>& rows, const std::vector<int>& zero_idx,
                                               std::size_t width) {
  if (rows.empty()) return {};
  if (zero_idx.empty()) return row_basis(rows, width);
  ExactMatrix m(zero_idx.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t r = 0; r < zero_idx.size(); ++r) m(r, i) = rows[i][zero_idx[r]];
  std::vector<ExactVector> out;
  for (auto& c : nullspace(m)) out.push_back(combine(rows, c, width));
  return row_basis(out, width);
}

inline std::vector<int> nil_indices(int n) {
  std::vector<int> idx;
  for (int i = 2; i < 2 * n; ++i) idx.push_back(i);
  return idx;
}

inline std::vector<int> centralized_indices(int n, const Q6& t1, const Q6& t2) {
  std::vector<int> idx;
  for (Root r : kPositiveRoots)
    if (root_value(r, t1, t2).is_zero())
      for (int i : root_space_indices(r, n)) idx.push_back(i);
  return idx;
}

inline bool all_zero_at(const std::vector<ExactVector>& rows, const std::vector<int>& idx) {
  for (auto& r : rows)
    for (int i : idx)
      if (!r[i].is_zero()) return false;
  return true;
}

inline std::vector<int> complement_indices(int n, const std::vector<int>& keep) {
  std::vector<int> out;
  for (int i = 0; i < 2 * n; ++i)
    if (std::find(keep.begin(), keep.end(), i) == keep.end()) out.push_back(i);
  return out;
}

inline std::vector<int> indices_of(int n, std::initializer_list<Root> roots) {
  std::vector<int> idx;
  for (Root r : roots)
    for (int i : root_space_indices(r, n)) idx.push_back(i);
  return idx;
}

// span(rows) ⊆ sum of the listed root spaces
inline bool within(const std::vector<ExactVector>& rows, int n, std::initializer_list<Root> roots) {
  return all_zero_at(rows, complement_indices(n, indices_of(n, roots)));
}

// dim(span(rows) ∩ u_r)
inline std::size_t meet_dim(const std::vector<ExactVector>& rows, int n, Root r) {
  return sub_where_zero(rows, complement_indices(n, root_space_indices(r, n)), 2 * n).size();
}

}  // namespace detail

inline Split split_and_compatibility(const Subalgebra& h) {
  if (h.ambient().kind != AmbientKind::so2n || !h.in_an())
    throw Error(ErrorCode::unsupported_input, "subalgebra is not contained in a+n of so(2,n)");
  Split s;
  s.n = h.n();
  const int n = s.n;
  const std::size_t w = 2 * n;
  s.rows = h.coord_rows();
  s.nil = detail::sub_where_zero(s.rows, {0, 1}, w);
  s.in_a = detail::sub_where_zero(s.rows, detail::nil_indices(n), w);
  s.torus_dim = static_cast<int>(s.rows.size() - s.nil.size());
  s.semidirect = static_cast<int>(s.in_a.size()) == s.torus_dim;
  if (s.torus_dim == 0) {
    s.compatible = true;
    return s;
  }
  if (s.torus_dim == 1) {
    for (auto& r : s.rows)
      if (!r[0].is_zero() || !r[1].is_zero()) {
        s.x0 = r;
        break;
      }
    // x0 - tau must lie in h∩n + c_n(tau)
    const ExactVector& x0 = *s.x0;
    ExactVector z = x0;
    z[0] = z[1] = 0;
    std::vector<ExactVector> gens = s.nil;
    for (int i : detail::centralized_indices(n, x0[0], x0[1])) gens.push_back(unit_vector(2 * n, i));
    s.compatible = gens.empty() ? std::all_of(z.begin(), z.end(), [](const Q6& v) { return v.is_zero(); })
                                : in_span(gens, z);
    return s;
  }
  s.compatible = s.semidirect;
  return s;
}

// ---------------------------------------------------------------------------
// Conjugating into compatible position

struct NormalizeResult {
  Subalgebra h;
  bool changed = false;
  bool unresolved = false;
  ExactMatrix g;  // h_out = g h_in g^{-1}
};

namespace detail {

// One graded pass; returns false if some level has no solution.
inline bool normalize_pass(const Subalgebra& h, bool allow_centralizer, NormalizeResult& out) {
  const int n = h.n();
  const std::size_t w = 2 * n;
  Subalgebra cur = h;
  ExactMatrix gtot = ExactMatrix::identity(n + 2);
  for (int k = 1; k <= 3; ++k) {
    Split s = split_and_compatibility(cur);
    const ExactVector& x0 = *s.x0;
    const Q6 t1 = x0[0], t2 = x0[1];
    // unknowns: Z (height-k, non-centralized), u (coefficients on h∩n), c (centralized coords)
    std::vector<int> zidx, cidx;
    for (Root r : kPositiveRoots) {
      Q6 rv = root_value(r, t1, t2);
      for (int i : root_space_indices(r, n)) {
        if (rv.is_zero()) {
          if (allow_centralizer) cidx.push_back(i);
        } else if (root_height(r) == k) {
          zidx.push_back(i);
        }
      }
    }
    std::vector<int> eqs;
    for (int i = 2; i < 2 * n; ++i) {
      auto r = root_of_index(i, n);
      if (r && root_height(*r) <= k) eqs.push_back(i);
    }
    const std::size_t nz = zidx.size(), nu = s.nil.size(), nc = cidx.size();
    ExactMatrix A(eqs.size(), nz + nu + nc + 1);
    for (std::size_t e = 0; e < eqs.size(); ++e) {
      int j = eqs[e];
      for (std::size_t a = 0; a < nz; ++a)
        if (zidx[a] == j) A(e, a) = root_value(*root_of_index(j, n), t1, t2);
      for (std::size_t b = 0; b < nu; ++b) A(e, nz + b) = s.nil[b][j];
      for (std::size_t c = 0; c < nc; ++c)
        if (cidx[c] == j) A(e, nz + nu + c) = 1;
      A(e, nz + nu + nc) = x0[j];
    }
    auto piv = rref(A);
    if (!piv.empty() && piv.back() == nz + nu + nc) return false;
    ExactVector Z(w, Q6(0));
    bool any = false;
    for (std::size_t r = 0; r < piv.size(); ++r)
      if (piv[r] < nz) {
        Z[zidx[piv[r]]] = A(r, nz + nu + nc);
        any = any || !Z[zidx[piv[r]]].is_zero();
      }
    if (!any) continue;
    ExactMatrix zm = an_matrix(n, ANCoords::from_flat(n, Z));
    ExactMatrix g = exp_nilpotent(zm), gi = exp_nilpotent(-zm);
    cur = cur.conjugate(g, gi);
    gtot = g * gtot;
  }
  Split fin = split_and_compatibility(cur);
  if (!(allow_centralizer ? fin.compatible : fin.semidirect)) return false;
  out.changed = gtot != ExactMatrix::identity(n + 2);
  out.h = cur;
  out.g = gtot;
  return true;
}

}  // namespace detail

inline NormalizeResult normalize_compatible(const Subalgebra& h) {
  NormalizeResult r;
  r.h = h;
  r.g = ExactMatrix::identity(h.ambient().size());
  Split s = split_and_compatibility(h);
  if (s.compatible || s.torus_dim != 1) return r;
  if (detail::normalize_pass(h, false, r)) return r;
  if (detail::normalize_pass(h, true, r)) return r;
  r.h = h;
  r.unresolved = true;
  return r;
}

// ---------------------------------------------------------------------------
// Exact tests on the nilpotent part

struct XYMaps {
  ExactMatrix X, Y;  // (n-2) x d, columns indexed by a basis of the (x,y)-image W
  int kernel_dim = 0;  // dim of elements with x = y = 0
  int d = 0;
};

inline XYMaps xy_maps(const std::vector<ExactVector>& V, int n) {
  const int m = n - 2;
  std::vector<ExactVector> img;
  for (auto& v : V) {
    ExactVector e;
    for (int i = 0; i < m; ++i) e.push_back(v[3 + i]);
    for (int i = 0; i < m; ++i) e.push_back(v[3 + m + i]);
    img.push_back(e);
  }
  auto W = row_basis(img, 2 * m);
  XYMaps r;
  r.d = static_cast<int>(W.size());
  r.kernel_dim = static_cast<int>(V.size()) - r.d;
  r.X = ExactMatrix(m, r.d);
  r.Y = ExactMatrix(m, r.d);
  for (int j = 0; j < r.d; ++j)
    for (int i = 0; i < m; ++i) {
      r.X(i, j) = W[j][i];
      r.Y(i, j) = W[j][m + i];
    }
  return r;
}

// dim<x_h, y_h> != 1 for every nonzero h in V: the pencil s X + Y and X itself
// must have full column rank for every real s.  det(M(s)^T M(s)) is a single
// polynomial whose real roots are exactly the rank drops.
inline bool xy_never_rank_one(const std::vector<ExactVector>& V, int n) {
  XYMaps mp = xy_maps(V, n);
  const int d = mp.d, m = n - 2;
  if (d == 0) return true;
  if (d > m) return false;
  if (static_cast<int>(rank(mp.X)) < d) return false;
  std::vector<Q6> xs, ys;
  for (int k = 0; k <= 2 * d; ++k) {
    Q6 s(k - d);
    ExactMatrix M = s * mp.X + mp.Y;
    xs.push_back(s);
    ys.push_back(determinant(M.transpose() * M));
  }
  auto g = interpolate(xs, ys);
  if (g.is_zero()) return false;
  return !has_real_root(g);
}

// dim<x_h, y_h> = 1 for every nonzero h in V.
inline bool xy_always_rank_one(const std::vector<ExactVector>& V, int n) {
  XYMaps mp = xy_maps(V, n);
  if (mp.kernel_dim > 0 || mp.d == 0) return false;
  const int m = n - 2, d = mp.d;
  // common column line: all x_i, y_i in one line
  std::vector<ExactVector> cols;
  for (int j = 0; j < d; ++j) {
    ExactVector x(m), y(m);
    for (int i = 0; i < m; ++i) x[i] = mp.X(i, j), y[i] = mp.Y(i, j);
    cols.push_back(x);
    cols.push_back(y);
  }
  if (rank_of_rows(cols, m) <= 1) return true;
  // common row: c2 x = c1 y for every element
  ExactMatrix A(m * d, 2);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < m; ++i) {
      A(j * m + i, 0) = -mp.Y(i, j);
      A(j * m + i, 1) = mp.X(i, j);
    }
  return !nullspace(A).empty();
}

struct SO1nData {
  std::vector<ExactVector> x0_basis;
  ExactVector b, c;
  Q6 p;
  Q6 sign_value;  // |b|^2 - |c|^2 - 2p
};

// Orthogonal-type data: y = 0, x in phi c + X0, eta = p phi + b.x, with the
// sign condition.  V is a basis of a subspace of n.
inline std::optional<SO1nData> recognize_so1n_rows(const std::vector<ExactVector>& V, int n) {
  CoordLayout L{n};
  const int m = n - 2;
  const std::size_t w = 2 * n;
  for (auto& v : V)
    for (int i = 0; i < m; ++i)
      if (!v[L.y(i)].is_zero()) return std::nullopt;
  auto V0 = detail::sub_where_zero(V, {L.phi()}, w);
  // eta must be a linear function of x on V0
  std::vector<ExactVector> xs, xe;
  for (auto& v : V0) {
    ExactVector x(v.begin() + L.x(0), v.begin() + L.x(0) + m);
    xs.push_back(x);
    ExactVector ext = x;
    ext.push_back(v[L.eta()]);
    xe.push_back(ext);
  }
  if (rank_of_rows(xs, m) != rank_of_rows(xe, m + 1)) return std::nullopt;
  SO1nData d;
  d.x0_basis = row_basis(xs, m);
  const std::size_t k = d.x0_basis.size();
  // b in X0 with b.x = eta on V0
  d.b.assign(m, Q6(0));
  if (k > 0) {
    ExactMatrix G(xs.size(), k + 1);
    for (std::size_t r = 0; r < xs.size(); ++r) {
      for (std::size_t j = 0; j < k; ++j) G(r, j) = dot(xs[r], d.x0_basis[j]);
      G(r, k) = xe[r][m];
    }
    auto sol = nullspace(G);
    // pick the solution with last coordinate -1
    ExactVector beta;
    for (auto& z : sol)
      if (!z[k].is_zero()) {
        beta.resize(k);
        for (std::size_t j = 0; j < k; ++j) beta[j] = -z[j] / z[k];
        break;
      }
    if (beta.empty()) return std::nullopt;
    for (std::size_t j = 0; j < k; ++j)
      for (int i = 0; i < m; ++i) d.b[i] += beta[j] * d.x0_basis[j][i];
  }
  // element with phi = 1
  std::optional<ExactVector> hs;
  for (auto& v : V)
    if (!v[L.phi()].is_zero()) {
      ExactVector u = v;
      Q6 inv = Q6(1) / v[L.phi()];
      for (auto& e : u) e *= inv;
      hs = u;
      break;
    }
  if (!hs) {
    d.c.assign(m, Q6(0));
    d.p = Q6(1) + dot(d.b, d.b) / Q6(2);
  } else {
    ExactVector xstar((*hs).begin() + L.x(0), (*hs).begin() + L.x(0) + m);
    // c = component of x* orthogonal to X0
    ExactVector proj(m, Q6(0));
    if (k > 0) {
      ExactMatrix G(k, k + 1);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) G(i, j) = dot(d.x0_basis[i], d.x0_basis[j]);
        G(i, k) = dot(d.x0_basis[i], xstar);
      }
      rref(G);
      for (std::size_t j = 0; j < k; ++j)
        for (int i = 0; i < m; ++i) proj[i] += G(j, k) * d.x0_basis[j][i];
    }
    d.c.resize(m);
    for (int i = 0; i < m; ++i) d.c[i] = xstar[i] - proj[i];
    d.p = (*hs)[L.eta()] - dot(d.b, xstar);
  }
  d.sign_value = dot(d.b, d.b) - dot(d.c, d.c) - Q6(2) * d.p;
  if (d.sign_value.sign() >= 0) return std::nullopt;
  return d;
}

inline std::optional<SO1nData> recognize_so1n(const Subalgebra& h) {
  Split s = split_and_compatibility(h);
  return recognize_so1n_rows(s.nil, h.n());
}

// Jordan block sizes (descending) of a nilpotent matrix.
inline std::vector<int> jordan_partition(const ExactMatrix& X) {
  std::size_t N = X.rows();
  std::vector<std::size_t> r{N};
  ExactMatrix P = ExactMatrix::identity(N);
  while (r.back() > 0) {
    P = P * X;
    r.push_back(rank(P));
    if (r.size() > N + 2) throw Error(ErrorCode::invalid_params, "matrix is not nilpotent");
  }
  std::vector<int> blocks;
  for (std::size_t k = 1; k < r.size(); ++k) {
    long ge_k = static_cast<long>(r[k - 1]) - static_cast<long>(r[k]);
    long ge_k1 = (k + 1 < r.size()) ? static_cast<long>(r[k]) - static_cast<long>(r[k + 1]) : 0;
    for (long c = 0; c < ge_k - ge_k1; ++c) blocks.push_back(static_cast<int>(k));
  }
  std::sort(blocks.rbegin(), blocks.rend());
  return blocks;
}

// Growth exponent of a one-parameter unipotent subgroup from its Jordan type.
inline Q6 unipotent_exponent(const ExactMatrix& X) {
  auto bl = jordan_partition(X);
  if (bl.empty() || bl[0] <= 1) return Q6(0);
  int l1 = bl[0], l2 = bl.size() > 1 ? bl[1] : 1;
  int k1 = l1 - 1, k2 = std::max(l1 - 3, l2 - 1);
  return Q6(Rational(k1 + k2, k1));
}

// (a + b)/a for the chamber representative (a, b) = (max|t_i|, min|t_i|).
inline Q6 torus_exponent(const Q6& t1, const Q6& t2) {
  Q6 a = abs(t1), b = abs(t2);
  if (a < b) std::swap(a, b);
  return (a + b) / a;
}

inline std::optional<Root> vanishing_root(const Q6& t1, const Q6& t2) {
  for (Root r : kPositiveRoots)
    if (root_value(r, t1, t2).is_zero()) return r;
  return std::nullopt;
}

inline std::string kernel_name(const Q6& t1, const Q6& t2) {
  if (auto r = vanishing_root(t1, t2)) return "ker " + root_name(*r);
  if ((t1 - Q6(2) * t2).is_zero()) return "ker alpha-beta";
  return "generic";
}

// ---------------------------------------------------------------------------
// The decision tree

namespace detail {

inline void classify_nilpotent(const Subalgebra& h, const Split& s, TypeVerdict& v) {
  const int n = s.n;
  CoordLayout L{n};
  const auto& V = s.nil;
  if (V.size() <= 1) {
    v.label = "T2.5-1";
    v.exponent = V.empty() ? Q6(0) : unipotent_exponent(h.basis()[0].matrix());
    return;
  }
  bool phi0 = all_zero_at(V, {L.phi()});
  if (phi0 && xy_never_rank_one(V, n)) {
    v.label = "T2.5-2";
    return;
  }
  if (phi0 && xy_always_rank_one(V, n)) {
    v.label = "T2.5-3";
    return;
  }
  if (auto d = recognize_so1n_rows(V, n)) {
    v.label = "T2.5-4";
    v.x0_basis = d->x0_basis;
    v.b = d->b;
    v.c = d->c;
    v.p = d->p;
    return;
  }
  v.label = "CDS";
}

inline void record_graph(const std::vector<ExactVector>& V, int n, TypeVerdict& v) {
  XYMaps mp = xy_maps(V, n);
  if (mp.d != n - 2 || mp.d == 0) return;
  auto Xi = inverse(mp.X);
  if (Xi) v.B = mp.Y * *Xi;
}

inline void classify_semidirect(const Split& s, TypeVerdict& v) {
  const int n = s.n;
  CoordLayout L{n};
  const ExactVector& tv = s.in_a.at(0);
  const Q6 t1 = tv[0], t2 = tv[1];
  v.tau = std::array<Q6, 2>{t1, t2};
  v.torus_kernel = kernel_name(t1, t2);
  const auto& V = s.nil;
  auto on_ker = [&](Root r) { return root_value(r, t1, t2).is_zero(); };
  std::vector<int> xs, ys;
  for (int i = 0; i < n - 2; ++i) xs.push_back(L.x(i)), ys.push_back(L.y(i));
  const std::size_t w = 2 * n;

  if (V.empty()) {
    v.label = "T2.6-1";
    v.exponent = torus_exponent(t1, t2);
    return;
  }
  bool phi0 = all_zero_at(V, {L.phi()});
  if (on_ker(Root::alpha) && phi0 && xy_never_rank_one(V, n)) {
    v.label = "T2.6-2";
    record_graph(V, n, v);
    return;
  }
  if (on_ker(Root::beta) && phi0 && all_zero_at(V, ys) &&
      sub_where_zero(V, xs, w).empty()) {
    v.label = "T2.6-3";
    return;
  }
  if (on_ker(Root::alpha_beta) && phi0 && all_zero_at(V, xs) && sub_where_zero(V, ys, w).empty()) {
    v.label = "T2.6-4";
    return;
  }
  if (on_ker(Root::beta)) {
    if (auto d = recognize_so1n_rows(V, n)) {
      v.label = "T2.6-5";
      v.x0_basis = d->x0_basis;
      v.b = d->b;
      v.c = d->c;
      v.p = d->p;
      return;
    }
  }
  if ((t1 - Q6(2) * t2).is_zero() && s.rows.size() == 2 && V.size() == 1) {
    const auto& e = V[0];
    bool x0 = all_zero_at(V, xs) && e[L.eta()].is_zero();
    bool yn = !all_zero_at(V, ys);
    if (x0 && yn && !e[L.phi()].is_zero()) {
      v.label = "T2.6-6";
      return;
    }
  }
  if (on_ker(Root::beta) && s.rows.size() == 2 && all_zero_at(V, ys)) {
    const auto& e = V[0];
    Q6 x2(0);
    for (int i : xs) x2 += e[i] * e[i];
    if (x2 != Q6(-2) * e[L.phi()] * e[L.eta()]) {
      v.label = "T2.6-7";
      v.notes.push_back("condition |x|^2 != -2 phi eta checked on the nilpotent generator");
      return;
    }
  }
  for (Root w0 : kPositiveRoots) {
    if (!within(V, n, {w0})) continue;
    v.omega = w0;
    Root g = perpendicular_root(w0);
    v.gamma = g;
    Q6 wt = root_value(w0, t1, t2);
    if (wt.is_zero()) {
      v.label = "CDS";
      v.notes.push_back("torus is ker omega for h∩n inside a single root space");
      return;
    }
    Q6 p = -root_value(g, t1, t2) / wt;
    v.p = p;
    if ((abs(p) - Q6(1)).sign() < 0) {
      v.label = "P2.10";
      v.aliases.push_back("T2.6-8");
    } else {
      v.label = "CDS";
      v.notes.push_back("single root space with |p| >= 1");
    }
    return;
  }
  v.label = "CDS";
}

inline void classify_nonsemidirect(const Split& s, TypeVerdict& v) {
  const int n = s.n;
  const ExactVector& x0 = *s.x0;
  const Q6 t1 = x0[0], t2 = x0[1];
  v.tau = std::array<Q6, 2>{t1, t2};
  v.torus_kernel = kernel_name(t1, t2);
  auto om = vanishing_root(t1, t2);
  if (!om) {
    v.label = "incompatible-unresolved";
    v.notes.push_back("no root vanishes on the torus direction of a non-split algebra");
    return;
  }
  const Root w = *om;
  v.omega = w;
  const auto& V = s.nil;
  const Root a = Root::alpha, b = Root::beta, ab = Root::alpha_beta, e = Root::alpha_2beta;
  auto eq_root = [&](Root r) { return V.size() == root_space_indices(r, n).size() && within(V, n, {r}); };
  if (w == a && within(V, n, {ab})) { v.label = "T2.9-1"; return; }
  if (w == a && within(V, n, {e})) { v.label = "T2.9-2"; return; }
  if (w == e && within(V, n, {a})) { v.label = "T2.9-3"; return; }
  if (w == e && (within(V, n, {b}) || within(V, n, {ab}))) { v.label = "T2.9-4"; return; }
  if (w == b || w == ab) {
    Root g = perpendicular_root(w);
    if (within(V, n, {w, e}) && meet_dim(V, n, w) == 0 && meet_dim(V, n, e) == 0) {
      v.label = "T2.9-5";
      return;
    }
    if (within(V, n, {g, e}) && meet_dim(V, n, e) == 0) {
      v.label = "T2.9-6";
      v.gamma = g;
      return;
    }
    if (eq_root(e)) { v.label = "T2.9-7"; return; }
  }
  if (w == ab && eq_root(a)) { v.label = "T2.9-8"; return; }
  v.label = "CDS";
}

}  // namespace detail

inline TypeVerdict classify_type(const Subalgebra& h) {
  Split s = split_and_compatibility(h);
  TypeVerdict v;
  v.n = s.n;
  v.dim = static_cast<int>(h.dim());
  if (s.torus_dim == 2) {
    v.label = "CDS";
    v.dim_nil = static_cast<int>(s.nil.size());
    v.notes.push_back("projection to a is onto: contains a conjugate of A");
    return v;
  }
  if (s.torus_dim == 0) {
    v.dim_nil = v.dim;
    detail::classify_nilpotent(h, s, v);
    return v;
  }
  Subalgebra cur = h;
  if (!s.compatible) {
    auto nr = normalize_compatible(h);
    if (nr.unresolved) {
      v.label = "incompatible-unresolved";
      v.notes.push_back("no conjugation into compatible position was found");
      return v;
    }
    cur = nr.h;
    v.normalized = nr.changed;
    s = split_and_compatibility(cur);
  }
  v.dim_nil = static_cast<int>(s.nil.size());
  v.semidirect = s.semidirect;
  if (s.semidirect)
    detail::classify_semidirect(s, v);
  else
    detail::classify_nonsemidirect(s, v);
  return v;
}

// ---------------------------------------------------------------------------
// Deformation matrices

struct SUConjugacy {
  bool yes = false;
  Q6 a, b_squared;
  long double b = 0;
  WideMatrix witness;  // columns: orthonormal basis putting B in block form
};

inline SUConjugacy su_conjugacy(const ExactMatrix& B) {
  const std::size_t k = B.rows();
  if (B.cols() != k || k == 0 || k % 2 != 0)
    throw Error(ErrorCode::invalid_dimension, "su_conjugacy needs a square matrix of even size");
  SUConjugacy r;
  ExactMatrix Bt = B.transpose();
  ExactMatrix sym = Q6::ratio(1, 2) * (B + Bt);
  ExactMatrix S0 = Q6::ratio(1, 2) * (B - Bt);
  r.a = sym(0, 0);
  if (sym != r.a * ExactMatrix::identity(k)) return r;
  ExactMatrix SS = S0.transpose() * S0;
  r.b_squared = SS(0, 0);
  if (r.b_squared.is_zero() || SS != r.b_squared * ExactMatrix::identity(k)) return r;
  r.yes = true;
  r.b = std::sqrt(r.b_squared.to_long_double());
  WideMatrix S(k, k), W = WideMatrix::Zero(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) S(i, j) = S0(i, j).to_long_double();
  std::size_t filled = 0;
  for (std::size_t e = 0; e < k && filled < k; ++e) {
    WideVector f = WideVector::Zero(k);
    f(e) = 1;
    for (std::size_t c = 0; c < filled; ++c) f -= W.col(c).dot(f) * W.col(c);
    if (f.norm() < 1e-9L) continue;
    f /= f.norm();
    WideVector f2 = -(S * f) / r.b;
    W.col(filled++) = f;
    W.col(filled++) = f2;
  }
  r.witness = W;
  return r;
}

struct HBInvariants {
  int center_dim = 0;
  bool heisenberg_x_abelian = true;
  bool iso_to_hsu = false;
};

inline HBInvariants hb_iso_invariants(const ExactMatrix& B) {
  if (has_real_eigenvalue(B)) throw Error(ErrorCode::real_eigenvalue, "B has a real eigenvalue");
  ExactMatrix D = B.transpose() - B;
  HBInvariants r;
  r.center_dim = 1 + static_cast<int>(B.rows() - rank(D));
  r.iso_to_hsu = !determinant(D).is_zero();
  return r;
}

// ---------------------------------------------------------------------------
// Characteristic index d(H) = dim H - dim K_H

struct GroupTag {
  enum Kind { SO2n, SO1n, SU1m, AN, L5, SL3R } kind;
  int param = 0;  // n, m or dim
};

inline GroupTag parse_group_tag(const std::string& s) {
  auto num = [&](std::size_t from) {
    try {
      return std::stoi(s.substr(from));
    } catch (...) {
      throw Error(ErrorCode::unknown_label, "bad group tag '" + s + "'");
    }
  };
  if (s.rfind("SO(2,", 0) == 0) return {GroupTag::SO2n, num(5)};
  if (s.rfind("SO(1,", 0) == 0) return {GroupTag::SO1n, num(5)};
  if (s.rfind("SU(1,", 0) == 0) return {GroupTag::SU1m, num(5)};
  if (s.rfind("AN:", 0) == 0) return {GroupTag::AN, num(3)};
  if (s == "L5") return {GroupTag::L5, 0};
  if (s == "SL(3,R)") return {GroupTag::SL3R, 0};
  throw Error(ErrorCode::unknown_label, "unknown group tag '" + s + "'");
}

inline int d_of(const GroupTag& t) {
  switch (t.kind) {
    case GroupTag::SO2n: return 2 * t.param;
    case GroupTag::SO1n: return t.param;
    case GroupTag::SU1m: return 2 * t.param;
    case GroupTag::AN: return t.param;
    case GroupTag::L5: return 2;
    case GroupTag::SL3R: return 5;
  }
  return 0;
}

inline int d_of(const std::string& tag) { return d_of(parse_group_tag(tag)); }

// d(H) for a subalgebra of sl(3,R) that is upper triangular or transpose-closed.
inline std::optional<int> sl3_characteristic_index(const Subalgebra& h) {
  bool upper = true;
  for (auto& b : h.basis())
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < i; ++j)
        if (!b.matrix()(i, j).is_zero()) upper = false;
  if (upper) return static_cast<int>(h.dim());
  for (auto& b : h.basis())
    if (!h.contains(make_element(h.ambient(), b.matrix().transpose()))) return std::nullopt;
  // skew-symmetric part of h
  std::vector<ExactVector> rows;
  for (auto& b : h.basis()) rows.push_back(b.flat());
  std::vector<int> dummy;
  ExactMatrix A(9, h.dim());
  for (std::size_t c = 0; c < h.dim(); ++c)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) A(i * 3 + j, c) = rows[c][i * 3 + j] + rows[c][j * 3 + i];
  int k = static_cast<int>(nullspace(A).size());
  return static_cast<int>(h.dim()) - k;
}

// ---------------------------------------------------------------------------
// Compact Clifford-Klein form verdict

namespace detail {

inline CKVerdict verdict(CK v, std::vector<std::string> why) {
  CKVerdict r;
  r.verdict = v;
  r.justification = std::move(why);
  return r;
}

inline CKVerdict sl3_verdict(const Subalgebra& h) {
  auto d = sl3_characteristic_index(h);
  if (!d) {
    auto r = verdict(CK::Inconclusive, {});
    r.notes.push_back("d(H) is only computed for upper-triangular or transpose-closed subalgebras");
    return r;
  }
  bool upper = true;
  for (auto& b : h.basis())
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < i; ++j)
        if (!b.matrix()(i, j).is_zero()) upper = false;
  if (*d == 0) return verdict(CK::HCompact, {"d(H) = 0"});
  if (h.dim() == 8 || (upper && h.dim() == 5)) return verdict(CK::GmodHCompact, {"H co-compact"});
  if (*d == 1) return verdict(CK::NoCompactForm, {"d(H) = 1", "Prop 3.7", "Prop 1.9"});
  return verdict(CK::NoCompactForm, {"d(H) = " + std::to_string(*d), "Prop SL3-B+", "Thm 7.1", "Prop 1.9"});
}

inline CKVerdict reductive_verdict(const Subalgebra& h, bool assume_su) {
  const int n = h.n();
  switch (h.reductive()) {
    case ReductiveKind::so1n:
      if (n % 2 == 0) return verdict(CK::HasCompactForm, {"Thm 1.6(1)", "Kulkarni construction"});
      return verdict(CK::NoCompactForm, {"Prop Kulkarni"});
    case ReductiveKind::su1m:
      if (n % 2 == 0) return verdict(CK::HasCompactForm, {"Thm 1.5", "Thm 1.6(2)", "Kulkarni construction"});
      if (assume_su) return verdict(CK::NoCompactForm, {"Conj 1.7 (assumed)"});
      return verdict(CK::ConjecturalNoSU1m, {"Conj 1.7"});
    case ReductiveKind::l5: return verdict(CK::NoCompactForm, {"Cor SO/L5"});
    case ReductiveKind::none: break;
  }
  return verdict(CK::Inconclusive, {});
}

}  // namespace detail

inline CKVerdict ck_verdict(const Subalgebra& h, bool assume_su_conjecture = false) {
  using detail::verdict;
  if (h.ambient().kind == AmbientKind::sl3) return detail::sl3_verdict(h);
  if (h.reductive() != ReductiveKind::none) return detail::reductive_verdict(h, assume_su_conjecture);
  if (h.dim() == 0) return verdict(CK::HCompact, {"trivial subgroup"});
  if (!h.in_an()) {
    auto r = verdict(CK::Inconclusive, {});
    r.notes.push_back("only subalgebras of a+n and named reductive entries are supported");
    return r;
  }
  const int n = h.n();
  const int dim = static_cast<int>(h.dim());
  if (dim == 2 * n) return verdict(CK::GmodHCompact, {"H = AN", "G/AN compact"});
  TypeVerdict tv = classify_type(h);
  auto tagged = [&](CK v, std::vector<std::string> why) {
    auto r = verdict(v, std::move(why));
    r.type = tv;
    return r;
  };
  if (tv.label == "incompatible-unresolved") {
    auto r = tagged(CK::Inconclusive, {});
    r.notes.push_back("normalization to compatible position failed");
    return r;
  }
  if (tv.label == "CDS") return tagged(CK::NoCompactForm, {"CDS", "Lemma 3.1"});
  if (tv.dim_nil == dim) return tagged(CK::NoCompactForm, {tv.label, "Prop unip"});
  if (dim == 1) return tagged(CK::NoCompactForm, {tv.label, "Prop 3.7"});
  if (tv.label == "T2.6-6") return tagged(CK::NoCompactForm, {"T2.6-6", "Cor SO/L5"});

  GrowthWindow w = predicted_window(tv);
  const bool linear_lower = *w.p_exact == Q6(1) && w.lower == Correction::none;
  const bool quadratic_upper = *w.q_exact == Q6(2) && w.upper == Correction::none;
  const int even_floor = 2 * (n / 2);

  if (n % 2 == 0) {
    if (tv.label == "T2.6-5" && dim == n) return tagged(CK::HasCompactForm, {"T2.6-5", "Prop 2.13", "Thm 1.6(1)"});
    if (tv.label == "T2.6-2" && dim == n) return tagged(CK::HasCompactForm, {"T2.6-2", "Cor 5.5", "Thm 1.5"});
  } else {
    if (tv.label == "T2.6-5" && dim == n) return tagged(CK::NoCompactForm, {"T2.6-5", "Prop 2.13", "Prop Kulkarni"});
    std::string item;
    if (tv.label == "T2.6-2" && dim == n - 1) item = "Thm 5.2(1)";
    if (n == 3 && dim == 2) {
      if (tv.label == "T2.9-2") item = "Thm 5.2(2a)";
      if (tv.label == "T2.9-3") item = "Thm 5.2(2b)";
      if (tv.label == "P2.10" && (*tv.omega == Root::alpha || *tv.omega == Root::alpha_2beta) &&
          (abs(*tv.p) - Q6::ratio(1, 3)).sign() < 0)
        item = "Thm 5.2(2c)";
    }
    if (!item.empty()) {
      if (assume_su_conjecture) return tagged(CK::NoCompactForm, {tv.label, item, "Thm 1.8", "Conj 1.7 (assumed)"});
      return tagged(CK::ConjecturalNoSU1m, {tv.label, item, "Conj 1.7"});
    }
    if (n == 3 && dim == 2) {
      if (tv.label == "T2.9-7" || tv.label == "T2.9-8")
        return tagged(CK::NoCompactForm, {tv.label, "Thm 5.2", "H5 in CHC", "Thm 3.4(2)"});
      if (tv.label == "P2.10" && (*tv.omega == Root::alpha || *tv.omega == Root::alpha_2beta))
        return tagged(CK::NoCompactForm, {tv.label, "Prop 2.10", "H3 in CHC", "Thm 3.4(2)"});
    }
  }
  if (linear_lower && dim < n) return tagged(CK::NoCompactForm, {tv.label, "Lemma 4.1(1)"});
  if (quadratic_upper && dim < even_floor) return tagged(CK::NoCompactForm, {tv.label, "Lemma 4.1(2)"});
  auto r = tagged(CK::Inconclusive, {});
  r.notes.push_back("no rule of the verdict tree applies to " + tv.label + " at dim " + std::to_string(dim));
  return r;
}

}  // namespace cartanlab
