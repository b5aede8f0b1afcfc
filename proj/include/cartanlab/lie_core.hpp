#pragma once

// The ambient algebras so(2,n) and sl(3,R), the a+n coordinate slice of
// so(2,n), brackets, exponentials and root components.

#include <array>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cartanlab/error.hpp"
#include "cartanlab/exact.hpp"
#include "cartanlab/expm.hpp"

namespace cartanlab {

enum class AmbientKind { so2n, sl3 };

struct Ambient {
  AmbientKind kind = AmbientKind::so2n;
  int n = 3;  // for so(2,n); unused for sl3

  int size() const { return kind == AmbientKind::so2n ? n + 2 : 3; }
  std::string name() const {
    return kind == AmbientKind::so2n ? "so(2," + std::to_string(n) + ")" : "sl(3,R)";
  }
  friend bool operator==(const Ambient& a, const Ambient& b) {
    return a.kind == b.kind && (a.kind == AmbientKind::sl3 || a.n == b.n);
  }
  friend bool operator!=(const Ambient& a, const Ambient& b) { return !(a == b); }
};

inline Ambient so2n_ambient(int n) {
  if (n < 3) throw Error(ErrorCode::invalid_dimension, "so(2,n) needs n >= 3, got " + std::to_string(n));
  return Ambient{AmbientKind::so2n, n};
}
inline Ambient sl3_ambient() { return Ambient{AmbientKind::sl3, 0}; }

struct BilinearSpace {
  int n = 3;
  ExactMatrix Q;  // Gram matrix of the form
  WideMatrix P;   // orthogonal, rows are the signature-diagonal basis
};

// Form 2 v1 v_{n+2} + 2 v2 v_{n+1} + sum_{3..n} v_i^2: antidiagonal ones in
// the corners, identity in the middle.  With this normalization the a+n
// matrices below (with plain sign-flipped transposed blocks) are skew.
inline BilinearSpace form_matrix(int n) {
  if (n < 3) throw Error(ErrorCode::invalid_dimension, "n >= 3 required, got " + std::to_string(n));
  const int N = n + 2;
  BilinearSpace s;
  s.n = n;
  s.Q = ExactMatrix(N, N);
  s.Q(0, N - 1) = s.Q(N - 1, 0) = 1;
  s.Q(1, N - 2) = s.Q(N - 2, 1) = 1;
  for (int i = 2; i < n; ++i) s.Q(i, i) = 1;
  const long double r = 1.0L / std::sqrt(2.0L);
  s.P = WideMatrix::Zero(N, N);
  s.P(0, 0) = r, s.P(0, N - 1) = r;
  s.P(1, 1) = r, s.P(1, N - 2) = r;
  for (int i = 2; i < n; ++i) s.P(i, i) = 1;
  s.P(N - 2, 1) = r, s.P(N - 2, N - 2) = -r;
  s.P(N - 1, 0) = r, s.P(N - 1, N - 1) = -r;
  return s;
}

inline Q6 quadratic_value(const BilinearSpace& s, const ExactVector& v) {
  if (static_cast<int>(v.size()) != s.n + 2) throw Error(ErrorCode::dimension_mismatch, "vector length");
  Q6 acc(0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!s.Q(i, j).is_zero()) acc += v[i] * s.Q(i, j) * v[j];
  return acc;
}

// Positions of the a+n coordinates inside a flat vector of length 2n:
// [t1, t2, phi, x_1..x_{n-2}, y_1..y_{n-2}, eta].
struct CoordLayout {
  int n;
  int t1() const { return 0; }
  int t2() const { return 1; }
  int phi() const { return 2; }
  int x(int i) const { return 3 + i; }
  int y(int i) const { return 3 + (n - 2) + i; }
  int eta() const { return 2 * n - 1; }
  int width() const { return 2 * n; }
};

struct ANCoords {
  Q6 t1, t2, phi;
  ExactVector x, y;
  Q6 eta;

  static ANCoords zero(int n) {
    ANCoords c;
    c.x.assign(n - 2, Q6(0));
    c.y.assign(n - 2, Q6(0));
    return c;
  }
  int n() const { return static_cast<int>(x.size()) + 2; }

  ExactVector flat() const {
    ExactVector v;
    v.reserve(2 * n());
    v.push_back(t1);
    v.push_back(t2);
    v.push_back(phi);
    v.insert(v.end(), x.begin(), x.end());
    v.insert(v.end(), y.begin(), y.end());
    v.push_back(eta);
    return v;
  }
  static ANCoords from_flat(int n, const ExactVector& v) {
    if (static_cast<int>(v.size()) != 2 * n) throw Error(ErrorCode::dimension_mismatch, "coordinate vector length");
    CoordLayout L{n};
    ANCoords c = zero(n);
    c.t1 = v[L.t1()];
    c.t2 = v[L.t2()];
    c.phi = v[L.phi()];
    for (int i = 0; i < n - 2; ++i) {
      c.x[i] = v[L.x(i)];
      c.y[i] = v[L.y(i)];
    }
    c.eta = v[L.eta()];
    return c;
  }
  bool nilpotent_part_only() const { return t1.is_zero() && t2.is_zero(); }
  friend bool operator==(const ANCoords& a, const ANCoords& b) {
    return a.t1 == b.t1 && a.t2 == b.t2 && a.phi == b.phi && a.x == b.x && a.y == b.y && a.eta == b.eta;
  }
};

class AlgElement {
 public:
  AlgElement() = default;
  AlgElement(Ambient amb, ExactMatrix m, std::optional<ANCoords> c)
      : amb_(amb), m_(std::move(m)), coords_(std::move(c)) {}

  const Ambient& ambient() const { return amb_; }
  const ExactMatrix& matrix() const { return m_; }
  const std::optional<ANCoords>& coords() const { return coords_; }
  bool in_an() const { return coords_.has_value(); }
  bool is_zero() const { return m_.is_zero(); }

  WideMatrix numeric() const {
    WideMatrix w(m_.rows(), m_.cols());
    for (std::size_t i = 0; i < m_.rows(); ++i)
      for (std::size_t j = 0; j < m_.cols(); ++j) w(i, j) = m_(i, j).to_long_double();
    return w;
  }
  // Entries in row-major order, for linear algebra on spans.
  const ExactVector& flat() const { return m_.data(); }

 private:
  Ambient amb_;
  ExactMatrix m_;
  std::optional<ANCoords> coords_;
};

inline ExactMatrix an_matrix(int n, const ANCoords& c) {
  if (static_cast<int>(c.x.size()) != n - 2 || static_cast<int>(c.y.size()) != n - 2)
    throw Error(ErrorCode::dimension_mismatch, "x and y must have length n-2 = " + std::to_string(n - 2));
  const int N = n + 2;
  ExactMatrix M(N, N);
  M(0, 0) = c.t1;
  M(0, 1) = c.phi;
  M(1, 1) = c.t2;
  for (int i = 0; i < n - 2; ++i) {
    M(0, 2 + i) = c.x[i];
    M(1, 2 + i) = c.y[i];
    M(2 + i, N - 2) = -c.y[i];
    M(2 + i, N - 1) = -c.x[i];
  }
  M(0, N - 2) = c.eta;
  M(1, N - 1) = -c.eta;
  M(N - 2, N - 2) = -c.t2;
  M(N - 2, N - 1) = -c.phi;
  M(N - 1, N - 1) = -c.t1;
  return M;
}

inline AlgElement an_element(int n, const ANCoords& c) {
  Ambient amb = so2n_ambient(n);
  return AlgElement(amb, an_matrix(n, c), c);
}

inline AlgElement an_element_flat(int n, const ExactVector& v) { return an_element(n, ANCoords::from_flat(n, v)); }

// a+n coordinates of M if it has the a+n shape.
inline std::optional<ANCoords> extract_coords(int n, const ExactMatrix& M) {
  const int N = n + 2;
  if (static_cast<int>(M.rows()) != N) return std::nullopt;
  ANCoords c = ANCoords::zero(n);
  c.t1 = M(0, 0);
  c.t2 = M(1, 1);
  c.phi = M(0, 1);
  for (int i = 0; i < n - 2; ++i) {
    c.x[i] = M(0, 2 + i);
    c.y[i] = M(1, 2 + i);
  }
  c.eta = M(0, N - 2);
  if (an_matrix(n, c) != M) return std::nullopt;
  return c;
}

inline bool preserves_form(const BilinearSpace& s, const ExactMatrix& M) {
  return (M.transpose() * s.Q + s.Q * M).is_zero();
}

inline AlgElement make_element(Ambient amb, const ExactMatrix& M) {
  if (static_cast<int>(M.rows()) != amb.size() || static_cast<int>(M.cols()) != amb.size())
    throw Error(ErrorCode::dimension_mismatch, "matrix must be " + std::to_string(amb.size()) + "x" +
                                                   std::to_string(amb.size()) + " for " + amb.name());
  if (amb.kind == AmbientKind::sl3) {
    Q6 tr = M(0, 0) + M(1, 1) + M(2, 2);
    if (!tr.is_zero()) throw Error(ErrorCode::not_in_group, "sl(3) element must be traceless");
    return AlgElement(amb, M, std::nullopt);
  }
  if (!preserves_form(form_matrix(amb.n), M))
    throw Error(ErrorCode::not_in_group, "matrix is not skew for the form (M^T Q + Q M != 0)");
  return AlgElement(amb, M, extract_coords(amb.n, M));
}

inline AlgElement bracket(const AlgElement& X, const AlgElement& Y) {
  if (X.ambient() != Y.ambient()) throw Error(ErrorCode::ambient_mismatch, "bracket of elements of different algebras");
  ExactMatrix Z = X.matrix() * Y.matrix() - Y.matrix() * X.matrix();
  std::optional<ANCoords> c;
  if (X.ambient().kind == AmbientKind::so2n && X.in_an() && Y.in_an()) c = extract_coords(X.ambient().n, Z);
  return AlgElement(X.ambient(), std::move(Z), std::move(c));
}

inline AlgElement operator+(const AlgElement& X, const AlgElement& Y) {
  if (X.ambient() != Y.ambient()) throw Error(ErrorCode::ambient_mismatch, "sum of elements of different algebras");
  ExactMatrix Z = X.matrix() + Y.matrix();
  std::optional<ANCoords> c;
  if (X.in_an() && Y.in_an()) c = extract_coords(X.ambient().n, Z);
  return AlgElement(X.ambient(), std::move(Z), std::move(c));
}

inline AlgElement operator*(const Q6& s, const AlgElement& X) {
  std::optional<ANCoords> c;
  if (X.in_an()) c = ANCoords::from_flat(X.ambient().n, [&] {
      auto v = X.coords()->flat();
      for (auto& e : v) e *= s;
      return v;
    }());
  return AlgElement(X.ambient(), s * X.matrix(), std::move(c));
}

inline AlgElement operator-(const AlgElement& X, const AlgElement& Y) { return X + Q6(-1) * Y; }

struct GroupElement {
  Ambient ambient;
  WideMatrix g;
};

inline GroupElement exp_element(const AlgElement& X, long double t) {
  return GroupElement{X.ambient(), expm(WideMatrix(t * X.numeric()))};
}

inline GroupElement exp_numeric(Ambient amb, const WideMatrix& X) { return GroupElement{amb, expm(X)}; }

inline GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  if (a.ambient != b.ambient) throw Error(ErrorCode::ambient_mismatch, "product of elements of different groups");
  return GroupElement{a.ambient, a.g * b.g};
}

// Max-entry residual of the group condition (g^T Q g = Q, or det g = 1).
inline long double group_residual(const GroupElement& e) {
  if (e.ambient.kind == AmbientKind::sl3) return std::fabs(e.g.determinant() - 1.0L);
  auto s = form_matrix(e.ambient.n);
  WideMatrix Q(s.Q.rows(), s.Q.cols());
  for (std::size_t i = 0; i < s.Q.rows(); ++i)
    for (std::size_t j = 0; j < s.Q.cols(); ++j) Q(i, j) = s.Q(i, j).to_long_double();
  return (e.g.transpose() * Q * e.g - Q).cwiseAbs().maxCoeff();
}

// Exact exp of a nilpotent matrix (terminating series).
inline ExactMatrix exp_nilpotent(const ExactMatrix& Z) {
  std::size_t N = Z.rows();
  ExactMatrix result = ExactMatrix::identity(N);
  ExactMatrix term = ExactMatrix::identity(N);
  for (std::size_t k = 1; k <= N; ++k) {
    term = term * Z;
    term *= Q6(Rational(1, static_cast<long>(k)));
    if (term.is_zero()) return result;
    result += term;
  }
  if (!term.is_zero()) throw Error(ErrorCode::invalid_params, "exp_nilpotent: matrix is not nilpotent");
  return result;
}

// ---------------------------------------------------------------------------
// Restricted roots of so(2,n) on a = {(t1,t2)}.

enum class Root { alpha, beta, alpha_beta, alpha_2beta };

inline constexpr std::array<Root, 4> kPositiveRoots{Root::alpha, Root::beta, Root::alpha_beta, Root::alpha_2beta};

inline std::string root_name(Root r) {
  switch (r) {
    case Root::alpha: return "alpha";
    case Root::beta: return "beta";
    case Root::alpha_beta: return "alpha+beta";
    case Root::alpha_2beta: return "alpha+2beta";
  }
  return "?";
}

inline std::optional<Root> parse_root(const std::string& s) {
  for (Root r : kPositiveRoots)
    if (root_name(r) == s) return r;
  if (s == "a") return Root::alpha;
  if (s == "b") return Root::beta;
  if (s == "a+b") return Root::alpha_beta;
  if (s == "a+2b") return Root::alpha_2beta;
  return std::nullopt;
}

// Coefficients (c1, c2) with root(t) = c1 t1 + c2 t2.
inline std::array<long, 2> root_functional(Root r) {
  switch (r) {
    case Root::alpha: return {1, -1};
    case Root::beta: return {0, 1};
    case Root::alpha_beta: return {1, 0};
    case Root::alpha_2beta: return {1, 1};
  }
  return {0, 0};
}

inline Q6 root_value(Root r, const Q6& t1, const Q6& t2) {
  auto f = root_functional(r);
  return Q6(f[0]) * t1 + Q6(f[1]) * t2;
}

inline int root_height(Root r) {
  switch (r) {
    case Root::alpha:
    case Root::beta: return 1;
    case Root::alpha_beta: return 2;
    case Root::alpha_2beta: return 3;
  }
  return 0;
}

// Flat coordinate positions of the root space.
inline std::vector<int> root_space_indices(Root r, int n) {
  CoordLayout L{n};
  std::vector<int> idx;
  switch (r) {
    case Root::alpha: idx.push_back(L.phi()); break;
    case Root::beta:
      for (int i = 0; i < n - 2; ++i) idx.push_back(L.y(i));
      break;
    case Root::alpha_beta:
      for (int i = 0; i < n - 2; ++i) idx.push_back(L.x(i));
      break;
    case Root::alpha_2beta: idx.push_back(L.eta()); break;
  }
  return idx;
}

inline std::optional<Root> root_of_index(int idx, int n) {
  for (Root r : kPositiveRoots)
    for (int i : root_space_indices(r, n))
      if (i == idx) return r;
  return std::nullopt;
}

inline std::map<std::string, ExactVector> root_components(const AlgElement& X) {
  if (X.ambient().kind != AmbientKind::so2n || !X.in_an())
    throw Error(ErrorCode::not_triangular, "element is not in a+n");
  const auto& c = *X.coords();
  return {{"a", {c.t1, c.t2}},
          {root_name(Root::alpha), {c.phi}},
          {root_name(Root::beta), c.y},
          {root_name(Root::alpha_beta), c.x},
          {root_name(Root::alpha_2beta), {c.eta}}};
}

}  // namespace cartanlab
