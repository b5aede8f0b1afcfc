#pragma once

// Named subalgebras of so(2,n) and sl(3,R), and one exemplar per
// classification item.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cartanlab/exact.hpp"
#include "cartanlab/lie_core.hpp"
#include "cartanlab/subalgebra.hpp"

namespace cartanlab {

// ---------------------------------------------------------------------------
// a+n building blocks

inline AlgElement torus_element(int n, const Q6& t1, const Q6& t2) {
  auto c = ANCoords::zero(n);
  c.t1 = t1;
  c.t2 = t2;
  return an_element(n, c);
}
inline AlgElement phi_element(int n, const Q6& s = 1) {
  auto c = ANCoords::zero(n);
  c.phi = s;
  return an_element(n, c);
}
inline AlgElement eta_element(int n, const Q6& s = 1) {
  auto c = ANCoords::zero(n);
  c.eta = s;
  return an_element(n, c);
}
inline AlgElement x_element(int n, const ExactVector& x) {
  auto c = ANCoords::zero(n);
  c.x = x;
  return an_element(n, c);
}
inline AlgElement y_element(int n, const ExactVector& y) {
  auto c = ANCoords::zero(n);
  c.y = y;
  return an_element(n, c);
}
inline ExactVector unit_vector(int len, int i, const Q6& s = 1) {
  ExactVector v(len, Q6(0));
  v[i] = s;
  return v;
}

// Element spanning the root space of r along direction v (ignored for the
// one-dimensional root spaces, where v[0] is the coefficient).
inline AlgElement root_vector(int n, Root r, const ExactVector& v) {
  switch (r) {
    case Root::alpha: return phi_element(n, v.at(0));
    case Root::alpha_2beta: return eta_element(n, v.at(0));
    case Root::beta: return y_element(n, v);
    case Root::alpha_beta: return x_element(n, v);
  }
  return {};
}
inline AlgElement root_vector(int n, Root r) {
  int len = (r == Root::beta || r == Root::alpha_beta) ? n - 2 : 1;
  return root_vector(n, r, unit_vector(len, 0));
}

// The positive root perpendicular to r.
inline Root perpendicular_root(Root r) {
  switch (r) {
    case Root::alpha: return Root::alpha_2beta;
    case Root::alpha_2beta: return Root::alpha;
    case Root::beta: return Root::alpha_beta;
    case Root::alpha_beta: return Root::beta;
  }
  return r;
}

// Nonzero (t1, t2) spanning ker(f) for a functional f = (f1, f2).
inline std::array<Q6, 2> kernel_direction(const Q6& f1, const Q6& f2) { return {-f2, f1}; }

inline std::array<Q6, 2> root_kernel(Root r) {
  auto f = root_functional(r);
  return kernel_direction(Q6(f[0]), Q6(f[1]));
}

// ---------------------------------------------------------------------------
// Deformation matrices for h_B

inline ExactMatrix complex_structure(int dim) {
  if (dim % 2 != 0) throw Error(ErrorCode::invalid_dimension, "complex structure needs even dimension");
  ExactMatrix J(dim, dim);
  for (int i = 0; i < dim; i += 2) {
    J(i, i + 1) = 1;
    J(i + 1, i) = -1;
  }
  return J;
}

inline bool has_real_eigenvalue(const ExactMatrix& B) {
  if (B.rows() == 0) return false;
  return has_real_root(characteristic_polynomial(B));
}

// The explicit 4x4 example with characteristic polynomial x^4 - x^2 + 1.
inline ExactMatrix remark_matrix() {
  return ExactMatrix{{0, 1, 0, 1}, {-1, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
}

// h_B inside so(2,n): x ranges over the first B.rows() coordinates.
inline Subalgebra h_B_in(int n, const ExactMatrix& B, std::string label = "h_B") {
  int k = static_cast<int>(B.rows());
  if (B.cols() != B.rows()) throw Error(ErrorCode::dimension_mismatch, "B must be square");
  if (k > n - 2) throw Error(ErrorCode::dimension_mismatch, "B is larger than R^{n-2}");
  if (has_real_eigenvalue(B)) throw Error(ErrorCode::real_eigenvalue, "B has a real eigenvalue");
  std::vector<AlgElement> basis{torus_element(n, 1, 1), eta_element(n)};
  for (int i = 0; i < k; ++i) {
    auto c = ANCoords::zero(n);
    c.x[i] = 1;
    for (int j = 0; j < k; ++j) c.y[j] = B(j, i);
    basis.push_back(an_element(n, c));
  }
  return Subalgebra::make(so2n_ambient(n), std::move(basis), std::move(label));
}

inline Subalgebra h_B(int m, const ExactMatrix& B) {
  if (m < 2) throw Error(ErrorCode::invalid_dimension, "h_B needs m >= 2");
  if (static_cast<int>(B.rows()) != 2 * m - 2)
    throw Error(ErrorCode::dimension_mismatch, "B must be (2m-2)x(2m-2)");
  return h_B_in(2 * m, B, "h_B");
}

inline Subalgebra h_SU(int m) {
  auto s = h_B(m, complex_structure(2 * m - 2));
  s.set_label("h_SU");
  return s;
}

// ---------------------------------------------------------------------------
// Named subalgebras

inline Subalgebra full_an(int n) {
  std::vector<AlgElement> b;
  for (int i = 0; i < 2 * n; ++i) b.push_back(an_element_flat(n, unit_vector(2 * n, i)));
  return Subalgebra::make(so2n_ambient(n), std::move(b), "a+n");
}

// Stabilizer in a+n of (0,1,0,...,0,-1,0): t2 = 0, y = 0, eta = phi.
inline Subalgebra so1n_an(int n) {
  std::vector<AlgElement> b{torus_element(n, 1, 0)};
  auto c = ANCoords::zero(n);
  c.phi = 1;
  c.eta = 1;
  b.push_back(an_element(n, c));
  for (int i = 0; i < n - 2; ++i) b.push_back(x_element(n, unit_vector(n - 2, i)));
  return Subalgebra::make(so2n_ambient(n), std::move(b), "so1n_an");
}

// Cartan involution X -> -X^T (the standard basis vectors are orthonormal
// for the positive definite form attached to the signature split).
inline AlgElement cartan_involution(const AlgElement& X) {
  return make_element(X.ambient(), -X.matrix().transpose());
}

inline Subalgebra reductive_from_an(const Subalgebra& an_part, ReductiveKind kind, std::string label) {
  std::vector<AlgElement> gens = an_part.basis();
  for (auto& b : an_part.basis()) gens.push_back(cartan_involution(b));
  auto s = Subalgebra::generated_by(an_part.ambient(), gens, std::move(label));
  s.set_reductive(kind);
  return s;
}

inline Subalgebra so1n(int n) { return reductive_from_an(so1n_an(n), ReductiveKind::so1n, "SO(1,n)"); }

// SU(1,m) inside so(2,n) for n in {2m, 2m+1}.
inline Subalgebra su1m(int m, int n) {
  if (n != 2 * m && n != 2 * m + 1) throw Error(ErrorCode::invalid_dimension, "SU(1,m) needs n = 2m or 2m+1");
  auto an = h_B_in(n, complex_structure(2 * m - 2));
  auto s = reductive_from_an(an, ReductiveKind::su1m, "SU(1,m)");
  s.set_meta("m", std::to_string(m));
  return s;
}

// Irreducible 5-dimensional representation of sl(2), embedded on the
// coordinates (1,2,3,n+1,n+2).
inline AlgElement l5_image(int n, const Q6& t, const Q6& u, const Q6& v) {
  const Q6 r6 = Q6::sqrt6();
  Matrix<Q6> p{{4 * t, 2 * u, 0, 0, 0},
               {2 * v, 2 * t, r6 * u, 0, 0},
               {0, r6 * v, 0, -r6 * u, 0},
               {0, 0, -r6 * v, -2 * t, -2 * u},
               {0, 0, 0, -2 * v, -4 * t}};
  const int N = n + 2;
  const int idx[5] = {0, 1, 2, N - 2, N - 1};
  ExactMatrix M(N, N);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) M(idx[i], idx[j]) = p(i, j);
  return make_element(so2n_ambient(n), M);
}

inline Subalgebra l5(int n) {
  auto s = Subalgebra::make(so2n_ambient(n), {l5_image(n, 1, 0, 0), l5_image(n, 0, 1, 0), l5_image(n, 0, 0, 1)}, "l5");
  s.set_reductive(ReductiveKind::l5);
  return s;
}

inline Subalgebra l5_an(int n) {
  return Subalgebra::make(so2n_ambient(n), {l5_image(n, 1, 0, 0), l5_image(n, 0, 1, 0)}, "l5_an");
}

enum class SL3Which { sl2_top_left, full_diagonal_torus, upper_triangular_2d };

inline std::string sl3_name(SL3Which w) {
  switch (w) {
    case SL3Which::sl2_top_left: return "sl2-top-left";
    case SL3Which::full_diagonal_torus: return "full-diagonal-torus";
    case SL3Which::upper_triangular_2d: return "upper-triangular-2d";
  }
  return "?";
}

inline Subalgebra sl3_subgroups(SL3Which which) {
  Ambient amb = sl3_ambient();
  auto E = [&](int i, int j) {
    ExactMatrix m(3, 3);
    m(i, j) = 1;
    return m;
  };
  auto diag = [&](long a, long b, long c) {
    ExactMatrix m(3, 3);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
  };
  switch (which) {
    case SL3Which::sl2_top_left:
      return Subalgebra::make(amb, {make_element(amb, diag(1, -1, 0)), make_element(amb, E(0, 1)), make_element(amb, E(1, 0))},
                              sl3_name(which));
    case SL3Which::full_diagonal_torus:
      return Subalgebra::make(amb, {make_element(amb, diag(2, -1, -1)), make_element(amb, diag(-1, 2, -1))},
                              sl3_name(which));
    case SL3Which::upper_triangular_2d:
      return Subalgebra::make(amb, {make_element(amb, diag(2, -1, -1)), make_element(amb, E(0, 1))}, sl3_name(which));
  }
  throw Error(ErrorCode::unknown_label, "unknown sl3 subgroup");
}

// ---------------------------------------------------------------------------
// Exemplars of the classification items

struct ExemplarParams {
  std::optional<Q6> p;            // exponent / slope parameter
  std::optional<Root> omega;      // distinguished root
  std::optional<Root> gamma;      // secondary root (where an item allows a choice)
  std::optional<int> x0_dim;      // dimension of X0 or of a root-space block
  std::optional<ExactVector> b, c, x;
  std::optional<ExactMatrix> B;
  std::optional<std::array<Q6, 2>> tau;
  std::optional<Q6> phi, eta, lambda;
  std::optional<Q6> scale;        // rescales the torus direction
  std::optional<Q6> zscale;       // rescales the nilpotent shift
};

inline const std::vector<std::string>& item_labels() {
  static const std::vector<std::string> labels{
      "T2.5-1", "T2.5-2", "T2.5-3", "T2.5-4", "T2.6-1", "T2.6-2", "T2.6-3", "T2.6-4", "T2.6-5", "T2.6-6", "T2.6-7",
      "T2.6-8", "T2.9-1", "T2.9-2", "T2.9-3", "T2.9-4", "T2.9-5", "T2.9-6", "T2.9-7", "T2.9-8", "P2.10",  "CDS"};
  return labels;
}

inline int minimal_n(const std::string& label) {
  if (label == "T2.5-2" || label == "T2.5-3" || label == "T2.9-6") return 4;
  return 3;
}

namespace detail {

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw Error(ErrorCode::invalid_params, msg);
}

inline Q6 sqnorm(const ExactVector& v) { return dot(v, v); }

inline ExactVector pad(const ExactVector& v, int len) {
  ExactVector out(len, Q6(0));
  for (std::size_t i = 0; i < v.size() && static_cast<int>(i) < len; ++i) out[i] = v[i];
  return out;
}

// h∩n of the orthogonal-type items: {phi*(E_phi + c.E_x + p E_eta)} + {x + (b.x) E_eta : x in X0}
// with X0 spanned by the first k coordinates and c supported on the rest.
inline std::vector<AlgElement> so1n_type_nilpotent(int n, const ExemplarParams& prm, int default_k, bool with_phi) {
  int k = prm.x0_dim.value_or(default_k);
  require(k >= 0 && k <= n - 2, "x0_dim must lie in [0, n-2]");
  Q6 p = prm.p.value_or(1);
  ExactVector b = prm.b.value_or(ExactVector(k, Q6(0)));
  ExactVector c = prm.c.value_or(ExactVector(n - 2 - k, Q6(0)));
  require(static_cast<int>(b.size()) == k, "b must have length x0_dim");
  require(static_cast<int>(c.size()) == n - 2 - k, "c must have length n-2-x0_dim");
  if (with_phi) require((sqnorm(b) - sqnorm(c) - 2 * p).sign() < 0, "need |b|^2 - |c|^2 - 2p < 0");
  std::vector<AlgElement> out;
  if (with_phi) {
    auto e = ANCoords::zero(n);
    e.phi = 1;
    for (int i = 0; i < n - 2 - k; ++i) e.x[k + i] = c[i];
    e.eta = p;
    out.push_back(an_element(n, e));
  }
  for (int i = 0; i < k; ++i) {
    auto e = ANCoords::zero(n);
    e.x[i] = 1;
    e.eta = b[i];
    out.push_back(an_element(n, e));
  }
  return out;
}

}  // namespace detail

inline Subalgebra exemplar(const std::string& label, int n, const ExemplarParams& prm = {}) {
  using detail::require;
  Ambient amb = so2n_ambient(n);
  if (n < minimal_n(label))
    throw Error(ErrorCode::unrealizable, label + " needs n >= " + std::to_string(minimal_n(label)));
  const Q6 s = prm.scale.value_or(1);
  const Q6 zs = prm.zscale.value_or(1);
  require(!s.is_zero() && !zs.is_zero(), "scale factors must be nonzero");
  auto finish = [&](std::vector<AlgElement> b) {
    auto sub = Subalgebra::make(amb, std::move(b), label);
    return sub;
  };
  auto tor = [&](long a, long b) { return torus_element(n, s * Q6(a), s * Q6(b)); };

  if (label == "T2.5-1") {
    Q6 p = prm.p.value_or(2);
    if (p == Q6(0)) return finish({});
    if (p == Q6(1)) return finish({x_element(n, unit_vector(n - 2, 0, zs))});
    if (p == Q6::ratio(3, 2)) {
      auto c = ANCoords::zero(n);
      c.phi = zs;
      c.y[0] = prm.lambda.value_or(1);
      require(!c.y[0].is_zero(), "lambda must be nonzero");
      return finish({an_element(n, c)});
    }
    if (p == Q6(2)) return finish({eta_element(n, zs)});
    throw Error(ErrorCode::invalid_params, "p must be one of 0, 1, 3/2, 2");
  }
  if (label == "T2.5-2" || label == "T2.6-2") {
    std::vector<AlgElement> b;
    if (label == "T2.6-2") b.push_back(tor(1, 1));
    if (prm.B) {
      auto hb = h_B_in(n, *prm.B);
      for (std::size_t i = 1; i < hb.basis().size(); ++i) b.push_back(hb.basis()[i]);
      return finish(std::move(b));
    }
    b.push_back(eta_element(n, zs));
    if (label == "T2.5-2") {
      auto c = ANCoords::zero(n);
      c.x[0] = 1;
      c.y[1] = prm.lambda.value_or(1);
      require(!c.y[1].is_zero(), "lambda must be nonzero");
      b.push_back(an_element(n, c));
    }
    return finish(std::move(b));
  }
  if (label == "T2.5-3") {
    int k = prm.x0_dim.value_or(2);
    require(k >= 2 && k <= n - 2, "x0_dim must lie in [2, n-2]");
    Q6 lam = prm.lambda.value_or(0);
    std::vector<AlgElement> b;
    for (int i = 0; i < k; ++i) {
      auto c = ANCoords::zero(n);
      c.x[i] = 1;
      c.y[i] = lam;
      b.push_back(an_element(n, c));
    }
    return finish(std::move(b));
  }
  if (label == "T2.5-4") {
    require(prm.x0_dim.value_or(1) >= 1, "x0_dim must be >= 1 (else the item degenerates to dimension 1)");
    return finish(detail::so1n_type_nilpotent(n, prm, 1, true));
  }
  if (label == "T2.6-1") {
    auto t = prm.tau.value_or(std::array<Q6, 2>{2, 1});
    require(!(t[0].is_zero() && t[1].is_zero()), "tau must be nonzero");
    return finish({torus_element(n, s * t[0], s * t[1])});
  }
  if (label == "T2.6-3") {
    int k = prm.x0_dim.value_or(1);
    require(k >= 1 && k <= n - 2, "x0_dim must lie in [1, n-2]");
    ExactVector b = prm.b.value_or(ExactVector(k, Q6(0)));
    require(static_cast<int>(b.size()) == k, "b must have length x0_dim");
    std::vector<AlgElement> out{tor(1, 0)};
    for (int i = 0; i < k; ++i) {
      auto c = ANCoords::zero(n);
      c.x[i] = 1;
      c.eta = b[i];
      out.push_back(an_element(n, c));
    }
    return finish(std::move(out));
  }
  if (label == "T2.6-4") {
    int k = prm.x0_dim.value_or(1);
    require(k >= 1 && k <= n - 2, "x0_dim must lie in [1, n-2]");
    std::vector<AlgElement> out{tor(0, 1)};
    for (int i = 0; i < k; ++i) out.push_back(y_element(n, unit_vector(n - 2, i, zs)));
    return finish(std::move(out));
  }
  if (label == "T2.6-5") {
    auto nil = detail::so1n_type_nilpotent(n, prm, 0, true);
    nil.insert(nil.begin(), tor(1, 0));
    return finish(std::move(nil));
  }
  if (label == "T2.6-6") {
    auto c = ANCoords::zero(n);
    c.phi = zs;
    c.y[0] = prm.lambda.value_or(1);
    require(!c.y[0].is_zero(), "lambda must be nonzero");
    return finish({tor(2, 1), an_element(n, c)});
  }
  if (label == "T2.6-7") {
    auto c = ANCoords::zero(n);
    c.phi = prm.phi.value_or(1);
    c.eta = prm.eta.value_or(-1);
    if (prm.x) c.x = detail::pad(*prm.x, n - 2);
    require(!c.phi.is_zero(), "phi must be nonzero");
    require((detail::sqnorm(c.x) + 2 * c.phi * c.eta).sign() < 0, "need |x|^2 + 2 phi eta < 0");
    return finish({tor(1, 0), an_element(n, c)});
  }
  if (label == "P2.10" || label == "T2.6-8") {
    Root w = prm.omega.value_or(Root::alpha);
    Q6 p = prm.p.value_or(label == "T2.6-8" ? Q6::ratio(1, 2) : Q6(0));
    if (label == "T2.6-8") require((abs(p) - Q6(1)).sign() < 0, "T2.6-8 needs |p| < 1");
    Root g = perpendicular_root(w);
    auto fw = root_functional(w), fg = root_functional(g);
    auto t = kernel_direction(p * Q6(fw[0]) + Q6(fg[0]), p * Q6(fw[1]) + Q6(fg[1]));
    auto sub = finish({torus_element(n, s * t[0], s * t[1]), root_vector(n, w)});
    sub.set_meta("omega", root_name(w));
    sub.set_meta("p", p.str());
    return sub;
  }
  if (label == "CDS") return finish({torus_element(n, 1, 0), torus_element(n, 0, 1)});

  // Non-semidirect items: h = R(tau + z) + h∩n with z in u_omega, omega(tau) = 0.
  if (label.rfind("T2.9-", 0) == 0) {
    int item = label.back() - '0';
    auto shifted = [&](Root w, const ExactVector& dir) {
      auto t = root_kernel(w);
      return torus_element(n, s * t[0], s * t[1]) + Q6(1) * root_vector(n, w, dir);
    };
    ExactVector e1 = unit_vector(n - 2, 0, zs);
    ExactVector one{zs};
    switch (item) {
      case 1: {
        int k = prm.x0_dim.value_or(1);
        require(k >= 0 && k <= n - 2, "x0_dim must lie in [0, n-2]");
        std::vector<AlgElement> b{shifted(Root::alpha, one)};
        for (int i = 0; i < k; ++i) b.push_back(x_element(n, unit_vector(n - 2, i)));
        return finish(std::move(b));
      }
      case 2: return finish({shifted(Root::alpha, one), eta_element(n)});
      case 3: return finish({shifted(Root::alpha_2beta, one), phi_element(n)});
      case 4: {
        Root sub = prm.gamma.value_or(Root::beta);
        require(sub == Root::beta || sub == Root::alpha_beta, "gamma must be beta or alpha+beta");
        return finish({shifted(Root::alpha_2beta, one), root_vector(n, sub)});
      }
      case 5: {
        Root w = prm.omega.value_or(Root::beta);
        require(w == Root::beta || w == Root::alpha_beta, "omega must be beta or alpha+beta");
        return finish({shifted(w, e1)});
      }
      case 6: {
        Root w = prm.omega.value_or(Root::alpha_beta);
        require(w == Root::beta || w == Root::alpha_beta, "omega must be beta or alpha+beta");
        Root g = perpendicular_root(w);
        auto x0 = shifted(w, e1);
        // the gamma-direction must be orthogonal to the shift, else ad(x0) has no eigenvector there
        if (n < 4) throw Error(ErrorCode::unrealizable, "T2.9-6 needs n >= 4");
        auto c = root_vector(n, g, unit_vector(n - 2, 1));
        return finish({x0, c + eta_element(n, prm.eta.value_or(0))});
      }
      case 7: {
        Root w = prm.omega.value_or(Root::beta);
        require(w == Root::beta || w == Root::alpha_beta, "omega must be beta or alpha+beta");
        return finish({shifted(w, e1), eta_element(n)});
      }
      case 8: return finish({shifted(Root::alpha_beta, e1), phi_element(n)});
      default: break;
    }
  }
  throw Error(ErrorCode::unknown_label, "unknown classification label '" + label + "'");
}

// Label the classifier is expected to return for an exemplar.
inline std::string expected_label(const std::string& label, const ExemplarParams& prm = {}) {
  if (label == "T2.6-8") return "P2.10";
  if (label == "P2.10") {
    Q6 p = prm.p.value_or(0);
    return (abs(p) - Q6(1)).sign() < 0 ? "P2.10" : "CDS";
  }
  if (label == "T2.5-1" && prm.p && prm.p->is_zero()) return "T2.5-1";
  return label;
}

inline std::vector<std::string> named_labels(int n) {
  std::vector<std::string> out{"a+n", "so1n_an", "SO(1,n)", "l5", "l5_an"};
  if (n % 2 == 0) {
    out.push_back("h_SU");
    out.push_back("h_B");
  }
  if (n >= 4) out.push_back("SU(1,m)");
  return out;
}

inline std::vector<std::string> sl3_labels() {
  return {"sl3:sl2-top-left", "sl3:full-diagonal-torus", "sl3:upper-triangular-2d"};
}

inline std::vector<std::string> catalog_labels(int n) {
  std::vector<std::string> out;
  for (auto& l : item_labels())
    if (n >= minimal_n(l)) out.push_back(l);
  for (auto& l : named_labels(n)) out.push_back(l);
  for (auto& l : sl3_labels()) out.push_back(l);
  return out;
}

// Any catalog entry by label.
inline Subalgebra catalog_entry(const std::string& label, int n, const ExemplarParams& prm = {}) {
  if (label == "a+n") return full_an(n);
  if (label == "so1n_an") return so1n_an(n);
  if (label == "SO(1,n)") return so1n(n);
  if (label == "l5") return l5(n);
  if (label == "l5_an") return l5_an(n);
  if (label == "h_SU") {
    if (n % 2) throw Error(ErrorCode::invalid_dimension, "h_SU needs even n");
    return h_SU(n / 2);
  }
  if (label == "h_B") {
    if (n % 2) throw Error(ErrorCode::invalid_dimension, "h_B needs even n");
    return h_B(n / 2, prm.B.value_or(complex_structure(n - 2)));
  }
  if (label == "SU(1,m)") return su1m(n / 2, n);
  if (label == "sl3:sl2-top-left") return sl3_subgroups(SL3Which::sl2_top_left);
  if (label == "sl3:full-diagonal-torus") return sl3_subgroups(SL3Which::full_diagonal_torus);
  if (label == "sl3:upper-triangular-2d") return sl3_subgroups(SL3Which::upper_triangular_2d);
  auto& items = item_labels();
  if (std::find(items.begin(), items.end(), label) != items.end()) return exemplar(label, n, prm);
  throw Error(ErrorCode::unknown_label, "unknown catalog label '" + label + "'");
}

// --- textual parameters (CLI) -------------------------------------------------

inline ExactVector parse_vector(const std::string& s) {
  ExactVector v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) v.push_back(Q6::parse(tok));
  return v;
}

inline ExactMatrix parse_matrix_rows(const std::string& s) {
  std::vector<ExactVector> rows;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ';')) rows.push_back(parse_vector(tok));
  if (rows.empty()) throw Error(ErrorCode::parse_error, "empty matrix");
  return rows_to_matrix(rows, rows[0].size());
}

inline ExemplarParams parse_params(const std::map<std::string, std::string>& kv) {
  ExemplarParams p;
  for (auto& [k, v] : kv) {
    if (k == "p") p.p = Q6::parse(v);
    else if (k == "omega" || k == "gamma") {
      auto r = parse_root(v);
      if (!r) throw Error(ErrorCode::parse_error, "unknown root '" + v + "'");
      (k == "omega" ? p.omega : p.gamma) = *r;
    } else if (k == "x0_dim") p.x0_dim = std::stoi(v);
    else if (k == "b") p.b = parse_vector(v);
    else if (k == "c") p.c = parse_vector(v);
    else if (k == "x") p.x = parse_vector(v);
    else if (k == "B") p.B = parse_matrix_rows(v);
    else if (k == "tau") {
      auto t = parse_vector(v);
      if (t.size() != 2) throw Error(ErrorCode::parse_error, "tau needs two entries");
      p.tau = std::array<Q6, 2>{t[0], t[1]};
    } else if (k == "phi") p.phi = Q6::parse(v);
    else if (k == "eta") p.eta = Q6::parse(v);
    else if (k == "lambda") p.lambda = Q6::parse(v);
    else if (k == "scale") p.scale = Q6::parse(v);
    else if (k == "zscale") p.zscale = Q6::parse(v);
    else throw Error(ErrorCode::parse_error, "unknown parameter '" + k + "'");
  }
  return p;
}

}  // namespace cartanlab
