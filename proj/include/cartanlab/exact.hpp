#pragma once

// Exact arithmetic in the real quadratic field Q(sqrt 6), dense matrices over
// an arbitrary field type, and univariate polynomials with Sturm counting.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cartanlab/error.hpp"

namespace cartanlab {

using Rational = mpq_class;

// a + b*sqrt(6) with a, b rational.
class Q6 {
 public:
  Q6() = default;
  Q6(int v) : a_(v) {}
  Q6(long v) : a_(v) {}
  Q6(Rational a) : a_(std::move(a)) { a_.canonicalize(); }
  Q6(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  static Q6 sqrt6() { return Q6(Rational(0), Rational(1)); }
  static Q6 ratio(long p, long q) { return Q6(Rational(p, q)); }
  // Exact binary value of a double.
  static Q6 from_double(double d) { return Q6(Rational(d)); }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  int sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    Rational a2 = a_ * a_, b2 = 6 * b_ * b_;
    return cmp(a2, b2) > 0 ? sa : sb;
  }

  Q6 operator-() const { return Q6(-a_, -b_); }
  Q6& operator+=(const Q6& o) {
    a_ += o.a_;
    if (sgn(o.b_) != 0) b_ += o.b_;
    return *this;
  }
  Q6& operator-=(const Q6& o) {
    a_ -= o.a_;
    if (sgn(o.b_) != 0) b_ -= o.b_;
    return *this;
  }
  Q6& operator*=(const Q6& o) {
    if (is_rational() && o.is_rational()) {
      a_ *= o.a_;
      return *this;
    }
    Rational na = a_ * o.a_ + 6 * b_ * o.b_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }
  Q6& operator/=(const Q6& o) {
    if (o.is_zero()) throw Error(ErrorCode::invalid_params, "division by zero");
    if (o.is_rational()) {
      a_ /= o.a_;
      if (sgn(b_) != 0) b_ /= o.a_;
      return *this;
    }
    Rational norm = o.a_ * o.a_ - 6 * o.b_ * o.b_;
    Q6 conj(o.a_ / norm, -o.b_ / norm);
    return *this *= conj;
  }

  friend Q6 operator+(Q6 x, const Q6& y) { return x += y; }
  friend Q6 operator-(Q6 x, const Q6& y) { return x -= y; }
  friend Q6 operator*(Q6 x, const Q6& y) { return x *= y; }
  friend Q6 operator/(Q6 x, const Q6& y) { return x /= y; }
  friend bool operator==(const Q6& x, const Q6& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator!=(const Q6& x, const Q6& y) { return !(x == y); }
  friend bool operator<(const Q6& x, const Q6& y) { return (x - y).sign() < 0; }
  friend bool operator>(const Q6& x, const Q6& y) { return (x - y).sign() > 0; }
  friend bool operator<=(const Q6& x, const Q6& y) { return (x - y).sign() <= 0; }
  friend bool operator>=(const Q6& x, const Q6& y) { return (x - y).sign() >= 0; }

  long double to_long_double() const {
    long double v = static_cast<long double>(a_.get_d());
    // get_d truncates to double; recover extra bits from the remainder
    Rational rem = a_ - Rational(a_.get_d());
    v += static_cast<long double>(rem.get_d());
    if (sgn(b_) != 0) {
      long double bb = static_cast<long double>(b_.get_d());
      bb += static_cast<long double>(Rational(b_ - Rational(b_.get_d())).get_d());
      v += bb * std::sqrt(6.0L);
    }
    return v;
  }
  double to_double() const { return static_cast<double>(to_long_double()); }

  std::string str() const {
    if (is_rational()) return a_.get_str();
    std::string s;
    if (sgn(a_) != 0) s = a_.get_str();
    if (b_ == 1) {
      s += s.empty() ? "sqrt6" : "+sqrt6";
    } else if (b_ == -1) {
      s += "-sqrt6";
    } else {
      if (!s.empty() && sgn(b_) > 0) s += "+";
      s += b_.get_str() + "*sqrt6";
    }
    return s;
  }

  // Accepts integers, fractions "p/q", decimals, "sqrt6", "r*sqrt6", "r+s*sqrt6".
  static Q6 parse(std::string_view text) {
    std::string s;
    for (char c : text)
      if (c != ' ') s.push_back(c);
    if (s.empty()) throw Error(ErrorCode::parse_error, "empty number");
    auto pos = s.find("sqrt6");
    if (pos == std::string::npos) return Q6(parse_rational(s));
    // split rational part and surd coefficient
    std::string head = s.substr(0, pos);
    if (pos + 5 != s.size()) throw Error(ErrorCode::parse_error, "bad number '" + s + "'");
    if (!head.empty() && head.back() == '*') head.pop_back();
    // find the last sign that separates the rational part
    std::size_t split = std::string::npos;
    for (std::size_t i = head.size(); i-- > 1;) {
      if ((head[i] == '+' || head[i] == '-') && head[i - 1] != 'e' && head[i - 1] != 'E') {
        split = i;
        break;
      }
    }
    Rational a(0);
    std::string coef = head;
    if (split != std::string::npos) {
      a = parse_rational(head.substr(0, split));
      coef = head.substr(split);
    }
    Rational b;
    if (coef.empty() || coef == "+")
      b = 1;
    else if (coef == "-")
      b = -1;
    else
      b = parse_rational(coef[0] == '+' ? coef.substr(1) : coef);
    return Q6(a, b);
  }

  static Rational parse_rational(const std::string& s) {
    if (s.empty()) throw Error(ErrorCode::parse_error, "empty number");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      Rational num = parse_rational(s.substr(0, slash));
      Rational den = parse_rational(s.substr(slash + 1));
      if (sgn(den) == 0) throw Error(ErrorCode::parse_error, "zero denominator in '" + s + "'");
      return num / den;
    }
    bool decimal = s.find_first_of(".eE") != std::string::npos;
    if (!decimal) {
      Rational r;
      std::string t = (s[0] == '+') ? s.substr(1) : s;
      if (r.set_str(t, 10) != 0) throw Error(ErrorCode::parse_error, "bad number '" + s + "'");
      r.canonicalize();
      return r;
    }
    // decimal literal: exact decimal value, not its binary approximation
    std::string mant = s, expo;
    auto e = s.find_first_of("eE");
    if (e != std::string::npos) {
      mant = s.substr(0, e);
      expo = s.substr(e + 1);
    }
    bool neg = false;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
      neg = mant[0] == '-';
      mant = mant.substr(1);
    }
    auto dot = mant.find('.');
    std::string digits = mant;
    long scale = 0;
    if (dot != std::string::npos) {
      digits = mant.substr(0, dot) + mant.substr(dot + 1);
      scale = static_cast<long>(mant.size() - dot - 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::parse_error, "bad number '" + s + "'");
    long ex = 0;
    if (!expo.empty()) {
      try {
        ex = std::stol(expo);
      } catch (...) {
        throw Error(ErrorCode::parse_error, "bad exponent in '" + s + "'");
      }
    }
    mpz_class num(digits, 10);
    mpz_class ten(10), p;
    long net = ex - scale;
    mpz_pow_ui(p.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(net < 0 ? -net : net));
    Rational r = net >= 0 ? Rational(num * p) : Rational(num, p);
    r.canonicalize();
    return neg ? Rational(-r) : r;
  }

 private:
  Rational a_{0};
  Rational b_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Q6& x) { return os << x.str(); }

template <class F>
inline bool is_zero(const F& x) {
  if constexpr (std::is_floating_point_v<F>)
    return x == F(0);
  else
    return x.is_zero();
}

// Dense row-major matrix over a field F.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), data_(r * c, F(0)) {}
  Matrix(std::initializer_list<std::initializer_list<F>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (auto& row : init) {
      if (row.size() != cols_) throw Error(ErrorCode::dimension_mismatch, "ragged matrix literal");
      for (auto& v : row) data_.push_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<F>& data() const { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const F& v) { return cartanlab::is_zero(v); });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!cartanlab::is_zero(o.data_[k])) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k)
      if (!cartanlab::is_zero(o.data_[k])) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const F& s) {
    for (auto& v : data_)
      if (!cartanlab::is_zero(v)) v *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const F& s) { return a *= s; }
  friend Matrix operator*(const F& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) {
    for (auto& v : a.data_)
      if (!cartanlab::is_zero(v)) v = -v;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::dimension_mismatch, "matrix product shapes");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (cartanlab::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const F& bkj = b(k, j);
          if (cartanlab::is_zero(bkj)) continue;
          c(i, j) += aik * bkj;
        }
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw Error(ErrorCode::dimension_mismatch, "matrix shapes differ");
  }
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<F> data_;
};

using ExactMatrix = Matrix<Q6>;
using ExactVector = std::vector<Q6>;

// Reduced row echelon form in place; returns pivot columns.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    F inv = F(1) / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!is_zero(m(r, j))) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      F f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref(m).size();
}

// Basis of {v : m v = 0}, as vectors.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m) {
  auto piv = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<F>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<F> v(m.cols(), F(0));
    v[f] = F(1);
    for (std::size_t r = 0; r < piv.size(); ++r)
      if (!is_zero(m(r, f))) v[piv[r]] = -m(r, f);
    out.push_back(std::move(v));
  }
  return out;
}

template <class F>
Matrix<F> rows_to_matrix(const std::vector<std::vector<F>>& rows, std::size_t width) {
  Matrix<F> m(rows.size(), width);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width) throw Error(ErrorCode::dimension_mismatch, "vector length");
    for (std::size_t j = 0; j < width; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

template <class F>
std::size_t rank_of_rows(const std::vector<std::vector<F>>& rows, std::size_t width) {
  if (rows.empty()) return 0;
  return rank(rows_to_matrix(rows, width));
}

// Reduced basis of the row span.
template <class F>
std::vector<std::vector<F>> row_basis(const std::vector<std::vector<F>>& rows, std::size_t width) {
  if (rows.empty()) return {};
  auto m = rows_to_matrix(rows, width);
  auto piv = rref(m);
  std::vector<std::vector<F>> out;
  for (std::size_t r = 0; r < piv.size(); ++r) {
    std::vector<F> v(width);
    for (std::size_t j = 0; j < width; ++j) v[j] = m(r, j);
    out.push_back(std::move(v));
  }
  return out;
}

// Coefficients c with sum c_i rows[i] = v, if v lies in the span.
template <class F>
std::optional<std::vector<F>> solve_in_span(const std::vector<std::vector<F>>& rows,
                                            const std::vector<F>& v) {
  std::size_t k = rows.size(), w = v.size();
  Matrix<F> m(w, k + 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < w; ++j) m(j, i) = rows[i][j];
  for (std::size_t j = 0; j < w; ++j) m(j, k) = v[j];
  auto piv = rref(m);
  if (!piv.empty() && piv.back() == k) return std::nullopt;
  std::vector<F> c(k, F(0));
  for (std::size_t r = 0; r < piv.size(); ++r) c[piv[r]] = m(r, k);
  return c;
}

template <class F>
bool in_span(const std::vector<std::vector<F>>& rows, const std::vector<F>& v) {
  return solve_in_span(rows, v).has_value();
}

// Intersection of two row spans, as a basis.
template <class F>
std::vector<std::vector<F>> span_intersection(const std::vector<std::vector<F>>& a,
                                              const std::vector<std::vector<F>>& b,
                                              std::size_t width) {
  if (a.empty() || b.empty()) return {};
  // solve sum x_i a_i - sum y_j b_j = 0
  Matrix<F> m(width, a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t r = 0; r < width; ++r) m(r, i) = a[i][r];
  for (std::size_t j = 0; j < b.size(); ++j)
    for (std::size_t r = 0; r < width; ++r) m(r, a.size() + j) = -b[j][r];
  std::vector<std::vector<F>> vecs;
  for (auto& z : nullspace(m)) {
    std::vector<F> v(width, F(0));
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!is_zero(z[i]))
        for (std::size_t r = 0; r < width; ++r) v[r] += z[i] * a[i][r];
    vecs.push_back(std::move(v));
  }
  return row_basis(vecs, width);
}

template <class F>
F determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::dimension_mismatch, "determinant of non-square");
  std::size_t n = m.rows();
  F det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return F(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    F inv = F(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      F f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j)
        if (!is_zero(m(c, j))) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  std::size_t n = a.rows();
  Matrix<F> m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n + i) = F(1);
  }
  auto piv = rref(m);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = m(i, n + j);
  return inv;
}

template <class F>
F dot(const std::vector<F>& a, const std::vector<F>& b) {
  F s(0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_zero(a[i]) && !is_zero(b[i])) s += a[i] * b[i];
  return s;
}

// ---------------------------------------------------------------------------
// Polynomials, coefficients from low to high degree.

template <class F>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<F> c) : c_(std::move(c)) { trim(); }
  static Polynomial constant(F v) { return Polynomial(std::vector<F>{std::move(v)}); }
  static Polynomial x() { return Polynomial(std::vector<F>{F(0), F(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  const F& lead() const { return c_.back(); }

  F operator()(const F& t) const {
    F v(0);
    for (std::size_t i = c_.size(); i-- > 0;) v = v * t + c_[i];
    return v;
  }

  Polynomial derivative() const {
    std::vector<F> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * F(static_cast<long>(i)));
    return Polynomial(d);
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<F> c(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(c);
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<F> c(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return Polynomial(c);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> c(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(c);
  }
  friend Polynomial operator*(const F& s, const Polynomial& a) {
    std::vector<F> c = a.c_;
    for (auto& v : c) v *= s;
    return Polynomial(c);
  }

  // Quotient and remainder.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw Error(ErrorCode::invalid_params, "polynomial division by zero");
    std::vector<F> r = c_;
    int dd = d.degree();
    std::vector<F> q(std::max(0, degree() - dd + 1), F(0));
    for (int k = degree(); k >= dd; --k) {
      if (cartanlab::is_zero(r[k])) continue;
      F f = r[k] / d.lead();
      q[k - dd] = f;
      for (int j = 0; j <= dd; ++j) r[k - dd + j] -= f * d.c_[j];
    }
    return {Polynomial(q), Polynomial(r)};
  }

  Polynomial monic() const {
    if (is_zero()) return *this;
    F inv = F(1) / lead();
    return inv * (*this);
  }

  friend Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      auto r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && cartanlab::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

template <class F>
int sign_of(const F& v) {
  if constexpr (std::is_floating_point_v<F>)
    return (v > 0) - (v < 0);
  else
    return v.sign();
}

// Number of distinct real roots, by a Sturm sequence of the square-free part.
template <class F>
int count_real_roots(const Polynomial<F>& p) {
  if (p.is_zero()) throw Error(ErrorCode::invalid_params, "zero polynomial has infinitely many roots");
  if (p.degree() <= 0) return 0;
  Polynomial<F> sq = p.divmod(gcd(p, p.derivative())).first;
  std::vector<Polynomial<F>> seq{sq, sq.derivative()};
  while (!seq.back().is_zero()) {
    auto r = seq[seq.size() - 2].divmod(seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(F(-1) * r);
  }
  auto variations = [&](bool at_plus_inf) {
    int v = 0, last = 0;
    for (auto& q : seq) {
      int s = sign_of(q.lead());
      if (!at_plus_inf && q.degree() % 2 == 1) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++v;
      last = s;
    }
    return v;
  };
  return variations(false) - variations(true);
}

template <class F>
bool has_real_root(const Polynomial<F>& p) {
  return count_real_roots(p) > 0;
}

// Interpolating polynomial through (xs[i], ys[i]) (Newton form, expanded).
template <class F>
Polynomial<F> interpolate(const std::vector<F>& xs, const std::vector<F>& ys) {
  std::size_t n = xs.size();
  std::vector<F> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  Polynomial<F> result = Polynomial<F>::constant(dd[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) {
    Polynomial<F> lin(std::vector<F>{-xs[k], F(1)});
    result = result * lin + Polynomial<F>::constant(dd[k]);
  }
  return result;
}

// det(x I - M) by interpolation at integer nodes.
template <class F>
Polynomial<F> characteristic_polynomial(const Matrix<F>& m) {
  std::size_t n = m.rows();
  std::vector<F> xs, ys;
  for (std::size_t k = 0; k <= n; ++k) {
    F x(static_cast<long>(k));
    xs.push_back(x);
    ys.push_back(determinant(x * Matrix<F>::identity(n) - m));
  }
  return interpolate(xs, ys);
}

inline Rational rational_abs(const Rational& r) { return sgn(r) < 0 ? Rational(-r) : r; }

inline Q6 abs(const Q6& x) { return x.sign() < 0 ? -x : x; }

}  // namespace cartanlab
