#pragma once

#include <Eigen/Dense>

#include <cmath>

namespace cartanlab {

using WideMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
using WideVector = Eigen::Matrix<long double, Eigen::Dynamic, 1>;

// Matrix exponential: degree-13 Pade approximant with scaling and squaring.
// The argument is scaled to 1-norm at most 1, well inside the approximant's
// accuracy region for extended precision.
template <class Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> expm(
    const Eigen::MatrixBase<Derived>& A_in) {
  using S = typename Derived::Scalar;
  using M = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = A_in.rows();
  M A = A_in;
  static const S b[] = {S(64764752532480000.0L), S(32382376266240000.0L), S(7771770303897600.0L),
                        S(1187353796428800.0L),  S(129060195264000.0L),   S(10559470521600.0L),
                        S(670442572800.0L),      S(33522128640.0L),       S(1323241920.0L),
                        S(40840800.0L),          S(960960.0L),            S(16380.0L),
                        S(182.0L),               S(1.0L)};
  S norm1 = A.cwiseAbs().colwise().sum().maxCoeff();
  int s = 0;
  if (norm1 > S(1)) s = static_cast<int>(std::ceil(std::log2(static_cast<double>(norm1))));
  if (s > 0) A /= std::ldexp(S(1), s);
  M I = M::Identity(n, n);
  M A2 = A * A, A4 = A2 * A2, A6 = A4 * A2;
  M U = A * (A6 * (b[13] * A6 + b[11] * A4 + b[9] * A2) + b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * I);
  M V = A6 * (b[12] * A6 + b[10] * A4 + b[8] * A2) + b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I;
  M R = (V - U).partialPivLu().solve(V + U);
  for (int k = 0; k < s; ++k) R = R * R;
  return R;
}

}  // namespace cartanlab
