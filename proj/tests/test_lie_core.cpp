#include <random>

#include "catch_amalgamated.hpp"
#include "cartanlab/lie_core.hpp"
#include "oracles.hpp"

using namespace cartanlab;
using Catch::Approx;

TEST_CASE("Q(sqrt6) arithmetic and exact sign") {
  Q6 r = Q6::sqrt6();
  CHECK(r * r == Q6(6));
  CHECK((Q6(1) + r) * (Q6(1) - r) == Q6(-5));
  CHECK((Q6(5) - Q6(2) * r).sign() > 0);  // 5 - 4.898...
  CHECK((Q6(2) * r - Q6(5)).sign() < 0);
  CHECK((Q6(49, 0) - Q6(0, 20)).sign() > 0);
  CHECK((Q6(Rational(2449, 1000)) - r).sign() < 0);  // sqrt6 = 2.44948...
  CHECK((Q6(Rational(2450, 1000)) - r).sign() > 0);
  CHECK(Q6(1) / (Q6(1) + r) * (Q6(1) + r) == Q6(1));
  CHECK((Q6(1) / r).to_double() == Approx(1 / std::sqrt(6.0)));
  CHECK(abs(Q6(-3) + r) == Q6(3) - r);
}

TEST_CASE("Q(sqrt6) parsing") {
  CHECK(Q6::parse("3/4") == Q6(Rational(3, 4)));
  CHECK(Q6::parse("0.1") == Q6(Rational(1, 10)));
  CHECK(Q6::parse("-2.5e-1") == Q6(Rational(-1, 4)));
  CHECK(Q6::parse("sqrt6") == Q6::sqrt6());
  CHECK(Q6::parse("-sqrt6") == -Q6::sqrt6());
  CHECK(Q6::parse("1/2*sqrt6") == Q6(Rational(0), Rational(1, 2)));
  CHECK(Q6::parse("1+2*sqrt6") == Q6(Rational(1), Rational(2)));
  CHECK(Q6::parse("1/3-sqrt6") == Q6(Rational(1, 3), Rational(-1)));
  for (auto s : {"7/3", "-2*sqrt6", "1/2+sqrt6", "-3/5-7/2*sqrt6"}) CHECK(Q6::parse(Q6::parse(s).str()) == Q6::parse(s));
  CHECK_THROWS_AS(Q6::parse("abc"), Error);
  CHECK_THROWS_AS(Q6::parse("1/0"), Error);
}

TEST_CASE("exact rank, nullspace and determinant agree with floating point") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 2 + trial % 5, c = 2 + (trial * 3) % 6;
    auto m = oracle::random_matrix(rng, r, c, -2, 2);
    // force rank deficiency half of the time
    if (trial % 2 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = m(0, j) + Q6(2) * m(1 % r, j);
    CHECK(static_cast<int>(rank(m)) == oracle::numeric_rank(oracle::to_double(m)));
    auto ns = nullspace(m);
    CHECK(ns.size() == c - rank(m));
    for (auto& v : ns) {
      ExactMatrix col(c, 1);
      for (std::size_t j = 0; j < c; ++j) col(j, 0) = v[j];
      CHECK((m * col).is_zero());
    }
    if (r == c) CHECK(determinant(m).to_double() == Approx(oracle::to_double(m).determinant()).margin(1e-9));
  }
}

TEST_CASE("inverse and characteristic polynomial") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto m = oracle::random_matrix(rng, 4, 4);
    auto inv = inverse(m);
    if (determinant(m).is_zero()) {
      CHECK(!inv);
      continue;
    }
    REQUIRE(inv);
    CHECK(m * *inv == ExactMatrix::identity(4));
    auto p = characteristic_polynomial(m);
    REQUIRE(p.degree() == 4);
    CHECK(p.lead() == Q6(1));
    // Cayley-Hamilton
    ExactMatrix acc(4, 4), pw = ExactMatrix::identity(4);
    for (auto& c : p.coeffs()) {
      acc += c * pw;
      pw = pw * m;
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("Sturm real-root count matches companion eigenvalues") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    // product of random linear and quadratic factors with distinct roots
    Polynomial<Q6> p = Polynomial<Q6>::constant(Q6(1));
    std::vector<int> used;
    int lin = trial % 4, quad = (trial / 4) % 3;
    for (int i = 0; i < lin; ++i) {
      int r;
      do r = d(rng);
      while (std::find(used.begin(), used.end(), r) != used.end());
      used.push_back(r);
      p = p * Polynomial<Q6>(std::vector<Q6>{Q6(-r), Q6(1)});
    }
    for (int i = 0; i < quad; ++i) p = p * Polynomial<Q6>(std::vector<Q6>{Q6(d(rng) * d(rng) + 1 + i), Q6(i), Q6(1)});
    std::vector<double> c;
    for (auto& e : p.coeffs()) c.push_back(e.to_double());
    CHECK(count_real_roots(p) == oracle::real_root_count(c));
  }
  // repeated roots are counted once
  auto sq = Polynomial<Q6>(std::vector<Q6>{Q6(-1), Q6(1)});
  CHECK(count_real_roots(sq * sq * sq) == 1);
}

TEST_CASE("a+n matrices are skew for the form and coordinates round-trip") {
  std::mt19937_64 rng(3);
  for (int n = 3; n <= 7; ++n) {
    auto Q = oracle::gram(n);
    for (int trial = 0; trial < 10; ++trial) {
      ExactVector v;
      for (int i = 0; i < 2 * n; ++i) v.push_back(oracle::random_rational(rng));
      auto X = an_element_flat(n, v);
      CHECK(preserves_form(form_matrix(n), X.matrix()));
      auto M = oracle::to_double(X.matrix());
      CHECK((M.transpose() * Q + Q * M).norm() == Approx(0).margin(1e-12));
      auto c = extract_coords(n, X.matrix());
      REQUIRE(c);
      CHECK(c->flat() == v);
    }
  }
}

TEST_CASE("form matrix and signature basis") {
  for (int n = 3; n <= 6; ++n) {
    auto s = form_matrix(n);
    CHECK(s.Q * s.Q == ExactMatrix::identity(n + 2));
    // P is orthogonal and diagonalizes Q to signature (2, n)
    auto P = s.P;
    CHECK((P * P.transpose() - WideMatrix::Identity(n + 2, n + 2)).norm() < 1e-15L);
    WideMatrix Q(n + 2, n + 2);
    for (int i = 0; i < n + 2; ++i)
      for (int j = 0; j < n + 2; ++j) Q(i, j) = s.Q(i, j).to_long_double();
    WideMatrix D = P * Q * P.transpose();
    int pos = 0, neg = 0;
    for (int i = 0; i < n + 2; ++i) {
      if (D(i, i) > 0.5L) ++pos;
      if (D(i, i) < -0.5L) ++neg;
    }
    CHECK(pos == n);
    CHECK(neg == 2);
    CHECK((D - WideMatrix(D.diagonal().asDiagonal())).norm() < 1e-15L);
  }
  CHECK_THROWS_AS(so2n_ambient(2), Error);
}

TEST_CASE("root spaces are eigenspaces of the torus with the tabulated roots") {
  const int n = 5;
  // value table of (alpha, beta, alpha+beta, alpha+2beta) at (t1, t2) = (3, 2)
  const std::map<Root, int> expected{{Root::alpha, 1}, {Root::beta, 2}, {Root::alpha_beta, 3}, {Root::alpha_2beta, 5}};
  auto tau = ANCoords::zero(n);
  tau.t1 = 3;
  tau.t2 = 2;
  auto T = an_element(n, tau);
  for (Root r : kPositiveRoots) {
    CHECK(root_value(r, 3, 2) == Q6(expected.at(r)));
    for (int idx : root_space_indices(r, n)) {
      auto E = an_element_flat(n, [&] {
        ExactVector v(2 * n, Q6(0));
        v[idx] = 1;
        return v;
      }());
      auto br = bracket(T, E);
      CHECK(br.matrix() == Q6(expected.at(r)) * E.matrix());
      CHECK(root_of_index(idx, n) == r);
    }
  }
  CHECK(root_height(Root::alpha) == 1);
  CHECK(root_height(Root::beta) == 1);
  CHECK(root_height(Root::alpha_beta) == 2);
  CHECK(root_height(Root::alpha_2beta) == 3);
  CHECK(parse_root("alpha+2beta") == Root::alpha_2beta);
  CHECK(!parse_root("gamma"));
}

TEST_CASE("brackets between root spaces land in the sum root space") {
  const int n = 4;
  auto e = [&](int idx) {
    ExactVector v(2 * n, Q6(0));
    v[idx] = 1;
    return an_element_flat(n, v);
  };
  CoordLayout L{n};
  // [E_alpha, E_beta] in u_{alpha+beta}, [E_beta, E_{alpha+beta}] in u_{alpha+2beta}
  auto c1 = bracket(e(L.phi()), e(L.y(0)));
  REQUIRE(c1.in_an());
  auto comp = root_components(c1);
  CHECK(!comp.at("alpha+beta")[0].is_zero());
  auto c2 = bracket(e(L.y(0)), e(L.x(0)));
  CHECK(!root_components(c2).at("alpha+2beta")[0].is_zero());
  // orthogonal x and y directions commute
  CHECK(bracket(e(L.y(0)), e(L.x(1))).is_zero());
}

TEST_CASE("exponential agrees with Eigen and stays in the group") {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> nd;
  for (int n = 3; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      // random element of so(2,n): Q S with S skew
      const int N = n + 2;
      ExactMatrix S(N, N);
      for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
          S(i, j) = oracle::random_rational(rng, -2, 2);
          S(j, i) = -S(i, j);
        }
      auto X = make_element(so2n_ambient(n), form_matrix(n).Q * S);
      auto g = exp_element(X, 0.7L);
      Eigen::MatrixXd ref = (0.7 * oracle::to_double(X.matrix())).exp();
      Eigen::MatrixXd got = g.g.cast<double>();
      CHECK((got - ref).norm() / ref.norm() < 1e-12);
      CHECK(group_residual(g) < 1e-12L * ref.norm() * ref.norm());
    }
  }
}

TEST_CASE("exact exponential of nilpotent elements") {
  const int n = 4;
  ExactVector v{0, 0, 1, 2, Q6(Rational(1, 2)), -1, 3, 5};
  auto Z = an_element_flat(n, v);
  auto g = exp_nilpotent(Z.matrix());
  auto ginv = exp_nilpotent(-Z.matrix());
  CHECK(g * ginv == ExactMatrix::identity(n + 2));
  auto s = form_matrix(n);
  CHECK(g.transpose() * s.Q * g == s.Q);
  Eigen::MatrixXd ref = oracle::to_double(Z.matrix()).exp();
  CHECK((oracle::to_double(g) - ref).norm() < 1e-12);
  CHECK_THROWS_AS(exp_nilpotent(ExactMatrix::identity(3)), Error);
}

TEST_CASE("sl3 elements must be traceless") {
  ExactMatrix m(3, 3);
  m(0, 0) = 1;
  CHECK_THROWS_AS(make_element(sl3_ambient(), m), Error);
  m(2, 2) = -1;
  CHECK_NOTHROW(make_element(sl3_ambient(), m));
}
