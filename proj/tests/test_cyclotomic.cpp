#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "rank2/cyclotomic.hpp"
#include "rank2/errors.hpp"

using namespace rank2;

namespace {

CycNum random_cyc(std::mt19937& rng, int n, int spread = 3) {
  std::uniform_int_distribution<int> d(-spread, spread);
  std::vector<mpq_class> c(euler_phi(n));
  for (auto& x : c) x = mpq_class(d(rng), 1 + std::abs(d(rng)));
  return CycNum(n, c);
}

std::complex<double> root(int n, int k) {
  const double t = 2 * std::numbers::pi * k / n;
  return {std::cos(t), std::sin(t)};
}

// Gaussian elimination on the complex embedding with partial pivoting.
int float_rank(std::vector<std::vector<std::complex<double>>> a, double tol = 1e-7) {
  const int rows = static_cast<int>(a.size()), cols = rows ? static_cast<int>(a[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    for (int i = r; i < rows; ++i)
      if (std::abs(a[i][c]) > std::abs(a[p][c])) p = i;
    if (std::abs(a[p][c]) < tol) continue;
    std::swap(a[p], a[r]);
    for (int i = r + 1; i < rows; ++i) {
      const auto f = a[i][c] / a[r][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

CycMatrix random_matrix(std::mt19937& rng, int rows, int cols, int n, double density = 0.6) {
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> k(0, n - 1), s(-2, 2);
  CycMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (u(rng) < density) m(r, c) = CycNum::zeta(n, k(rng)) * CycNum(s(rng));
  return m;
}

// A rank-deficient matrix: product of random rows×k and k×cols factors.
CycMatrix low_rank(std::mt19937& rng, int rows, int cols, int k, int n) {
  return random_matrix(rng, rows, k, n, 0.8) * random_matrix(rng, k, cols, n, 0.8);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<long>{1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<long>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
  CHECK(cyclotomic_polynomial(8) == std::vector<long>{1, 0, 0, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  for (int n = 1; n <= 30; ++n) {
    CAPTURE(n);
    const auto& p = cyclotomic_polynomial(n);
    CHECK(static_cast<int>(p.size()) - 1 == euler_phi(n));
    // Every primitive n-th root of unity is a zero.
    for (int k = 1; k <= n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      std::complex<double> v = 0;
      for (std::size_t i = 0; i < p.size(); ++i) v += static_cast<double>(p[i]) * std::pow(root(n, k), i);
      CHECK(std::abs(v) < 1e-8);
    }
  }
}

TEST_CASE("cyclotomic arithmetic examples") {
  CHECK(CycNum::zeta(4) * CycNum::zeta(4) == CycNum(-1));
  CHECK(CycNum::zeta(3) + CycNum::zeta(3, 2) == CycNum(-1));
  const CycNum a = CycNum(1) + CycNum::zeta(5);
  CHECK((a * a.inv()).is_one());
  CHECK(CycNum::zeta(2) == CycNum(-1));
  CHECK(CycNum::zeta(6, 3) == CycNum(-1));
  CHECK(CycNum::zeta(6, 2) == CycNum::zeta(3));
  CHECK(CycNum::zeta(12, 4) == CycNum::zeta(3));
  CHECK(CycNum::zeta(7).pow(7).is_one());
  CHECK(CycNum::zeta(7).pow(-1) == CycNum::zeta(7, 6));
  CHECK(CycNum::zeta(8).pow(2) == CycNum::zeta(4));
  CHECK(CycNum(mpq_class(2, 4)).coeffs()[0] == mpq_class(1, 2));
  CHECK_THROWS_AS(CycNum(0).inv(), ArgumentError);
  CHECK_THROWS_AS((CycNum::zeta(3) - CycNum::zeta(3)).inv(), ArgumentError);
  // Cross-conductor sum lands in the lcm field.
  const CycNum s = CycNum::zeta(3) + CycNum::zeta(4);
  CHECK(s.conductor() == 12);
  CHECK(embedding_agrees(s, root(3, 1) + root(4, 1)));
  CHECK(CycNum::zeta(5).to_string() == "z5");
  CHECK((CycNum(1) - CycNum::zeta(5, 2) * CycNum(2)).to_string() == "1 - 2*z5^2");
  CHECK(CycNum(0).to_string() == "0");
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(11);
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    for (int t = 0; t < 25; ++t) {
      const CycNum a = random_cyc(rng, n), b = random_cyc(rng, n), c = random_cyc(rng, n);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == CycNum(0));
      CHECK(a * CycNum(1) == a);
      if (!a.is_zero()) {
        CHECK((a * a.inv()).is_one());
        CHECK((b / a) * a == b);
      }
      CHECK(embedding_agrees(a * b + c, a.to_complex() * b.to_complex() + c.to_complex()));
    }
  }
}

TEST_CASE("embedding consistency on random expressions") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> cond(1, 24), op(0, 3);
  for (int t = 0; t < 300; ++t) {
    const int n1 = cond(rng), n2 = cond(rng);
    CycNum x = random_cyc(rng, n1);
    std::complex<double> z = x.to_complex();
    for (int s = 0; s < 4; ++s) {
      const CycNum y = random_cyc(rng, s % 2 ? n1 : n2);
      const auto w = y.to_complex();
      switch (op(rng)) {
        case 0: x += y; z += w; break;
        case 1: x -= y; z -= w; break;
        case 2: x *= y; z *= w; break;
        default:
          if (!y.is_zero()) {
            x /= y;
            z /= w;
          }
      }
    }
    CHECK(embedding_agrees(x, z, 1e-9 * std::max(1.0, std::abs(z))));
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(CycMatrix::identity(3)) == 3);
  CHECK(rank(CycMatrix(3, 4)) == 0);
  const auto z = CycNum::zeta(3);
  const auto m = CycMatrix::from_rows({{1, z}, {z * z, 1}});
  CHECK(rank(m) == 1);
  CHECK(rank(SparseMatrix::from_dense(m)) == 1);
  CHECK(rank(CycMatrix(0, 0)) == 0);
  CHECK(rank(CycMatrix::from_rows({{0, 0, 1}, {0, 2, 0}, {3, 0, 0}})) == 3);
}

TEST_CASE("rank properties on random matrices") {
  std::mt19937 rng(17);
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + t % 8;
    CAPTURE(n);
    const int r = 2 + t % 5, c = 2 + (t * 3) % 6, k = 1 + t % 3;
    const CycMatrix a = t % 2 ? random_matrix(rng, r, c, n) : low_rank(rng, r, c, k, n);
    const CycMatrix b = random_matrix(rng, c, 3, n);
    const int ra = rank(a);
    CHECK(ra == rank(a.transpose()));
    CHECK(ra == rank(SparseMatrix::from_dense(a)));
    CHECK(ra == float_rank(a.to_complex()));
    CHECK(rank(a * b) <= std::min(ra, rank(b)));
    const CycMatrix ker = kernel_basis(a);
    CHECK(ker.cols() + ra == a.cols());
    CHECK(rank(ker) == ker.cols());
    const CycMatrix zero = a * ker;
    for (int i = 0; i < zero.rows(); ++i)
      for (int j = 0; j < zero.cols(); ++j) CHECK(zero(i, j).is_zero());
    const CycMatrix basis = column_space_basis(a);
    CHECK(basis.cols() == ra);
    CHECK(rank(basis) == ra);
  }
}

TEST_CASE("mixed conductors in a matrix") {
  CycMatrix m(2, 2);
  m(0, 0) = CycNum::zeta(4);
  m(0, 1) = CycNum::zeta(3);
  m(1, 0) = CycNum::zeta(4) * CycNum::zeta(6);
  m(1, 1) = CycNum::zeta(3) * CycNum::zeta(6);
  CHECK(m.conductor() == 12);
  CHECK(rank(m) == 1);
  m.unify();
  CHECK(m(0, 1).conductor() == 12);
}

TEST_CASE("sparse matrices") {
  std::mt19937 rng(23);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + t % 6;
    const CycMatrix a = random_matrix(rng, 4, 5, n, 0.4), b = random_matrix(rng, 5, 3, n, 0.4),
                    c = random_matrix(rng, 4, 5, n, 0.4);
    const auto sa = SparseMatrix::from_dense(a), sb = SparseMatrix::from_dense(b), sc = SparseMatrix::from_dense(c);
    CHECK((sa * sb).to_dense() == a * b);
    CHECK((sa + sc).to_dense() == a + c);
    CHECK((sa - sc).to_dense() == a - c);
    CHECK(sa.transpose().to_dense() == a.transpose());
    CHECK(sa - sa == SparseMatrix(4, 5));
    const auto scaled = sa.scaled(CycNum::zeta(n)).to_dense();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 5; ++j) CHECK(scaled(i, j) == a(i, j) * CycNum::zeta(n));
  }
  SparseMatrix s(3, 3);
  s.add(0, 0, CycNum(2));
  s.add(0, 0, CycNum(-2));
  CHECK(s.nnz() == 0);
  CHECK_THROWS_AS(s.add(3, 0, CycNum(1)), ArgumentError);
  CHECK(SparseMatrix::identity(4) * SparseMatrix::identity(4) == SparseMatrix::identity(4));
  const std::vector<int> rows{2, 0}, cols{1};
  auto full = SparseMatrix::from_dense(CycMatrix::from_rows({{1, 2}, {3, 4}, {5, 6}}));
  CHECK(full.submatrix(rows, cols).to_dense() == CycMatrix::from_rows({{6}, {2}}));
}
