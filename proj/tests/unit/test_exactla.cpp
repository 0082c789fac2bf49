#include <random>

#include "common.hpp"

using namespace t;

TEST_CASE("rref on small inputs") {
  const RowEchelon empty = rref(Matrix(2, 0, 0));
  CHECK(empty.reduced.rows() == 0);
  CHECK(empty.pivot_cols.empty());

  const RowEchelon id = rref(Matrix::identity(2, 3));
  CHECK(id.reduced == Matrix::identity(2, 3));
  CHECK(id.pivot_cols == std::vector<std::size_t>{0, 1, 2});

  const RowEchelon ones = rref(mat(2, {{1, 1}, {1, 1}}));
  CHECK(ones.reduced == mat(2, {{1, 1}, {0, 0}}));
  CHECK(ones.pivot_cols == std::vector<std::size_t>{0});
}

TEST_CASE("kernel bases") {
  CHECK(kernel_basis(Matrix::identity(3, 4)).cols() == 0);
  const Matrix full = kernel_basis(Matrix(5, 2, 3));
  CHECK(full.cols() == 3);
  CHECK(rank(full) == 3);
  const Matrix k = kernel_basis(mat(2, {{1, 1}, {1, 1}}));
  REQUIRE(k.cols() == 1);
  CHECK(k.column_vector(0) == Vec{1, 1});
}

TEST_CASE("solve") {
  const Matrix b = mat(3, {{2}, {1}, {0}});
  CHECK(*solve(Matrix::identity(3, 3), b) == b);
  CHECK_FALSE(solve(Matrix(2, 2, 2), mat(2, {{1}, {0}})).has_value());
  const auto x = solve(mat(3, {{1, 1}, {0, 1}}), mat(3, {{2}, {1}}));
  REQUIRE(x.has_value());
  CHECK(*x == mat(3, {{1}, {1}}));
}

TEST_CASE("random matrices satisfy rank-nullity and idempotent rref") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t p = trial % 2 ? 3 : 5;
    const std::size_t r = rng() % 7, c = rng() % 7;
    Matrix m(p, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng() % p);
    const RowEchelon e = rref(m);
    CHECK(rref(e.reduced).reduced == e.reduced);
    const Matrix k = kernel_basis(m);
    CHECK(k.cols() + rank(m) == c);
    CHECK((m * k).is_zero());
  }
}

TEST_CASE("echelon span membership") {
  EchelonSpan s(3, 3);
  CHECK(s.insert({1, 2, 0}));
  CHECK(s.insert({0, 1, 1}));
  CHECK_FALSE(s.insert({1, 0, 1}));  // (1,2,0) + (0,1,1) mod 3
  CHECK(s.contains({2, 1, 0}));
  CHECK(s.dim() == 2);
}
