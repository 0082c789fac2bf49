#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "homcalc/fp.hpp"

namespace homcalc {

/// Column vector of residues.
using Vec = std::vector<std::uint32_t>;

/// Dense row-major matrix over F_p. Entries are always canonical residues.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::uint32_t p, std::size_t rows, std::size_t cols);

  static Matrix identity(std::uint32_t p, std::size_t n);
  /// Entries are reduced mod p; every row must have the same length.
  static Matrix from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows,
                          std::size_t cols = 0);
  static Matrix column(std::uint32_t p, std::span<const std::uint32_t> v);
  /// Columns are the given vectors (each of length `rows`).
  static Matrix from_columns(std::uint32_t p, std::size_t rows, const std::vector<Vec>& cols);

  std::uint32_t prime() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::uint32_t v) { data_[r * cols_ + c] = v % p_; }
  void add_to(std::size_t r, std::size_t c, std::uint32_t v) {
    auto& x = data_[r * cols_ + c];
    x = fp::add(x, v, p_);
  }
  std::span<std::uint32_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::uint32_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<std::uint32_t>& entries() const { return data_; }

  Vec column_vector(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;
  Matrix scaled(std::uint32_t s) const;

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  void add_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix select_rows(std::span<const std::size_t> idx) const;
  Matrix select_cols(std::span<const std::size_t> idx) const;

  static Matrix hcat(const Matrix& a, const Matrix& b);
  static Matrix vcat(const Matrix& a, const Matrix& b);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Vec operator*(const Matrix& a, const Vec& v);

  bool operator==(const Matrix& o) const = default;

 private:
  std::uint32_t p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};

/// Reduced row-echelon form; pivots chosen as the first nonzero entry.
RowEchelon rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Right null space. Column j has a 1 in free column `free_columns[j]` and
/// zeros in every other free column.
struct KernelBasis {
  Matrix basis;
  std::vector<std::size_t> free_columns;
};
KernelBasis kernel_with_free(const Matrix& m);
Matrix kernel_basis(const Matrix& m);

/// Some x with m*x = b (free variables zero in rref coordinates), or nullopt
/// when inconsistent. `b` may hold several columns; all must be consistent.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

/// Canonical basis (as columns) of the column space: transposed nonzero rows
/// of rref(m^T).
Matrix column_space_basis(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

/// Incrementally maintained echelon basis of a subspace of F_p^n.
class EchelonSpan {
 public:
  EchelonSpan(std::uint32_t p, std::size_t n) : p_(p), n_(n) {}
  /// Inserts v; returns true when v was not already in the span.
  bool insert(Vec v);
  bool contains(Vec v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }

 private:
  void reduce(Vec& v) const;

  std::uint32_t p_;
  std::size_t n_;
  std::vector<Vec> rows_;             // each normalised, leading 1 at pivots_[i]
  std::vector<std::size_t> pivots_;
};

}  // namespace homcalc
