#include "homcalc/matrix.hpp"

#include <algorithm>

namespace homcalc {

bool fp::is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Matrix::Matrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (p < 2 || p > fp::kMaxPrime) throw Error(ErrorCode::NotPrime, "characteristic out of range");
}

Matrix Matrix::identity(std::uint32_t p, std::size_t n) {
  Matrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1 % p;
  return m;
}

Matrix Matrix::from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows,
                         std::size_t cols) {
  if (!rows.empty()) cols = rows.front().size();
  Matrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = fp::reduce(rows[r][c], p);
  }
  return m;
}

Matrix Matrix::column(std::uint32_t p, std::span<const std::uint32_t> v) {
  Matrix m(p, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.data_[i] = v[i] % p;
  return m;
}

Matrix Matrix::from_columns(std::uint32_t p, std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(p, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column length");
    for (std::size_t r = 0; r < rows; ++r) m.data_[r * m.cols_ + c] = cols[c][r] % p;
  }
  return m;
}

Vec Matrix::column_vector(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = data_[r * cols_ + c];
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](std::uint32_t x) { return x == 0; });
}

Matrix Matrix::scaled(std::uint32_t s) const {
  Matrix m = *this;
  s %= p_;
  for (auto& x : m.data_) x = fp::mul(x, s, p_);
  return m;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::DimensionMismatch, "block out of range");
  Matrix b(p_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>((r0 + r) * cols_ + c0), nc,
                b.data_.begin() + static_cast<std::ptrdiff_t>(r * nc));
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw Error(ErrorCode::DimensionMismatch, "block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    std::copy_n(b.data_.begin() + static_cast<std::ptrdiff_t>(r * b.cols_), b.cols_,
                data_.begin() + static_cast<std::ptrdiff_t>((r0 + r) * cols_ + c0));
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw Error(ErrorCode::DimensionMismatch, "block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) add_to(r0 + r, c0 + c, b(r, c));
}

Matrix Matrix::select_rows(std::span<const std::size_t> idx) const {
  Matrix m(p_, idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(idx[i] * cols_), cols_,
                m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
  return m;
}

Matrix Matrix::select_cols(std::span<const std::size_t> idx) const {
  Matrix m(p_, rows_, idx.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t i = 0; i < idx.size(); ++i) m.data_[r * idx.size() + i] = data_[r * cols_ + idx[i]];
  return m;
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "hcat row count");
  Matrix m(a.p_, a.rows_, a.cols_ + b.cols_);
  m.set_block(0, 0, a);
  m.set_block(0, a.cols_, b);
  return m;
}

Matrix Matrix::vcat(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "vcat column count");
  Matrix m(a.p_, a.rows_ + b.rows_, a.cols_);
  m.set_block(0, 0, a);
  m.set_block(a.rows_, 0, b);
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "product shape");
  if (a.p_ != b.p_) throw Error(ErrorCode::DimensionMismatch, "mixed characteristics");
  const std::uint32_t p = a.p_;
  Matrix c(p, a.rows_, b.cols_);
  std::vector<std::uint64_t> acc(b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint64_t x = a.data_[i * a.cols_ + k];
      if (x == 0) continue;
      const std::uint32_t* brow = b.data_.data() + k * b.cols_;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (brow[j]) acc[j] = (acc[j] + x * brow[j]) % p;
    }
    for (std::size_t j = 0; j < b.cols_; ++j) c.data_[i * b.cols_ + j] = static_cast<std::uint32_t>(acc[j]);
  }
  return c;
}

Vec operator*(const Matrix& a, const Vec& v) {
  if (a.cols_ != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape");
  Vec out(a.rows_, 0);
  std::vector<std::size_t> nz;
  for (std::size_t k = 0; k < a.cols_; ++k)
    if (v[k]) nz.push_back(k);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    const std::uint32_t* row = a.data_.data() + i * a.cols_;
    std::uint64_t acc = 0;
    for (std::size_t k : nz) acc = (acc + std::uint64_t{row[k]} * v[k]) % a.p_;
    out[i] = static_cast<std::uint32_t>(acc);
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "sum shape");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = fp::add(c.data_[i], b.data_[i], a.p_);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "difference shape");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = fp::sub(c.data_[i], b.data_[i], a.p_);
  return c;
}

namespace {

// row_dst -= f * row_src over the columns listed in `support`.
void eliminate(std::uint32_t* dst, const std::uint32_t* src, const std::vector<std::size_t>& support,
               std::uint32_t f, std::uint32_t p) {
  if (p == 2) {
    for (std::size_t c : support) dst[c] ^= src[c];
    return;
  }
  for (std::size_t c : support) dst[c] = fp::sub(dst[c], fp::mul(f, src[c], p), p);
}

}  // namespace

RowEchelon rref(const Matrix& m) {
  RowEchelon out{m, {}};
  Matrix& a = out.reduced;
  const std::uint32_t p = a.prime();
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> support;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(r).begin());
    auto prow = a.row(r);
    if (prow[c] != 1) {
      const std::uint32_t s = fp::inv(prow[c], p);
      for (std::size_t j = c; j < cols; ++j) prow[j] = fp::mul(prow[j], s, p);
    }
    support.clear();
    for (std::size_t j = c; j < cols; ++j)
      if (prow[j]) support.push_back(j);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::uint32_t f = a(i, c);
      if (f) eliminate(a.row(i).data(), prow.data(), support, f, p);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  // Forward elimination only; rank does not need the reduced form.
  Matrix a = m;
  const std::uint32_t p = a.prime();
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> support;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(r).begin());
    auto prow = a.row(r);
    const std::uint32_t s = fp::inv(prow[c], p);
    for (std::size_t j = c; j < cols; ++j) prow[j] = fp::mul(prow[j], s, p);
    support.clear();
    for (std::size_t j = c; j < cols; ++j)
      if (prow[j]) support.push_back(j);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint32_t f = a(i, c);
      if (f) eliminate(a.row(i).data(), prow.data(), support, f, p);
    }
    ++r;
  }
  return r;
}

KernelBasis kernel_with_free(const Matrix& m) {
  const auto [red, pivots] = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  KernelBasis out;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) out.free_columns.push_back(c);
  out.basis = Matrix(m.prime(), cols, out.free_columns.size());
  for (std::size_t j = 0; j < out.free_columns.size(); ++j) {
    const std::size_t f = out.free_columns[j];
    out.basis.set(f, j, 1);
    for (std::size_t k = 0; k < pivots.size(); ++k)
      out.basis.set(pivots[k], j, fp::neg(red(k, f), m.prime()));
  }
  return out;
}

Matrix kernel_basis(const Matrix& m) { return kernel_with_free(m).basis; }

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows()) throw Error(ErrorCode::DimensionMismatch, "solve: right-hand side rows");
  const auto [red, pivots] = rref(Matrix::hcat(m, b));
  const std::size_t n = m.cols();
  Matrix x(m.prime(), n, b.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x.set(pivots[k], j, red(k, n + j));
  }
  return x;
}

Matrix column_space_basis(const Matrix& m) {
  const auto [red, pivots] = rref(m.transpose());
  return red.block(0, 0, pivots.size(), red.cols()).transpose();
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  const auto [red, pivots] = rref(Matrix::hcat(m, Matrix::identity(m.prime(), n)));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] >= n)) return std::nullopt;
  return red.block(0, n, n, n);
}

void EchelonSpan::reduce(Vec& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::uint32_t f = v[pivots_[i]];
    if (f == 0) continue;
    const Vec& r = rows_[i];
    for (std::size_t c = pivots_[i]; c < n_; ++c)
      if (r[c]) v[c] = fp::sub(v[c], fp::mul(f, r[c], p_), p_);
  }
}

bool EchelonSpan::insert(Vec v) {
  reduce(v);
  std::size_t lead = 0;
  while (lead < n_ && v[lead] == 0) ++lead;
  if (lead == n_) return false;
  const std::uint32_t s = fp::inv(v[lead], p_);
  for (auto& x : v) x = fp::mul(x, s, p_);
  // Keep earlier rows reduced against the new pivot so reduce() stays one pass.
  for (auto& r : rows_) {
    const std::uint32_t f = r[lead];
    if (f == 0) continue;
    for (std::size_t c = lead; c < n_; ++c)
      if (v[c]) r[c] = fp::sub(r[c], fp::mul(f, v[c], p_), p_);
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(lead);
  return true;
}

bool EchelonSpan::contains(Vec v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

}  // namespace homcalc
