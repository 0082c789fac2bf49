#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "homcalc/matrix.hpp"

namespace homcalc {

/// Unvalidated algebra description. Basis element products are
/// b_i * b_j = sum_k structure_constants[(i*d + j)*d + k] b_k.
struct AlgebraData {
  std::string name;
  std::uint32_t field_char = 2;
  std::size_t dim = 0;
  std::vector<std::string> basis_labels;
  std::vector<std::uint32_t> structure_constants;
  Vec unit;
  std::vector<Vec> idempotents;
  std::vector<Vec> radical_basis;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// A validated finite-dimensional algebra over F_p with a complete set of
/// orthogonal idempotents and a user-supplied radical. Immutable.
class Algebra {
 public:
  const AlgebraData& data() const { return data_; }
  const std::string& name() const { return data_.name; }
  std::uint32_t prime() const { return data_.field_char; }
  std::size_t dim() const { return data_.dim; }
  std::size_t num_idempotents() const { return data_.idempotents.size(); }

  std::uint32_t constant(std::size_t i, std::size_t j, std::size_t k) const {
    return data_.structure_constants[(i * dim() + j) * dim() + k];
  }

  Vec basis_vector(std::size_t i) const;
  Vec multiply(const Vec& x, const Vec& y) const;

  /// Matrix of y -> b_i y (resp. y -> y b_i) in the algebra basis.
  const Matrix& left_mult(std::size_t i) const { return left_[i]; }
  const Matrix& right_mult(std::size_t i) const { return right_[i]; }
  Matrix left_mult_by(const Vec& x) const;
  Matrix right_mult_by(const Vec& x) const;

  const Vec& unit() const { return data_.unit; }
  const Vec& idempotent(std::size_t i) const { return data_.idempotents[i]; }
  /// Columns form a basis of the radical.
  const Matrix& radical() const { return radical_; }

  /// Canonical basis of A e_i (columns are algebra elements) and the
  /// coordinates of e_i in it.
  const Matrix& projective_basis(std::size_t i) const { return proj_basis_[i]; }
  const Vec& projective_generator(std::size_t i) const { return proj_gen_[i]; }
  /// Left action of each basis element on A e_i, in projective_basis(i).
  const std::vector<Matrix>& projective_action(std::size_t i) const { return proj_action_[i]; }
  /// dim A e_i - dim J e_i.
  std::size_t projective_top_dim(std::size_t i) const { return proj_top_[i]; }

  /// Elements generating A as an algebra; intertwining with these suffices.
  const std::vector<Vec>& generators() const { return generators_; }

  /// Same structure (constants, unit, idempotents, radical); names ignored.
  bool same_structure(const Algebra& o) const;

 private:
  friend AlgebraPtr validate_algebra(AlgebraData raw);
  friend AlgebraPtr opposite_algebra(const AlgebraPtr& a);

  explicit Algebra(AlgebraData d) : data_(std::move(d)) {}
  void build_caches();

  AlgebraData data_;
  std::vector<Matrix> left_, right_;
  Matrix radical_;
  std::vector<Matrix> proj_basis_;
  std::vector<Vec> proj_gen_;
  std::vector<std::vector<Matrix>> proj_action_;
  std::vector<std::size_t> proj_top_;
  std::vector<Vec> generators_;

  mutable std::mutex opposite_mutex_;
  mutable std::weak_ptr<const Algebra> opposite_;
};

/// True when both handles denote the same algebra (identity or structure).
bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

/// Checks every algebra invariant; the error location pinpoints the first
/// violated identity.
AlgebraPtr validate_algebra(AlgebraData raw);

/// mult^op[i][j] = mult[j][i]. The opposite of the opposite is the original
/// handle while it is alive.
AlgebraPtr opposite_algebra(const AlgebraPtr& a);

struct QuiverArrow {
  std::string label;
  std::string source;
  std::string target;
};

/// One term of a relation: `path` lists arrow labels in traversal order
/// (first arrow first), so [a, b] is the algebra product b*a.
struct QuiverTerm {
  std::vector<std::string> path;
  std::int64_t coeff = 1;
};

struct QuiverPresentation {
  std::string name;
  std::uint32_t field_char = 2;
  std::vector<std::string> vertices;
  std::vector<QuiverArrow> arrows;
  std::vector<std::vector<QuiverTerm>> relations;
  std::size_t nilpotency_bound = 2;
};

constexpr std::size_t kDefaultBasisCap = 512;

/// Path algebra modulo the length-homogeneous relations and all paths of
/// length >= nilpotency_bound.
AlgebraPtr algebra_from_quiver(const QuiverPresentation& q, std::size_t basis_cap = kDefaultBasisCap);

}  // namespace homcalc
