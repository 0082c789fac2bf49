#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "homcalc/algebra.hpp"
#include "homcalc/certificate.hpp"
#include "homcalc/matrix.hpp"

namespace homcalc {

/// Finite-dimensional left module: one action matrix per algebra basis
/// element. Cheap to copy (shared immutable representation).
class Module {
 public:
  Module() = default;
  Module(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action,
         std::optional<std::vector<std::size_t>> summands = std::nullopt);

  static Module zero(AlgebraPtr algebra);

  const AlgebraPtr& algebra() const { return rep_->algebra; }
  std::uint32_t prime() const { return rep_->algebra->prime(); }
  std::size_t dim() const { return rep_->dim; }
  bool is_zero() const { return rep_->dim == 0; }
  const Matrix& action(std::size_t b) const { return rep_->action[b]; }
  const std::vector<Matrix>& actions() const { return rep_->action; }
  /// Action of an arbitrary algebra element (coordinate vector).
  Matrix act(const Vec& x) const;

  /// Idempotent index of each indecomposable summand, set for canonical
  /// projectives P(i_1) + ... + P(i_r) built by projective_module.
  const std::optional<std::vector<std::size_t>>& summands() const { return rep_->summands; }

  bool operator==(const Module& o) const;

 private:
  struct Rep {
    AlgebraPtr algebra;
    std::size_t dim = 0;
    std::vector<Matrix> action;
    std::optional<std::vector<std::size_t>> summands;
  };
  std::shared_ptr<const Rep> rep_;
};

/// Throws InvalidModule (location names the failing identity) unless the
/// action is unital and multiplicative.
void validate_module(const Module& m);

class Morphism {
 public:
  Morphism() = default;
  /// Unchecked; only shapes are asserted.
  Morphism(Module source, Module target, Matrix matrix);
  /// Throws InvalidMorphism unless the matrix intertwines the actions.
  static Morphism checked(Module source, Module target, Matrix matrix);
  static Morphism identity(const Module& m);
  static Morphism zero(const Module& source, const Module& target);

  const Module& source() const { return source_; }
  const Module& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }
  bool intertwines() const;
  bool is_mono() const;
  bool is_epi() const;

 private:
  Module source_;
  Module target_;
  Matrix matrix_;
};

/// g after f.
Morphism compose(const Morphism& g, const Morphism& f);

// Canonical modules ---------------------------------------------------------

Module projective_module(const AlgebraPtr& a, const std::vector<std::size_t>& summands);
Module indecomposable_projective(const AlgebraPtr& a, std::size_t i);
Module simple_module(const AlgebraPtr& a, std::size_t i);
/// The left regular module, presented as P(1) + ... + P(n).
Module regular_module(const AlgebraPtr& a);

// Abelian structure ---------------------------------------------------------

std::vector<Morphism> hom_basis(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);

struct Kernel {
  Module module;
  Morphism incl;
};
struct Cokernel {
  Module module;
  Morphism proj;
};
struct Image {
  Module module;
  Morphism incl;   // image -> target
  Morphism coim;   // source -> image (epi)
};

Kernel kernel(const Morphism& f);
Cokernel cokernel(const Morphism& f);
Image image(const Morphism& f);

struct DirectSum {
  Module module;
  std::vector<Morphism> injections;
  std::vector<Morphism> projections;
};
DirectSum direct_sum(const AlgebraPtr& a, const std::vector<Module>& parts);

struct Pullback {
  Module module;
  Morphism p1;  // to source(f)
  Morphism p2;  // to source(g)
};
Pullback pullback(const Morphism& f, const Morphism& g);

struct Pushout {
  Module module;
  Morphism q1;  // from target(f)
  Morphism q2;  // from target(g)
};
Pushout pushout(const Morphism& f, const Morphism& g);

struct RadicalTop {
  Morphism rad_incl;
  Morphism top_proj;
};
RadicalTop radical_and_top(const Module& m);

struct ProjectiveCover {
  Module projective;
  Morphism epi;
};
ProjectiveCover projective_cover(const Module& m);
/// The map P -> target sending the t-th generator e_{i_t} of the canonical
/// projective P to images[t] (which should lie in e_{i_t} target).
Morphism map_from_projective(const Module& p, const Module& target, const std::vector<Vec>& images);
/// Column basis of e_i M.
Matrix idempotent_part(const Module& m, std::size_t i);
bool is_projective(const Module& m);

/// Linear dual as a module over the opposite algebra; D(f) = f^T.
Module k_dual(const Module& m);
Morphism k_dual(const Morphism& f);

struct IsoOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 64;
};
Verdict is_isomorphic(const Module& m, const Module& n, const IsoOptions& opt = {});

/// Cheap invariants used for refutation (dimension counts).
std::vector<std::size_t> module_invariants(const Module& m);

/// Generator images of a map out of a canonical projective:
/// result[s][t] is the algebra element a with f(g_s) having component
/// x -> x a in summand t of the target (target must be canonical too).
std::vector<std::vector<Vec>> projective_map_components(const Morphism& f);

/// f*: P0* -> P1* over the opposite algebra for f: P1 -> P0 between
/// canonical projectives, with (A e_i)* = e_i A.
Morphism star_dual_projective_map(const Morphism& f);

// Exact sequences -----------------------------------------------------------

/// 0 -> modules[0] -> ... -> modules.back() -> 0 with maps[i]:
/// modules[i] -> modules[i+1].
struct ExactSequence {
  std::vector<Module> modules;
  std::vector<Morphism> maps;
};

/// CertifiedTrue iff composable, intertwining and exact everywhere;
/// CertifiedFalse carries the failing node.
Verdict check_exact(const ExactSequence& seq);

/// Exactness of Hom(x, seq) (covariant) or Hom(seq, x) (contravariant),
/// counted with the zero ends.
bool hom_exact_covariant(const ExactSequence& seq, const Module& x);
bool hom_exact_contravariant(const ExactSequence& seq, const Module& x);

}  // namespace homcalc
