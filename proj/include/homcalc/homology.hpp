#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homcalc/certificate.hpp"
#include "homcalc/module.hpp"

namespace homcalc {

constexpr std::size_t kDefaultCutoff = 40;

struct ResolutionLimits {
  /// Largest syzygy dimension the resolution will compute.
  std::size_t max_syzygy_dim = 256;
  bool detect_period = true;
};

/// Minimal projective resolution, extended lazily. P_k is the projective
/// cover of Omega^k; d_k = incl_k * epi_k : P_k -> P_{k-1}.
class Resolution {
 public:
  explicit Resolution(Module m, ResolutionLimits limits = {});

  const Module& augmented() const { return syz_.front(); }

  /// Makes Omega^0..Omega^k and P_0..P_k available. False when the size
  /// budget stops the computation first. After termination every higher
  /// index is available and zero.
  bool extend_to(std::size_t k);

  std::size_t computed() const { return syz_.size() - 1; }
  bool terminated() const { return syz_.back().is_zero(); }
  bool budget_exhausted() const { return budget_hit_; }
  /// pd when the resolution terminated and M != 0.
  std::optional<std::size_t> length() const;

  const std::optional<std::pair<std::size_t, std::size_t>>& periodicity() const { return period_; }
  const std::optional<Matrix>& period_iso() const { return period_iso_; }

  const Module& syzygy(std::size_t k) const;
  const Module& term(std::size_t k) const;
  const Morphism& cover(std::size_t k) const;          // P_k -> Omega^k
  const Morphism& inclusion(std::size_t k) const;      // Omega^k -> P_{k-1}, k >= 1
  Morphism differential(std::size_t k) const;          // P_k -> P_{k-1}, k >= 1
  const Morphism& augmentation() const { return covers_.front(); }
  /// Generator components of d_k (see projective_map_components).
  const std::vector<std::vector<Vec>>& components(std::size_t k) const;

  bool minimal() const { return true; }

 private:
  void push_syzygy(Module m, std::optional<Morphism> incl);

  ResolutionLimits limits_;
  std::vector<Module> syz_;
  std::vector<Morphism> covers_;
  std::vector<Morphism> incls_;  // incls_[k-1] for Omega^k
  mutable std::vector<std::optional<std::vector<std::vector<Vec>>>> comps_;
  std::optional<std::pair<std::size_t, std::size_t>> period_;
  std::optional<Matrix> period_iso_;
  bool budget_hit_ = false;
  Module zero_;
  Morphism zero_cover_;
};

Resolution minimal_resolution(const Module& m, std::size_t cutoff, ResolutionLimits limits = {});

/// Omega^n M; throws CutoffExceeded when the budget stops first.
Module syzygy(const Module& m, std::size_t n, ResolutionLimits limits = {});

/// dim Ext^i(M, N) from the resolution; nullopt when the budget stops first.
std::optional<std::size_t> ext_dim(Resolution& res, const Module& n, std::size_t i);
std::size_t ext_dim(const Module& m, const Module& n, std::size_t i, ResolutionLimits limits = {});

/// Tr M over the opposite algebra, from the minimal presentation.
Module transpose(const Module& m);
/// Tr of Omega^k M using d_{k+1} of an existing resolution.
Module transpose_of_syzygy(Resolution& res, std::size_t k);

enum class DimKind { Exact, Infinite, AtLeast, UpperBound, Zero };
const char* to_string(DimKind k);

struct DimensionReport {
  DimKind kind = DimKind::Zero;
  std::size_t value = 0;
  std::optional<std::size_t> cutoff;
  std::optional<std::size_t> lower;  // certified lower bound carried by UpperBound
  std::optional<std::pair<std::size_t, std::size_t>> period;
  std::vector<std::size_t> term_dims;   // P_0, P_1, ... of the witness resolution
  std::vector<Matrix> differentials;    // d_1, ..., d_n
  std::optional<std::size_t> syzygy_dim;  // dimension of the certified syzygy
  std::vector<std::string> notes;

  bool is_exact() const { return kind == DimKind::Exact; }
  bool operator==(const DimensionReport&) const = default;
};

DimensionReport proj_dim(const Module& m, std::size_t cutoff = kDefaultCutoff, ResolutionLimits limits = {});
DimensionReport inj_dim(const Module& m, std::size_t cutoff = kDefaultCutoff, ResolutionLimits limits = {});

/// Ext^i(Omega^shift M, t) = Ext^{i+shift}(M, t) = 0 for all i >= 1 and all
/// targets, checked degree by degree and closed by termination or
/// periodicity; at most `cutoff` degrees are inspected.
Verdict perp_test(Resolution& res, std::size_t shift, const std::vector<Module>& targets, std::size_t cutoff);
Verdict perp_test(const Module& m, const std::vector<Module>& targets, std::size_t cutoff = kDefaultCutoff,
                  ResolutionLimits limits = {});

Verdict is_gorenstein_projective(const Module& m, std::size_t cutoff = kDefaultCutoff, ResolutionLimits limits = {});
Verdict is_torsionfree_infty(const Module& m, std::size_t cutoff = kDefaultCutoff, ResolutionLimits limits = {});

DimensionReport gorenstein_pd(const Module& m, std::size_t cutoff = kDefaultCutoff, ResolutionLimits limits = {});
DimensionReport perp_dim(const Module& m, const std::vector<Module>& targets, std::size_t cutoff = kDefaultCutoff,
                         ResolutionLimits limits = {});
DimensionReport torsionfree_dim_upper(const Module& m, std::size_t cutoff = kDefaultCutoff,
                                      ResolutionLimits limits = {});
DimensionReport gorenstein_id(const Module& m, std::size_t cutoff = kDefaultCutoff, ResolutionLimits limits = {});

/// A as a left module over itself in the algebra's own basis.
Module natural_regular_module(const AlgebraPtr& a);

/// 0 -> g -> P -> g' -> 0 with g -> P the evaluation at generators of a
/// projective cover of g* = Hom(g, A) over the opposite algebra.
ExactSequence star_coresolution(const Module& g);

struct CoresolutionStep {
  ExactSequence sequence;
  Verdict certificate;  // g' certified GP and the sequence Hom(-, A)-exact
};
CoresolutionStep gp_coresolution_step(const Module& g, std::size_t cutoff = kDefaultCutoff,
                                      ResolutionLimits limits = {});

}  // namespace homcalc
