#include "homcalc/homology.hpp"

#include <algorithm>

namespace homcalc {

namespace {

std::string str(std::size_t n) { return std::to_string(n); }

}  // namespace

const char* to_string(DimKind k) {
  switch (k) {
    case DimKind::Exact: return "Exact";
    case DimKind::Infinite: return "Infinite";
    case DimKind::AtLeast: return "AtLeast";
    case DimKind::UpperBound: return "UpperBound";
    case DimKind::Zero: return "Zero";
  }
  return "Zero";
}

// Resolution -----------------------------------------------------------------------

Resolution::Resolution(Module m, ResolutionLimits limits) : limits_(limits) {
  zero_ = Module::zero(m.algebra());
  zero_cover_ = Morphism::zero(zero_, zero_);
  push_syzygy(std::move(m), std::nullopt);
}

void Resolution::push_syzygy(Module m, std::optional<Morphism> incl) {
  const std::size_t k = syz_.size();
  if (incl) incls_.push_back(std::move(*incl));
  covers_.push_back(m.is_zero() ? Morphism::zero(zero_, m) : projective_cover(m).epi);
  comps_.emplace_back();
  syz_.push_back(std::move(m));
  const Module& cur = syz_.back();
  if (k == 0 || period_ || !limits_.detect_period || cur.is_zero()) return;
  const auto inv = module_invariants(cur);
  for (std::size_t a = 0; a < k; ++a) {
    if (syz_[a].dim() != cur.dim() || module_invariants(syz_[a]) != inv) continue;
    Verdict v = is_isomorphic(syz_[a], cur);
    if (v.is_true()) {
      period_ = std::make_pair(a, k);
      period_iso_ = v.iso;
      return;
    }
  }
}

bool Resolution::extend_to(std::size_t k) {
  while (syz_.size() <= k) {
    const Module& last = syz_.back();
    if (last.is_zero()) {
      push_syzygy(last, Morphism::zero(last, zero_));
      continue;
    }
    const Morphism& epi = covers_.back();
    if (epi.source().dim() - last.dim() > limits_.max_syzygy_dim) {
      budget_hit_ = true;
      return false;
    }
    Kernel next = kernel(epi);
    push_syzygy(std::move(next.module), std::move(next.incl));
  }
  return true;
}

std::optional<std::size_t> Resolution::length() const {
  for (std::size_t k = 0; k < syz_.size(); ++k)
    if (syz_[k].is_zero()) {
      if (k == 0) return std::nullopt;
      return k - 1;
    }
  return std::nullopt;
}

const Module& Resolution::syzygy(std::size_t k) const { return syz_.at(k); }
const Module& Resolution::term(std::size_t k) const { return covers_.at(k).source(); }
const Morphism& Resolution::cover(std::size_t k) const { return covers_.at(k); }
const Morphism& Resolution::inclusion(std::size_t k) const { return incls_.at(k - 1); }

Morphism Resolution::differential(std::size_t k) const {
  return compose(inclusion(k), cover(k));
}

const std::vector<std::vector<Vec>>& Resolution::components(std::size_t k) const {
  auto& slot = comps_.at(k);
  if (!slot) slot = projective_map_components(differential(k));
  return *slot;
}

Resolution minimal_resolution(const Module& m, std::size_t cutoff, ResolutionLimits limits) {
  Resolution r(m, limits);
  for (std::size_t k = 1; k <= cutoff + 1; ++k) {
    if (!r.extend_to(k)) break;
    if (r.syzygy(k).is_zero() || r.periodicity()) break;
  }
  return r;
}

Module syzygy(const Module& m, std::size_t n, ResolutionLimits limits) {
  Resolution r(m, limits);
  if (!r.extend_to(n)) throw Error(ErrorCode::CutoffExceeded, "syzygy " + str(n) + " exceeds the size budget");
  return r.syzygy(n);
}

// Ext ------------------------------------------------------------------------------

namespace {

/// D_k B_{k-1}: Hom(P_{k-1}, N) -> Hom(P_k, N), parametrised by generator
/// images in the idempotent parts of N.
std::size_t dual_rank(const Resolution& res, std::size_t k, const Module& n, const std::vector<Matrix>& parts) {
  const Module& pk = res.term(k);
  const Module& pk1 = res.term(k - 1);
  if (pk.is_zero() || pk1.is_zero()) return 0;
  const auto& src = *pk.summands();
  const auto& tgt = *pk1.summands();
  const auto& comps = res.components(k);
  std::size_t cols = 0;
  for (auto i : tgt) cols += parts[i].cols();
  if (cols == 0) return 0;
  Matrix d(n.prime(), src.size() * n.dim(), cols);
  std::size_t col = 0;
  for (std::size_t t = 0; t < tgt.size(); ++t) {
    const Matrix& part = parts[tgt[t]];
    for (std::size_t s = 0; s < src.size(); ++s) d.set_block(s * n.dim(), col, n.act(comps[s][t]) * part);
    col += part.cols();
  }
  return rank(d);
}

}  // namespace

std::optional<std::size_t> ext_dim(Resolution& res, const Module& n, std::size_t i) {
  if (!same_algebra(res.augmented().algebra(), n.algebra()))
    throw Error(ErrorCode::AlgebraMismatch, "Ext between modules over different algebras");
  if (!res.extend_to(i + 1)) return std::nullopt;
  const Module& pi = res.term(i);
  if (pi.is_zero() || n.is_zero()) return 0;
  const Algebra& a = *n.algebra();
  std::vector<Matrix> parts;
  for (std::size_t e = 0; e < a.num_idempotents(); ++e) parts.push_back(column_space_basis(n.act(a.idempotent(e))));
  std::size_t u = 0;
  for (auto e : *pi.summands()) u += parts[e].cols();
  const std::size_t r_next = dual_rank(res, i + 1, n, parts);
  const std::size_t r_prev = i == 0 ? 0 : dual_rank(res, i, n, parts);
  return u - r_next - r_prev;
}

std::size_t ext_dim(const Module& m, const Module& n, std::size_t i, ResolutionLimits limits) {
  limits.detect_period = false;
  Resolution r(m, limits);
  auto e = ext_dim(r, n, i);
  if (!e) throw Error(ErrorCode::CutoffExceeded, "resolution budget reached before degree " + str(i + 1));
  return *e;
}

// Transpose ------------------------------------------------------------------------

namespace {

Module transpose_of_presentation(const Morphism& d) {
  return cokernel(star_dual_projective_map(d)).module;
}

}  // namespace

Module transpose_of_syzygy(Resolution& res, std::size_t k) {
  if (!res.extend_to(k + 1)) throw Error(ErrorCode::CutoffExceeded, "presentation exceeds the size budget");
  if (res.syzygy(k).is_zero()) return Module::zero(opposite_algebra(res.augmented().algebra()));
  return transpose_of_presentation(res.differential(k + 1));
}

Module transpose(const Module& m) {
  ResolutionLimits lim;
  lim.detect_period = false;
  lim.max_syzygy_dim = static_cast<std::size_t>(-1);
  Resolution r(m, lim);
  return transpose_of_syzygy(r, 0);
}

// Dimensions -------------------------------------------------------------------------

namespace {

DimensionReport zero_report() {
  DimensionReport r;
  r.kind = DimKind::Zero;
  return r;
}

void attach_witness(DimensionReport& rep, const Resolution& res, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) rep.term_dims.push_back(res.term(k).dim());
  for (std::size_t k = 1; k < n; ++k) rep.differentials.push_back(res.differential(k).matrix());
  rep.syzygy_dim = res.syzygy(n).dim();
}

}  // namespace

DimensionReport proj_dim(const Module& m, std::size_t cutoff, ResolutionLimits limits) {
  if (m.is_zero()) return zero_report();
  Resolution r(m, limits);
  DimensionReport rep;
  for (std::size_t k = 1; k <= cutoff + 1; ++k) {
    if (!r.extend_to(k)) {
      rep.kind = DimKind::AtLeast;
      rep.value = r.computed();
      rep.cutoff = cutoff;
      rep.notes.push_back("resolution size budget reached");
      return rep;
    }
    if (r.syzygy(k).is_zero()) {
      rep.kind = DimKind::Exact;
      rep.value = k - 1;
      attach_witness(rep, r, k - 1);
      rep.term_dims.push_back(r.term(k - 1).dim());
      if (k >= 2) rep.differentials.push_back(r.differential(k - 1).matrix());
      rep.syzygy_dim.reset();
      return rep;
    }
    if (r.periodicity()) {
      rep.kind = DimKind::Infinite;
      rep.period = r.periodicity();
      return rep;
    }
  }
  rep.kind = DimKind::AtLeast;
  rep.value = cutoff + 1;
  rep.cutoff = cutoff;
  return rep;
}

DimensionReport inj_dim(const Module& m, std::size_t cutoff, ResolutionLimits limits) {
  return proj_dim(k_dual(m), cutoff, limits);
}

Verdict perp_test(Resolution& res, std::size_t shift, const std::vector<Module>& targets, std::size_t cutoff) {
  if (targets.empty()) return Verdict::yes("no targets");
  for (std::size_t i = 1;; ++i) {
    const std::size_t j = shift + i;
    if (!res.extend_to(j)) return Verdict::unknown(cutoff, "resolution size budget reached at degree " + str(j));
    if (res.syzygy(j).is_zero()) {
      Verdict v = Verdict::yes("resolution terminates; Ext vanishes beyond degree " + str(j - 1));
      v.window = i - 1;
      return v;
    }
    if (const auto& per = res.periodicity()) {
      const auto [a, b] = *per;
      const std::size_t end = std::max(shift + 1, a + 1) + (b - a) - 1;
      if (j > end) {
        Verdict v = Verdict::yes("window closed by periodicity");
        v.period = per;
        v.window = i - 1;
        return v;
      }
    }
    if (i > cutoff) return Verdict::unknown(cutoff, "no closure within " + str(cutoff) + " degrees");
    for (std::size_t t = 0; t < targets.size(); ++t) {
      const auto e = ext_dim(res, targets[t], j);
      if (!e) return Verdict::unknown(cutoff, "resolution size budget reached at degree " + str(j + 1));
      if (*e > 0) {
        Verdict v = Verdict::no("nonzero Ext^" + str(i));
        v.ext = ExtWitness{i, *e, t};
        return v;
      }
    }
  }
}

Verdict perp_test(const Module& m, const std::vector<Module>& targets, std::size_t cutoff, ResolutionLimits limits) {
  Resolution r(m, limits);
  return perp_test(r, 0, targets, cutoff);
}

namespace {

Verdict transpose_perp(Resolution& res, std::size_t k, std::size_t cutoff, ResolutionLimits limits) {
  if (!res.extend_to(k + 1)) return Verdict::unknown(cutoff, "presentation exceeds the size budget");
  Module tr = transpose_of_syzygy(res, k);
  Resolution rt(tr, limits);
  return perp_test(rt, 0, {regular_module(tr.algebra())}, cutoff);
}

Verdict gp_of_syzygy(Resolution& res, std::size_t k, std::size_t cutoff, ResolutionLimits limits) {
  Verdict first = perp_test(res, k, {regular_module(res.augmented().algebra())}, cutoff);
  if (first.is_false()) return first;
  return conjunction(first, transpose_perp(res, k, cutoff, limits));
}

enum class Test { Gorenstein, Perp, Torsionfree };

/// Least n with the syzygy test true, following the shared report rules.
DimensionReport syzygy_dimension(const Module& m, std::size_t cutoff, ResolutionLimits limits, Test test,
                                 const std::vector<Module>& targets) {
  if (m.is_zero()) return zero_report();
  Resolution r(m, limits);
  DimensionReport rep;
  std::size_t leading_false = 0;
  bool all_false = true;
  for (std::size_t n = 0; n <= cutoff; ++n) {
    if (!r.extend_to(n)) {
      rep.notes.push_back("resolution size budget reached");
      break;
    }
    Verdict v;
    switch (test) {
      case Test::Gorenstein: v = gp_of_syzygy(r, n, cutoff, limits); break;
      case Test::Perp: v = perp_test(r, n, targets, cutoff); break;
      case Test::Torsionfree: v = transpose_perp(r, n, cutoff, limits); break;
    }
    if (v.is_true()) {
      if (test == Test::Torsionfree) {
        rep.kind = n == 0 ? DimKind::Exact : DimKind::UpperBound;
        if (n > 0) rep.notes.push_back("syzygy criterion gives an upper bound only");
      } else {
        rep.kind = all_false ? DimKind::Exact : DimKind::UpperBound;
        if (!all_false) rep.lower = leading_false;
      }
      rep.value = n;
      attach_witness(rep, r, n);
      rep.notes.push_back("syzygy " + str(n) + ": " + v.reason);
      return rep;
    }
    if (v.is_unknown()) all_false = false;
    if (all_false) leading_false = n + 1;
    if (test != Test::Torsionfree && all_false && r.periodicity()) {
      const auto [a, b] = *r.periodicity();
      (void)a;
      if (n + 1 >= b) {
        rep.kind = DimKind::Infinite;
        rep.period = r.periodicity();
        rep.notes.push_back("every syzygy up to the period fails");
        return rep;
      }
    }
  }
  rep.kind = DimKind::AtLeast;
  rep.value = test == Test::Torsionfree ? 0 : leading_false;
  rep.cutoff = cutoff;
  return rep;
}

}  // namespace

Verdict is_gorenstein_projective(const Module& m, std::size_t cutoff, ResolutionLimits limits) {
  Resolution r(m, limits);
  return gp_of_syzygy(r, 0, cutoff, limits);
}

Verdict is_torsionfree_infty(const Module& m, std::size_t cutoff, ResolutionLimits limits) {
  Resolution r(m, limits);
  return transpose_perp(r, 0, cutoff, limits);
}

DimensionReport gorenstein_pd(const Module& m, std::size_t cutoff, ResolutionLimits limits) {
  return syzygy_dimension(m, cutoff, limits, Test::Gorenstein, {});
}

DimensionReport perp_dim(const Module& m, const std::vector<Module>& targets, std::size_t cutoff,
                         ResolutionLimits limits) {
  return syzygy_dimension(m, cutoff, limits, Test::Perp, targets);
}

DimensionReport torsionfree_dim_upper(const Module& m, std::size_t cutoff, ResolutionLimits limits) {
  return syzygy_dimension(m, cutoff, limits, Test::Torsionfree, {});
}

DimensionReport gorenstein_id(const Module& m, std::size_t cutoff, ResolutionLimits limits) {
  return gorenstein_pd(k_dual(m), cutoff, limits);
}

// Coresolution step --------------------------------------------------------------------

Module natural_regular_module(const AlgebraPtr& a) {
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < a->dim(); ++k) action.push_back(a->left_mult(k));
  return Module(a, a->dim(), std::move(action));
}

ExactSequence star_coresolution(const Module& g) {
  const AlgebraPtr& a = g.algebra();
  const std::uint32_t p = a->prime();
  const std::size_t d = a->dim(), m = g.dim();
  if (g.summands()) {
    // Already a canonical projective: the trivial step.
    Module z = Module::zero(a);
    return {{g, g, z}, {Morphism::identity(g), Morphism::zero(g, z)}};
  }
  const auto homs = hom_basis(g, natural_regular_module(a));
  const AlgebraPtr op = opposite_algebra(a);
  const std::size_t r = homs.size();
  std::vector<Vec> flat;
  for (const auto& h : homs) flat.push_back(h.matrix().entries());
  const Matrix phi = r ? Matrix::from_columns(p, d * m, flat) : Matrix(p, d * m, 0);
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Vec> imgs;
    for (const auto& h : homs) imgs.push_back((a->right_mult(k) * h.matrix()).entries());
    action.push_back(r ? *solve(phi, Matrix::from_columns(p, d * m, imgs)) : Matrix(p, 0, 0));
  }
  Module gstar(op, r, std::move(action));
  const auto cov = projective_cover(gstar);
  const auto& summ = *cov.projective.summands();
  Module proj = projective_module(a, summ);
  Matrix iota(p, proj.dim(), m);
  std::size_t off_q = 0, off_p = 0;
  for (auto i : summ) {
    Vec gen(cov.projective.dim(), 0);
    const Vec& eg = op->projective_generator(i);
    for (std::size_t k = 0; k < eg.size(); ++k) gen[off_q + k] = eg[k];
    const Vec coeffs = cov.epi.matrix() * gen;
    Matrix psi(p, d, m);
    for (std::size_t j = 0; j < r; ++j)
      if (coeffs[j]) psi = psi + homs[j].matrix().scaled(coeffs[j]);
    const Matrix c = *solve(a->projective_basis(i), psi);
    iota.set_block(off_p, 0, c);
    off_q += op->projective_basis(i).cols();
    off_p += a->projective_basis(i).cols();
  }
  Morphism mono(g, proj, std::move(iota));
  auto coker = cokernel(mono);
  return {{g, proj, coker.module}, {mono, coker.proj}};
}

CoresolutionStep gp_coresolution_step(const Module& g, std::size_t cutoff, ResolutionLimits limits) {
  const Verdict gp = is_gorenstein_projective(g, cutoff, limits);
  if (!gp.is_true()) throw Error(ErrorCode::NotCertifiedGP, "module is not certified Gorenstein projective: " + gp.reason);
  CoresolutionStep step;
  step.sequence = star_coresolution(g);
  Verdict exact = check_exact(step.sequence);
  if (!exact.is_true()) {
    step.certificate = exact;
    return step;
  }
  Verdict right = is_gorenstein_projective(step.sequence.modules[2], cutoff, limits);
  Verdict homs = hom_exact_contravariant(step.sequence, regular_module(g.algebra()))
                     ? Verdict::yes("Hom(-, A)-exact")
                     : Verdict::no("not Hom(-, A)-exact");
  step.certificate = conjunction(conjunction(exact, right), homs);
  return step;
}

}  // namespace homcalc
