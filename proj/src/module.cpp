#include "homcalc/module.hpp"

#include <algorithm>
#include <random>

namespace homcalc {

namespace {

Vec flat_vec(const Matrix& m) { return m.entries(); }

void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b, const char* what) {
  if (!same_algebra(a, b)) throw Error(ErrorCode::AlgebraMismatch, what);
}

/// Right inverse of an epi matrix (n x m of rank n).
Matrix section(const Matrix& epi) {
  return *solve(epi, Matrix::identity(epi.prime(), epi.rows()));
}

}  // namespace

Matrix idempotent_part(const Module& m, std::size_t i) {
  return column_space_basis(m.act(m.algebra()->idempotent(i)));
}

// Module ----------------------------------------------------------------------

Module::Module(AlgebraPtr algebra, std::size_t dim, std::vector<Matrix> action,
               std::optional<std::vector<std::size_t>> summands) {
  if (!algebra) throw Error(ErrorCode::InvalidModule, "module without algebra");
  if (action.size() != algebra->dim())
    throw Error(ErrorCode::InvalidModule, "action arity differs from algebra dimension", "action");
  for (std::size_t b = 0; b < action.size(); ++b)
    if (action[b].rows() != dim || action[b].cols() != dim || action[b].prime() != algebra->prime())
      throw Error(ErrorCode::InvalidModule, "action matrix has wrong shape", "action/" + std::to_string(b));
  auto rep = std::make_shared<Rep>();
  rep->algebra = std::move(algebra);
  rep->dim = dim;
  rep->action = std::move(action);
  rep->summands = std::move(summands);
  rep_ = std::move(rep);
}

Module Module::zero(AlgebraPtr algebra) {
  const std::size_t d = algebra->dim();
  const std::uint32_t p = algebra->prime();
  return Module(std::move(algebra), 0, std::vector<Matrix>(d, Matrix(p, 0, 0)), std::vector<std::size_t>{});
}

Matrix Module::act(const Vec& x) const {
  const std::uint32_t p = prime();
  Matrix m(p, dim(), dim());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i]) continue;
    const Matrix& a = rep_->action[i];
    for (std::size_t r = 0; r < dim(); ++r) {
      auto dst = m.row(r);
      const auto src = a.row(r);
      for (std::size_t c = 0; c < dim(); ++c) dst[c] = fp::add(dst[c], fp::mul(x[i], src[c], p), p);
    }
  }
  return m;
}

bool Module::operator==(const Module& o) const {
  if (rep_ == o.rep_) return true;
  return same_algebra(algebra(), o.algebra()) && dim() == o.dim() && actions() == o.actions();
}

void validate_module(const Module& m) {
  const Algebra& a = *m.algebra();
  const std::size_t d = a.dim();
  if (m.act(a.unit()) != Matrix::identity(a.prime(), m.dim()))
    throw Error(ErrorCode::InvalidModule, "unit does not act as the identity", "action(unit)");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Matrix rhs(a.prime(), m.dim(), m.dim());
      for (std::size_t k = 0; k < d; ++k)
        if (const auto c = a.constant(i, j, k)) rhs = rhs + m.action(k).scaled(c);
      if (m.action(i) * m.action(j) != rhs)
        throw Error(ErrorCode::InvalidModule,
                    "action is not multiplicative on pair (" + std::to_string(i) + "," + std::to_string(j) + ")",
                    "action/(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
}

// Morphism --------------------------------------------------------------------

Morphism::Morphism(Module source, Module target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
    throw Error(ErrorCode::InvalidMorphism, "matrix shape does not match source/target dimensions");
}

Morphism Morphism::checked(Module source, Module target, Matrix matrix) {
  require_same_algebra(source.algebra(), target.algebra(), "morphism between modules over different algebras");
  Morphism f(std::move(source), std::move(target), std::move(matrix));
  if (!f.intertwines()) throw Error(ErrorCode::InvalidMorphism, "matrix does not intertwine the actions");
  return f;
}

Morphism Morphism::identity(const Module& m) { return {m, m, Matrix::identity(m.prime(), m.dim())}; }

Morphism Morphism::zero(const Module& source, const Module& target) {
  return {source, target, Matrix(source.prime(), target.dim(), source.dim())};
}

bool Morphism::intertwines() const {
  for (std::size_t b = 0; b < source_.actions().size(); ++b)
    if (matrix_ * source_.action(b) != target_.action(b) * matrix_) return false;
  return true;
}

bool Morphism::is_mono() const { return rank(matrix_) == source_.dim(); }
bool Morphism::is_epi() const { return rank(matrix_) == target_.dim(); }

Morphism compose(const Morphism& g, const Morphism& f) {
  if (g.source().dim() != f.target().dim()) throw Error(ErrorCode::InvalidMorphism, "composition of non-composable maps");
  return {f.source(), g.target(), g.matrix() * f.matrix()};
}

// Canonical modules -------------------------------------------------------------

Module projective_module(const AlgebraPtr& a, const std::vector<std::size_t>& summands) {
  std::size_t total = 0;
  for (auto i : summands) {
    if (i >= a->num_idempotents()) throw Error(ErrorCode::InvalidModule, "idempotent index out of range");
    total += a->projective_basis(i).cols();
  }
  std::vector<Matrix> action(a->dim(), Matrix(a->prime(), total, total));
  std::size_t off = 0;
  for (auto i : summands) {
    const auto& pa = a->projective_action(i);
    for (std::size_t b = 0; b < a->dim(); ++b) action[b].set_block(off, off, pa[b]);
    off += a->projective_basis(i).cols();
  }
  return Module(a, total, std::move(action), summands);
}

Module indecomposable_projective(const AlgebraPtr& a, std::size_t i) { return projective_module(a, {i}); }

Module simple_module(const AlgebraPtr& a, std::size_t i) {
  return radical_and_top(indecomposable_projective(a, i)).top_proj.target();
}

Module regular_module(const AlgebraPtr& a) {
  std::vector<std::size_t> all(a->num_idempotents());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return projective_module(a, all);
}

// Kernels and cokernels -----------------------------------------------------------

Kernel kernel(const Morphism& f) {
  const Module& src = f.source();
  auto kb = kernel_with_free(f.matrix());
  std::vector<Matrix> action;
  action.reserve(src.actions().size());
  for (const auto& act : src.actions()) action.push_back((act * kb.basis).select_rows(kb.free_columns));
  Module k(src.algebra(), kb.basis.cols(), std::move(action));
  return {k, Morphism(k, src, std::move(kb.basis))};
}

Cokernel cokernel(const Morphism& f) {
  const Module& tgt = f.target();
  auto kb = kernel_with_free(f.matrix().transpose());
  Matrix q = kb.basis.transpose();
  std::vector<Matrix> action;
  action.reserve(tgt.actions().size());
  for (const auto& act : tgt.actions()) action.push_back((q * act).select_cols(kb.free_columns));
  Module c(tgt.algebra(), q.rows(), std::move(action));
  return {c, Morphism(tgt, c, std::move(q))};
}

Image image(const Morphism& f) {
  auto coker = cokernel(f);
  auto ker = kernel(coker.proj);
  Matrix coim = *solve(ker.incl.matrix(), f.matrix());
  return {ker.module, ker.incl, Morphism(f.source(), ker.module, std::move(coim))};
}

DirectSum direct_sum(const AlgebraPtr& a, const std::vector<Module>& parts) {
  std::size_t total = 0;
  for (const auto& m : parts) {
    require_same_algebra(a, m.algebra(), "direct sum over different algebras");
    total += m.dim();
  }
  const std::uint32_t p = a->prime();
  std::vector<Matrix> action(a->dim(), Matrix(p, total, total));
  bool all_projective = true;
  std::vector<std::size_t> summands;
  std::size_t off = 0;
  for (const auto& m : parts) {
    for (std::size_t b = 0; b < a->dim(); ++b) action[b].set_block(off, off, m.action(b));
    off += m.dim();
    if (m.summands()) summands.insert(summands.end(), m.summands()->begin(), m.summands()->end());
    else all_projective = false;
  }
  Module s(a, total, std::move(action), all_projective ? std::optional(summands) : std::nullopt);
  DirectSum out{s, {}, {}};
  off = 0;
  for (const auto& m : parts) {
    Matrix inj(p, total, m.dim()), proj(p, m.dim(), total);
    inj.set_block(off, 0, Matrix::identity(p, m.dim()));
    proj.set_block(0, off, Matrix::identity(p, m.dim()));
    out.injections.emplace_back(m, s, std::move(inj));
    out.projections.emplace_back(s, m, std::move(proj));
    off += m.dim();
  }
  return out;
}

Pullback pullback(const Morphism& f, const Morphism& g) {
  if (!(f.target() == g.target())) throw Error(ErrorCode::InvalidMorphism, "pullback of maps with different targets");
  const auto& a = f.source().algebra();
  auto sum = direct_sum(a, {f.source(), g.source()});
  const std::uint32_t p = a->prime();
  Matrix h = Matrix::hcat(f.matrix(), g.matrix().scaled(p - 1));
  auto k = kernel(Morphism(sum.module, f.target(), std::move(h)));
  const std::size_t x = f.source().dim(), y = g.source().dim();
  return {k.module, Morphism(k.module, f.source(), k.incl.matrix().block(0, 0, x, k.module.dim())),
          Morphism(k.module, g.source(), k.incl.matrix().block(x, 0, y, k.module.dim()))};
}

Pushout pushout(const Morphism& f, const Morphism& g) {
  if (!(f.source() == g.source())) throw Error(ErrorCode::InvalidMorphism, "pushout of maps with different sources");
  const auto& a = f.target().algebra();
  auto sum = direct_sum(a, {f.target(), g.target()});
  const std::uint32_t p = a->prime();
  Matrix h = Matrix::vcat(f.matrix(), g.matrix().scaled(p - 1));
  auto c = cokernel(Morphism(f.source(), sum.module, std::move(h)));
  const std::size_t x = f.target().dim(), y = g.target().dim();
  return {c.module, Morphism(f.target(), c.module, c.proj.matrix().block(0, 0, c.module.dim(), x)),
          Morphism(g.target(), c.module, c.proj.matrix().block(0, x, c.module.dim(), y))};
}

// Radical, top, covers -------------------------------------------------------------

namespace {

Matrix radical_span(const Module& m) {
  const Algebra& a = *m.algebra();
  Matrix all(m.prime(), m.dim(), 0);
  for (std::size_t r = 0; r < a.radical().cols(); ++r) all = Matrix::hcat(all, m.act(a.radical().column_vector(r)));
  return column_space_basis(all);
}

struct Generators {
  std::vector<std::size_t> idempotents;
  std::vector<Vec> vectors;
};

Generators top_generators(const Module& m, const Matrix& top_proj) {
  const Algebra& a = *m.algebra();
  const std::size_t t = top_proj.rows();
  Generators gens;
  EchelonSpan span(m.prime(), t);
  for (std::size_t i = 0; i < a.num_idempotents() && span.dim() < t; ++i) {
    const Matrix part = idempotent_part(m, i);
    for (std::size_t c = 0; c < part.cols() && span.dim() < t; ++c) {
      const Vec v = part.column_vector(c);
      bool grows = false;
      std::vector<Vec> generated;
      for (std::size_t b = 0; b < a.dim(); ++b) {
        Vec w = top_proj * (m.action(b) * v);
        if (!span.contains(w)) grows = true;
        generated.push_back(std::move(w));
      }
      if (!grows) continue;
      for (auto& w : generated) span.insert(std::move(w));
      gens.idempotents.push_back(i);
      gens.vectors.push_back(v);
    }
  }
  if (span.dim() != t)
    throw Error(ErrorCode::TopDecompositionFailed, "idempotent parts do not span the top");
  return gens;
}

}  // namespace

RadicalTop radical_and_top(const Module& m) {
  // Top = quotient by the radical span, via the left null space of its basis.
  const Matrix rad = radical_span(m);
  auto kb = kernel_with_free(rad.transpose());
  Matrix q = kb.basis.transpose();
  std::vector<Matrix> top_action;
  for (const auto& act : m.actions()) top_action.push_back((q * act).select_cols(kb.free_columns));
  Module top_mod(m.algebra(), q.rows(), std::move(top_action));
  Morphism top_proj(m, top_mod, std::move(q));
  return {kernel(top_proj).incl, top_proj};
}

Morphism map_from_projective(const Module& p, const Module& target, const std::vector<Vec>& images) {
  if (!p.summands() || p.summands()->size() != images.size())
    throw Error(ErrorCode::SourceNotProjective, "source is not a canonical projective with matching generators");
  const Algebra& a = *p.algebra();
  Matrix f(target.prime(), target.dim(), p.dim());
  std::size_t off = 0;
  for (std::size_t t = 0; t < images.size(); ++t) {
    const Matrix& basis = a.projective_basis((*p.summands())[t]);
    std::vector<Vec> moved;
    for (std::size_t k = 0; k < a.dim(); ++k) moved.push_back(target.action(k) * images[t]);
    for (std::size_t j = 0; j < basis.cols(); ++j)
      for (std::size_t k = 0; k < a.dim(); ++k) {
        const std::uint32_t c = basis(k, j);
        if (!c) continue;
        for (std::size_t r = 0; r < target.dim(); ++r) f.add_to(r, off + j, fp::mul(c, moved[k][r], target.prime()));
      }
    off += basis.cols();
  }
  return {p, target, std::move(f)};
}

ProjectiveCover projective_cover(const Module& m) {
  const AlgebraPtr& a = m.algebra();
  if (m.is_zero()) return {Module::zero(a), Morphism::zero(Module::zero(a), m)};
  const auto rt = radical_and_top(m);
  const Matrix& q = rt.top_proj.matrix();
  const auto gens = top_generators(m, q);
  Module p = projective_module(a, gens.idempotents);
  std::size_t top_sum = 0;
  for (std::size_t i : gens.idempotents) top_sum += a->projective_top_dim(i);
  const Matrix epi = map_from_projective(p, m, gens.vectors).matrix();
  if (rank(epi) != m.dim()) throw Error(ErrorCode::TopDecompositionFailed, "lifted generators do not generate the module");
  if (top_sum != q.rows())
    throw Error(ErrorCode::TopDecompositionFailed, "cover is not minimal; radical data is inconsistent");
  return {p, Morphism(p, m, std::move(epi))};
}

bool is_projective(const Module& m) { return m.is_zero() || projective_cover(m).projective.dim() == m.dim(); }

// Hom ----------------------------------------------------------------------------

std::vector<Morphism> hom_basis(const Module& m, const Module& n) {
  require_same_algebra(m.algebra(), n.algebra(), "Hom between modules over different algebras");
  std::vector<Morphism> out;
  if (m.is_zero() || n.is_zero()) return out;
  const Algebra& a = *m.algebra();
  const std::uint32_t p = m.prime();
  // Maps out of M are maps out of its cover that kill the cover's kernel.
  const auto cover = projective_cover(m);
  const auto& summ = *cover.projective.summands();
  const Matrix ker = kernel_basis(cover.epi.matrix());
  const Matrix sec = section(cover.epi.matrix());

  // Parameters: for each summand t, a vector in e_{i_t} N.
  std::vector<Matrix> parts;
  std::size_t nparams = 0;
  for (auto i : summ) {
    parts.push_back(idempotent_part(n, i));
    nparams += parts.back().cols();
  }
  // Each parameter vector gives psi: P -> N; record psi and psi * ker.
  std::vector<Matrix> psis;
  Matrix constraint(p, n.dim() * ker.cols(), nparams);
  std::size_t param = 0, off = 0;
  for (std::size_t t = 0; t < summ.size(); ++t) {
    const Matrix& basis = a.projective_basis(summ[t]);
    std::vector<Matrix> acts;
    for (std::size_t j = 0; j < basis.cols(); ++j) acts.push_back(n.act(basis.column_vector(j)));
    for (std::size_t c = 0; c < parts[t].cols(); ++c, ++param) {
      const Vec v = parts[t].column_vector(c);
      Matrix psi(p, n.dim(), cover.projective.dim());
      for (std::size_t j = 0; j < basis.cols(); ++j) {
        const Vec col = acts[j] * v;
        for (std::size_t r = 0; r < n.dim(); ++r) psi.set(r, off + j, col[r]);
      }
      const Matrix pk = psi * ker;
      for (std::size_t e = 0; e < pk.entries().size(); ++e) constraint.set(e, param, pk.entries()[e]);
      psis.push_back(std::move(psi));
    }
    off += basis.cols();
  }
  const Matrix sol = kernel_basis(constraint);
  for (std::size_t s = 0; s < sol.cols(); ++s) {
    Matrix psi(p, n.dim(), cover.projective.dim());
    for (std::size_t k = 0; k < nparams; ++k)
      if (sol(k, s)) psi = psi + psis[k].scaled(sol(k, s));
    out.emplace_back(m, n, psi * sec);
  }
  return out;
}

std::size_t hom_dim(const Module& m, const Module& n) { return hom_basis(m, n).size(); }

// Duality ----------------------------------------------------------------------------

Module k_dual(const Module& m) {
  auto op = opposite_algebra(m.algebra());
  std::vector<Matrix> action;
  for (const auto& act : m.actions()) action.push_back(act.transpose());
  return Module(op, m.dim(), std::move(action));
}

Morphism k_dual(const Morphism& f) {
  return Morphism(k_dual(f.target()), k_dual(f.source()), f.matrix().transpose());
}

// Isomorphism ----------------------------------------------------------------------

std::vector<std::size_t> module_invariants(const Module& m) {
  const Algebra& a = *m.algebra();
  std::vector<std::size_t> inv{m.dim()};
  for (std::size_t i = 0; i < a.num_idempotents(); ++i) inv.push_back(rank(m.act(a.idempotent(i))));
  // Radical layers.
  Matrix layer = Matrix::identity(m.prime(), m.dim());
  while (layer.cols() > 0) {
    Matrix next(m.prime(), m.dim(), 0);
    for (std::size_t r = 0; r < a.radical().cols(); ++r)
      next = Matrix::hcat(next, m.act(a.radical().column_vector(r)) * layer);
    layer = column_space_basis(next);
    inv.push_back(layer.cols());
  }
  // Socle and its idempotent parts.
  Matrix stacked(m.prime(), 0, m.dim());
  for (std::size_t r = 0; r < a.radical().cols(); ++r)
    stacked = Matrix::vcat(stacked, m.act(a.radical().column_vector(r)));
  const Matrix soc = kernel_basis(stacked);
  inv.push_back(soc.cols());
  for (std::size_t i = 0; i < a.num_idempotents(); ++i)
    inv.push_back(rank(m.act(a.idempotent(i)) * soc));
  return inv;
}

Verdict is_isomorphic(const Module& m, const Module& n, const IsoOptions& opt) {
  if (!same_algebra(m.algebra(), n.algebra())) return Verdict::no("modules over different algebras");
  if (m.dim() != n.dim()) return Verdict::no("dimensions differ");
  if (m == n) {
    Verdict v = Verdict::yes("identical modules");
    v.iso = Matrix::identity(m.prime(), m.dim());
    return v;
  }
  if (module_invariants(m) != module_invariants(n)) return Verdict::no("dimension invariants differ");
  const AlgebraPtr& a = m.algebra();
  for (std::size_t i = 0; i < a->num_idempotents(); ++i) {
    const Module s = simple_module(a, i);
    if (hom_dim(m, s) != hom_dim(n, s) || hom_dim(s, m) != hom_dim(s, n))
      return Verdict::no("Hom dimensions against simple " + std::to_string(i) + " differ");
  }
  const auto homs = hom_basis(m, n);
  if (homs.empty()) return Verdict::no("Hom(M,N) = 0");
  const std::uint32_t p = m.prime();

  // An endomorphism-free criterion: phi is invertible iff its top map is.
  const auto rt_m = radical_and_top(m), rt_n = radical_and_top(n);
  const Matrix& qm = rt_m.top_proj.matrix();
  const Matrix& qn = rt_n.top_proj.matrix();
  if (qm.rows() != qn.rows()) return Verdict::no("top dimensions differ");
  const Matrix sm = section(qm);
  EchelonSpan span(p, qm.rows() * qm.rows());
  std::vector<std::size_t> chosen;
  std::vector<Matrix> tops;
  for (std::size_t j = 0; j < homs.size(); ++j) {
    Matrix top = qn * homs[j].matrix() * sm;
    if (span.insert(flat_vec(top))) {
      chosen.push_back(j);
      tops.push_back(std::move(top));
    }
  }
  const std::size_t w = chosen.size();
  const std::size_t t = qm.rows();
  auto found = [&](const Matrix& x) {
    Verdict v = Verdict::yes("invertible intertwiner");
    v.iso = x;
    return v;
  };
  bool small = w <= 8;
  std::uint64_t count = 1;
  for (std::size_t k = 0; small && k < w; ++k) {
    count *= p;
    if (count > 4096) small = false;
  }
  if (small) {
    std::vector<std::uint32_t> c(w, 0);
    for (std::uint64_t idx = 1; idx < count; ++idx) {
      std::uint64_t r = idx;
      for (std::size_t k = 0; k < w; ++k) {
        c[k] = static_cast<std::uint32_t>(r % p);
        r /= p;
      }
      Matrix top(p, t, t);
      for (std::size_t k = 0; k < w; ++k)
        if (c[k]) top = top + tops[k].scaled(c[k]);
      if (rank(top) != t) continue;
      Matrix x(p, n.dim(), m.dim());
      for (std::size_t k = 0; k < w; ++k)
        if (c[k]) x = x + homs[chosen[k]].matrix().scaled(c[k]);
      if (rank(x) == m.dim()) return found(x);
    }
    return Verdict::no("no invertible map in Hom(M,N) (exhaustive over top maps)");
  }
  std::mt19937_64 rng(opt.seed);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    Matrix x(p, n.dim(), m.dim());
    for (const auto& h : homs) {
      const auto c = static_cast<std::uint32_t>(rng() % p);
      if (c) x = x + h.matrix().scaled(c);
    }
    if (rank(x) == m.dim()) return found(x);
  }
  return Verdict::unknown(opt.samples, "no invertible map among random samples");
}

// Projective maps and their duals ----------------------------------------------------

std::vector<std::vector<Vec>> projective_map_components(const Morphism& f) {
  const auto& src = f.source().summands();
  const auto& tgt = f.target().summands();
  if (!src || !tgt) throw Error(ErrorCode::SourceNotProjective, "map is not between canonical projectives");
  const Algebra& a = *f.source().algebra();
  std::vector<std::vector<Vec>> out(src->size(), std::vector<Vec>(tgt->size()));
  std::size_t soff = 0;
  for (std::size_t s = 0; s < src->size(); ++s) {
    const std::size_t js = (*src)[s];
    Vec g(f.source().dim(), 0);
    const Vec& gen = a.projective_generator(js);
    for (std::size_t k = 0; k < gen.size(); ++k) g[soff + k] = gen[k];
    const Vec img = f.matrix() * g;
    std::size_t toff = 0;
    for (std::size_t t = 0; t < tgt->size(); ++t) {
      const Matrix& basis = a.projective_basis((*tgt)[t]);
      Vec coords(img.begin() + static_cast<long>(toff), img.begin() + static_cast<long>(toff + basis.cols()));
      out[s][t] = basis * coords;
      toff += basis.cols();
    }
    soff += a.projective_basis(js).cols();
  }
  return out;
}

Morphism star_dual_projective_map(const Morphism& f) {
  const auto comps = projective_map_components(f);
  const AlgebraPtr& a = f.source().algebra();
  const AlgebraPtr op = opposite_algebra(a);
  const auto& src = *f.source().summands();  // P1
  const auto& tgt = *f.target().summands();  // P0
  Module p0s = projective_module(op, tgt);
  Module p1s = projective_module(op, src);
  Matrix mat(a->prime(), p1s.dim(), p0s.dim());
  // (y_t) -> (sum_t a_{ts} y_t)_s with products taken in A.
  std::size_t col = 0;
  for (std::size_t t = 0; t < tgt.size(); ++t) {
    const Matrix& ybasis = op->projective_basis(tgt[t]);
    for (std::size_t c = 0; c < ybasis.cols(); ++c, ++col) {
      const Vec y = ybasis.column_vector(c);
      std::size_t row = 0;
      for (std::size_t s = 0; s < src.size(); ++s) {
        const Matrix& sb = op->projective_basis(src[s]);
        const Vec prod = a->multiply(comps[s][t], y);
        const auto coords = solve(sb, Matrix::column(a->prime(), prod));
        for (std::size_t r = 0; r < sb.cols(); ++r) mat.set(row + r, col, (*coords)(r, 0));
        row += sb.cols();
      }
    }
  }
  return Morphism(p0s, p1s, std::move(mat));
}

// Exact sequences ----------------------------------------------------------------------

Verdict check_exact(const ExactSequence& seq) {
  const auto& ms = seq.modules;
  const auto& fs = seq.maps;
  auto fail = [](std::size_t node, std::string why) {
    Verdict v = Verdict::no(std::move(why));
    v.node = node;
    return v;
  };
  if (ms.empty()) return Verdict::yes("empty sequence");
  if (fs.size() + 1 != ms.size()) return fail(0, "map count does not match module count");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!(fs[i].source() == ms[i]) || !(fs[i].target() == ms[i + 1])) return fail(i, "map is not composable with its neighbours");
    if (!fs[i].intertwines()) return fail(i, "map does not intertwine the actions");
  }
  std::vector<std::size_t> ranks;
  for (const auto& f : fs) ranks.push_back(rank(f.matrix()));
  for (std::size_t i = 0; i + 1 < fs.size(); ++i)
    if (!(fs[i + 1].matrix() * fs[i].matrix()).is_zero()) return fail(i + 1, "consecutive maps do not compose to zero");
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const std::size_t in = i == 0 ? 0 : ranks[i - 1];
    const std::size_t out = i == fs.size() ? 0 : ranks[i];
    if (in + out != ms[i].dim()) return fail(i, "not exact at node " + std::to_string(i));
  }
  return Verdict::yes("exact");
}

namespace {

bool hom_exact(const ExactSequence& seq, const Module& x, bool covariant) {
  std::vector<std::vector<Morphism>> hs;
  for (const auto& m : seq.modules) hs.push_back(covariant ? hom_basis(x, m) : hom_basis(m, x));
  std::vector<std::size_t> ranks;
  for (std::size_t i = 0; i < seq.maps.size(); ++i) {
    const Matrix& f = seq.maps[i].matrix();
    const auto& from = covariant ? hs[i] : hs[i + 1];
    std::vector<Vec> imgs;
    for (const auto& h : from) imgs.push_back(flat_vec(covariant ? f * h.matrix() : h.matrix() * f));
    if (imgs.empty()) {
      ranks.push_back(0);
      continue;
    }
    ranks.push_back(rank(Matrix::from_columns(x.prime(), imgs.front().size(), imgs)));
  }
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const std::size_t before = i == 0 ? 0 : ranks[i - 1];
    const std::size_t after = i == ranks.size() ? 0 : ranks[i];
    if (before + after != hs[i].size()) return false;
  }
  return true;
}

}  // namespace

bool hom_exact_covariant(const ExactSequence& seq, const Module& x) { return hom_exact(seq, x, true); }
bool hom_exact_contravariant(const ExactSequence& seq, const Module& x) { return hom_exact(seq, x, false); }

}  // namespace homcalc
