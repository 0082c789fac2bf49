#include "common.hpp"

using namespace t;

TEST_CASE("hom spaces") {
  for (const auto& a : corpus())
    for (std::size_t i = 0; i < a->num_idempotents(); ++i) {
      const Module s = simple_module(a, i);
      CHECK(hom_basis(s, s).size() == 1);
      CHECK(hom_basis(s, Module::zero(a)).empty());
    }
  CHECK(hom_basis(indecomposable_projective(a2path(), 0), indecomposable_projective(a2path(), 1)).empty());
  for (const auto& f : hom_basis(regular_module(loc3()), regular_module(loc3()))) CHECK(f.intertwines());
  CHECK(hom_dim(regular_module(loc3()), regular_module(loc3())) == 3);
}

TEST_CASE("kernels and cokernels") {
  const AlgebraPtr a = a2path();
  const Module p1 = indecomposable_projective(a, 0);
  const Module s1 = simple_module(a, 0);
  const Module s2 = simple_module(a, 1);

  CHECK(kernel(Morphism::identity(p1)).module.is_zero());
  CHECK(iso(kernel(Morphism::zero(p1, s1)).module, p1));
  const ProjectiveCover pc = projective_cover(s1);
  const Kernel k = kernel(pc.epi);
  CHECK(k.module.dim() == 1);
  CHECK(iso(k.module, s2));

  CHECK(cokernel(Morphism::identity(p1)).module.is_zero());
  CHECK(iso(cokernel(Morphism::zero(s1, p1)).module, p1));
  CHECK(iso(cokernel(k.incl).module, s1));

  // dim source = dim kernel + rank, dim target = rank + dim cokernel
  for (const auto& f : hom_basis(regular_module(a), regular_module(a))) {
    const std::size_t r = rank(f.matrix());
    CHECK(kernel(f).module.dim() + r == f.source().dim());
    CHECK(cokernel(f).module.dim() + r == f.target().dim());
    CHECK(image(f).module.dim() == r);
  }
}

TEST_CASE("direct sums") {
  const AlgebraPtr a = dual2();
  CHECK(direct_sum(a, {}).module.is_zero());
  const Module s = simple_module(a, 0);
  const DirectSum one = direct_sum(a, {s});
  CHECK(one.module == s);
  CHECK(one.injections.at(0).matrix() == Matrix::identity(2, 1));
  const DirectSum two = direct_sum(a, {s, s});
  CHECK(two.module.dim() == 2);
  CHECK(two.module.act(a->basis_vector(1)).is_zero());
}

TEST_CASE("pullbacks and pushouts") {
  const AlgebraPtr a = a2path();
  const Module p1 = indecomposable_projective(a, 0);
  const Module s1 = simple_module(a, 0);
  const Module s2 = simple_module(a, 1);

  const Pullback id = pullback(Morphism::identity(p1), Morphism::identity(p1));
  CHECK(id.module.dim() == p1.dim());

  const Pullback zero = pullback(Morphism::zero(s1, p1), Morphism::zero(s2, p1));
  CHECK(zero.module.dim() == 2);

  const Morphism epi = projective_cover(s1).epi;
  CHECK(pullback(epi, epi).module.dim() == 3);

  const Pushout po_id = pushout(Morphism::identity(p1), Morphism::identity(p1));
  CHECK(po_id.module.dim() == p1.dim());
  const Pushout po_zero = pushout(Morphism::zero(Module::zero(a), s1), Morphism::zero(Module::zero(a), s2));
  CHECK(po_zero.module.dim() == 2);
  const Morphism incl = kernel(epi).incl;
  CHECK(pushout(incl, incl).module.dim() == 3);
}

TEST_CASE("radical, top and projective covers") {
  const AlgebraPtr a = a2path();
  const RadicalTop rt = radical_and_top(indecomposable_projective(a, 0));
  CHECK(iso(rt.rad_incl.source(), simple_module(a, 1)));
  CHECK(iso(rt.top_proj.target(), simple_module(a, 0)));

  const RadicalTop st = radical_and_top(simple_module(loc3(), 0));
  CHECK(st.rad_incl.source().is_zero());
  CHECK(st.top_proj.target().dim() == 1);

  const RadicalTop reg = radical_and_top(regular_module(nak3()));
  CHECK(reg.rad_incl.source().dim() == 2);
  CHECK(reg.top_proj.target().dim() == 1);

  const ProjectiveCover own = projective_cover(indecomposable_projective(a, 0));
  CHECK(own.projective.dim() == 2);
  CHECK(kernel(own.epi).module.is_zero());

  const ProjectiveCover sc = projective_cover(simple_module(dual2(), 0));
  CHECK(iso(sc.projective, regular_module(dual2())));
  CHECK(iso(kernel(sc.epi).module, simple_module(dual2(), 0)));

  CHECK(projective_cover(Module::zero(a)).projective.is_zero());
}

TEST_CASE("linear duality") {
  const AlgebraPtr d = dual2();
  const Module dreg = k_dual(regular_module(d));
  CHECK(iso(dreg, regular_module(opposite_algebra(d))));
  for (const auto& a : corpus())
    for (std::size_t i = 0; i < a->num_idempotents(); ++i) {
      const Module ds = k_dual(simple_module(a, i));
      CHECK(ds.dim() == 1);
      CHECK(iso(ds, simple_module(opposite_algebra(a), i)));
    }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const AlgebraPtr a = corpus()[seed % 4];
    const Module m = presented_module(a, sample_presentation(a, seed));
    CHECK(iso(k_dual(k_dual(m)), m));
  }
}

TEST_CASE("isomorphism test") {
  const Module m = presented_module(loc3(), sample_presentation(loc3(), 3));
  const Verdict self = is_isomorphic(m, m);
  CHECK(self.is_true());
  CHECK(self.iso.has_value());
  CHECK(is_isomorphic(simple_module(a2path(), 0), simple_module(a2path(), 1)).is_false());
  const Module s = simple_module(nak3(), 0);
  const Verdict periodic = is_isomorphic(syzygy(s, 2), s);
  CHECK(periodic.is_true());
  REQUIRE(periodic.iso.has_value());
  CHECK(periodic.iso->rows() == 1);
}

TEST_CASE("star dual of maps between projectives") {
  const AlgebraPtr a = a2path();
  const Module p1 = indecomposable_projective(a, 0);
  const Module p2 = indecomposable_projective(a, 1);
  const Morphism id = Morphism::identity(p1);
  const Morphism id_star = star_dual_projective_map(id);
  CHECK(id_star.matrix() == Matrix::identity(2, id_star.source().dim()));
  CHECK(star_dual_projective_map(Morphism::zero(p2, p1)).matrix().is_zero());
  const auto incl = hom_basis(p2, p1);
  REQUIRE(incl.size() == 1);
  const Morphism f = star_dual_projective_map(incl[0]);
  CHECK(f.intertwines());
  CHECK(rank(f.matrix()) == 1);
  CHECK(f.source().dim() + f.target().dim() == 3);
}

TEST_CASE("exact sequence checks") {
  const AlgebraPtr a = a2path();
  const Morphism epi = projective_cover(simple_module(a, 0)).epi;
  const Morphism incl = kernel(epi).incl;
  const ExactSequence seq{{incl.source(), epi.source(), epi.target()}, {incl, epi}};
  CHECK(check_exact(seq).is_true());
  CHECK(hom_exact_covariant(seq, regular_module(a)));
  const ExactSequence broken{{incl.source(), epi.source(), epi.target()}, {incl, Morphism::zero(epi.source(), epi.target())}};
  CHECK(check_exact(broken).is_false());
}
