#include "common.hpp"

using namespace t;

namespace {

Module injective(const AlgebraPtr& a, std::size_t i) { return k_dual(indecomposable_projective(opposite_algebra(a), i)); }

bool exact_value(const DimensionReport& r, std::size_t n) { return r.kind == DimKind::Exact && r.value == n; }

}  // namespace

TEST_CASE("minimal resolutions") {
  Resolution proj(indecomposable_projective(a2path(), 0));
  proj.extend_to(3);
  CHECK(proj.length() == std::optional<std::size_t>(0));

  Resolution s(simple_module(dual2(), 0));
  s.extend_to(5);
  REQUIRE(s.periodicity().has_value());
  CHECK(s.periodicity()->second - s.periodicity()->first == 1);
  CHECK(s.periodicity()->second <= 1);

  Resolution s1(simple_module(a2path(), 0));
  s1.extend_to(5);
  CHECK(s1.length() == std::optional<std::size_t>(1));
  CHECK(iso(s1.term(0), indecomposable_projective(a2path(), 0)));
  CHECK(iso(s1.term(1), indecomposable_projective(a2path(), 1)));
  CHECK(s1.differential(1).intertwines());
}

TEST_CASE("syzygies") {
  const Module m = presented_module(loc3(), sample_presentation(loc3(), 9));
  CHECK(syzygy(m, 0) == m);
  const Module s = simple_module(dual2(), 0);
  CHECK(iso(syzygy(s, 1), s));
  const Module t3 = simple_module(nak3(), 0);
  CHECK(iso(syzygy(t3, 2), t3));
  CHECK(syzygy(t3, 1).dim() == 2);
}

TEST_CASE("ext dimensions") {
  for (const auto& a : corpus()) {
    const Module m = presented_module(a, sample_presentation(a, 4));
    if (!m.is_zero()) CHECK(ext_dim(m, m, 0) >= 1);
  }
  const Module s = simple_module(dual2(), 0);
  Resolution r(s);
  for (std::size_t i = 0; i <= 10; ++i) CHECK(ext_dim(r, s, i) == std::optional<std::size_t>(1));
  CHECK(ext_dim(simple_module(a2path(), 0), simple_module(a2path(), 1), 1) == 1);
  CHECK(ext_dim(simple_module(a2path(), 0), simple_module(a2path(), 0), 1) == 0);
}

TEST_CASE("transpose") {
  for (const auto& a : corpus())
    for (std::size_t i = 0; i < a->num_idempotents(); ++i) CHECK(transpose(indecomposable_projective(a, i)).is_zero());
  const Module tr = transpose(simple_module(dual2(), 0));
  CHECK(iso(tr, simple_module(opposite_algebra(dual2()), 0)));
  const Module s1 = simple_module(a2path(), 0);
  CHECK(iso(transpose(transpose(s1)), s1));
}

TEST_CASE("projective and injective dimension") {
  CHECK(exact_value(proj_dim(regular_module(loc3())), 0));
  const DimensionReport inf = proj_dim(simple_module(dual2(), 0));
  CHECK(inf.kind == DimKind::Infinite);
  CHECK(inf.period.has_value());
  CHECK(exact_value(proj_dim(simple_module(a2path(), 0)), 1));

  for (const auto& a : corpus())
    for (std::size_t i = 0; i < a->num_idempotents(); ++i) CHECK(exact_value(inj_dim(injective(a, i)), 0));
  CHECK(inj_dim(simple_module(dual2(), 0)).kind == DimKind::Infinite);
  CHECK(exact_value(inj_dim(simple_module(a2path(), 1)), 1));
  CHECK(exact_value(inj_dim(simple_module(a2path(), 0)), 0));
}

TEST_CASE("perpendicular tests") {
  const Module reg_a = regular_module(a2path());
  CHECK(perp_test(indecomposable_projective(a2path(), 0), {reg_a, simple_module(a2path(), 0)}).is_true());
  const Verdict dual = perp_test(simple_module(dual2(), 0), {regular_module(dual2())});
  CHECK(dual.is_true());
  CHECK(dual.period.has_value());
  const Verdict loc = perp_test(simple_module(loc3(), 0), {regular_module(loc3())});
  CHECK(loc.is_false());
  REQUIRE(loc.ext.has_value());
  CHECK(loc.ext->degree == 1);
  CHECK(loc.ext->dimension > 0);
}

TEST_CASE("Gorenstein projectivity") {
  CHECK(is_gorenstein_projective(indecomposable_projective(loc3(), 0)).is_true());
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    CHECK(is_gorenstein_projective(presented_module(dual2(), sample_presentation(dual2(), seed))).is_true());
  CHECK(is_gorenstein_projective(simple_module(loc3(), 0)).is_false());

  CHECK(exact_value(gorenstein_pd(simple_module(dual2(), 0)), 0));
  CHECK(exact_value(gorenstein_pd(simple_module(a2path(), 0)), 1));
  CHECK(exact_value(gorenstein_pd(regular_module(nak3())), 0));
}

TEST_CASE("perp dimension") {
  const Module reg = regular_module(dual2());
  CHECK(exact_value(perp_dim(reg, {reg}), 0));
  CHECK(exact_value(perp_dim(simple_module(dual2(), 0), {reg}), 0));
  CHECK(exact_value(perp_dim(simple_module(a2path(), 0), {regular_module(a2path())}), 1));
}

TEST_CASE("torsionfree modules") {
  CHECK(is_torsionfree_infty(indecomposable_projective(a2path(), 0)).is_true());
  for (std::uint64_t seed = 0; seed < 5; ++seed)
    CHECK(is_torsionfree_infty(presented_module(dual2(), sample_presentation(dual2(), seed))).is_true());
  // Tr S over LOC3 has Ext^1(Tr S, A^op) != 0.
  CHECK(is_torsionfree_infty(simple_module(loc3(), 0)).is_false());

  const DimensionReport tf0 = torsionfree_dim_upper(regular_module(a2path()));
  CHECK(tf0.value == 0);
  const DimensionReport tf1 = torsionfree_dim_upper(simple_module(a2path(), 0));
  CHECK(tf1.kind == DimKind::UpperBound);
  CHECK(tf1.value == 1);
  const DimensionReport tf3 = torsionfree_dim_upper(simple_module(nak3(), 0));
  CHECK(tf3.value == 0);
  CHECK(tf3.kind != DimKind::Infinite);
}

TEST_CASE("Gorenstein injective dimension") {
  CHECK(exact_value(gorenstein_id(injective(a2path(), 1)), 0));
  CHECK(exact_value(gorenstein_id(simple_module(dual2(), 0)), 0));
  CHECK(exact_value(gorenstein_id(simple_module(a2path(), 0)), 0));
}

TEST_CASE("coresolution step") {
  const Module p = indecomposable_projective(a2path(), 0);
  const CoresolutionStep deg = gp_coresolution_step(p);
  CHECK(deg.certificate.is_true());
  CHECK(deg.sequence.modules.at(2).is_zero());

  const Module s = simple_module(dual2(), 0);
  const CoresolutionStep step = gp_coresolution_step(s);
  CHECK(step.certificate.is_true());
  CHECK(iso(step.sequence.modules.at(1), regular_module(dual2())));
  CHECK(iso(step.sequence.modules.at(2), s));

  const CoresolutionStep zero = gp_coresolution_step(Module::zero(dual2()));
  for (const auto& m : zero.sequence.modules) CHECK(m.is_zero());

  CHECK_THROWS_AS(gp_coresolution_step(simple_module(loc3(), 0)), Error);
}

TEST_CASE("Ext is balanced under duality") {
  for (const auto& a : corpus())
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const Module m = presented_module(a, sample_presentation(a, seed));
      const Module n = presented_module(a, sample_presentation(a, seed + 100));
      for (std::size_t i = 0; i <= 3; ++i) CHECK(ext_dim(m, n, i) == ext_dim(k_dual(n), k_dual(m), i));
    }
}
