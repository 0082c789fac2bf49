#include "common.hpp"

using namespace t;

TEST_CASE("corpus algebras") {
  CHECK(dual2()->dim() == 2);
  CHECK(dual2()->num_idempotents() == 1);
  CHECK(a2path()->dim() == 3);
  CHECK(a2path()->num_idempotents() == 2);
  const AlgebraPtr l = loc3();
  CHECK(l->dim() == 3);
  CHECK(l->radical().cols() == 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const Vec prod = l->multiply(l->radical().column_vector(i), l->radical().column_vector(j));
      CHECK(std::all_of(prod.begin(), prod.end(), [](std::uint32_t x) { return x == 0; }));
    }
  CHECK(corpus().size() == 4);
  CHECK_THROWS_AS(corpus_algebra("NOPE"), Error);
}

TEST_CASE("random modules") {
  const AlgebraPtr a = a2path();
  CHECK(iso(random_module(a, {1, 2}, {0, 0}, 3), projective_from_multiplicities(a, {1, 2})));
  CHECK(random_module(a, {0, 0}, {2, 1}, 3).is_zero());

  const AlgebraPtr d = dual2();
  const Matrix times_x = d->left_mult(1);
  bool seen = false;
  for (std::uint64_t seed = 0; seed < 64 && !seen; ++seed) {
    const Presentation p = random_presentation(d, {1}, {1}, seed);
    if (p.matrix != times_x) continue;
    seen = true;
    CHECK(iso(presented_module(d, p), simple_module(d, 0)));
  }
  CHECK(seen);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Presentation p = sample_presentation(loc3(), seed);
    CHECK(std::any_of(p.target.begin(), p.target.end(), [](std::size_t x) { return x > 0; }));
    CHECK(p.matrix == sample_presentation(loc3(), seed).matrix);
  }
  CHECK(sample_seed(1, 2) != sample_seed(2, 1));
}

TEST_CASE("property checks") {
  const CheckReport r = check("TH-5.6-3", a2path(), {20, kDefaultCutoff, 7});
  CHECK(r.failed.empty());
  CHECK(r.drawn == 20);
  CHECK(r.samples == r.passed + r.unknown);

  const CheckReport dual = check("TH-5.6-6", dual2(), {20, kDefaultCutoff, 1});
  CHECK(dual.failed.empty());
  CHECK(dual.passed == dual.samples);

  for (const auto& a : corpus()) CHECK(check("TRTR", a, {10, kDefaultCutoff, 3}).failed.empty());

  const CheckReport again = check("TH-5.6-3", a2path(), {20, kDefaultCutoff, 7});
  CHECK(again.passed == r.passed);
  CHECK(again.skipped == r.skipped);

  CHECK_THROWS_AS(check("TH-9.9", a2path(), {}), Error);
  CHECK(property_ids().size() == 17);
}

TEST_CASE("replay reproduces a sample") {
  const AlgebraPtr a = nak3();
  FailureRecord rec;
  rec.seed = 5;
  rec.presentation = sample_presentation(a, 5);
  const SampleResult first = replay("TH-5.6-4", a, rec, kDefaultCutoff);
  const SampleResult second = replay("TH-5.6-4", a, rec, kDefaultCutoff);
  CHECK(first.outcome == second.outcome);
  CHECK(first.detail == second.detail);
}

TEST_CASE("conjecture scans") {
  CHECK(scan("CONJ-5.18-2", dual2(), {}).verdict == ScanVerdict::Consistent);
  const ScanReport loc = scan("CONJ-5.18-2", loc3(), {});
  CHECK(loc.verdict == ScanVerdict::Consistent);
  CHECK_FALSE(loc.observations.empty());
  CHECK(scan("Q-5.17", a2path(), {10, kDefaultCutoff, 0}).verdict == ScanVerdict::Consistent);
  CHECK(scan("CONJ-5.18-2", loc3(), {10, 0, 0}).verdict == ScanVerdict::Undecided);
  CHECK_THROWS_AS(scan("CONJ-0", dual2(), {}), Error);
}
