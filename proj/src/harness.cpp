#include "homcalc/harness.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace homcalc {

// Corpus ---------------------------------------------------------------------------------

std::vector<QuiverPresentation> corpus_presentations() {
  std::vector<QuiverPresentation> out;
  {
    QuiverPresentation q;
    q.name = "DUAL2";
    q.field_char = 2;
    q.vertices = {"1"};
    q.arrows = {{"x", "1", "1"}};
    q.nilpotency_bound = 2;
    out.push_back(q);
  }
  {
    QuiverPresentation q;
    q.name = "NAK3";
    q.field_char = 3;
    q.vertices = {"1"};
    q.arrows = {{"x", "1", "1"}};
    q.nilpotency_bound = 3;
    out.push_back(q);
  }
  {
    QuiverPresentation q;
    q.name = "A2PATH";
    q.field_char = 2;
    q.vertices = {"1", "2"};
    q.arrows = {{"a", "1", "2"}};
    q.nilpotency_bound = 2;
    out.push_back(q);
  }
  {
    QuiverPresentation q;
    q.name = "LOC3";
    q.field_char = 2;
    q.vertices = {"1"};
    q.arrows = {{"x", "1", "1"}, {"y", "1", "1"}};
    q.relations = {{{{"x", "y"}, 1}, {{"y", "x"}, -1}}};
    q.nilpotency_bound = 2;
    out.push_back(q);
  }
  return out;
}

std::vector<AlgebraPtr> corpus() {
  std::vector<AlgebraPtr> out;
  for (const auto& q : corpus_presentations()) out.push_back(algebra_from_quiver(q));
  return out;
}

AlgebraPtr corpus_algebra(const std::string& name) {
  for (const auto& q : corpus_presentations())
    if (q.name == name) return algebra_from_quiver(q);
  throw Error(ErrorCode::ValidationError, "no corpus algebra named " + name);
}

// Sampling -------------------------------------------------------------------------------

Module projective_from_multiplicities(const AlgebraPtr& a, const std::vector<std::size_t>& mults) {
  if (mults.size() != a->num_idempotents())
    throw Error(ErrorCode::DimensionMismatch, "one multiplicity per idempotent expected");
  std::vector<std::size_t> summands;
  for (std::size_t i = 0; i < mults.size(); ++i) summands.insert(summands.end(), mults[i], i);
  return projective_module(a, summands);
}

Module presented_module(const AlgebraPtr& a, const Presentation& pres) {
  const Module target = projective_from_multiplicities(a, pres.target);
  const Module source = projective_from_multiplicities(a, pres.source);
  if (pres.matrix.rows() != target.dim() || pres.matrix.cols() != source.dim())
    throw Error(ErrorCode::DimensionMismatch, "presentation matrix has the wrong shape", "matrix");
  return cokernel(Morphism::checked(source, target, pres.matrix)).module;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t k) { return splitmix64(splitmix64(seed) ^ k); }

namespace {

Presentation draw_presentation(const AlgebraPtr& a, const std::vector<std::size_t>& t_mults,
                               const std::vector<std::size_t>& s_mults, std::mt19937_64& rng) {
  const Module target = projective_from_multiplicities(a, t_mults);
  const Module source = projective_from_multiplicities(a, s_mults);
  const std::uint32_t p = a->prime();
  std::vector<Vec> images;
  for (std::size_t i : *source.summands()) {
    const Matrix part = idempotent_part(target, i);
    Vec v(target.dim(), 0);
    for (std::size_t c = 0; c < part.cols(); ++c) {
      const auto coeff = static_cast<std::uint32_t>(rng() % p);
      for (std::size_t r = 0; r < target.dim(); ++r) v[r] = fp::add(v[r], fp::mul(coeff, part(r, c), p), p);
    }
    images.push_back(std::move(v));
  }
  return {t_mults, s_mults, map_from_projective(source, target, images).matrix()};
}

}  // namespace

Presentation random_presentation(const AlgebraPtr& a, const std::vector<std::size_t>& t_mults,
                                 const std::vector<std::size_t>& s_mults, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return draw_presentation(a, t_mults, s_mults, rng);
}

Module random_module(const AlgebraPtr& a, const std::vector<std::size_t>& t_mults,
                     const std::vector<std::size_t>& s_mults, std::uint64_t seed) {
  return presented_module(a, random_presentation(a, t_mults, s_mults, seed));
}

Presentation sample_presentation(const AlgebraPtr& a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = a->num_idempotents();
  std::vector<std::size_t> t(n), s(n);
  for (auto& x : t) x = rng() % 3;
  for (auto& x : s) x = rng() % 3;
  if (std::all_of(t.begin(), t.end(), [](std::size_t x) { return x == 0; })) t[rng() % n] = 1;
  return draw_presentation(a, t, s, rng);
}

// Properties ---------------------------------------------------------------------------

namespace {

enum class Hyp { Holds, Fails, Unsure };

/// Hypothesis "the dimension is finite" read off a report.
Hyp finite(const DimensionReport& r) {
  switch (r.kind) {
    case DimKind::Exact: return Hyp::Holds;
    case DimKind::Infinite:
    case DimKind::Zero: return Hyp::Fails;
    default: return Hyp::Unsure;
  }
}

std::string describe(const DimensionReport& r) {
  std::string s = to_string(r.kind);
  if (r.kind != DimKind::Zero && r.kind != DimKind::Infinite) s += "(" + std::to_string(r.value) + ")";
  return s;
}

SampleResult pass() { return {Outcome::Passed, {}, std::nullopt}; }
SampleResult skip() { return {Outcome::Skipped, {}, std::nullopt}; }
SampleResult fail(std::string why) { return {Outcome::Failed, std::move(why), std::nullopt}; }
SampleResult unsure(std::string why) { return {Outcome::Unknown, std::move(why), std::nullopt}; }

SampleResult from_hyp(Hyp h, const std::string& why) {
  return h == Hyp::Fails ? skip() : unsure("hypothesis undecided: " + why);
}

/// Exact(n) versus a claimed value; non-exact reports are unknown unless
/// they already rule n out.
SampleResult expect_exact(const DimensionReport& r, std::size_t n, const std::string& what) {
  if (r.kind == DimKind::Exact) {
    if (r.value == n) return pass();
    return fail(what + " is " + describe(r) + ", expected Exact(" + std::to_string(n) + ")");
  }
  if (r.kind == DimKind::Infinite) return fail(what + " is Infinite, expected Exact(" + std::to_string(n) + ")");
  if (r.kind == DimKind::AtLeast && r.value > n)
    return fail(what + " is " + describe(r) + ", expected Exact(" + std::to_string(n) + ")");
  if (r.kind == DimKind::UpperBound && r.value < n)
    return fail(what + " is " + describe(r) + ", expected Exact(" + std::to_string(n) + ")");
  return unsure(what + " is " + describe(r));
}

/// Two dimensions that should coincide.
SampleResult expect_equal(const DimensionReport& x, const DimensionReport& y, const std::string& what) {
  if (x.kind == DimKind::Exact) return expect_exact(y, x.value, what);
  if (y.kind == DimKind::Exact) return expect_exact(x, y.value, what);
  if (x.kind == DimKind::Infinite && y.kind == DimKind::Infinite) return pass();
  if (x.kind == DimKind::Infinite && y.kind == DimKind::UpperBound) return fail(what + ": Infinite against bounded");
  if (y.kind == DimKind::Infinite && x.kind == DimKind::UpperBound) return fail(what + ": bounded against Infinite");
  return unsure(what + ": " + describe(x) + " against " + describe(y));
}

/// Fail dominates, then Unknown.
SampleResult both(SampleResult a, SampleResult b) {
  if (a.outcome == Outcome::Failed) return a;
  if (b.outcome == Outcome::Failed) return b;
  if (a.outcome == Outcome::Unknown) return a;
  if (b.outcome == Outcome::Unknown) return b;
  return a;
}

SampleResult from_verdict(const Verdict& v, const std::string& what) {
  if (v.is_true()) return pass();
  if (v.is_false()) return fail(what + ": " + v.reason);
  return unsure(what + ": " + v.reason);
}

/// Runs a construction; uncertified memberships make the sample unknown.
SampleResult guarded(const std::function<SampleResult()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MembershipNotCertified || e.code() == ErrorCode::CutoffExceeded ||
        e.code() == ErrorCode::DimensionNotExact)
      return unsure(e.what());
    return fail(e.what());
  }
}

std::vector<Module> indecomposable_projectives(const AlgebraPtr& a) {
  std::vector<Module> out;
  for (std::size_t i = 0; i < a->num_idempotents(); ++i) out.push_back(indecomposable_projective(a, i));
  return out;
}

Module opposite_regular(const AlgebraPtr& a) { return regular_module(opposite_algebra(a)); }

std::vector<std::size_t> top_multiplicities(const Module& m) {
  const Module top = radical_and_top(m).top_proj.target();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.algebra()->num_idempotents(); ++i)
    out.push_back(rank(top.act(m.algebra()->idempotent(i))) / m.algebra()->projective_top_dim(i));
  return out;
}

using Property = std::function<SampleResult(const Module&, std::size_t, std::uint64_t)>;

SampleResult th36(const Module& m, std::size_t cutoff, std::uint64_t) {
  const DimensionReport g = gorenstein_pd(m, cutoff);
  if (finite(g) != Hyp::Holds) return from_hyp(finite(g), "Gpd " + describe(g));
  return guarded([&] {
    const auto o = oracle(OracleKind::GorensteinProjectives, m.algebra(), cutoff);
    return from_verdict(validate_witness(thm36_witness(m, o), {o}), "resolution witness");
  });
}

SampleResult th38(const Module& m, std::size_t cutoff, std::uint64_t) {
  const DimensionReport g = gorenstein_pd(m, cutoff);
  if (finite(g) != Hyp::Holds) return from_hyp(finite(g), "Gpd " + describe(g));
  const std::size_t n = g.value;
  Resolution r(m);
  if (!r.extend_to(n + 1)) return unsure("resolution budget reached");
  SampleResult out = both(from_verdict(is_gorenstein_projective(r.syzygy(n), cutoff), "syzygy n GP"),
                          from_verdict(is_gorenstein_projective(r.syzygy(n + 1), cutoff), "syzygy n+1 GP"));
  if (n >= 1) {
    const Verdict prev = is_gorenstein_projective(r.syzygy(n - 1), cutoff);
    if (prev.is_true()) out = both(out, fail("syzygy n-1 is certified GP"));
    if (prev.is_unknown()) out = both(out, unsure("syzygy n-1: " + prev.reason));
  }
  return out;
}

SampleResult th310_3(const Module& m, std::size_t cutoff, std::uint64_t) {
  // Finite injective dimension puts A in the right perpendicular of GP.
  const DimensionReport id = inj_dim(m, cutoff);
  if (finite(id) != Hyp::Holds) return from_hyp(finite(id), "id " + describe(id));
  return expect_equal(proj_dim(m, cutoff), gorenstein_pd(m, cutoff), "pd against Gpd");
}

SampleResult th314(const Module& m, std::size_t cutoff, std::uint64_t) {
  const DimensionReport g = gorenstein_pd(m, cutoff);
  if (finite(g) != Hyp::Holds) return from_hyp(finite(g), "Gpd " + describe(g));
  return expect_exact(perp_dim(m, indecomposable_projectives(m.algebra()), cutoff), g.value,
                      "perp dimension against P(i)");
}

SampleResult tf_matches(const Module& m, std::size_t cutoff, std::size_t pd) {
  const DimensionReport tf = torsionfree_dim_upper(m, cutoff);
  if (tf.kind == DimKind::UpperBound || tf.kind == DimKind::Exact) {
    if (tf.value == pd) return pass();
    return fail("torsionfree bound " + describe(tf) + " against pd " + std::to_string(pd));
  }
  return unsure("torsionfree dimension " + describe(tf));
}

SampleResult th56_3(const Module& m, std::size_t cutoff, std::uint64_t) {
  const DimensionReport id = inj_dim(m, cutoff);
  if (finite(id) != Hyp::Holds) return from_hyp(finite(id), "id " + describe(id));
  const DimensionReport pd = proj_dim(m, cutoff);
  SampleResult out = expect_equal(pd, gorenstein_pd(m, cutoff), "pd against Gpd");
  if (pd.kind == DimKind::Exact) out = both(out, tf_matches(m, cutoff, pd.value));
  return out;
}

SampleResult th56_4(const Module& m, std::size_t cutoff, std::uint64_t) {
  const DimensionReport pd = proj_dim(m, cutoff);
  if (finite(pd) != Hyp::Holds) return from_hyp(finite(pd), "pd " + describe(pd));
  return both(expect_exact(gorenstein_pd(m, cutoff), pd.value, "Gpd"),
              expect_exact(perp_dim(m, {regular_module(m.algebra())}, cutoff), pd.value, "perp dimension"));
}

SampleResult th56_6(const Module& m, std::size_t cutoff, std::uint64_t) {
  const DimensionReport g = gorenstein_pd(m, cutoff);
  if (finite(g) != Hyp::Holds) return from_hyp(finite(g), "Gpd " + describe(g));
  return expect_exact(perp_dim(m, {regular_module(m.algebra())}, cutoff), g.value, "perp dimension");
}

SampleResult th510_3(const Module& m, std::size_t cutoff, std::uint64_t) {
  const DimensionReport pd = proj_dim(m, cutoff);
  if (finite(pd) != Hyp::Holds) return from_hyp(finite(pd), "pd " + describe(pd));
  return expect_equal(inj_dim(m, cutoff), gorenstein_id(m, cutoff), "id against Gid");
}

SampleResult th510_4(const Module& m, std::size_t cutoff, std::uint64_t) {
  const DimensionReport id = inj_dim(m, cutoff);
  if (finite(id) != Hyp::Holds) return from_hyp(finite(id), "id " + describe(id));
  return both(expect_exact(gorenstein_id(m, cutoff), id.value, "Gid"),
              expect_exact(perp_dim(k_dual(m), {opposite_regular(m.algebra())}, cutoff), id.value,
                           "injective codimension"));
}

SampleResult th510_6(const Module& m, std::size_t cutoff, std::uint64_t) {
  const DimensionReport g = gorenstein_id(m, cutoff);
  if (finite(g) != Hyp::Holds) return from_hyp(finite(g), "Gid " + describe(g));
  return expect_exact(perp_dim(k_dual(m), {opposite_regular(m.algebra())}, cutoff), g.value,
                      "injective codimension");
}

SampleResult th515(const Module& m, std::size_t cutoff, std::uint64_t) {
  const DimensionReport id = inj_dim(m, cutoff);
  const DimensionReport pd = proj_dim(m, cutoff);
  const Hyp h1 = finite(id), h2 = finite(pd);
  if (h1 != Hyp::Holds && h2 != Hyp::Holds) {
    if (h1 == Hyp::Fails && h2 == Hyp::Fails) return skip();
    return unsure("id " + describe(id) + ", pd " + describe(pd));
  }
  const DimensionReport g = gorenstein_pd(m, cutoff);
  SampleResult out = pass();
  if (h1 == Hyp::Holds) {
    out = both(out, expect_equal(pd, g, "pd against Gpd"));
    if (pd.kind == DimKind::Exact) out = both(out, tf_matches(m, cutoff, pd.value));
  }
  if (h2 == Hyp::Holds) {
    out = both(out, expect_exact(g, pd.value, "Gpd"));
    out = both(out, expect_exact(perp_dim(m, {regular_module(m.algebra())}, cutoff), pd.value, "perp dimension"));
  }
  return out;
}

SampleResult cor59(const Module& m, std::size_t cutoff, std::uint64_t) {
  const DimensionReport g = gorenstein_pd(m, cutoff);
  if (finite(g) != Hyp::Holds) return from_hyp(finite(g), "Gpd " + describe(g));
  return guarded([&] {
    const auto o = oracle(OracleKind::GorensteinProjectives, m.algebra(), cutoff);
    const ExactSequenceWitness w = cor45_approximation(m, o);
    SampleResult out = from_verdict(validate_witness(w, {o}), "approximation witness");
    out = both(out, from_verdict(o.membership(w.modules[2]), "T is GP"));
    const DimensionReport pdb = proj_dim(w.modules[1], cutoff);
    if (pdb.kind == DimKind::Exact && pdb.value < g.value) {
      SampleResult f = fail("finding: pd B = " + std::to_string(pdb.value) + " < n = " + std::to_string(g.value));
      f.finding = f.detail;
      return both(out, f);
    }
    return both(out, expect_exact(pdb, g.value, "pd B"));
  });
}

SampleResult cor514(const Module& m, std::size_t cutoff, std::uint64_t) {
  const DimensionReport tf = torsionfree_dim_upper(m, cutoff);
  if (tf.kind != DimKind::Exact && tf.kind != DimKind::UpperBound)
    return from_hyp(tf.kind == DimKind::Zero ? Hyp::Fails : Hyp::Unsure, "torsionfree dimension " + describe(tf));
  return guarded([&] {
    const auto o = oracle(OracleKind::TorsionfreeInfty, m.algebra(), cutoff);
    const ExactSequenceWitness w = cor45_approximation(m, o);
    SampleResult out = from_verdict(validate_witness(w, {o}), "approximation witness");
    const DimensionReport pdb = proj_dim(w.modules[1], cutoff);
    if (pdb.kind == DimKind::Exact)
      return both(out, pdb.value <= tf.value ? pass() : fail("pd B is " + describe(pdb)));
    if (pdb.kind == DimKind::Infinite || (pdb.kind == DimKind::AtLeast && pdb.value > tf.value))
      return both(out, fail("pd B is " + describe(pdb)));
    return both(out, unsure("pd B is " + describe(pdb)));
  });
}

/// Torsionfree with pd at most one: Holds, Fails or Unsure.
Hyp torsionfree_pd_le1(const Module& m, std::size_t cutoff, std::string& why) {
  const DimensionReport pd = proj_dim(m, cutoff);
  Hyp small = Hyp::Unsure;
  if (pd.kind == DimKind::Exact) small = pd.value <= 1 ? Hyp::Holds : Hyp::Fails;
  if (pd.kind == DimKind::Infinite || (pd.kind == DimKind::AtLeast && pd.value > 1)) small = Hyp::Fails;
  if (pd.kind == DimKind::Zero) small = Hyp::Fails;
  if (small == Hyp::Fails) return Hyp::Fails;
  const Verdict tf = is_torsionfree_infty(m, cutoff);
  why = "pd " + describe(pd) + ", torsionfree " + to_string(tf.kind);
  if (tf.is_false()) return Hyp::Fails;
  if (tf.is_unknown() || small == Hyp::Unsure) return Hyp::Unsure;
  return Hyp::Holds;
}

SampleResult prop519(const Module& m, std::size_t cutoff, std::uint64_t) {
  std::string why;
  const Hyp h = torsionfree_pd_le1(m, cutoff, why);
  if (h != Hyp::Holds) return from_hyp(h, why);
  return is_projective(m) ? pass() : fail("torsionfree of pd <= 1 but not projective");
}

SampleResult trtr(const Module& m, std::size_t, std::uint64_t) {
  if (m.is_zero()) return skip();
  const Module tt = transpose(transpose(m));
  if (!same_algebra(tt.algebra(), m.algebra())) return fail("double transpose over another algebra");
  const auto top_m = top_multiplicities(m);
  const auto top_t = tt.is_zero() ? std::vector<std::size_t>(top_m.size(), 0) : top_multiplicities(tt);
  std::vector<Module> parts{tt};
  for (std::size_t i = 0; i < top_m.size(); ++i) {
    if (top_t[i] > top_m[i]) return fail("double transpose has a larger top at " + std::to_string(i));
    for (std::size_t k = top_t[i]; k < top_m[i]; ++k) parts.push_back(indecomposable_projective(m.algebra(), i));
  }
  const Module sum = direct_sum(m.algebra(), parts).module;
  return from_verdict(is_isomorphic(m, sum), "isomorphism with the double transpose plus projectives");
}

SampleResult lem27(const Module& m, std::size_t cutoff, std::uint64_t) {
  const Verdict gp = is_gorenstein_projective(m, cutoff);
  if (!gp.is_true()) return from_hyp(gp.is_false() ? Hyp::Fails : Hyp::Unsure, "GP " + gp.reason);
  // Finite injective dimension certifies membership in the right perpendicular.
  const DimensionReport id = inj_dim(m, cutoff);
  if (finite(id) != Hyp::Holds) return from_hyp(finite(id), "id " + describe(id));
  return is_projective(m) ? pass() : fail("GP of finite id but not projective");
}

SampleResult prop23(const Module& g, std::size_t cutoff, std::uint64_t seed) {
  const Verdict gp = is_gorenstein_projective(g, cutoff);
  if (!gp.is_true()) return from_hyp(gp.is_false() ? Hyp::Fails : Hyp::Unsure, "GP " + gp.reason);
  if (g.is_zero()) return skip();
  const AlgebraPtr& a = g.algebra();
  const Module x = presented_module(a, sample_presentation(a, splitmix64(seed ^ 0x5bd1e995ULL)));
  std::mt19937_64 rng(splitmix64(seed));
  Matrix h(a->prime(), g.dim(), x.dim());
  for (const auto& f : hom_basis(x, g)) h = h + f.matrix().scaled(static_cast<std::uint32_t>(rng() % a->prime()));
  const auto cover = projective_cover(g);
  const DirectSum a2 = direct_sum(a, {cover.projective, x});
  const Matrix epi = Matrix::hcat(cover.epi.matrix(), h);
  const Kernel a1 = kernel(Morphism(a2.module, g, epi));
  const DimensionReport d1 = gorenstein_pd(a1.module, cutoff);
  const DimensionReport d2 = gorenstein_pd(a2.module, cutoff);
  const std::string what = "Gpd A1 " + describe(d1) + " against Gpd A2 " + describe(d2);
  if (d2.kind == DimKind::Infinite) return pass();
  if (d1.kind == DimKind::Zero) return pass();
  if (d2.kind == DimKind::Exact || d2.kind == DimKind::UpperBound) {
    if (d1.kind == DimKind::Exact || d1.kind == DimKind::UpperBound)
      return d1.value <= d2.value ? pass() : (d1.kind == DimKind::Exact && d2.kind == DimKind::Exact ? fail(what) : unsure(what));
    if (d1.kind == DimKind::Infinite || (d1.kind == DimKind::AtLeast && d1.value > d2.value)) return fail(what);
  }
  if (d2.kind == DimKind::Zero && (d1.kind == DimKind::Infinite || d1.value > 0)) return fail(what);
  return unsure(what);
}

const std::map<std::string, Property>& registry() {
  static const std::map<std::string, Property> r = {
      {"TH-3.6", th36},       {"TH-3.8", th38},       {"TH-3.10-3", th310_3}, {"TH-3.14", th314},
      {"TH-5.6-3", th56_3},   {"TH-5.6-4", th56_4},   {"TH-5.6-6", th56_6},   {"TH-5.10-3", th510_3},
      {"TH-5.10-4", th510_4}, {"TH-5.10-6", th510_6}, {"TH-5.15", th515},     {"COR-5.9", cor59},
      {"COR-5.14", cor514},   {"PROP-5.19-FWD", prop519}, {"TRTR", trtr},     {"LEM-2.7", lem27},
      {"PROP-2.3", prop23},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& property_ids() {
  static const std::vector<std::string> ids = {
      "TH-3.6",   "TH-3.8",  "TH-3.10-3", "TH-3.14",  "TH-5.6-3",      "TH-5.6-4", "TH-5.6-6",  "TH-5.10-3",
      "TH-5.10-4", "TH-5.10-6", "TH-5.15", "COR-5.9", "COR-5.14", "PROP-5.19-FWD", "TRTR", "LEM-2.7", "PROP-2.3",
  };
  return ids;
}

SampleResult evaluate_property(const std::string& property_id, const Module& m, std::size_t cutoff,
                               std::uint64_t seed) {
  const auto it = registry().find(property_id);
  if (it == registry().end()) throw Error(ErrorCode::UnknownPropertyId, "unknown property " + property_id);
  return it->second(m, cutoff, seed);
}

CheckReport check(const std::string& property_id, const AlgebraPtr& a, const CheckConfig& config) {
  if (!registry().count(property_id)) throw Error(ErrorCode::UnknownPropertyId, "unknown property " + property_id);
  CheckReport rep;
  rep.property_id = property_id;
  rep.algebra = a->name();
  rep.config = config;
  for (std::size_t k = 0; k < config.samples; ++k) {
    const std::uint64_t s = sample_seed(config.seed, k);
    const Presentation pres = sample_presentation(a, s);
    const SampleResult r = evaluate_property(property_id, presented_module(a, pres), config.cutoff, s);
    ++rep.drawn;
    if (r.finding) rep.findings.push_back("seed " + std::to_string(s) + ": " + *r.finding);
    switch (r.outcome) {
      case Outcome::Skipped: ++rep.skipped; continue;
      case Outcome::Passed: ++rep.passed; break;
      case Outcome::Unknown: ++rep.unknown; break;
      case Outcome::Failed: rep.failed.push_back({s, pres, r.detail}); break;
    }
    ++rep.samples;
  }
  return rep;
}

SampleResult replay(const std::string& property_id, const AlgebraPtr& a, const FailureRecord& record,
                    std::size_t cutoff) {
  return evaluate_property(property_id, presented_module(a, record.presentation), cutoff, record.seed);
}

// Scans ----------------------------------------------------------------------------------

const char* to_string(ScanVerdict v) {
  switch (v) {
    case ScanVerdict::Consistent: return "Consistent";
    case ScanVerdict::CandidateCounterexample: return "CandidateCounterexample";
    case ScanVerdict::Undecided: return "Undecided";
  }
  return "Undecided";
}

const std::vector<std::string>& conjecture_ids() {
  static const std::vector<std::string> ids = {"CONJ-5.18-1", "CONJ-5.18-2", "Q-5.16", "Q-5.17", "SNC-5.19"};
  return ids;
}

namespace {

void finish(ScanReport& r) {
  if (r.verdict == ScanVerdict::CandidateCounterexample) return;
  r.verdict = r.reasons.empty() ? ScanVerdict::Consistent : ScanVerdict::Undecided;
}

std::string ext_profile(const Module& m, const Module& target, std::size_t upto) {
  Resolution r(m);
  std::string s;
  for (std::size_t i = 1; i <= upto; ++i) {
    const auto e = ext_dim(r, target, i);
    if (!e) {
      s += (s.empty() ? "" : " ") + std::string("budget");
      break;
    }
    s += (s.empty() ? "" : " ") + std::to_string(*e);
  }
  return s;
}

/// Injective module tested for membership in the left perpendicular of A.
void scan_injective(ScanReport& r, const Module& inj, const std::string& subject) {
  const AlgebraPtr& a = inj.algebra();
  ++r.examined;
  const bool proj = is_projective(inj);
  r.observations.push_back({subject, "Ext^i(-, A) for i = 1..10: " + ext_profile(inj, regular_module(a), 10)});
  if (proj) {
    r.observations.push_back({subject, "projective"});
    return;
  }
  const Verdict v = perp_test(inj, {regular_module(a)}, r.config.cutoff);
  r.observations.push_back({subject, std::string("not projective; perpendicular membership ") + to_string(v.kind)});
  if (v.is_true()) {
    r.verdict = ScanVerdict::CandidateCounterexample;
    r.witness_module = inj;
    r.reasons.push_back(subject + ": " + v.reason);
  } else if (v.is_unknown()) {
    r.reasons.push_back(subject + ": " + v.reason);
  }
}

using SampleScan = std::function<SampleResult(const Module&, std::size_t)>;

/// Shared driver for the sampled scans: Failed marks a candidate, Unknown
/// with a certified hypothesis is recorded as a reason.
void scan_samples(ScanReport& r, const AlgebraPtr& a, const SampleScan& body) {
  std::size_t applicable = 0, hyp_unknown = 0;
  for (std::size_t k = 0; k < r.config.samples; ++k) {
    const std::uint64_t s = sample_seed(r.config.seed, k);
    const Presentation pres = sample_presentation(a, s);
    const Module m = presented_module(a, pres);
    const SampleResult res = body(m, r.config.cutoff);
    ++r.examined;
    if (res.outcome == Outcome::Skipped) continue;
    if (res.outcome == Outcome::Unknown && res.detail.rfind("hypothesis", 0) == 0) {
      ++hyp_unknown;
      continue;
    }
    ++applicable;
    if (res.outcome == Outcome::Failed && r.verdict != ScanVerdict::CandidateCounterexample) {
      r.verdict = ScanVerdict::CandidateCounterexample;
      r.witness = FailureRecord{s, pres, res.detail};
      r.witness_module = m;
    }
    if (res.outcome == Outcome::Unknown) r.reasons.push_back("seed " + std::to_string(s) + ": " + res.detail);
  }
  r.observations.push_back({"samples", std::to_string(applicable) + " applicable, " + std::to_string(hyp_unknown) +
                                           " with undecided hypothesis"});
}

SampleResult q516(const Module& m, std::size_t cutoff) {
  const DimensionReport id = inj_dim(m, cutoff);
  if (finite(id) != Hyp::Holds) return from_hyp(finite(id), "id " + describe(id));
  return expect_equal(proj_dim(m, cutoff), perp_dim(m, {regular_module(m.algebra())}, cutoff),
                      "pd against perp dimension");
}

SampleResult q517(const Module& m, std::size_t cutoff) {
  const DimensionReport pd = proj_dim(m, cutoff);
  if (finite(pd) != Hyp::Holds) return from_hyp(finite(pd), "pd " + describe(pd));
  return tf_matches(m, cutoff, pd.value);
}

SampleResult snc519(const Module& m, std::size_t cutoff) { return prop519(m, cutoff, 0); }

}  // namespace

ScanReport scan(const std::string& conjecture_id, const AlgebraPtr& a, const CheckConfig& config) {
  ScanReport r;
  r.conjecture_id = conjecture_id;
  r.algebra = a->name();
  r.config = config;
  const AlgebraPtr op = opposite_algebra(a);
  if (conjecture_id == "CONJ-5.18-2") {
    scan_injective(r, k_dual(regular_module(op)), "D(A)");
  } else if (conjecture_id == "CONJ-5.18-1") {
    for (std::size_t i = 0; i < op->num_idempotents(); ++i)
      scan_injective(r, k_dual(indecomposable_projective(op, i)), "I(" + std::to_string(i) + ")");
  } else if (conjecture_id == "Q-5.16") {
    scan_samples(r, a, q516);
  } else if (conjecture_id == "Q-5.17") {
    scan_samples(r, a, q517);
  } else if (conjecture_id == "SNC-5.19") {
    scan_samples(r, a, snc519);
  } else {
    throw Error(ErrorCode::UnknownConjectureId, "unknown conjecture " + conjecture_id);
  }
  finish(r);
  return r;
}

}  // namespace homcalc
