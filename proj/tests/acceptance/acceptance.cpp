// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance                 run every criterion
//   acceptance --criterion N   run criterion N only

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "../support.hpp"
#include "homcalc/cli.hpp"
#include "homcalc/io.hpp"

using namespace t;

namespace {

struct Result {
  bool pass = true;
  std::string detail;
};

std::string counts(const CheckReport& r) {
  std::ostringstream s;
  s << r.algebra << ": drawn " << r.drawn << ", applicable " << r.samples << ", passed " << r.passed << ", failed "
    << r.failed.size() << ", unknown " << r.unknown;
  return s.str();
}

void note_failures(const CheckReport& r, Result& o) {
  if (r.failed.empty()) return;
  o.pass = false;
  o.detail += " [" + r.property_id + " on " + r.algebra + ": " + r.failed.front().detail + "]";
}

Module sample(const AlgebraPtr& a, std::uint64_t seed) { return presented_module(a, sample_presentation(a, seed)); }

/// Like check(), but keeps drawing until `want` samples are applicable.
CheckReport check_applicable(const std::string& id, const AlgebraPtr& a, std::size_t want, std::uint64_t seed) {
  CheckReport rep;
  rep.property_id = id;
  rep.algebra = a->name();
  for (std::uint64_t k = 0; rep.samples < want && k < 20 * want; ++k) {
    const std::uint64_t s = sample_seed(seed, k);
    const Presentation pres = sample_presentation(a, s);
    const SampleResult r = evaluate_property(id, presented_module(a, pres), kDefaultCutoff, s);
    ++rep.drawn;
    if (r.finding) rep.findings.push_back(*r.finding);
    switch (r.outcome) {
      case homcalc::Outcome::Skipped: ++rep.skipped; continue;
      case homcalc::Outcome::Passed: ++rep.passed; break;
      case homcalc::Outcome::Unknown: ++rep.unknown; break;
      case homcalc::Outcome::Failed: rep.failed.push_back({s, pres, r.detail}); break;
    }
    ++rep.samples;
  }
  return rep;
}

/// Nonzero samples only.
std::vector<Module> nonzero_samples(const AlgebraPtr& a, std::size_t want, std::uint64_t seed) {
  std::vector<Module> out;
  for (std::uint64_t k = 0; out.size() < want; ++k) {
    Module m = sample(a, sample_seed(seed, k));
    if (!m.is_zero()) out.push_back(std::move(m));
  }
  return out;
}

Matrix random_matrix(std::mt19937_64& rng, std::uint32_t p, std::size_t r, std::size_t c) {
  Matrix m(p, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng() % p);
  return m;
}

// 1 -------------------------------------------------------------------------------------

Result linear_algebra() {
  std::mt19937_64 rng(2024);
  std::size_t bad = 0, solved = 0, inconsistent = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint32_t p = trial % 2 ? 3 : 2;
    const std::size_t r = rng() % 13, c = rng() % 13;
    const Matrix m = random_matrix(rng, p, r, c);
    const RowEchelon e = rref(m);
    if (!(rref(e.reduced).reduced == e.reduced)) ++bad;
    const Matrix k = kernel_basis(m);
    if (k.cols() + rank(m) != c || !(m * k).is_zero() || rank(k) != k.cols()) ++bad;

    // b in the column space is always solvable; a random b is solvable iff
    // appending it keeps the rank.
    const Matrix x = random_matrix(rng, p, c, 1);
    const Matrix b = m * x;
    const auto y = solve(m, b);
    if (!y || !(m * *y == b)) ++bad;
    const Matrix b2 = random_matrix(rng, p, r, 1);
    const auto z = solve(m, b2);
    const bool consistent = rank(Matrix::hcat(m, b2)) == rank(m);
    if (z.has_value() != consistent || (z && !(m * *z == b2))) ++bad;
    (z ? solved : inconsistent)++;
  }
  return {bad == 0, "1000 matrices, " + std::to_string(bad) + " failures (" + std::to_string(solved) + " solvable, " +
                        std::to_string(inconsistent) + " inconsistent random right-hand sides)"};
}

// 2 -------------------------------------------------------------------------------------

/// Simples, indecomposable projectives and injectives, then distinct samples,
/// all of dimension at most 5.
std::vector<Module> small_modules(const AlgebraPtr& a, std::size_t extra) {
  std::vector<Module> out;
  const AlgebraPtr op = opposite_algebra(a);
  for (std::size_t i = 0; i < a->num_idempotents(); ++i) {
    out.push_back(simple_module(a, i));
    out.push_back(indecomposable_projective(a, i));
    out.push_back(k_dual(indecomposable_projective(op, i)));
  }
  std::size_t added = 0;
  for (std::uint64_t seed = 0; added < extra && seed < 500; ++seed) {
    const Module m = sample(a, sample_seed(17, seed));
    if (m.is_zero() || m.dim() > 5) continue;
    bool fresh = true;
    for (const auto& x : out)
      if (x.dim() == m.dim() && is_isomorphic(x, m).is_true()) fresh = false;
    if (!fresh) continue;
    out.push_back(m);
    ++added;
  }
  std::erase_if(out, [](const Module& m) { return m.dim() > 5; });
  return out;
}

Result ext_balance() {
  std::size_t pairs = 0, bad = 0;
  for (const auto& a : corpus()) {
    const auto mods = small_modules(a, 6);
    std::vector<Module> duals;
    for (const auto& m : mods) duals.push_back(k_dual(m));
    for (std::size_t x = 0; x < mods.size(); ++x) {
      Resolution rm(mods[x]);
      for (std::size_t y = 0; y < mods.size(); ++y) {
        Resolution rd(duals[y]);
        ++pairs;
        for (std::size_t i = 0; i <= 6; ++i)
          if (ext_dim(rm, mods[y], i) != ext_dim(rd, duals[x], i)) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(pairs) + " pairs x degrees 0..6, " + std::to_string(bad) + " mismatches"};
}

// 3 -------------------------------------------------------------------------------------

Result dimension_shifting() {
  const auto algebras = corpus();
  std::size_t bad = 0;
  for (std::uint64_t k = 0; k < 200; ++k) {
    const AlgebraPtr& a = algebras[k % algebras.size()];
    const Module m = sample(a, sample_seed(31, k));
    const Module n = sample(a, sample_seed(37, k));
    Resolution r(m);
    Resolution rs(syzygy(m, 1));
    for (std::size_t i = 1; i <= 4; ++i)
      if (ext_dim(r, n, i + 1) != ext_dim(rs, n, i)) ++bad;
  }
  return {bad == 0, "200 pairs, i = 1..4, " + std::to_string(bad) + " mismatches"};
}

// 4 -------------------------------------------------------------------------------------

Result transpose_involution() {
  Result o;
  for (const auto& a : corpus()) {
    const CheckReport r = check_applicable("TRTR", a, 50, 4);
    note_failures(r, o);
    // Every iso must be certified, so no sample may come back Unknown.
    if (r.unknown || r.passed != 50) o.pass = false;
    o.detail += counts(r) + "; ";
  }
  return o;
}

// 5 -------------------------------------------------------------------------------------

Result finite_id_gpd() {
  Result o;
  // Every nonzero module over A2PATH has finite id, so nothing is skipped.
  const CheckReport a2 = check_applicable("TH-5.6-3", a2path(), 50, 5);
  note_failures(a2, o);
  if (a2.passed != 50 || a2.drawn - a2.skipped != 50) o.pass = false;
  o.detail += counts(a2) + "; ";
  for (const auto& a : {dual2(), nak3()}) {
    const CheckReport r = check("TH-5.6-3", a, {50, kDefaultCutoff, 5});
    note_failures(r, o);
    o.detail += counts(r) + "; ";
  }
  return o;
}

// 6 -------------------------------------------------------------------------------------

Result gpd_equals_perp_dim() {
  Result o;
  std::size_t applicable = 0;
  for (const auto& a : corpus()) {
    const CheckReport r = check("TH-5.6-6", a, {80, kDefaultCutoff, 6});
    note_failures(r, o);
    applicable += r.passed + r.failed.size();
    o.detail += counts(r) + "; ";
  }
  if (applicable < 150) o.pass = false;
  o.detail += "applicable total " + std::to_string(applicable);
  return o;
}

// 7 -------------------------------------------------------------------------------------

Result syzygy_in_subcategory() {
  Result o;
  for (const auto& id : {"TH-3.6", "TH-3.8"})
    for (const auto& a : corpus()) {
      const CheckReport r = check(id, a, {50, kDefaultCutoff, 7});
      note_failures(r, o);
      o.detail += std::string(id) + " " + counts(r) + "; ";
    }
  return o;
}

// 8 -------------------------------------------------------------------------------------

Result gp_approximation() {
  Result o;
  std::size_t applicable = 0;
  for (const auto& a : corpus()) {
    const CheckReport r = check("COR-5.9", a, {20, kDefaultCutoff, 8});
    note_failures(r, o);
    for (const auto& f : r.findings) o.detail += "finding: " + f + "; ";
    applicable += r.passed + r.failed.size();
    o.detail += counts(r) + "; ";
  }
  if (applicable < 30) o.pass = false;
  o.detail += "applicable total " + std::to_string(applicable);
  return o;
}

// 9 -------------------------------------------------------------------------------------

Result selfinjective_classification() {
  Result o;
  for (const auto& a : {dual2(), nak3()}) {
    std::size_t ok = 0;
    for (const Module& m : nonzero_samples(a, 50, 9)) {
      const Verdict v = is_gorenstein_projective(m);
      const DimensionReport g = gorenstein_pd(m);
      const bool closed = v.is_true() && (v.period.has_value() || is_projective(m));
      if (closed && g.kind == DimKind::Exact && g.value == 0) ++ok;
    }
    if (ok != 50) o.pass = false;
    o.detail += a->name() + ": " + std::to_string(ok) + "/50 GP with Gpd 0; ";
  }
  const Verdict loc = is_gorenstein_projective(simple_module(loc3(), 0));
  const bool not_gp = loc.is_false() && loc.ext && loc.ext->degree == 1 && loc.ext->dimension > 0;
  if (!not_gp) o.pass = false;
  o.detail += std::string("LOC3 simple: ") + to_string(loc.kind) +
              (loc.ext ? " (Ext^" + std::to_string(loc.ext->degree) + " of dim " + std::to_string(loc.ext->dimension) + ")"
                       : "");
  return o;
}

// 10 ------------------------------------------------------------------------------------

Result duality_consistency() {
  Result o;
  std::size_t bad = 0, total = 0;
  for (const auto& a : corpus())
    for (std::uint64_t k = 0; k < 50; ++k) {
      const Module m = sample(a, sample_seed(10, k));
      ++total;
      if (!(inj_dim(m) == proj_dim(k_dual(m)))) ++bad;
    }
  if (bad) o.pass = false;
  o.detail = std::to_string(total) + " samples, " + std::to_string(bad) + " report mismatches; ";
  const CheckReport r = check("TH-5.10-3", a2path(), {50, kDefaultCutoff, 10});
  note_failures(r, o);
  if (r.passed == 0) o.pass = false;
  o.detail += "id = Gid " + counts(r);
  return o;
}

// 11 ------------------------------------------------------------------------------------

Result construction_round_trip() {
  Result o;
  std::size_t validated = 0, skipped_cor45 = 0, bad = 0;
  std::string first;
  auto expect = [&](const std::string& what, const std::function<Verdict()>& body) {
    try {
      const Verdict v = body();
      if (v.is_true()) {
        ++validated;
        return;
      }
      if (first.empty()) first = what + ": " + v.reason;
    } catch (const std::exception& e) {
      if (first.empty()) first = what + ": " + e.what();
    }
    ++bad;
  };
  for (const auto& a : corpus()) {
    const SubcategoryOracle gp = oracle(OracleKind::GorensteinProjectives, a);
    const SubcategoryOracle gi = oracle(OracleKind::GorensteinInjectives, a);
    const AlgebraPtr op = opposite_algebra(a);
    for (std::uint64_t k = 0; k < 50; ++k) {
      const std::string tag = a->name() + " seed " + std::to_string(k);
      const Module m = sample(a, sample_seed(11, k));
      expect("prop33 " + tag, [&] { return validate_witness(prop33_replace(resolution_segment(m, 2), gp)); });
      expect("prop34 " + tag, [&] {
        const Ladder l = prop34_ladder(resolution_segment(m, 2 + k % 2), gp);
        return conjunction(validate_witness(l.main), validate_witness(l.side));
      });
      const Module n = sample(op, sample_seed(12, k));
      expect("prop43 " + tag, [&] { return validate_witness(prop43_replace(injective_segment(n, 2), gi)); });
      if (gorenstein_pd(m).is_exact() && !m.is_zero())
        expect("cor45 " + tag, [&] { return validate_witness(cor45_approximation(m, gp)); });
      else
        ++skipped_cor45;
    }
  }
  o.pass = bad == 0;
  o.detail = std::to_string(validated) + " witnesses validated, " + std::to_string(bad) + " failures, " +
             std::to_string(skipped_cor45) + " cor45 inputs without exact Gpd";
  if (!first.empty()) o.detail += " (first: " + first + ")";
  return o;
}

// 12 ------------------------------------------------------------------------------------

Result torsionfree_pd_one() {
  Result o;
  for (const auto& a : {a2path(), loc3()}) {
    const CheckReport r = check("PROP-5.19-FWD", a, {50, kDefaultCutoff, 12});
    note_failures(r, o);
    o.detail += counts(r) + "; ";
  }
  return o;
}

// 13 ------------------------------------------------------------------------------------

Result selfinjectivity_scan() {
  Result o;
  for (const auto& a : corpus()) {
    const ScanReport r = scan("CONJ-5.18-2", a, {50, kDefaultCutoff, 13});
    if (r.verdict != ScanVerdict::Consistent) o.pass = false;
    o.detail += a->name() + " " + to_string(r.verdict) + "; ";
  }
  const ScanReport low = scan("CONJ-5.18-2", loc3(), {50, 0, 13});
  if (low.verdict != ScanVerdict::Undecided || low.reasons.empty()) o.pass = false;
  o.detail += std::string("LOC3 at cutoff 0: ") + to_string(low.verdict);
  return o;
}

// 14 ------------------------------------------------------------------------------------

Result cli_determinism() {
  const std::vector<std::string> args = {"verify", "--suite", "all", "--samples", "4", "--seed", "99"};
  std::ostringstream a, b, ea, eb;
  const int ca = run_cli(args, a, ea);
  const int cb = run_cli(args, b, eb);
  const bool same = ca == cb && a.str() == b.str() && !a.str().empty();
  bool parsed = true;
  try {
    (void)Json::parse(a.str());
  } catch (const std::exception&) {
    parsed = false;
  }
  return {same && parsed && ca <= 1,
          std::to_string(a.str().size()) + " bytes per run, exit codes " + std::to_string(ca) + "/" + std::to_string(cb) +
              (same ? ", identical" : ", different")};
}

struct Criterion {
  const char* title;
  Result (*run)();
};

const Criterion criteria[] = {
    {"exact linear algebra", linear_algebra},
    {"Ext balance under duality", ext_balance},
    {"dimension shifting", dimension_shifting},
    {"transpose involution", transpose_involution},
    {"finite id gives pd = Gpd", finite_id_gpd},
    {"Gpd equals perp dimension", gpd_equals_perp_dim},
    {"syzygy lands in the subcategory", syzygy_in_subcategory},
    {"GP approximation sequences", gp_approximation},
    {"self-injective classification", selfinjective_classification},
    {"duality consistency", duality_consistency},
    {"construction round trip", construction_round_trip},
    {"torsionfree with pd at most one is projective", torsionfree_pd_one},
    {"self-injectivity scan", selfinjectivity_scan},
    {"CLI determinism", cli_determinism},
};

bool run_one(std::size_t n) {
  const Criterion& c = criteria[n - 1];
  const auto start = std::chrono::steady_clock::now();
  Result o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 60) {
    o.pass = false;
    o.detail += " (over the 60 s budget)";
  }
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << " (" << c.title << ", " << std::fixed
            << std::setprecision(1) << secs << " s): " << o.detail << std::endl;
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t total = std::size(criteria);
  std::vector<std::size_t> which;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      const long n = std::strtol(argv[++i], nullptr, 10);
      if (n < 1 || static_cast<std::size_t>(n) > total) {
        std::cerr << "criterion must be between 1 and " << total << "\n";
        return 2;
      }
      which.push_back(static_cast<std::size_t>(n));
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (which.empty())
    for (std::size_t n = 1; n <= total; ++n) which.push_back(n);
  bool ok = true;
  for (std::size_t n : which) ok = run_one(n) && ok;
  return ok ? 0 : 1;
}
