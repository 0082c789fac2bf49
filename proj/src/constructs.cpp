#include "homcalc/constructs.hpp"

#include <map>

namespace homcalc {

namespace {

constexpr std::pair<OracleKind, const char*> kOracleNames[] = {
    {OracleKind::Projectives, "Projectives"},
    {OracleKind::Injectives, "Injectives"},
    {OracleKind::GorensteinProjectives, "GorensteinProjectives"},
    {OracleKind::GorensteinInjectives, "GorensteinInjectives"},
    {OracleKind::PerpRegular, "PerpRegular"},
    {OracleKind::TorsionfreeInfty, "TorsionfreeInfty"},
    {OracleKind::CoresTildeProj, "CoresTildeProj"},
};

Verdict from_bool(bool b, const std::string& yes, const std::string& no) {
  return b ? Verdict::yes(yes) : Verdict::no(no);
}

ExactSequence dual_sequence(const ExactSequence& s) {
  ExactSequence out;
  for (auto it = s.modules.rbegin(); it != s.modules.rend(); ++it) out.modules.push_back(k_dual(*it));
  for (auto it = s.maps.rbegin(); it != s.maps.rend(); ++it) out.maps.push_back(k_dual(*it));
  return out;
}

ExactSequence cover_sequence(const Module& t) {
  auto cov = projective_cover(t);
  auto ker = kernel(cov.epi);
  return {{ker.module, cov.projective, t}, {ker.incl, cov.epi}};
}

ExactSequence envelope_sequence(const Module& t) { return dual_sequence(cover_sequence(k_dual(t))); }

ExactSequence trivial_generator(const Module& t) {
  Module z = Module::zero(t.algebra());
  return {{z, t, t}, {Morphism::zero(z, t), Morphism::identity(t)}};
}

ExactSequence trivial_cogenerator(const Module& t) {
  Module z = Module::zero(t.algebra());
  return {{t, t, z}, {Morphism::identity(t), Morphism::zero(t, z)}};
}

Module injective_cogenerator(const AlgebraPtr& a) { return k_dual(regular_module(opposite_algebra(a))); }

bool replay_properness(const ExactSequenceWitness& w, const PropernessCheck& c) {
  const AlgebraPtr& a = w.modules.front().algebra();
  const ExactSequence seq = w.sequence();
  auto index_of = [&](std::size_t open) { return std::stoul(c.name.substr(open)); };
  if (c.name == "Hom(P,-)") return hom_exact_covariant(seq, regular_module(a));
  if (c.name == "Hom(-,P)") return hom_exact_contravariant(seq, regular_module(a));
  if (c.name == "Hom(-,I)") return hom_exact_contravariant(seq, injective_cogenerator(a));
  if (c.name.rfind("Hom(X", 0) == 0) return hom_exact_covariant(seq, w.test_objects.at(index_of(5)));
  if (c.name.rfind("Hom(-,X", 0) == 0) return hom_exact_contravariant(seq, w.test_objects.at(index_of(7)));
  throw Error(ErrorCode::ValidationError, "unknown properness check " + c.name);
}

void require_member(const SubcategoryOracle& o, const Module& m, const std::string& what) {
  const Verdict v = o.membership(m);
  if (!v.is_true())
    throw Error(ErrorCode::MembershipNotCertified, what + " is not certified in " + o.name + ": " + v.reason);
}

void require_exact(const ExactSequence& s, std::size_t terms) {
  if (s.modules.size() < terms) throw Error(ErrorCode::ValidationError, "input sequence is too short");
  const Verdict v = check_exact(s);
  if (!v.is_true()) throw Error(ErrorCode::ValidationError, "input sequence is not exact: " + v.reason);
}

SubcategoryOracle class_oracle(const SubcategoryOracle& o) {
  return oracle(parse_oracle_kind(o.generator_class), o.algebra, o.cutoff);
}

/// Certifies the claims now so that every emitted witness replays.
void certify(ExactSequenceWitness& w, const SubcategoryOracle& o) {
  const Verdict exact = check_exact(w.sequence());
  if (!exact.is_true()) throw Error(ErrorCode::ValidationError, "constructed sequence is not exact: " + exact.reason);
  const SubcategoryOracle cls = class_oracle(o);
  for (const auto& c : w.memberships) {
    const SubcategoryOracle& which = c.oracle == o.name ? o : cls;
    require_member(which, w.modules[c.index], "term " + std::to_string(c.index));
  }
  w.cutoff = o.cutoff;
}

void add_properness(ExactSequenceWitness& w, const std::string& name) {
  PropernessCheck c{name, false};
  c.verified = replay_properness(w, c);
  w.properness_checks.push_back(std::move(c));
}

}  // namespace

const char* to_string(OracleKind k) {
  for (const auto& [kind, name] : kOracleNames)
    if (kind == k) return name;
  return "Projectives";
}

OracleKind parse_oracle_kind(const std::string& name) {
  for (const auto& [kind, n] : kOracleNames)
    if (name == n) return kind;
  throw Error(ErrorCode::UnsupportedKind, "unknown subcategory kind " + name);
}

SubcategoryOracle oracle(OracleKind kind, const AlgebraPtr& a, std::size_t cutoff) {
  SubcategoryOracle o;
  o.kind = kind;
  o.name = to_string(kind);
  o.algebra = a;
  o.cutoff = cutoff;
  const Module reg = regular_module(a);
  switch (kind) {
    case OracleKind::Projectives:
      o.membership = [](const Module& m) {
        return from_bool(is_projective(m), "projective cover kernel is zero", "projective cover kernel is nonzero");
      };
      o.flags = {Tri::True, Tri::True, Tri::False, Tri::True};
      o.proper_generator_seq = cover_sequence;
      o.coproper_cogenerator_seq = trivial_cogenerator;
      o.generator_class = "Projectives";
      o.dimension = [cutoff](const Module& m) { return proj_dim(m, cutoff); };
      break;
    case OracleKind::Injectives:
      o.membership = [](const Module& m) {
        return from_bool(is_projective(k_dual(m)), "dual is projective", "dual is not projective");
      };
      o.flags = {Tri::True, Tri::False, Tri::True, Tri::True};
      o.proper_generator_seq = trivial_generator;
      o.coproper_cogenerator_seq = envelope_sequence;
      o.generator_class = "Injectives";
      break;
    case OracleKind::GorensteinProjectives:
      o.membership = [cutoff](const Module& m) { return is_gorenstein_projective(m, cutoff); };
      o.flags = {Tri::True, Tri::True, Tri::False, Tri::True};
      o.proper_generator_seq = cover_sequence;
      o.coproper_cogenerator_seq = [cutoff](const Module& m) { return gp_coresolution_step(m, cutoff).sequence; };
      o.generator_class = "Projectives";
      o.dimension = [cutoff](const Module& m) { return gorenstein_pd(m, cutoff); };
      break;
    case OracleKind::GorensteinInjectives:
      o.membership = [cutoff](const Module& m) { return is_gorenstein_projective(k_dual(m), cutoff); };
      o.flags = {Tri::True, Tri::False, Tri::True, Tri::True};
      o.proper_generator_seq = [](const Module& m) { return dual_sequence(star_coresolution(k_dual(m))); };
      o.coproper_cogenerator_seq = envelope_sequence;
      o.generator_class = "Injectives";
      break;
    case OracleKind::PerpRegular:
      o.membership = [cutoff, reg](const Module& m) { return perp_test(m, {reg}, cutoff); };
      o.flags = {Tri::True, Tri::True, Tri::False, Tri::True};
      o.proper_generator_seq = cover_sequence;
      o.generator_class = "Projectives";
      o.dimension = [cutoff, reg](const Module& m) { return perp_dim(m, {reg}, cutoff); };
      break;
    case OracleKind::TorsionfreeInfty:
    case OracleKind::CoresTildeProj:
      o.membership = [cutoff](const Module& m) { return is_torsionfree_infty(m, cutoff); };
      o.flags = {Tri::True, Tri::Unknown, Tri::Unknown, Tri::True};
      o.proper_generator_seq = cover_sequence;
      o.coproper_cogenerator_seq = star_coresolution;
      o.generator_class = "Projectives";
      o.dimension = [cutoff](const Module& m) { return torsionfree_dim_upper(m, cutoff); };
      break;
  }
  return o;
}

// Replacement by pullbacks -----------------------------------------------------------

ExactSequenceWitness prop33_replace(const ExactSequence& seq, const SubcategoryOracle& o,
                                    const std::vector<Module>& test_objects) {
  require_exact(seq, 4);
  if (seq.modules.size() != 4) throw Error(ErrorCode::ValidationError, "expected 0->M->T1->T0->A->0");
  if (!o.proper_generator_seq) throw Error(ErrorCode::NoGeneratorData, o.name + " has no proper generator");
  if (o.flags.closed_extensions != Tri::True)
    throw Error(ErrorCode::UnsupportedKind, o.name + " is not known to be closed under extensions");
  const Module& m = seq.modules[0];
  const Module& a = seq.modules[3];
  require_member(o, seq.modules[1], "T1");
  require_member(o, seq.modules[2], "T0");
  const Morphism& to_t1 = seq.maps[0];
  const Morphism& f = seq.maps[1];
  const Morphism& to_a = seq.maps[2];

  const ExactSequence gen = (*o.proper_generator_seq)(seq.modules[2]);
  const Morphism& pi = gen.maps[1];  // C -> T0
  const Image im = image(f);
  const Pullback w = pullback(pi, im.incl);    // W -> C, W -> Im f
  const Pullback t = pullback(w.p2, im.coim);  // T -> W, T -> T1
  // M -> T is (0, M -> T1) in coordinates of W + T1.
  const Matrix both = Matrix::vcat(t.p1.matrix(), t.p2.matrix());
  const Matrix rhs = Matrix::vcat(Matrix(m.prime(), w.module.dim(), m.dim()), to_t1.matrix());
  Morphism m_to_t(m, t.module, *solve(both, rhs));

  ExactSequenceWitness out;
  out.modules = {m, t.module, gen.modules[1], a};
  out.maps = {m_to_t, compose(w.p1, t.p1), compose(to_a, pi)};
  out.memberships = {{1, o.name}, {2, o.generator_class}};
  out.test_objects = test_objects;
  certify(out, o);
  add_properness(out, "Hom(P,-)");
  for (std::size_t k = 0; k < test_objects.size(); ++k) {
    if (!hom_exact_covariant(seq, test_objects[k])) continue;
    add_properness(out, "Hom(X" + std::to_string(k) + ",-)");
  }
  return out;
}

Ladder prop34_ladder(const ExactSequence& seq, const SubcategoryOracle& o) {
  require_exact(seq, 3);
  const std::size_t n = seq.modules.size() - 2;
  if (!o.proper_generator_seq) throw Error(ErrorCode::NoGeneratorData, o.name + " has no proper generator");
  for (std::size_t k = 1; k <= n; ++k) require_member(o, seq.modules[k], "T term " + std::to_string(k));
  const Module& m = seq.modules[0];
  const Module& a = seq.modules[n + 1];
  Ladder out;
  if (n == 1) {
    const ExactSequence gen = (*o.proper_generator_seq)(seq.modules[1]);
    const Pullback w = pullback(gen.maps[1], seq.maps[0]);  // W -> C, W -> M
    const Matrix both = Matrix::vcat(w.p1.matrix(), w.p2.matrix());
    const Matrix rhs = Matrix::vcat(gen.maps[0].matrix(), Matrix(m.prime(), m.dim(), gen.modules[0].dim()));
    Morphism tprime_to_w(gen.modules[0], w.module, *solve(both, rhs));
    out.main.modules = {w.module, gen.modules[1], a};
    out.main.maps = {w.p1, compose(seq.maps[1], gen.maps[1])};
    out.main.memberships = {{1, o.generator_class}};
    out.side.modules = {gen.modules[0], w.module, m};
    out.side.maps = {tprime_to_w, w.p2};
    out.side.memberships = {{0, o.name}};
  } else {
    // K = Ker(T_1 -> T_0); replace the last two terms, then recurse.
    const Kernel k = kernel(seq.maps[n - 1]);
    const ExactSequence window{{k.module, seq.modules[n - 1], seq.modules[n], a},
                               {k.incl, seq.maps[n - 1], seq.maps[n]}};
    const ExactSequenceWitness rep = prop33_replace(window, o);
    const Image aprime = image(rep.maps[1]);  // Im(T1' -> C0)
    ExactSequence shorter;
    shorter.modules.assign(seq.modules.begin(), seq.modules.begin() + static_cast<long>(n - 1));
    shorter.maps.assign(seq.maps.begin(), seq.maps.begin() + static_cast<long>(n - 2));
    const Morphism t2_to_k(seq.modules[n - 2], k.module, *solve(k.incl.matrix(), seq.maps[n - 2].matrix()));
    shorter.maps.push_back(compose(rep.maps[0], t2_to_k));
    shorter.modules.push_back(rep.modules[1]);
    shorter.modules.push_back(aprime.module);
    shorter.maps.push_back(aprime.coim);
    Ladder inner = prop34_ladder(shorter, o);
    out.main.modules = inner.main.modules;
    out.main.modules.pop_back();
    out.main.maps = inner.main.maps;
    out.main.maps.back() = compose(aprime.incl, inner.main.maps.back());
    out.main.modules.push_back(rep.modules[2]);
    out.main.modules.push_back(a);
    out.main.maps.push_back(rep.maps[2]);
    for (std::size_t i = 1; i + 1 < out.main.modules.size(); ++i) out.main.memberships.push_back({i, o.generator_class});
    out.side = std::move(inner.side);
    out.side.properness_checks.clear();
  }
  certify(out.main, o);
  certify(out.side, o);
  add_properness(out.main, "Hom(P,-)");
  add_properness(out.side, "Hom(P,-)");
  out.side.notes.push_back("Hom(E,-)-exactness with E = projectives holds for every exact sequence");
  return out;
}

// Replacement by pushouts --------------------------------------------------------------

ExactSequenceWitness prop43_replace(const ExactSequence& seq, const SubcategoryOracle& o,
                                    const std::vector<Module>& test_objects) {
  require_exact(seq, 4);
  if (seq.modules.size() != 4) throw Error(ErrorCode::ValidationError, "expected 0->M->T0->T1->A->0");
  if (!o.coproper_cogenerator_seq) throw Error(ErrorCode::NoCogeneratorData, o.name + " has no coproper cogenerator");
  if (o.flags.closed_extensions != Tri::True)
    throw Error(ErrorCode::UnsupportedKind, o.name + " is not known to be closed under extensions");
  const Module& m = seq.modules[0];
  const Module& a = seq.modules[3];
  require_member(o, seq.modules[1], "T0");
  require_member(o, seq.modules[2], "T1");
  const Morphism& g = seq.maps[1];

  const ExactSequence cog = (*o.coproper_cogenerator_seq)(seq.modules[1]);
  const Morphism& j = cog.maps[0];  // T0 -> C
  const Image im = image(g);
  const Pushout v = pushout(j, im.coim);      // C -> V, I -> V
  const Pushout t = pushout(v.q2, im.incl);   // V -> T, T1 -> T
  // T -> A is induced by (0, T1 -> A) on V + T1.
  const Matrix both = Matrix::hcat(t.q1.matrix(), t.q2.matrix());
  const Matrix rhs = Matrix::hcat(Matrix(m.prime(), a.dim(), v.module.dim()), seq.maps[2].matrix());
  const Matrix x = solve(both.transpose(), rhs.transpose())->transpose();
  Morphism t_to_a(t.module, a, x);

  ExactSequenceWitness out;
  out.modules = {m, cog.modules[1], t.module, a};
  out.maps = {compose(j, seq.maps[0]), compose(t.q1, v.q1), t_to_a};
  out.memberships = {{1, o.generator_class}, {2, o.name}};
  out.test_objects = test_objects;
  certify(out, o);
  for (std::size_t k = 0; k < test_objects.size(); ++k) {
    if (!hom_exact_contravariant(seq, test_objects[k])) continue;
    add_properness(out, "Hom(-,X" + std::to_string(k) + ")");
  }
  return out;
}

Ladder prop44_ladder(const ExactSequence& seq, const SubcategoryOracle& o) {
  require_exact(seq, 3);
  const std::size_t n = seq.modules.size() - 2;
  if (!o.coproper_cogenerator_seq) throw Error(ErrorCode::NoCogeneratorData, o.name + " has no coproper cogenerator");
  for (std::size_t k = 1; k <= n; ++k) require_member(o, seq.modules[k], "T term " + std::to_string(k));
  const Module& m = seq.modules[0];
  const Module& a = seq.modules[n + 1];
  Ladder out;
  if (n == 1) {
    const ExactSequence cog = (*o.coproper_cogenerator_seq)(seq.modules[1]);
    const Pushout b = pushout(cog.maps[0], seq.maps[1]);  // C -> B, A -> B
    const Matrix both = Matrix::hcat(b.q1.matrix(), b.q2.matrix());
    const Matrix rhs = Matrix::hcat(cog.maps[1].matrix(), Matrix(m.prime(), cog.modules[2].dim(), a.dim()));
    const Matrix x = solve(both.transpose(), rhs.transpose())->transpose();
    out.main.modules = {m, cog.modules[1], b.module};
    out.main.maps = {compose(cog.maps[0], seq.maps[0]), b.q1};
    out.main.memberships = {{1, o.generator_class}};
    out.side.modules = {a, b.module, cog.modules[2]};
    out.side.maps = {b.q2, Morphism(b.module, cog.modules[2], x)};
    out.side.memberships = {{2, o.name}};
  } else {
    // K = Coker(T^0 -> T^1); replace the first two terms, then recurse.
    const Cokernel k = cokernel(seq.maps[1]);
    const ExactSequence window{{m, seq.modules[1], seq.modules[2], k.module}, {seq.maps[0], seq.maps[1], k.proj}};
    const ExactSequenceWitness rep = prop43_replace(window, o);
    const Image mprime = image(rep.maps[1]);  // Im(C^0 -> T^1')
    ExactSequence shorter;
    shorter.modules = {mprime.module, rep.modules[2]};
    shorter.maps = {mprime.incl};
    const Matrix induced = solve(k.proj.matrix().transpose(), seq.maps[2].matrix().transpose())->transpose();
    shorter.maps.push_back(compose(Morphism(k.module, seq.modules[3], induced), rep.maps[2]));
    shorter.modules.insert(shorter.modules.end(), seq.modules.begin() + 3, seq.modules.end());
    shorter.maps.insert(shorter.maps.end(), seq.maps.begin() + 3, seq.maps.end());
    Ladder inner = prop44_ladder(shorter, o);
    out.main.modules = {m, rep.modules[1]};
    out.main.maps = {rep.maps[0], compose(inner.main.maps.front(), mprime.coim)};
    out.main.modules.insert(out.main.modules.end(), inner.main.modules.begin() + 1, inner.main.modules.end());
    out.main.maps.insert(out.main.maps.end(), inner.main.maps.begin() + 1, inner.main.maps.end());
    for (std::size_t i = 1; i + 1 < out.main.modules.size(); ++i) out.main.memberships.push_back({i, o.generator_class});
    out.side = std::move(inner.side);
    out.side.properness_checks.clear();
  }
  certify(out.main, o);
  certify(out.side, o);
  add_properness(out.side, o.generator_class == "Projectives" ? "Hom(-,P)" : "Hom(-,I)");
  return out;
}

// Resolutions by members -------------------------------------------------------------

namespace {

std::size_t exact_dimension(const Module& a, const SubcategoryOracle& o) {
  if (o.generator_class != "Projectives" || !o.dimension)
    throw Error(ErrorCode::UnsupportedKind, o.name + " has no resolution dimension over projectives");
  const DimensionReport rep = o.dimension(a);
  if (rep.kind == DimKind::Exact) return rep.value;
  // The torsionfree bound comes with a certified syzygy, which is all the
  // constructions need.
  if (rep.kind == DimKind::UpperBound && o.membership == nullptr) return rep.value;
  if (rep.kind == DimKind::UpperBound &&
      (o.kind == OracleKind::TorsionfreeInfty || o.kind == OracleKind::CoresTildeProj))
    return rep.value;
  throw Error(ErrorCode::DimensionNotExact, o.name + " dimension is " + std::string(to_string(rep.kind)));
}

}  // namespace

ExactSequenceWitness thm36_witness(const Module& a, const SubcategoryOracle& o) {
  if (a.is_zero()) throw Error(ErrorCode::DimensionNotExact, "zero module has no dimension");
  const std::size_t n = exact_dimension(a, o);
  Resolution r(a);
  if (!r.extend_to(n)) throw Error(ErrorCode::CutoffExceeded, "resolution budget reached");
  ExactSequenceWitness w;
  if (n == 0) {
    w.modules = {a, a};
    w.maps = {Morphism::identity(a)};
    w.memberships = {{0, o.name}};
  } else {
    w.modules.push_back(r.syzygy(n));
    w.maps.push_back(r.inclusion(n));
    for (std::size_t k = n; k-- > 0;) {
      w.modules.push_back(r.term(k));
      w.maps.push_back(k == 0 ? r.augmentation() : r.differential(k));
    }
    w.modules.push_back(a);
    w.memberships.push_back({0, o.name});
    for (std::size_t i = 1; i <= n; ++i) w.memberships.push_back({i, o.generator_class});
    w.notes.push_back("minimal syzygies suffice once the dimension is at most n");
  }
  certify(w, o);
  add_properness(w, "Hom(P,-)");
  return w;
}

ExactSequenceWitness cor45_approximation(const Module& a, const SubcategoryOracle& o) {
  if (!o.coproper_cogenerator_seq) throw Error(ErrorCode::NoCogeneratorData, o.name + " has no coproper cogenerator");
  if (a.is_zero()) throw Error(ErrorCode::DimensionNotExact, "zero module has no dimension");
  const std::size_t n = exact_dimension(a, o);
  ExactSequenceWitness w;
  if (n == 0) {
    const ExactSequence cog = (*o.coproper_cogenerator_seq)(a);
    w.modules = cog.modules;
    w.maps = cog.maps;
    w.memberships = {{2, o.name}};
  } else {
    Resolution r(a);
    if (!r.extend_to(n)) throw Error(ErrorCode::CutoffExceeded, "resolution budget reached");
    ExactSequence seq;
    const Module z = Module::zero(a.algebra());
    seq.modules = {z, r.syzygy(n)};
    seq.maps = {Morphism::zero(z, r.syzygy(n)), r.inclusion(n)};
    for (std::size_t k = n; k-- > 0;) {
      seq.modules.push_back(r.term(k));
      seq.maps.push_back(k == 0 ? r.augmentation() : r.differential(k));
    }
    seq.modules.push_back(a);
    Ladder l = prop44_ladder(seq, o);
    w = std::move(l.side);
    w.properness_checks.clear();
    w.notes.push_back("B has a projective resolution of length " + std::to_string(n) + " from the main ladder");
  }
  certify(w, o);
  add_properness(w, "Hom(-,P)");
  return w;
}

// Validation ---------------------------------------------------------------------------

Verdict validate_witness(const ExactSequenceWitness& w, const std::vector<SubcategoryOracle>& oracles) {
  const Verdict exact = check_exact(w.sequence());
  if (!exact.is_true()) return exact;
  std::optional<Verdict> unknown;
  for (const auto& c : w.memberships) {
    if (c.index >= w.modules.size()) {
      Verdict v = Verdict::no("membership claim points outside the sequence");
      v.node = c.index;
      return v;
    }
    const Module& m = w.modules[c.index];
    std::optional<SubcategoryOracle> built;
    const SubcategoryOracle* o = nullptr;
    for (const auto& cand : oracles)
      if (cand.name == c.oracle && same_algebra(cand.algebra, m.algebra())) o = &cand;
    if (!o) {
      built = oracle(parse_oracle_kind(c.oracle), m.algebra(), w.cutoff);
      o = &*built;
    }
    Verdict v = o->membership(m);
    if (v.is_false()) {
      v.node = c.index;
      v.reason = "term " + std::to_string(c.index) + " not in " + c.oracle + ": " + v.reason;
      return v;
    }
    if (v.is_unknown() && !unknown) {
      unknown = Verdict::unknown(v.cutoff.value_or(w.cutoff), "term " + std::to_string(c.index) + " membership in " +
                                                                   c.oracle + " undecided: " + v.reason);
      unknown->node = c.index;
    }
  }
  for (const auto& c : w.properness_checks)
    if (replay_properness(w, c) != c.verified) return Verdict::no("properness check " + c.name + " does not replay");
  if (unknown) return *unknown;
  return Verdict::yes("exactness, memberships and properness replayed");
}

}  // namespace homcalc
