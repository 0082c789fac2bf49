#include "homcalc/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace homcalc {

namespace {

[[noreturn]] void parse_error(const std::string& what, const std::string& where) {
  throw Error(ErrorCode::ParseError, what, where);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) parse_error("expected an object", where);
  const auto it = j.find(key);
  if (it == j.end()) parse_error(std::string("missing field ") + key, where + "/" + key);
  return *it;
}

std::int64_t integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) parse_error("expected an integer", where);
  return j.get<std::int64_t>();
}

std::size_t natural(const Json& j, const std::string& where) {
  const std::int64_t v = integer(j, where);
  if (v < 0) parse_error("expected a non-negative integer", where);
  return static_cast<std::size_t>(v);
}

std::string text(const Json& j, const std::string& where) {
  if (!j.is_string()) parse_error("expected a string", where);
  return j.get<std::string>();
}

const Json& array(const Json& j, const std::string& where) {
  if (!j.is_array()) parse_error("expected an array", where);
  return j;
}

Vec residues(const Json& j, std::uint32_t p, const std::string& where) {
  Vec v;
  for (std::size_t i = 0; i < array(j, where).size(); ++i)
    v.push_back(fp::reduce(integer(j[i], where + "/" + std::to_string(i)), p));
  return v;
}

std::vector<std::size_t> naturals(const Json& j, const std::string& where) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < array(j, where).size(); ++i) v.push_back(natural(j[i], where + "/" + std::to_string(i)));
  return v;
}

Json vec_to_json(const Vec& v) { return Json(std::vector<std::uint32_t>(v.begin(), v.end())); }

/// Library invariant failures become ValidationError naming the invariant.
[[noreturn]] void invariant_error(const Error& e, const std::string& base) {
  const char* name = nullptr;
  switch (e.code()) {
    case ErrorCode::NonAssociative: name = "associativity"; break;
    case ErrorCode::BadUnit: name = "unit"; break;
    case ErrorCode::BadIdempotents: name = "idempotents"; break;
    case ErrorCode::RadicalNotIdeal: name = "radical ideal"; break;
    case ErrorCode::RadicalNotNilpotent: name = "radical nilpotency"; break;
    case ErrorCode::NotPrime: name = "field characteristic"; break;
    case ErrorCode::InvalidModule: name = "module action"; break;
    case ErrorCode::InvalidMorphism: name = "intertwining"; break;
    case ErrorCode::PathExplosion: name = "path basis cap"; break;
    case ErrorCode::RelationNotLengthHomogeneous: name = "homogeneous relations"; break;
    case ErrorCode::TopDecompositionFailed: name = "radical"; break;
    default: break;
  }
  if (!name) throw e;
  std::string loc = base;
  if (!e.location().empty()) loc += (e.location().front() == '(' ? " " : "/") + e.location();
  throw Error(ErrorCode::ValidationError, std::string(name) + ": " + e.what(), loc);
}

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string(), "");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what(), "");
  }
}

std::string canonical(const Json& j) { return j.dump(2) + "\n"; }

// Matrices -------------------------------------------------------------------------------

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto row = m.row(r);
    rows.push_back(std::vector<std::uint32_t>(row.begin(), row.end()));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j, std::uint32_t p, std::size_t rows, std::size_t cols,
                        const std::string& where) {
  array(j, where);
  if (rows == 0) {
    if (!j.empty()) parse_error("expected an empty matrix", where);
    return Matrix(p, 0, cols);
  }
  if (j.size() != rows)
    throw Error(ErrorCode::ValidationError, "matrix shape: expected " + std::to_string(rows) + " rows", where);
  Matrix m(p, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rw = where + "/" + std::to_string(r);
    const Vec row = residues(j[r], p, rw);
    if (row.size() != cols)
      throw Error(ErrorCode::ValidationError, "matrix shape: expected " + std::to_string(cols) + " columns", rw);
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, row[c]);
  }
  return m;
}

// Algebras -------------------------------------------------------------------------------

Json algebra_to_json(const Algebra& a) {
  const AlgebraData& d = a.data();
  Json sc = Json::array();
  for (std::size_t i = 0; i < d.dim; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < d.dim; ++j) {
      Vec v(d.dim);
      for (std::size_t k = 0; k < d.dim; ++k) v[k] = a.constant(i, j, k);
      row.push_back(vec_to_json(v));
    }
    sc.push_back(row);
  }
  Json idem = Json::array(), rad = Json::array();
  for (const auto& e : d.idempotents) idem.push_back(vec_to_json(e));
  for (const auto& r : d.radical_basis) rad.push_back(vec_to_json(r));
  return {{"field_char", d.field_char}, {"dim", d.dim},         {"basis_labels", d.basis_labels}, {"structure_constants", sc},
          {"unit", vec_to_json(d.unit)},  {"idempotents", idem}, {"radical_basis", rad}};
}

Json quiver_to_json(const QuiverPresentation& q) {
  Json arrows = Json::array(), rels = Json::array();
  for (const auto& a : q.arrows) arrows.push_back({{"label", a.label}, {"src", a.source}, {"tgt", a.target}});
  for (const auto& rel : q.relations) {
    Json terms = Json::array();
    for (const auto& t : rel) terms.push_back({{"path", t.path}, {"coeff", t.coeff}});
    rels.push_back(terms);
  }
  return {{"name", q.name},   {"field_char", q.field_char}, {"vertices", q.vertices},
          {"arrows", arrows}, {"relations", rels},          {"nilpotency_bound", q.nilpotency_bound}};
}

QuiverPresentation quiver_from_json(const Json& j) {
  QuiverPresentation q;
  if (j.contains("name")) q.name = text(j["name"], "/name");
  if (j.contains("field_char")) q.field_char = static_cast<std::uint32_t>(natural(j["field_char"], "/field_char"));
  const Json& verts = array(field(j, "vertices", ""), "/vertices");
  for (std::size_t v = 0; v < verts.size(); ++v) {
    const std::string w = "/vertices/" + std::to_string(v);
    q.vertices.push_back(verts[v].is_number_integer() ? std::to_string(verts[v].get<std::int64_t>()) : text(verts[v], w));
  }
  auto vertex_name = [](const Json& x, const std::string& w) {
    return x.is_number_integer() ? std::to_string(x.get<std::int64_t>()) : text(x, w);
  };
  const Json& arrows = array(field(j, "arrows", ""), "/arrows");
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const std::string w = "/arrows/" + std::to_string(a);
    q.arrows.push_back({text(field(arrows[a], "label", w), w + "/label"),
                        vertex_name(field(arrows[a], "src", w), w + "/src"),
                        vertex_name(field(arrows[a], "tgt", w), w + "/tgt")});
  }
  if (j.contains("relations")) {
    const Json& rels = array(j["relations"], "/relations");
    for (std::size_t r = 0; r < rels.size(); ++r) {
      const std::string w = "/relations/" + std::to_string(r);
      std::vector<QuiverTerm> rel;
      for (std::size_t t = 0; t < array(rels[r], w).size(); ++t) {
        const std::string tw = w + "/" + std::to_string(t);
        QuiverTerm term;
        const Json& path = array(field(rels[r][t], "path", tw), tw + "/path");
        for (std::size_t k = 0; k < path.size(); ++k) term.path.push_back(text(path[k], tw + "/path/" + std::to_string(k)));
        if (rels[r][t].contains("coeff")) term.coeff = integer(rels[r][t]["coeff"], tw + "/coeff");
        rel.push_back(std::move(term));
      }
      q.relations.push_back(std::move(rel));
    }
  }
  q.nilpotency_bound = natural(field(j, "nilpotency_bound", ""), "/nilpotency_bound");
  return q;
}

std::size_t basis_cap_from_env() {
  const char* env = std::getenv("HOMCALC_BASIS_CAP");
  if (!env || !*env) return kDefaultBasisCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw Error(ErrorCode::ParseError, "HOMCALC_BASIS_CAP must be a positive integer", "");
  return static_cast<std::size_t>(v);
}

AlgebraPtr algebra_from_json(const Json& j, std::size_t basis_cap, const std::string& fallback_name) {
  if (!j.is_object()) parse_error("algebra must be an object", "");
  if (j.contains("vertices")) {
    QuiverPresentation q = quiver_from_json(j);
    if (q.name.empty()) q.name = fallback_name;
    try {
      return algebra_from_quiver(q, basis_cap);
    } catch (const Error& e) {
      invariant_error(e, "");
    }
  }
  AlgebraData d;
  d.name = j.contains("name") ? text(j["name"], "/name") : fallback_name;
  const std::size_t p = natural(field(j, "field_char", ""), "/field_char");
  if (p < 2 || p > fp::kMaxPrime || !fp::is_prime(static_cast<std::uint32_t>(p)))
    throw Error(ErrorCode::ValidationError, "field characteristic: " + std::to_string(p) + " is not a supported prime",
                "/field_char");
  d.field_char = static_cast<std::uint32_t>(p);
  d.dim = natural(field(j, "dim", ""), "/dim");
  const std::size_t n = d.dim;
  if (j.contains("basis_labels")) {
    const Json& labels = array(j["basis_labels"], "/basis_labels");
    for (std::size_t i = 0; i < labels.size(); ++i) d.basis_labels.push_back(text(labels[i], "/basis_labels/" + std::to_string(i)));
  } else {
    for (std::size_t i = 0; i < n; ++i) d.basis_labels.push_back("b" + std::to_string(i));
  }
  const Json& sc = array(field(j, "structure_constants", ""), "/structure_constants");
  if (sc.size() != n) throw Error(ErrorCode::ValidationError, "shape: structure constants must be d x d x d", "/structure_constants");
  d.structure_constants.assign(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string wi = "/structure_constants/" + std::to_string(i);
    if (array(sc[i], wi).size() != n) throw Error(ErrorCode::ValidationError, "shape: structure constants must be d x d x d", wi);
    for (std::size_t k = 0; k < n; ++k) {
      const std::string wk = wi + "/" + std::to_string(k);
      const Vec v = residues(sc[i][k], d.field_char, wk);
      if (v.size() != n) throw Error(ErrorCode::ValidationError, "shape: structure constants must be d x d x d", wk);
      for (std::size_t l = 0; l < n; ++l) d.structure_constants[(i * n + k) * n + l] = v[l];
    }
  }
  d.unit = residues(field(j, "unit", ""), d.field_char, "/unit");
  const Json& idem = array(field(j, "idempotents", ""), "/idempotents");
  for (std::size_t i = 0; i < idem.size(); ++i) d.idempotents.push_back(residues(idem[i], d.field_char, "/idempotents/" + std::to_string(i)));
  const Json& rad = array(field(j, "radical_basis", ""), "/radical_basis");
  for (std::size_t i = 0; i < rad.size(); ++i) d.radical_basis.push_back(residues(rad[i], d.field_char, "/radical_basis/" + std::to_string(i)));
  try {
    return validate_algebra(std::move(d));
  } catch (const Error& e) {
    invariant_error(e, "");
  }
}

// Modules --------------------------------------------------------------------------------

Json module_to_json(const Module& m, bool with_algebra) {
  Json action = Json::array();
  for (const auto& a : m.actions()) action.push_back(matrix_to_json(a));
  Json j = {{"dim", m.dim()}, {"action", action}};
  if (m.summands()) j["summands"] = *m.summands();
  if (with_algebra) j["algebra"] = algebra_to_json(*m.algebra());
  return j;
}

Json presentation_to_json(const Presentation& p) {
  return {{"proj_target", p.target}, {"proj_source", p.source}, {"matrix", matrix_to_json(p.matrix)}};
}

namespace {

AlgebraPtr resolve_algebra(const Json& ref, const std::filesystem::path& base_dir) {
  if (ref.is_object()) {
    try {
      return algebra_from_json(ref, basis_cap_from_env());
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), "/algebra" + e.location());
    }
  }
  const std::string name = text(ref, "/algebra");
  const std::filesystem::path path = base_dir / name;
  if (std::filesystem::exists(path)) {
    const Json doc = read_json_file(path);
    return algebra_from_json(doc, basis_cap_from_env(), path.stem().string());
  }
  for (const auto& q : corpus_presentations())
    if (q.name == name) return algebra_from_quiver(q);
  throw Error(ErrorCode::ParseError, "algebra reference " + name + " is neither a file nor a corpus name", "/algebra");
}

Module module_body(const Json& j, const AlgebraPtr& a, const std::string& where) {
  const std::uint32_t p = a->prime();
  if (j.contains("proj_target")) {
    Presentation pres;
    pres.target = naturals(j["proj_target"], where + "/proj_target");
    pres.source = naturals(field(j, "proj_source", where), where + "/proj_source");
    if (pres.target.size() != a->num_idempotents() || pres.source.size() != a->num_idempotents())
      throw Error(ErrorCode::ValidationError, "presentation arity: one multiplicity per idempotent", where + "/proj_target");
    const std::size_t rows = projective_from_multiplicities(a, pres.target).dim();
    const std::size_t cols = projective_from_multiplicities(a, pres.source).dim();
    pres.matrix = matrix_from_json(field(j, "matrix", where), p, rows, cols, where + "/matrix");
    try {
      return presented_module(a, pres);
    } catch (const Error& e) {
      invariant_error(e, where + "/matrix");
    }
  }
  const std::size_t dim = natural(field(j, "dim", where), where + "/dim");
  const Json& action = array(field(j, "action", where), where + "/action");
  if (action.size() != a->dim())
    throw Error(ErrorCode::ValidationError,
                "action arity: expected " + std::to_string(a->dim()) + " matrices, got " + std::to_string(action.size()),
                where + "/action");
  std::vector<Matrix> mats;
  for (std::size_t b = 0; b < action.size(); ++b)
    mats.push_back(matrix_from_json(action[b], p, dim, dim, where + "/action/" + std::to_string(b)));
  std::optional<std::vector<std::size_t>> summands;
  if (j.contains("summands")) summands = naturals(j["summands"], where + "/summands");
  Module m(a, dim, std::move(mats));
  try {
    validate_module(m);
  } catch (const Error& e) {
    invariant_error(e, where + "/action");
  }
  if (summands) {
    // Only trusted when it reproduces the canonical projective exactly.
    for (std::size_t i : *summands)
      if (i >= a->num_idempotents()) throw Error(ErrorCode::ValidationError, "summand index out of range", where + "/summands");
    const Module canon = projective_module(a, *summands);
    if (!(canon == m)) throw Error(ErrorCode::ValidationError, "summands do not match the action", where + "/summands");
    return canon;
  }
  return m;
}

}  // namespace

Module module_from_json(const Json& j, const std::optional<AlgebraPtr>& algebra, const std::filesystem::path& base_dir) {
  if (!j.is_object()) parse_error("module must be an object", "");
  AlgebraPtr a;
  if (j.contains("algebra")) {
    a = resolve_algebra(j["algebra"], base_dir);
    if (algebra && !same_algebra(a, *algebra))
      throw Error(ErrorCode::ValidationError, "module algebra differs from --algebra", "/algebra");
    if (algebra) a = *algebra;
  } else if (algebra) {
    a = *algebra;
  } else {
    parse_error("module names no algebra", "/algebra");
  }
  return module_body(j, a, "");
}

// Reports --------------------------------------------------------------------------------

Json report_to_json(const DimensionReport& r) {
  Json j = {{"kind", to_string(r.kind)}};
  if (r.kind != DimKind::Infinite && r.kind != DimKind::Zero) j["value"] = r.value;
  if (r.cutoff) j["cutoff"] = *r.cutoff;
  if (r.lower) j["lower"] = *r.lower;
  if (r.period) j["period"] = {r.period->first, r.period->second};
  Json w = Json::object();
  if (!r.term_dims.empty()) w["term_dims"] = r.term_dims;
  if (!r.differentials.empty()) {
    Json ds = Json::array();
    for (const auto& d : r.differentials) ds.push_back(matrix_to_json(d));
    w["differentials"] = ds;
  }
  if (r.syzygy_dim) w["syzygy_dim"] = *r.syzygy_dim;
  if (r.period) w["period"] = {r.period->first, r.period->second};
  j["witness"] = w;
  j["notes"] = r.notes;
  return j;
}

Json verdict_to_json(const Verdict& v) {
  Json j = {{"kind", to_string(v.kind)}, {"reason", v.reason}};
  if (v.cutoff) j["cutoff"] = *v.cutoff;
  if (v.ext) j["ext"] = {{"degree", v.ext->degree}, {"dimension", v.ext->dimension}, {"target", v.ext->target}};
  if (v.period) j["period"] = {v.period->first, v.period->second};
  if (v.window) j["window"] = *v.window;
  if (v.iso) j["iso"] = matrix_to_json(*v.iso);
  if (v.node) j["node"] = *v.node;
  return j;
}

// Witnesses ------------------------------------------------------------------------------

Json witness_to_json(const ExactSequenceWitness& w) {
  Json j;
  j["algebra"] = w.modules.empty() ? Json() : algebra_to_json(*w.modules.front().algebra());
  Json mods = Json::array(), maps = Json::array(), tests = Json::array();
  for (const auto& m : w.modules) mods.push_back(module_to_json(m, false));
  for (std::size_t i = 0; i < w.maps.size(); ++i)
    maps.push_back({{"source", i}, {"target", i + 1}, {"matrix", matrix_to_json(w.maps[i].matrix())}});
  for (const auto& t : w.test_objects) tests.push_back(module_to_json(t, false));
  Json props = Json::array(), claims = Json::array();
  for (const auto& c : w.properness_checks) props.push_back({{"name", c.name}, {"verified", c.verified}});
  for (const auto& c : w.memberships) claims.push_back({{"index", c.index}, {"oracle", c.oracle}});
  j["modules"] = mods;
  j["maps"] = maps;
  j["test_objects"] = tests;
  j["properness"] = props;
  j["memberships"] = claims;
  j["cutoff"] = w.cutoff;
  j["notes"] = w.notes;
  return j;
}

ExactSequenceWitness witness_from_json(const Json& j) {
  ExactSequenceWitness w;
  const AlgebraPtr a = algebra_from_json(field(j, "algebra", ""), basis_cap_from_env());
  const Json& mods = array(field(j, "modules", ""), "/modules");
  for (std::size_t i = 0; i < mods.size(); ++i) w.modules.push_back(module_body(mods[i], a, "/modules/" + std::to_string(i)));
  const Json& maps = array(field(j, "maps", ""), "/maps");
  if (w.modules.empty() || maps.size() + 1 != w.modules.size())
    throw Error(ErrorCode::ValidationError, "composability: need one map between consecutive modules", "/maps");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const std::string wm = "/maps/" + std::to_string(i);
    if (natural(field(maps[i], "source", wm), wm + "/source") != i ||
        natural(field(maps[i], "target", wm), wm + "/target") != i + 1)
      throw Error(ErrorCode::ValidationError, "composability: maps must run between consecutive modules", wm);
    const Module& s = w.modules[i];
    const Module& t = w.modules[i + 1];
    w.maps.emplace_back(s, t, matrix_from_json(field(maps[i], "matrix", wm), a->prime(), t.dim(), s.dim(), wm + "/matrix"));
  }
  if (j.contains("test_objects")) {
    const Json& tests = array(j["test_objects"], "/test_objects");
    for (std::size_t i = 0; i < tests.size(); ++i)
      w.test_objects.push_back(module_body(tests[i], a, "/test_objects/" + std::to_string(i)));
  }
  if (j.contains("properness")) {
    const Json& props = array(j["properness"], "/properness");
    for (std::size_t i = 0; i < props.size(); ++i) {
      const std::string wp = "/properness/" + std::to_string(i);
      const Json& v = field(props[i], "verified", wp);
      if (!v.is_boolean()) parse_error("expected a boolean", wp + "/verified");
      w.properness_checks.push_back({text(field(props[i], "name", wp), wp + "/name"), v.get<bool>()});
    }
  }
  if (j.contains("memberships")) {
    const Json& claims = array(j["memberships"], "/memberships");
    for (std::size_t i = 0; i < claims.size(); ++i) {
      const std::string wc = "/memberships/" + std::to_string(i);
      w.memberships.push_back({natural(field(claims[i], "index", wc), wc + "/index"),
                               text(field(claims[i], "oracle", wc), wc + "/oracle")});
    }
  }
  if (j.contains("cutoff")) w.cutoff = natural(j["cutoff"], "/cutoff");
  if (j.contains("notes"))
    for (std::size_t i = 0; i < array(j["notes"], "/notes").size(); ++i) w.notes.push_back(text(j["notes"][i], "/notes"));
  return w;
}

// Harness reports ------------------------------------------------------------------------

namespace {

Json config_to_json(const CheckConfig& c) {
  return {{"samples", c.samples}, {"cutoff", c.cutoff}, {"seed", c.seed}};
}

Json record_to_json(const FailureRecord& f) {
  return {{"seed", f.seed}, {"presentation", presentation_to_json(f.presentation)}, {"detail", f.detail}};
}

}  // namespace

Json check_report_to_json(const CheckReport& r) {
  Json failed = Json::array();
  for (const auto& f : r.failed) failed.push_back(record_to_json(f));
  return {{"property_id", r.property_id},
          {"algebra", r.algebra},
          {"config", config_to_json(r.config)},
          {"drawn", r.drawn},
          {"samples", r.samples},
          {"skipped", r.skipped},
          {"passed", r.passed},
          {"failed", failed},
          {"unknown", r.unknown},
          {"findings", r.findings}};
}

Json scan_report_to_json(const ScanReport& r) {
  Json obs = Json::array();
  for (const auto& o : r.observations) obs.push_back({{"subject", o.subject}, {"detail", o.detail}});
  Json j = {{"conjecture_id", r.conjecture_id},
            {"algebra", r.algebra},
            {"config", config_to_json(r.config)},
            {"cutoff", r.config.cutoff},
            {"verdict", to_string(r.verdict)},
            {"reasons", r.reasons},
            {"observations", obs},
            {"examined", r.examined}};
  if (r.witness) j["witness"] = record_to_json(*r.witness);
  if (r.witness_module) j["witness_module"] = module_to_json(*r.witness_module, false);
  return j;
}

}  // namespace homcalc
