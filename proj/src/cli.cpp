#include "homcalc/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include <CLI11.hpp>

#include "homcalc/io.hpp"

namespace homcalc {

namespace {

struct Options {
  std::string algebra;
  std::vector<std::string> modules;
  std::size_t cutoff = kDefaultCutoff;
  std::uint64_t seed = 0;
  std::size_t samples = 50;
  std::string report = "json";
  std::vector<std::string> suites;
  std::string target;
  std::size_t degree = 6;
  std::string construction = "thm36";
  std::string oracle = "GorensteinProjectives";
  std::size_t length = 2;
  std::string witness;
};

void common_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--algebra", o.algebra, "algebra file or corpus name");
  cmd->add_option("--module", o.modules, "module file (repeatable)");
  cmd->add_option("--cutoff", o.cutoff, "largest Ext degree inspected")->check(CLI::Range(0, 10000));
  cmd->add_option("--seed", o.seed, "random seed");
  cmd->add_option("--samples", o.samples, "samples per suite")->check(CLI::Range(0, 1000000));
  cmd->add_option("--report", o.report, "report format")->check(CLI::IsMember({"json", "text"}));
}

AlgebraPtr load_algebra(const std::string& ref) {
  if (std::filesystem::exists(ref))
    return algebra_from_json(read_json_file(ref), basis_cap_from_env(), std::filesystem::path(ref).stem().string());
  for (const auto& q : corpus_presentations())
    if (q.name == ref) return algebra_from_quiver(q);
  throw Error(ErrorCode::ParseError, "no algebra file or corpus algebra named " + ref, "");
}

std::optional<AlgebraPtr> optional_algebra(const Options& o) {
  if (o.algebra.empty()) return std::nullopt;
  return load_algebra(o.algebra);
}

std::vector<Module> load_modules(const Options& o) {
  const auto a = optional_algebra(o);
  std::vector<Module> out;
  for (const auto& path : o.modules) {
    const std::filesystem::path p(path);
    try {
      out.push_back(module_from_json(read_json_file(p), a, p.parent_path()));
    } catch (const Error& e) {
      throw Error(e.code(), path + ": " + e.what(), e.location());
    }
  }
  return out;
}

void require_modules(const std::vector<Module>& ms, std::size_t n, const char* cmd) {
  if (ms.size() < n)
    throw Error(ErrorCode::ParseError, std::string(cmd) + " needs " + std::to_string(n) + " --module argument(s)", "");
}

std::string short_report(const Json& r) {
  std::string s = r["kind"].get<std::string>();
  if (r.contains("value")) s += "(" + std::to_string(r["value"].get<std::size_t>()) + ")";
  if (r.contains("period")) s += " period " + r["period"].dump();
  if (r.contains("cutoff")) s += " cutoff " + std::to_string(r["cutoff"].get<std::size_t>());
  return s;
}

/// Flat human-readable rendering; reports stay summarised, not complete.
void render_text(const Json& j, std::ostream& out, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    const std::string key = j.is_object() ? it.key() : "-";
    if (v.is_object() && v.contains("kind") && v["kind"].is_string() && !v.contains("reason")) {
      out << indent << key << ": " << short_report(v) << "\n";
    } else if (v.is_object() && v.contains("kind") && v.contains("reason")) {
      out << indent << key << ": " << v["kind"].get<std::string>() << " (" << v["reason"].get<std::string>() << ")\n";
    } else if (v.is_structured() && key != "action" && key != "matrix" && key != "differentials") {
      out << indent << key << ":\n";
      render_text(v, out, indent + "  ");
    } else if (v.is_structured()) {
      out << indent << key << ": <" << v.size() << " entries>\n";
    } else {
      out << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

void emit(const Json& j, const Options& o, std::ostream& out) {
  if (o.report == "text")
    render_text(j, out);
  else
    out << canonical(j);
}

// Commands -------------------------------------------------------------------------------

int cmd_validate(const Options& o, std::ostream& out) {
  Json j = Json::object();
  int code = 0;
  if (!o.algebra.empty()) {
    const AlgebraPtr a = load_algebra(o.algebra);
    j["algebra"] = {{"name", a->name()},
                    {"dim", a->dim()},
                    {"field_char", a->prime()},
                    {"idempotents", a->num_idempotents()},
                    {"radical_dim", a->radical().cols()},
                    {"valid", true}};
  }
  Json mods = Json::array();
  for (const auto& m : load_modules(o)) mods.push_back({{"dim", m.dim()}, {"valid", true}});
  j["modules"] = mods;
  if (!o.witness.empty()) {
    const ExactSequenceWitness w = witness_from_json(read_json_file(o.witness));
    const Verdict v = validate_witness(w);
    j["witness"] = verdict_to_json(v);
    if (!v.is_true()) code = 1;
  }
  emit(j, o, out);
  return code;
}

int cmd_dims(const Options& o, std::ostream& out) {
  const auto ms = load_modules(o);
  require_modules(ms, 1, "dims");
  Json list = Json::array();
  for (const auto& m : ms) {
    const AlgebraPtr& a = m.algebra();
    list.push_back({{"dim", m.dim()},
                    {"pd", report_to_json(proj_dim(m, o.cutoff))},
                    {"id", report_to_json(inj_dim(m, o.cutoff))},
                    {"gpd", report_to_json(gorenstein_pd(m, o.cutoff))},
                    {"gid", report_to_json(gorenstein_id(m, o.cutoff))},
                    {"perp_dim", report_to_json(perp_dim(m, {regular_module(a)}, o.cutoff))},
                    {"torsionfree_upper", report_to_json(torsionfree_dim_upper(m, o.cutoff))},
                    {"gorenstein_projective", verdict_to_json(is_gorenstein_projective(m, o.cutoff))},
                    {"torsionfree", verdict_to_json(is_torsionfree_infty(m, o.cutoff))}});
  }
  emit({{"cutoff", o.cutoff}, {"modules", list}}, o, out);
  return 0;
}

int cmd_ext(const Options& o, std::ostream& out) {
  const auto ms = load_modules(o);
  require_modules(ms, 2, "ext");
  const Module& m = ms[0];
  const Module& n = ms[1];
  if (!same_algebra(m.algebra(), n.algebra()))
    throw Error(ErrorCode::AlgebraMismatch, "ext needs two modules over the same algebra", "");
  Resolution r(m);
  Json degrees = Json::array();
  for (std::size_t i = 1; i <= o.degree; ++i) {
    const auto e = ext_dim(r, n, i);
    degrees.push_back({{"degree", i}, {"dim", e ? Json(*e) : Json()}});
  }
  emit({{"hom", hom_dim(m, n)}, {"ext", degrees}}, o, out);
  return 0;
}

int cmd_transpose(const Options& o, std::ostream& out) {
  const auto ms = load_modules(o);
  require_modules(ms, 1, "transpose");
  Json list = Json::array();
  for (const auto& m : ms) list.push_back(module_to_json(transpose(m)));
  emit({{"transposes", list}}, o, out);
  return 0;
}

Json ladder_json(const Ladder& l, const std::vector<SubcategoryOracle>& os) {
  return {{"main", {{"witness", witness_to_json(l.main)}, {"validation", verdict_to_json(validate_witness(l.main, os))}}},
          {"side", {{"witness", witness_to_json(l.side)}, {"validation", verdict_to_json(validate_witness(l.side, os))}}}};
}

int cmd_construct(const Options& o, std::ostream& out) {
  const auto ms = load_modules(o);
  require_modules(ms, 1, "construct");
  const Module& m = ms[0];
  const SubcategoryOracle orc = oracle(parse_oracle_kind(o.oracle), m.algebra(), o.cutoff);
  Json j = {{"construction", o.construction}, {"oracle", orc.name}};
  bool ok = true;
  auto single = [&](const ExactSequenceWitness& w) {
    const Verdict v = validate_witness(w, {orc});
    ok = v.is_true();
    j["witness"] = witness_to_json(w);
    j["validation"] = verdict_to_json(v);
  };
  // Input sequences for the replacement steps come from the minimal resolution.
  auto resolution_sequence = [&](std::size_t n) {
    Resolution r(m);
    if (!r.extend_to(n)) throw Error(ErrorCode::CutoffExceeded, "resolution budget reached", "");
    ExactSequence s;
    s.modules.push_back(r.syzygy(n));
    s.maps.push_back(r.inclusion(n));
    for (std::size_t k = n; k-- > 0;) {
      s.modules.push_back(r.term(k));
      s.maps.push_back(k == 0 ? r.augmentation() : r.differential(k));
    }
    s.modules.push_back(m);
    return s;
  };
  if (o.construction == "thm36") {
    single(thm36_witness(m, orc));
  } else if (o.construction == "cor45") {
    single(cor45_approximation(m, orc));
  } else if (o.construction == "prop33") {
    single(prop33_replace(resolution_sequence(2), orc));
  } else if (o.construction == "prop34") {
    const Ladder l = prop34_ladder(resolution_sequence(std::max<std::size_t>(o.length, 1)), orc);
    j["ladder"] = ladder_json(l, {orc});
    ok = validate_witness(l.main, {orc}).is_true() && validate_witness(l.side, {orc}).is_true();
  } else {
    throw Error(ErrorCode::UnsupportedKind, "unknown construction " + o.construction, "");
  }
  emit(j, o, out);
  return ok ? 0 : 1;
}

std::vector<AlgebraPtr> algebras_or_corpus(const Options& o) {
  if (o.algebra.empty()) return corpus();
  return {load_algebra(o.algebra)};
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<std::string> suites;
  for (const auto& s : o.suites) {
    if (s == "all")
      suites.insert(suites.end(), property_ids().begin(), property_ids().end());
    else
      suites.push_back(s);
  }
  if (suites.empty()) throw Error(ErrorCode::ParseError, "verify needs --suite", "");
  for (const auto& s : suites)
    if (std::find(property_ids().begin(), property_ids().end(), s) == property_ids().end())
      throw Error(ErrorCode::UnknownPropertyId, "unknown property " + s, "");
  const CheckConfig cfg{o.samples, o.cutoff, o.seed};
  Json reports = Json::array();
  std::size_t failures = 0;
  for (const auto& a : algebras_or_corpus(o))
    for (const auto& s : suites) {
      const CheckReport r = check(s, a, cfg);
      failures += r.failed.size();
      reports.push_back(check_report_to_json(r));
    }
  emit({{"reports", reports}, {"failures", failures}}, o, out);
  return failures ? 1 : 0;
}

int cmd_scan(const Options& o, std::ostream& out) {
  if (o.target.empty()) throw Error(ErrorCode::ParseError, "scan needs --target", "");
  const CheckConfig cfg{o.samples, o.cutoff, o.seed};
  Json reports = Json::array();
  bool candidate = false;
  for (const auto& a : algebras_or_corpus(o)) {
    const ScanReport r = scan(o.target, a, cfg);
    candidate = candidate || r.verdict == ScanVerdict::CandidateCounterexample;
    reports.push_back(scan_report_to_json(r));
  }
  emit({{"reports", reports}}, o, out);
  return candidate ? 1 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homological computations over finite-dimensional algebras", "homcalc"};
  app.require_subcommand(1, 1);
  Options o;
  auto* validate = app.add_subcommand("validate", "check algebra, module and witness files");
  common_flags(validate, o);
  validate->add_option("--witness", o.witness, "witness file to replay");
  auto* dims = app.add_subcommand("dims", "homological dimensions of modules");
  common_flags(dims, o);
  auto* ext = app.add_subcommand("ext", "dim Ext^i(M, N) for i = 1..degree");
  common_flags(ext, o);
  ext->add_option("--degree", o.degree, "largest degree");
  auto* tr = app.add_subcommand("transpose", "transpose of each module");
  common_flags(tr, o);
  auto* construct = app.add_subcommand("construct", "build and validate an exact-sequence witness");
  common_flags(construct, o);
  construct->add_option("--construction", o.construction, "thm36, cor45, prop33 or prop34");
  construct->add_option("--oracle", o.oracle, "subcategory kind");
  construct->add_option("--length", o.length, "resolution length fed to prop34");
  auto* verify = app.add_subcommand("verify", "run property suites on random modules");
  common_flags(verify, o);
  verify->add_option("--suite", o.suites, "property id or all (repeatable)");
  auto* scan_cmd = app.add_subcommand("scan", "scan for counterexample candidates");
  common_flags(scan_cmd, o);
  scan_cmd->add_option("--target", o.target, "conjecture id");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (dims->parsed()) return cmd_dims(o, out);
    if (ext->parsed()) return cmd_ext(o, out);
    if (tr->parsed()) return cmd_transpose(o, out);
    if (construct->parsed()) return cmd_construct(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (scan_cmd->parsed()) return cmd_scan(o, out);
  } catch (const Error& e) {
    const Json j = {{"error", std::string(to_string(e.code()))}, {"message", e.what()}, {"location", e.location()}};
    if (o.report == "json") out << canonical(j);
    err << "homcalc: " << e.what();
    if (!e.location().empty()) err << " at " << e.location();
    err << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "homcalc: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace homcalc
