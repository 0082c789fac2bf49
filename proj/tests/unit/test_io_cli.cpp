#include <sstream>

#include "common.hpp"
#include "homcalc/cli.hpp"
#include "homcalc/io.hpp"

using namespace t;

namespace {

const std::string data = HOMCALC_DATA_DIR;
const std::string bad = HOMCALC_TEST_DATA_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("algebra files") {
  const Json doc = read_json_file(data + "/algebras/dual2.json");
  const AlgebraPtr a = algebra_from_json(doc);
  CHECK(a->same_structure(*dual2()));
  for (const auto& c : corpus()) CHECK(algebra_from_json(algebra_to_json(*c))->same_structure(*c));
  CHECK(algebra_from_json(read_json_file(data + "/algebras/loc3_quiver.json"))->same_structure(*loc3()));

  try {
    algebra_from_json(read_json_file(bad + "/nonassociative.json"));
    FAIL("non-associative algebra accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ValidationError);
    CHECK(std::string(e.what()).find("associativity") != std::string::npos);
    CHECK(e.location().find('(') != std::string::npos);
  }
  CHECK_THROWS_AS(read_json_file(bad + "/truncated.json"), Error);
}

TEST_CASE("module files") {
  const Module s1 = module_from_json(read_json_file(data + "/modules/s1.json"), std::nullopt, data + "/modules");
  CHECK(iso(s1, simple_module(a2path(), 0)));
  const Module cx = module_from_json(read_json_file(data + "/modules/dual2_coker_x.json"), std::nullopt, data + "/modules");
  CHECK(iso(cx, simple_module(dual2(), 0)));
  try {
    module_from_json(read_json_file(bad + "/bad_arity.json"), std::nullopt, bad);
    FAIL("wrong action count accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ValidationError);
    CHECK(std::string(e.what()).find("action arity") != std::string::npos);
  }
  const Module m = presented_module(loc3(), sample_presentation(loc3(), 2));
  CHECK(module_from_json(module_to_json(m), std::nullopt) == m);
}

TEST_CASE("report serialisation") {
  const Json one = report_to_json(proj_dim(simple_module(a2path(), 0)));
  CHECK(one["kind"] == "Exact");
  CHECK(one["value"] == 1);
  const Json inf = report_to_json(proj_dim(simple_module(dual2(), 0)));
  CHECK(inf["kind"] == "Infinite");
  CHECK(inf.contains("period"));
  const Json unk = verdict_to_json(Verdict::unknown(3, "window"));
  CHECK(unk["cutoff"] == 3);
  CHECK(canonical(one) == canonical(Json::parse(canonical(one))));
}

TEST_CASE("witness round trip") {
  const SubcategoryOracle gp = oracle(OracleKind::GorensteinProjectives, a2path());
  const ExactSequenceWitness w = thm36_witness(simple_module(a2path(), 0), gp);
  const Json j = witness_to_json(w);
  const ExactSequenceWitness back = witness_from_json(j);
  CHECK(back.modules.size() == w.modules.size());
  CHECK(validate_witness(back).is_true());
  CHECK(canonical(witness_to_json(back)) == canonical(j));
}

TEST_CASE("command line") {
  const std::string a2 = data + "/algebras/a2path.json";
  CHECK(cli({"verify", "--suite", "TH-5.6-3", "--algebra", a2, "--samples", "50", "--seed", "7"}).code == 0);

  const Run dims = cli({"dims", "--module", data + "/modules/s1.json", "--cutoff", "40"});
  REQUIRE(dims.code == 0);
  const Json d = Json::parse(dims.out);
  CHECK(d["modules"][0]["pd"]["kind"] == "Exact");
  CHECK(d["modules"][0]["pd"]["value"] == 1);
  CHECK(d["modules"][0]["gpd"]["kind"] == "Exact");
  CHECK(d["modules"][0]["gpd"]["value"] == 1);

  const Run sc = cli({"scan", "--target", "CONJ-5.18-2", "--algebra", data + "/algebras/loc3.json"});
  CHECK(sc.code == 0);
  CHECK(Json::parse(sc.out)["reports"][0]["verdict"] == "Consistent");

  const Run ext = cli({"ext", "--module", data + "/modules/s1.json", "--module", data + "/modules/s2.json",
                       "--degree", "2"});
  CHECK(ext.code == 0);
  CHECK(Json::parse(ext.out)["ext"][0]["dim"] == 1);

  const Run v = cli({"validate", "--algebra", bad + "/nonassociative.json"});
  CHECK(v.code == 2);
  CHECK(Json::parse(v.out)["error"] == "ValidationError");
  CHECK(cli({"dims", "--module", bad + "/missing.json"}).code == 2);
  CHECK(cli({"verify", "--suite", "NOPE", "--samples", "1"}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);

  const Run c = cli({"construct", "--module", data + "/modules/s1.json", "--construction", "cor45"});
  CHECK(c.code == 0);
  CHECK(Json::parse(c.out)["validation"]["kind"] == "CertifiedTrue");

  const Run text = cli({"dims", "--module", data + "/modules/dual2_simple.json", "--report", "text"});
  CHECK(text.code == 0);
  CHECK(text.out.find("pd: Infinite") != std::string::npos);
}
