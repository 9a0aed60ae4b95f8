#include "cli.hpp"
#include "omegalab/json_io.hpp"

#include <doctest.h>

#include <sstream>

using namespace omegalab;
using namespace omegalab::cli;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(OMEGALAB_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("exit codes per verdict") {
  CHECK(exit_code(Verdict::SmoothToric) == kExitSmooth);
  CHECK(exit_code(Verdict::CriterionFails) == kExitCriterionFails);
  CHECK(exit_code(Verdict::NotApplicable) == kExitNotApplicable);
  CHECK(exit_code(Verdict::Undecided) == kExitUndecided);
}

TEST_CASE("variable inference sorts naturally") {
  CHECK(infer_variables("x10*x2 + x1^3") == std::vector<std::string>{"x1", "x2", "x10"});
  CHECK(infer_variables("z*w + y*x") == std::vector<std::string>{"w", "x", "y", "z"});
  CHECK(infer_variables("3/4").empty());
}

TEST_CASE("certify from files and inline text") {
  const auto fails = run({"certify", "--vars", "w,x,y,z", "--file", data("frustum_fails.poly")});
  CHECK(fails.code == kExitCriterionFails);
  CHECK(fails.out.find("verdict: criterion-fails") != std::string::npos);
  CHECK(fails.out.find("(1,0,0,1) (1,0,1,0) (1,1,0,0)") != std::string::npos);

  const auto smooth = run({"certify", "--file", data("frustum_smooth.poly")});
  CHECK(smooth.code == kExitSmooth);

  CHECK(run({"certify", "x1*x2 + x1*x3 + x2*x3"}).code == kExitSmooth);
  CHECK(run({"certify", "x1*x2^2 + x3^3"}).code == kExitNotApplicable);
}

TEST_CASE("usage errors") {
  CHECK(run({"certify"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"certify", "x1 +* x2"}).code == kExitUsage);
  const auto bad = run({"certify", "x1*x2 + y", "--vars", "x1,x2"});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("parse error") != std::string::npos);
  CHECK(run({"certify", "x1 + x2^2"}).code == kExitUsage);
  CHECK(run({"certify", "x1*x2", "--file", data("frustum_smooth.poly")}).code == kExitUsage);
  CHECK(run({"certify", "--file", data("missing.poly")}).code == kExitUsage);
  CHECK(run({"certify", "x1*x2", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("text and JSON verdicts agree") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"certify", "--file", data("frustum_fails.poly")},
           {"certify", "--file", data("frustum_smooth.poly")},
           {"certify", "x1^2*x2+x1*x2^2+x1^2*x3+x1*x2*x3+x2^2*x3"},
           {"certify", "x1*x2^2 + x3^3"}}) {
    const auto text = run(args);
    auto jargs = args;
    jargs.insert(jargs.end(), {"--format", "json"});
    const auto js = run(jargs);
    CHECK(text.code == js.code);
    const auto j = json::parse(js.out);
    CHECK(j.at("schema") == kSchema);
    CHECK(text.out.find("verdict: " + j.at("verdict").get<std::string>()) != std::string::npos);
  }
}

TEST_CASE("certify with the oracle cross-check") {
  const auto r = run({"certify", "--file", data("frustum_fails.poly"), "--oracle", "--format", "json", "--jobs", "2"});
  CHECK(r.code == kExitCriterionFails);
  const auto j = json::parse(r.out);
  for (const auto& k : j.at("per_k"))
    if (k.contains("oracle_disjoint")) CHECK(k.at("oracle_disjoint") == k.at("disjoint"));
  CHECK(j.at("per_k")[0].contains("oracle_disjoint"));
}

TEST_CASE("analyze") {
  const auto r = run({"analyze", "x1*x2 + x1*x3 + x2*x3", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("mconvex") == true);
  CHECK(j.at("schema") == kSchema);
  CHECK(run({"analyze", "x1*x2 + x1*x3 + x2*x3"}).code == 0);
  CHECK(run({"analyze", "7", "--vars", "x1"}).code == kExitUsage);
  CHECK(run({"analyze", "x1^2 + x2"}).code == kExitUsage);
}

TEST_CASE("mconvex, lorentzian and rank") {
  CHECK(run({"mconvex", "x1*x2 + x1*x3 + x2*x3"}).code == 0);
  CHECK(run({"mconvex", "x1*x2 + x3^2"}).code == 1);
  CHECK(run({"lorentzian", "x1*x2 + x1*x3 + x2*x3"}).code == 0);
  CHECK(run({"lorentzian", "x1^2 + x1*x2 + x2^2"}).code == 1);
  const auto rk = run({"rank", "x1*x2 + x1*x3 + x2*x3", "--e", "1,1,1", "--v", "1,0,0"});
  CHECK(rk.code == 0);
  CHECK(rk.out.find('1') != std::string::npos);
  CHECK(run({"rank", "x1*x2 + x1*x3 + x2*x3", "--e", "1,1,1", "--format", "json"}).code == 0);
  CHECK(run({"rank", "x1*x2 + x1*x3 + x2*x3", "--e", "1,1"}).code == kExitUsage);
}

TEST_CASE("probe-smoothable") {
  const auto r = run({"probe-smoothable", "x1*x2*x3", "--trials", "3", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("trials") == 3);
}

TEST_CASE("polytope output round trips through JSON") {
  const auto r = run({"polytope", "--matroid", "12,13,14,23,24,34", "--n", "4", "--function", "bar", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j.at("schema") == kSchema);
  const auto p = polytope_from_json(j);
  CHECK(p.vertices().size() == 12);
  for (const char* key : {"schema", "ambient_dim", "dim", "vertices", "inequalities", "equations"})
    CHECK(to_json(p).at(key) == j.at(key));
  CHECK(j.at("smooth") == true);
  CHECK(is_smooth(p).holds);

  const auto oct = json::parse(
      run({"polytope", "--matroid", "12,13,14,23,24,34", "--n", "4", "--truncate", "0", "--format", "json"}).out);
  CHECK(polytope_from_json(oct).vertices().size() == 6);

  const auto np = run({"polytope", "--table", "0,2,1,1"});
  CHECK(np.code == kExitNotPolymatroid);
  CHECK(np.err.find("not a polymatroid") != std::string::npos);
  CHECK(run({"polytope", "--table", "0,1,1"}).code == kExitUsage);

  const auto from_poly = run({"polytope", "x1*x2 + x1*x3 + x2*x3", "--format", "json"});
  REQUIRE(from_poly.code == 0);
  CHECK(polytope_from_json(json::parse(from_poly.out)).vertices().size() == 3);
}
