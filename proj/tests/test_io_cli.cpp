#include <cstdlib>
#include <functional>

#include "commands.hpp"
#include "support.hpp"

using namespace t;
using hc::Json;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InternalInvariantViolation;
}

Json twisted_problem() {
  return Json::parse(R"({
    "schema": "hcalc/1",
    "algebra": {"field": {"kind": "rationals"}, "div": {"kind": "split"}, "ell": 2,
                "phi": [["1", "0"], ["0", "-1"]]},
    "elements": {"phi": [["1", "0"], ["0", "-1"]], "one": [["1", "0"], ["0", "1"]], "zero": [["0", "0"], ["0", "0"]]},
    "forms": {"phi": {"diag": [[["1", "0"], ["0", "-1"]]]},
              "hyp": {"diag": [[["1", "0"], ["0", "-1"]], [["-1", "0"], ["0", "1"]]]}},
    "tasks": []
  })");
}

}  // namespace

TEST_CASE("json round trips") {
  for (const char* s : {"0", "3", "-7/4", "1/2+3*sqrt(2)", "-1*sqrt(2)"}) {
    const FieldElem x = fe(s);
    CHECK(elem_from_json(to_json(x)) == x);
  }
  CHECK(to_json(FieldElem(5)) == Json("5"));
  CHECK(elem_from_json(Json(4)) == FieldElem(4));

  for (const auto& z : zoo()) {
    const auto& A = z.algebra;
    CHECK(algebra_from_json(to_json(A)) == A);
    Sampler rng(81);
    const HermitianForm h = rng.form(A, 2);
    CHECK(form_from_json(A, to_json(h)) == h);
    const MatD x = rng.matrix(A.division(), A.ell(), A.ell());
    CHECK(matrix_from_json(A.division(), to_json(x)) == x);
    for (const auto& K : enumerate_cones(A)) CHECK(cone_from_json(A, to_json(K)) == K);
  }
  CHECK(field_from_json(to_json(Q2())) == Q2());
  const auto A = mt(split(), 2);
  CHECK(cone_from_json(A, Json("-P0")) == PositiveCone{A, P0(), -1});
  CHECK(cone_from_json(A, Json{{"P", 0}, {"eps", 1}}) == PositiveCone{A, P0(), 1});
  CHECK(ordering_from_json(Q2(), Json("P1")) == P1());
  CHECK(ordering_from_json(Q2(), Json(0)) == P0());
}

TEST_CASE("json errors") {
  CHECK(code_of([] { (void)field_from_json(Json{{"kind", "cubic"}}); }) == ErrorCode::ParseError);
  CHECK(code_of([] { (void)elem_from_json(Json("two")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { (void)ordering_from_json(Q(), Json("P1")); }) == ErrorCode::InvalidOrdering);
  CHECK(code_of([] { (void)cone_from_json(mt(split(), 1), Json("*P0")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { (void)problem_from_json(Json::parse(R"({"schema": "other/2"})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { (void)problem_from_json(Json::parse("[1, 2]")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { (void)load_problem("/nonexistent/problem.json"); }) == ErrorCode::ParseError);
  Json bad = twisted_problem();
  bad["algebra"]["phi"] = Json::parse(R"([["0", "1"], ["2", "0"]])");
  CHECK(code_of([&] { (void)problem_from_json(bad); }) == ErrorCode::InvalidDescriptor);
  Json nh = twisted_problem();
  nh["forms"]["bad"] = Json::parse(R"({"rank": 1, "gram": [[[["1", "1"], ["0", "1"]]]]})");
  CHECK(code_of([&] { (void)problem_from_json(nh); }) == ErrorCode::NotHermitian);
}

TEST_CASE("task execution") {
  const ProblemFile p = problem_from_json(twisted_problem());
  const cli::Options o;
  auto exec = [&](const std::string& cmd, Json args) { return cli::execute(p, {cmd, std::move(args)}, o); };

  const auto sign = exec("sign", Json{{"form", "phi"}});
  CHECK(sign.result == Json{{"P0", 2}});
  CHECK_FALSE(sign.verdict.has_value());
  CHECK(exec("sign", Json{{"form", "hyp"}}).result == Json{{"P0", 0}});
  CHECK(exec("sign", Json{{"form", "phi"}, {"cone", "-P0"}}).result == Json{{"-P0", -2}});

  const auto m1 = exec("member", Json{{"element", "phi"}, {"cone", "+P0"}});
  CHECK(m1.verdict == std::optional<bool>(true));
  CHECK(exec("member", Json{{"element", "one"}, {"cone", "+P0"}}).verdict == std::optional<bool>(false));
  CHECK(exec("maximal-on", Json{{"element", "phi"}}).verdict == std::optional<bool>(true));
  CHECK(exec("cones", Json::object()).result.size() == 2);
  CHECK(exec("classify", Json::object()).result.size() == 1);
  CHECK(exec("posinv", Json{{"ordering", "P0"}}).result["b"] == to_json(M({{1, 0}, {0, -1}})));
  CHECK(exec("presylvester", Json{{"form", "phi"}, {"ordering", "P0"}}).result["sign"] == 2);
  CHECK(exec("hsigma", Json{{"elements", {"phi"}}}).result.size() == 1);
  CHECK(exec("represents", Json{{"form", "phi"}, {"element", "phi"}}).verdict == std::optional<bool>(true));
  CHECK(exec("collapse", Json{{"form", "phi"}}).result.contains("form"));
  CHECK(exec("diag", Json{{"form", "phi"}, {"pivot", "last"}}).result["rank"] == 2);

  CHECK(code_of([&] { (void)exec("frobnicate", Json::object()); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { (void)exec("sign", Json{{"form", "missing"}}); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { (void)exec("diag", Json{{"form", "phi"}, {"pivot", "middle"}}); }) == ErrorCode::ParseError);
  CHECK(code_of([&] { (void)exec("presylvester", Json{{"form", "hyp"}}); }) == ErrorCode::ParseError);
}

TEST_CASE("run reports and exit codes") {
  Json j = twisted_problem();
  j["tasks"] = Json::parse(R"([{"command": "sign", "args": {"form": "phi"}}])");
  CHECK(cli::run(problem_from_json(j), {}).exit_code == 0);
  j["tasks"].push_back(Json::parse(R"({"command": "member", "args": {"element": "one", "cone": "+P0"}})"));
  CHECK(cli::run(problem_from_json(j), {}).exit_code == 1);
  j["tasks"].push_back(Json::parse(R"({"command": "sign", "args": {"form": "nope"}})"));
  const auto r = cli::run(problem_from_json(j), {});
  CHECK(r.exit_code == 2);
  CHECK(r.output.size() == 3);
  CHECK(r.output[2]["error"] == "ParseError");
  CHECK(r.output[0]["result"] == Json{{"P0", 2}});

  j["tasks"] = Json::parse(R"([{"command": "represents", "args": {"form": "phi", "element": "phi"}}])");
  const auto a = cli::run(problem_from_json(j), {7, 16});
  const auto b = cli::run(problem_from_json(j), {7, 16});
  CHECK(a.output == b.output);
}

TEST_CASE("table rendering") {
  CHECK(cli::as_table(Json{{"P0", 2}, {"P1", -1}}) == "P0  2\nP1  -1\n");
  CHECK(cli::as_table(Json{{"entries", {"1", "-2"}}}) == "entries  [\"1\",\"-2\"]\n");
  CHECK(cli::as_table(Json("x")) == "x\n");
  const std::string nested = cli::as_table(Json::parse(R"([{"a": 1}, {"a": 2}])"));
  CHECK(nested == "-\n  a  1\n-\n  a  2\n");
}

TEST_CASE("budget from the environment") {
  ::setenv("HC_BUDGET", "12", 1);
  CHECK(cli::default_budget() == 12);
  ::setenv("HC_BUDGET", "-3", 1);
  CHECK(cli::default_budget() == 64);
  ::setenv("HC_BUDGET", "abc", 1);
  CHECK(cli::default_budget() == 64);
  ::unsetenv("HC_BUDGET");
  CHECK(cli::default_budget() == 64);
}
