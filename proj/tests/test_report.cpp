#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "wiegold/covering.hpp"
#include "wiegold/errors.hpp"
#include "wiegold/report.hpp"

using namespace wiegold;
using nlohmann::json;

namespace {

RunOptions json_opts() {
  RunOptions o;
  o.format = Format::kJson;
  return o;
}

bool contains(const std::string& s, const std::string& part) {
  return s.find(part) != std::string::npos;
}

}  // namespace

TEST_CASE("info") {
  const Report r = report_info(fixture("z2"), {});
  CHECK(r.status == Status::kOk);
  CHECK(contains(r.body, "size: 2"));
  CHECK(contains(r.body, "operations: +/2 -/1 0/0"));
  const json j = json::parse(report_info(fixture("lattice2"), json_opts()).body);
  CHECK(j["size"] == 2);
  CHECK(j["operations"].size() == 2);
  CHECK(j["idempotent"] == true);
}

TEST_CASE("classify") {
  const Report lat = report_classify(fixture("lattice2"), 3, {});
  CHECK(lat.status == Status::kOk);
  CHECK(contains(lat.body, "classification: Logarithmic"));
  CHECK(contains(lat.body, "witness: majority"));
  const Report z2 = report_classify(fixture("z2"), 3, {});
  CHECK(contains(z2.body, "classification: Linear"));
  CHECK(contains(z2.body, "witness: maltsev"));
  const Report semi = report_classify(fixture("semilattice2"), 3, json_opts());
  CHECK(semi.status == Status::kNoWitness);
  CHECK(json::parse(semi.body)["classification"] == "NoCubeWitness");
}

TEST_CASE("growth table") {
  const json j = json::parse(report_growth(fixture("z2"), 4, 3, json_opts()).body);
  REQUIRE(j["points"].size() == 4);
  for (int i = 0; i < 4; ++i) {
    CHECK(j["points"][i]["n"] == i + 1);
    CHECK(j["points"][i]["d"] == i + 1);
    CHECK(j["points"][i]["proved"] == true);
  }
  CHECK(j["fit"]["better"] == "linear");
}

TEST_CASE("covering") {
  const Report r = report_covering(2, 2, 8, std::nullopt, json_opts());
  CHECK(r.status == Status::kOk);
  const json j = json::parse(r.body);
  CHECK(j["g"] == row_bound(2, 2, 8));
  CHECK(j["verified"] == true);
  std::string text = std::to_string(j["g"].get<int>()) + " 8 2\n";
  for (const auto& row : j["matrix"]) {
    for (std::size_t c = 0; c < row.size(); ++c)
      text += (c ? " " : "") + std::to_string(row[c].get<int>());
    text += "\n";
  }
  CHECK(verify_k_surjective(parse_matrix(text), 2).surjective);

  RunOptions random;
  random.method = CoveringMethod::kRandom;
  random.seed = 3;
  CHECK(report_covering(2, 2, 8, std::nullopt, random).body ==
        report_covering(2, 2, 8, std::nullopt, random).body);
  random.max_attempts = 1;
  CHECK_THROWS_AS(report_covering(2, 2, 8, 4, random), BudgetExceeded);
}

TEST_CASE("check-term") {
  const auto z2 = fixture("z2");
  const Report ok = report_check_term(z2, "(+ x1 (+ x2 x3))", "maltsev", {});
  CHECK(ok.status == Status::kOk);
  CHECK(contains(ok.body, "result: pass"));
  const Report bad = report_check_term(z2, "x1", "maltsev", {});
  CHECK(bad.status == Status::kNoWitness);
  CHECK(contains(bad.body, "result: fail"));
  const auto lat = fixture("lattice2");
  CHECK(report_check_term(lat, "(∨ (∨ (∧ x1 x2) (∧ x2 x3)) (∧ x1 x3))",
                          fixture_path("frames/majority.frame"), {})
            .status == Status::kOk);
  CHECK_THROWS_AS(report_check_term(z2, "(+ x1", "maltsev", {}), ParseError);
}

TEST_CASE("frame names") {
  CHECK(resolve_frame("maltsev").k() == 2);
  CHECK(resolve_frame("majority").k() == 3);
  CHECK(resolve_frame("nu4").name() == "near-unanimity-4");
  CHECK(resolve_frame("edge3").name() == "edge-3");
  CHECK(resolve_frame("cube-2").name() == "cube-2");
}

TEST_CASE("certify, maximal and dichotomy") {
  const json c = json::parse(
      report_certify(fixture("lattice2"), 8, 3, json_opts()).body);
  CHECK(c["verified"] == true);
  CHECK(c["sizes"]["G_eta"] == 0);
  CHECK(report_certify(fixture("semilattice2"), 3, 3, {}).status ==
        Status::kNoWitness);

  const json m = json::parse(report_maximal(fixture("z2"), 3, json_opts()).body);
  CHECK(m["maximal"].size() == 7);

  const Report d = report_verify_dichotomy(fixture("lattice2"), 3, std::nullopt,
                                           3, {});
  CHECK(d.status == Status::kOk);
  CHECK(contains(d.body, "result: pass"));
}

TEST_CASE("status mapping") {
  CHECK(status_of(ParseError("x")) == Status::kParse);
  CHECK(status_of(BudgetExceeded("x")) == Status::kBudget);
  CHECK(status_of(VerificationFailure("x")) == Status::kVerification);
  CHECK(status_of(ContractError("x")) == Status::kOther);
}
