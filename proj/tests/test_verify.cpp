#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fdalg/algebra_file.hpp"
#include "fdalg/errors.hpp"
#include "fdalg/verify.hpp"
#include "properties.hpp"

using namespace fdalg;

namespace {

const Json* find_check(const ClaimReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c["check"] == name) return &c;
  return nullptr;
}

}  // namespace

TEST_CASE("F on the Nakayama algebra: n=3 not Frobenius, n=4 Frobenius") {
  SearchOptions opts;
  ClaimInput in;
  in.example = "nakayama";
  in.n = 3;
  ClaimReport r3 = verify_claim("F", in, opts);
  CHECK(r3.verdict == ClaimVerdict::Verified);
  const Json* c3 = find_check(r3, "A(R,n) Frobenius iff m_i = m_pi^(n-2)(i)");
  REQUIRE(c3);
  CHECK((*c3)["observed"]["lhs"] == "no");

  in.n = 4;
  ClaimReport r4 = verify_claim("F", in, opts);
  CHECK(r4.verdict == ClaimVerdict::Verified);
  const Json* c4 = find_check(r4, "A(R,n) Frobenius iff m_i = m_pi^(n-2)(i)");
  REQUIRE(c4);
  CHECK((*c4)["observed"]["lhs"] == "yes");
}

TEST_CASE("A(R,4) for the Nakayama algebra is symmetric") {
  SearchOptions opts;
  Construction c = build_dual_construction(make_example("nakayama"), 4);
  CHECK(c.algebra()->dim() == 36);
  CHECK(is_symmetric(c.algebra(), opts).verdict == Verdict::Yes);
}

TEST_CASE("Tachikawa on the triangular algebra") {
  ClaimInput in;
  in.example = "upper_triangular";
  ClaimReport r = verify_claim("Tachikawa", in, SearchOptions{});
  CHECK(r.verdict == ClaimVerdict::Verified);
  const Json* sym = find_check(r, "A(R,2) symmetric");
  REQUIRE(sym);
  CHECK((*sym)["status"] == "pass");
}

TEST_CASE("unknown claims and bad inputs are input errors") {
  ClaimInput in;
  in.example = "no_such_example";
  CHECK_THROWS_AS(verify_claim("F", in, SearchOptions{}), Error);
  in.example = "nakayama";
  CHECK_THROWS_AS(verify_claim("Z", in, SearchOptions{}), Error);
}

TEST_CASE("default suite covers every claim") {
  auto suite = default_suite();
  for (const auto& id : claim_ids()) {
    bool found = false;
    for (const auto& [claim, in] : suite) found = found || claim == id;
    CHECK_MESSAGE(found, id);
  }
}

TEST_CASE("reports exclude timings unless asked") {
  ClaimInput in;
  in.example = "field";
  ClaimReport r = verify_claim("Tachikawa", in, SearchOptions{});
  CHECK_FALSE(to_json(r, false).contains("elapsed_ms"));
  CHECK(to_json(r, true).contains("elapsed_ms"));
}

TEST_CASE("algebra files round-trip byte for byte") {
  for (const auto& info : example_list()) {
    AlgebraPtr a = make_example(info.id);
    std::string first = algebra_file_json(*a).dump(2);
    AlgebraFile back = parse_algebra_file(Json::parse(first));
    CHECK_MESSAGE(algebra_file_json(*back.algebra).dump(2) == first, info.id);
  }
  Construction c = build_dual_construction(make_example("dual_numbers"), 3);
  std::string graded = algebra_file_json(*c.algebra(), &c.graded).dump();
  AlgebraFile back = parse_algebra_file(Json::parse(graded));
  REQUIRE(back.grading);
  CHECK(back.grading->degrees == c.graded.degrees);
  CHECK(algebra_file_json(*back.algebra, &*back.grading).dump() == graded);
}

TEST_CASE("malformed algebra files are rejected") {
  auto rejects = [](const std::string& text) {
    try {
      parse_algebra_file(Json::parse(text));
    } catch (const Error& e) {
      return e.kind() == ErrorKind::Validation;
    }
    return false;
  };
  const std::string field = R"("field": "Q", "basis": ["1", "x"], "unit": ["1", "0"], )";
  CHECK(rejects(R"({"basis": ["1"], "unit": ["1"], "table": []})"));
  CHECK(rejects(R"({"field": {"Fp": 4}, "basis": ["1"], "unit": ["1"], "table": [[0, 0, [[0, "1"]]]]})"));
  CHECK(rejects("{" + field + R"("table": [[0, 0, [[0, "1"]]], [0, 1, [[1, "1"]]], [1, 0, [[1, "1"]]], [1, 1, [[0, 1]]]]})"));
  CHECK(rejects("{" + field + R"("table": [[0, 0, [[0, "1"]]], [0, 1, [[2, "1"]]]]})"));
  CHECK(rejects("{" + field + R"("table": [[0, 0, [[0, "1"]]], [0, 0, [[0, "1"]]]]})"));
  // x*1 missing: the unit law fails
  CHECK(rejects("{" + field + R"("table": [[0, 0, [[0, "1"]]], [0, 1, [[1, "1"]]]]})"));
  // x has odd degree but x*x = 1 is even
  CHECK(rejects("{" + field +
                R"("table": [[0, 0, [[0, "1"]]], [0, 1, [[1, "1"]]], [1, 0, [[1, "1"]]], [1, 1, [[0, "1"]]]],)" +
                R"("grading": {"modulus": 3, "degrees": [0, 1]}})"));
  CHECK_FALSE(rejects("{" + field +
                      R"("table": [[0, 0, [[0, "1"]]], [0, 1, [[1, "1"]]], [1, 0, [[1, "1"]]], [1, 1, [[0, "1"]]]],)" +
                      R"("grading": {"modulus": 2, "degrees": [0, 1]}})"));
}

TEST_CASE("property: tensor balance") {
  auto r = props::tensor_balance(11, 100);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("property: associator is a bimodule isomorphism") {
  auto r = props::associator(12, 100);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("property: R (x) M = M = M (x) R") {
  auto r = props::unit_constraint(13, 100);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("property: Frobenius form invariants") {
  auto r = props::frobenius_invariants(14, 100);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("property: graded construction") {
  auto r = props::graded_construction(15, 100);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("property: symmetric iff nu inner") {
  auto r = props::symmetric_agreement(16, 100);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}
