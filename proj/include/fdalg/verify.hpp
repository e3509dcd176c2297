#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fdalg/catalog.hpp"
#include "fdalg/span_search.hpp"
#include "json.hpp"

namespace fdalg {

using Json = nlohmann::ordered_json;

enum class ClaimVerdict { Verified, Violated, Undecided };
const char* claim_verdict_name(ClaimVerdict v);

struct ClaimInput {
  std::string example;
  ExampleParams params;
  int n = 2;
  /// Element of R defining phi_c; empty means the zero morphism (or, where a
  /// claim needs an isomorphism, one found by search).
  std::string c;
  /// Frobenius form as an element expression read as coordinates on the
  /// dual basis ("xy" is the functional (xy)*); empty means search for one.
  std::string form;
};

/// Individual checks carry a status of "pass", "fail" or "undecided" and the
/// observed values, so a violated claim lists its counterexample.
struct ClaimReport {
  std::string claim;
  ClaimInput input;
  ClaimVerdict verdict = ClaimVerdict::Undecided;
  Json checks = Json::array();
  double elapsed_ms = 0;
};

Json to_json(const ClaimInput& in);
Json to_json(const ClaimReport& r, bool timings);

/// Claim identifiers accepted by verify_claim.
const std::vector<std::string>& claim_ids();
ClaimReport verify_claim(const std::string& claim, const ClaimInput& in, const SearchOptions& opts);

/// The fixed list of (claim, input) pairs run by "verify all".
std::vector<std::pair<std::string, ClaimInput>> default_suite();
/// Default inputs for one claim (its entries in default_suite).
std::vector<ClaimInput> default_inputs(const std::string& claim);

}  // namespace fdalg
