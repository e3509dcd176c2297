#pragma once

#include <optional>
#include <string>

#include "fdalg/graded.hpp"
#include "json.hpp"

namespace fdalg {

/// An algebra read from (or written to) the JSON algebra-file format
/// described in docs/algebra_file.md.
struct AlgebraFile {
  AlgebraPtr algebra;
  std::optional<GradedAlgebra> grading;
};

/// Throws Error(Validation) on malformed input, including a failing
/// associativity or homogeneity check.
AlgebraFile parse_algebra_file(const nlohmann::ordered_json& j);
AlgebraFile read_algebra_file(const std::string& path);

nlohmann::ordered_json algebra_file_json(const Algebra& a, const GradedAlgebra* grading = nullptr);

}  // namespace fdalg
