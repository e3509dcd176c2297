#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fdalg/linalg.hpp"

namespace fdalg {

struct SearchOptions {
  std::uint64_t seed = 0;
  int mc_trials = 64;
  int coeff_bound = 10;
  /// Grid interpolation is attempted when the span has at most this many
  /// generators and the matrices are at most fallback_max_size square.
  int fallback_max_span = 4;
  int fallback_max_size = 12;
  /// Over F_p, enumerate the whole span when p^k is at most this.
  std::uint64_t exhaustive_limit = 4096;
};

struct SpanSearchResult {
  enum class Kind { Witness, None, ProbablyNone };
  Kind kind = Kind::ProbablyNone;
  Vec coeffs;          // Witness: coefficients of the invertible combination
  Matrix combination;  // Witness: the combination itself
  Scalar det;          // Witness: its determinant (nonzero)
  std::string certificate;
  int trials = 0;

  bool found() const { return kind == Kind::Witness; }
};

const char* search_kind_name(SpanSearchResult::Kind k);

/// Looks for an invertible matrix in the span of same-shape square matrices.
/// Witnesses carry an exact nonzero determinant; None is returned only with
/// an exact proof that every element of the span is singular (common kernel
/// or cokernel, a shrunk subspace, exhaustive enumeration over a small
/// field, or the determinant vanishing on an interpolation grid).
SpanSearchResult find_invertible_in_span(const std::vector<Matrix>& span, const SearchOptions& opts);

/// Deterministic helper shared by all searches: seeded coefficient vectors.
class CoefficientStream {
 public:
  CoefficientStream(std::uint64_t seed, int bound, Field f);
  Vec next(int k);

 private:
  std::uint64_t state_;
  int bound_;
  Field field_;
};

}  // namespace fdalg
