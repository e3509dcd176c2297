#pragma once

#include <vector>

#include "fdalg/algebra.hpp"
#include "fdalg/bimodule.hpp"

namespace fdalg {

/// Wedderburn data of a finite-dimensional algebra whose semisimple
/// quotient splits over the base field.
struct SemisimpleData {
  Subspace radical;
  Quotient quotient;  // A / J(A)
  /// Primitive central idempotents of A / J(A), one per block.
  std::vector<Vec> central_idempotents;
  /// Simple left A-modules S_i = (A/J) e_i, in block order.
  std::vector<Module> simples;
  std::vector<int> multiplicities;
  /// Orthogonal primitive idempotents of A with e_i lifting a generator of S_i.
  std::vector<Vec> primitive_idempotents;

  int block_count() const { return static_cast<int>(simples.size()); }
};

/// Blocks are ordered by the supplied idempotents (or the algebra's hints)
/// when these meet every block; otherwise by discovery order. Throws NotSplit
/// or IdempotentsRequired as described in the README.
SemisimpleData semisimple_data(const AlgebraPtr& a, const std::vector<Vec>& supplied = {});

/// Newton iteration e <- 3e^2 - 2e^3 until e is idempotent.
Vec lift_idempotent(const Algebra& a, Vec e);

}  // namespace fdalg
