#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fdalg/algebra.hpp"

namespace fdalg {

AlgebraPtr field_algebra(Field f);
/// K[eps]/(eps^2) on {1, eps}.
AlgebraPtr dual_numbers(Field f);
/// K<x,y>/(x^2, y^2, yx - q xy) on {1, x, y, xy}.
AlgebraPtr quantum_plane(const Scalar& q, Field f);
/// Full matrix algebra on matrix units E<i><j>.
AlgebraPtr matrix_algebra(int n, Field f);
/// Upper triangular 2x2 matrices on {e, f, x}.
AlgebraPtr upper_triangular_2(Field f);
/// The same shape with a two-dimensional corner: {e, f, x, y}.
AlgebraPtr generalized_matrix(Field f);
/// Algebra on E_ij, X_ir, Y_ri, F_rt (i,j <= p; r,t <= q), hints E11 and F11.
AlgebraPtr nakayama_pq(int p, int q, Field f);
/// (E11 + F11) R (E11 + F11) for R = nakayama_pq(2, 1).
AlgebraPtr nakayama_basic(Field f);

using ExampleParams = std::map<std::string, std::string>;

struct ExampleInfo {
  std::string id;
  std::string summary;
  ExampleParams defaults;
};

const std::vector<ExampleInfo>& example_list();
/// Builds a catalog algebra; params override the defaults. Throws
/// Error(BadParams) on unknown ids or invalid parameters.
AlgebraPtr make_example(const std::string& id, const ExampleParams& params = {});

/// A catalog instance together with the facts the test suites pin.
struct CatalogEntry {
  std::string name;
  std::string id;
  ExampleParams params;
  AlgebraPtr algebra;
  bool quasi_frobenius = false;
  bool frobenius = false;
  bool symmetric = false;
  /// Order of [R*] in the Picard group; nullopt = no order up to 6.
  std::optional<int> pic_order;
};

std::vector<CatalogEntry> standard_catalog();

}  // namespace fdalg
