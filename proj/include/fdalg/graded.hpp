#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fdalg/bimodule.hpp"
#include "fdalg/frobenius.hpp"

namespace fdalg {

/// Z_n-graded algebra with a homogeneous basis.
struct GradedAlgebra {
  AlgebraPtr algebra;
  int modulus = 1;
  std::vector<int> degrees;  // residue of each basis element

  std::vector<int> component(int g) const;
};

/// Validates that the unit has degree 0 and that products of basis elements
/// are homogeneous of the summed degree; throws Error(Validation) otherwise.
GradedAlgebra make_graded(AlgebraPtr a, int modulus, std::vector<int> degrees);

/// A(R, M, phi) with its tensor powers kept for later use. The basis is R,
/// then the section words of M^{(x) j} for j = 1 .. n-1.
struct Construction {
  AlgebraPtr base;
  int n = 0;
  Matrix phi;  // dim R x dim M^{(x) n}
  std::shared_ptr<TensorPowers> powers;
  GradedAlgebra graded;
  std::vector<int> offsets;  // first basis index of each degree

  const AlgebraPtr& algebra() const { return graded.algebra; }
  int component_dim(int j) const { return offsets[j + 1] - offsets[j]; }
  Vec embed(int j, const Vec& coords) const;
  Vec component(const Vec& a, int j) const;
};

struct AssociativityResult {
  Verdict verdict = Verdict::Yes;
  std::vector<int> tuple;  // first failing tuple of M-basis indices
  std::string reason;
};

/// phi(m_1 .. m_n) m_{n+1} = m_1 phi(m_2 .. m_{n+1}). Checked on the
/// section words of M^{(x) n+1}, and on every basis tuple when there are at
/// most 4096 of them. Throws NotBimoduleMorphism when phi is not a bimodule map.
AssociativityResult check_associative(TensorPowers& powers, int n, const Matrix& phi);

/// Throws NotAssociativeMorphism when check_associative fails.
Construction build_A(std::shared_ptr<TensorPowers> powers, int n, const Matrix& phi);
Construction build_A(const Module& m, int n, const Matrix& phi);
/// A(R, R*, phi) and the zero-morphism special case A(R, n).
Construction build_dual_construction(const AlgebraPtr& r, int n, const Matrix& phi);
Construction build_dual_construction(const AlgebraPtr& r, int n);

struct GradedDiagnostics {
  std::vector<bool> faithful;  // per sigma
  bool strongly_graded = false;
  std::vector<Verdict> graded_frobenius;  // per sigma
  /// Frobenius form supported on A_sigma when graded_frobenius is Yes.
  std::vector<std::optional<Vec>> forms;
};

bool is_faithful(const GradedAlgebra& g, int sigma);
bool is_strongly_graded(const GradedAlgebra& g);
GradedDiagnostics graded_diagnostics(const GradedAlgebra& g, const SearchOptions& opts);

/// The form Lambda and automorphism N on A(R, R*, phi) given by the closed
/// formulas, together with the Nakayama automorphism computed from Lambda.
struct TheoremDData {
  Vec lambda;
  Matrix nakayama;  // closed formula
  Matrix computed;  // nakayama_automorphism(A, Lambda)
  bool matches = false;
};
TheoremDData theorem_D_data(const FrobeniusData& fd, Construction& c);

struct OreResult {
  Verdict verdict = Verdict::No;
  AlgebraPtr ore;  // R[X, nu] / (X^n - c) on the basis b_i X^j
  Matrix iso;      // A(R, R*, phi_c) -> ore
  std::string reason;
};
/// Throws InvalidC when c is outside associative_c_space(fd, n).
OreResult ore_crosscheck(const FrobeniusData& fd, int n, const Vec& c);
AlgebraPtr ore_quotient(const FrobeniusData& fd, int n, const Vec& c);

struct CriterionResult {
  Verdict verdict = Verdict::Undecided;
  std::vector<Vec> r;
  std::vector<Vec> s;
  bool conditions_hold = false;  // (I), (II), (III) re-checked on r, s
  std::string reason;
};
/// Conditions (I), (II) and the system UV = 1 on candidate r_j, s_j.
bool criterion_conditions(const FrobeniusData& fd, int n, const Vec& c, const std::vector<Vec>& r,
                          const std::vector<Vec>& s, std::string* failure = nullptr);
/// Symmetry of A(R, R*, phi_c) through inner-ness of N; on Yes the witness is
/// split into the r_j and s_j of the normal form.
CriterionResult symmetric_criterion(const FrobeniusData& fd, int n, const Vec& c, const SearchOptions& opts);

}  // namespace fdalg
