#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fdalg/bimodule.hpp"
#include "fdalg/semisimple.hpp"
#include "fdalg/span_search.hpp"

namespace fdalg {

/// G[i][j] = lambda(b_i b_j).
Matrix gram_matrix(const Algebra& a, const Vec& lambda);

/// A Frobenius form with its Nakayama automorphism nu, characterised by
/// lambda(r s) = lambda(s nu(r)).
struct FrobeniusData {
  AlgebraPtr algebra;
  Vec form;
  Matrix gram;
  Matrix gram_inv;
  Matrix nu;
  Matrix nu_inv;

  /// nu^k for any integer k.
  Matrix nu_power(int k) const { return matrix_power(nu, nu_inv, k); }
  /// The element r with r -> lambda equal to the k-th dual basis vector.
  Vec dual_preimage(int k) const { return gram_inv.col(k); }
};

/// Throws Error(Degenerate) when the pairing of lambda is singular.
FrobeniusData frobenius_data(const AlgebraPtr& a, const Vec& lambda);
Matrix nakayama_automorphism(const AlgebraPtr& a, const Vec& lambda);

Verdict is_quasi_frobenius(const AlgebraPtr& a, const SearchOptions& opts, std::string* reason = nullptr);

struct NakayamaPermutation {
  std::vector<int> pi;  // R* (x) S_j = S_{pi[j]}, 0-based
  std::vector<int> multiplicities;
};
/// Requires A quasi-Frobenius (Error NotQuasiFrobenius otherwise).
NakayamaPermutation nakayama_permutation(const AlgebraPtr& a, const SearchOptions& opts,
                                         const SemisimpleData* ss = nullptr);
std::string cycle_notation(const std::vector<int>& pi);

struct FrobeniusResult {
  Verdict verdict = Verdict::Undecided;
  std::optional<FrobeniusData> data;
  std::string reason;
  /// Filled when the decision went through the multiplicity criterion.
  std::optional<NakayamaPermutation> permutation;
  bool by_criterion = false;
};

/// Decides Frobenius-ness by quasi-Frobenius plus m_i = m_{pi(i)}, then
/// searches for a form. When the semisimple data is not available (small
/// characteristic, non-split quotient) the answer rests on the form search.
FrobeniusResult frobenius_form(const AlgebraPtr& a, const SearchOptions& opts);
/// Form search alone over the span of the dual basis pairings.
SpanSearchResult search_frobenius_form(const Algebra& a, const SearchOptions& opts);

struct ElementResult {
  Verdict verdict = Verdict::Undecided;
  Vec element;
  std::string reason;
};

/// Symmetric functionals {lambda : lambda(rs) = lambda(sr)} searched for a
/// nondegenerate one; Yes carries the form.
ElementResult is_symmetric(const AlgebraPtr& a, const SearchOptions& opts);
/// Invertible u with u alpha(r) = r u for all r.
ElementResult is_inner(const AlgebraPtr& a, const Matrix& alpha, const SearchOptions& opts);

/// The explicit isomorphism (R*)^{(x) p} -> 1_R_{nu^p} sending the class of
/// (r_1 -> lambda) (x) ... (x) (r_p -> lambda) to r_1 nu(r_2) ... nu^{p-1}(r_p),
/// verified to be a bijective bimodule map.
LinearMap twisted_presentation(const FrobeniusData& fd, TensorPowers& powers, int p);
/// r_1 nu(r_2) ... nu^{k-1}(r_k) for the word of dual basis indices.
Vec theta_word(const FrobeniusData& fd, const std::vector<int>& word);

/// {c : nu(c) = c and nu^n(r) c = c r for all r}.
Subspace associative_c_space(const FrobeniusData& fd, int n);
/// phi_c on (R*)^{(x) n}: the class of a word maps to theta(word) c.
Matrix phi_from_c(const FrobeniusData& fd, TensorPowers& powers, int n, const Vec& c);

}  // namespace fdalg
