#pragma once

// Central elements of integral involutive near semirings, the Boolean algebra
// they form, interval algebras [0,e] and the decomposition into directly
// indecomposable factors.

#include <optional>
#include <string>
#include <vector>

#include "nslab/algebra.hpp"

namespace nsl {

/// q(x,y,z) = (x·y) + (α(x)·z).
Element church_q(const FiniteNearSemiring& a, Element x, Element y, Element z);

/// q(1,x,y) = x and q(0,x,y) = y.
CheckReport check_church(const FiniteNearSemiring& a);

enum class CentralMethod { Equational, Congruence, Full };

std::string_view method_name(CentralMethod m);
std::optional<CentralMethod> parse_method(std::string_view s);

/// Decides centrality of e by one method. Requires the involutive-integral profile.
bool is_central(const FiniteNearSemiring& a, Element e, CentralMethod m);

struct CenterReport {
  /// Centrals found by the first method requested.
  std::vector<Element> centrals;
  std::vector<std::pair<CentralMethod, std::vector<Element>>> by_method;
  bool methods_agree = true;
  /// Boolean-algebra check on the centrals, when requested.
  std::optional<CheckReport> boolean_check;
  /// Minimal nonzero centrals.
  std::vector<Element> atoms;
};

CenterReport central_elements(const FiniteNearSemiring& a, const std::vector<CentralMethod>& methods);

/// Consequences of identities (1) and (2) at a fixed e; e must be central.
PropertyReport central_lemma_suite(const FiniteNearSemiring& a, Element e);

/// Centrals (equational method) with the Boolean-algebra check and atoms.
CenterReport center_algebra(const FiniteNearSemiring& a);

struct IntervalAlgebra {
  Element e = 0;
  /// {x : x ≤ e} in index order; factor element i is carrier[i].
  std::vector<Element> carrier;
  /// ⟨[0,e], +, ·, x ↦ e·α(x), 0, e⟩ re-indexed to 0..k-1.
  FiniteNearSemiring algebra;
  /// {x : x ≤ e} equals {e·b : b ∈ R}.
  bool carrier_agrees = false;
  /// b ↦ e·b is a surjective homomorphism onto the interval algebra.
  bool projection_homomorphism = false;

  /// Factor index of a carrier element.
  std::optional<Element> index_of(Element x) const;
};

IntervalAlgebra interval_algebra(const FiniteNearSemiring& a, Element e);

struct DecompositionResult {
  /// Center atoms in ascending index order; factor i is [0, atoms[i]].
  std::vector<Element> atoms;
  std::vector<FiniteNearSemiring> factors;
  /// iso[b] holds the factor indices of (e₁·b, …, e_k·b).
  std::vector<Tuple> iso;
  std::vector<bool> indecomposable;
  /// Bijectivity, homomorphism and the structural cross-checks.
  PropertyReport checks;

  bool ok() const { return checks.passed(); }
};

DecompositionResult decompose(const FiniteNearSemiring& a);

}  // namespace nsl
