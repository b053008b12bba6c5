#pragma once

// Term-equivalence translations between near semirings and their companion
// structures. Every translation keeps the carrier and its indexing.

#include <optional>
#include <string>
#include <vector>

#include "nslab/algebra.hpp"
#include "nslab/varieties.hpp"

namespace nsl {

struct Mismatch {
  std::string operation;
  Tuple args;
  Element expected = 0;
  Element actual = 0;
};

struct RoundTripReport {
  std::string direction;
  bool pointwise_equal = true;
  /// First mismatch in operation order, then argument order.
  std::optional<Mismatch> mismatch;
  /// Every mismatch; filled only when requested.
  std::vector<Mismatch> all;
};

/// x⊕y = α((α(x)+y)·α(y)), x′ = α(x). Requires a Łukasiewicz near semiring.
BasicAlgebra basic_from_lns(const FiniteNearSemiring& r);

/// x+y = (x′⊕y)′⊕y, x·y = (x′⊕y′)′, α = ′. Requires a basic algebra.
FiniteNearSemiring lns_from_basic(const BasicAlgebra& b);

/// + = ∨, x·y = (x∨y′)∧y, α = ′. Requires an orthomodular lattice.
FiniteNearSemiring ons_from_oml(const OrthoLattice& l);

/// ∨ = +, ′ = α. Requires an orthomodular near semiring.
OrthoLattice oml_from_ons(const FiniteNearSemiring& r);

/// R against R(B(R)).
RoundTripReport roundtrip_via_basic(const FiniteNearSemiring& r, bool verbose = false);
/// B against B(R(B)).
RoundTripReport roundtrip_basic(const BasicAlgebra& b, bool verbose = false);
/// R against R(L(R)).
RoundTripReport roundtrip_via_oml(const FiniteNearSemiring& r, bool verbose = false);
/// L against L(R(L)).
RoundTripReport roundtrip_oml(const OrthoLattice& l, bool verbose = false);

}  // namespace nsl
