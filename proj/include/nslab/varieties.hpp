#pragma once

// Checkers for the varieties built on top of near semirings: Łukasiewicz and
// orthomodular near semirings, basic algebras (MV-algebras among them) and
// orthomodular lattices. Plus the catalog of named identities used by search.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nslab/algebra.hpp"

namespace nsl {

/// ⟨A, ⊕, ′, 0⟩ with one = 0′.
struct BasicAlgebra {
  std::string name;
  std::size_t n = 0;
  BinaryTable oplus;
  UnaryTable neg;
  Element zero = 0;
  std::vector<std::string> labels;
  std::string comment;

  Element one() const noexcept { return neg[zero]; }
  std::string label(Element x) const;
};

void validate_structure(const BasicAlgebra& b);

/// ⟨L, ∨, ′, 0, 1⟩; meet is derived as x∧y = (x′∨y′)′.
struct OrthoLattice {
  std::string name;
  std::size_t n = 0;
  BinaryTable join;
  UnaryTable ortho;
  Element zero = 0;
  Element one = 0;
  std::vector<std::string> labels;
  std::string comment;

  Element meet(Element x, Element y) const noexcept { return ortho[join(ortho[x], ortho[y])]; }
  BinaryTable meet_table() const;
  /// x ≤ y iff x∨y = y.
  bool leq(Element x, Element y) const noexcept { return join(x, y) == y; }
  std::string label(Element x) const;
};

void validate_structure(const OrthoLattice& l);

// --- Łukasiewicz near semirings -------------------------------------------

/// Identity α(x·α(y))·α(y) = α(y·α(x))·α(x) over all pairs. Tags
/// "lukasiewicz-semiring" when · is also associative and left distributive.
/// Throws PreconditionError unless the involutive profile passes.
CheckReport check_lukasiewicz(const FiniteNearSemiring& a);

/// Involutive and satisfies the Łukasiewicz identity; never throws.
bool is_lukasiewicz(const FiniteNearSemiring& a);

/// Consequences of the Łukasiewicz identity, each checked exhaustively.
PropertyReport lukasiewicz_suite(const FiniteNearSemiring& a);

struct SectionalInvolution {
  Element a = 0;
  /// [a, 1] in index order.
  std::vector<Element> carrier;
  /// image[i] is the image of carrier[i].
  std::vector<Element> image;
  bool well_defined = false;
  bool antitone = false;
  bool involutive = false;

  bool ok() const noexcept { return well_defined && antitone && involutive; }
};

/// x ↦ α(x·α(a)) on [a, 1].
SectionalInvolution sectional_involution(const FiniteNearSemiring& a, Element at);

PropertyReport sectional_suite(const FiniteNearSemiring& a);

// --- orthomodular near semirings -------------------------------------------

/// x = x·(x+y) together with its consequences. Requires a Łukasiewicz algebra.
CheckReport check_orthomodular_ns(const FiniteNearSemiring& a);

bool is_orthomodular_ns(const FiniteNearSemiring& a);

// --- basic algebras ----------------------------------------------------------

/// Axioms BA1 to BA4, the induced order x′⊕y = 1 and its join. Tags "mv"
/// when ⊕ is associative.
CheckReport check_basic_algebra(const BasicAlgebra& b);

// --- orthomodular lattices -------------------------------------------------

CheckReport check_oml(const OrthoLattice& l);

/// a C b iff a = (a∧b)∨(a∧b′).
Relation commutation(const OrthoLattice& l);

/// Properties of the commutation relation, including distributivity on
/// triples where one element commutes with the other two.
PropertyReport oml_commutes_suite(const OrthoLattice& l);

// --- named identities --------------------------------------------------------

struct CatalogIdentity {
  std::string name;
  std::string text;
  /// Quantified over x, y, ... with e held fixed: "holds at e" rather than "holds".
  bool parametric = false;
};

const std::vector<CatalogIdentity>& identity_catalog();
const CatalogIdentity* find_identity(std::string_view name);

/// Smallest violating instance of the identity, with e fixed for parametric identities.
/// Requires an involution.
std::optional<Failure> identity_failure(const FiniteNearSemiring& a, const CatalogIdentity& id,
                                        std::optional<Element> e = std::nullopt);

}  // namespace nsl
