#pragma once

// Finite near semirings ⟨R, +, ·, 0, 1⟩ with an optional involution α, the
// axiom profiles they are checked against, induced orders and the dual algebra.
//
// Algebras hold their tables verbatim: only structural validity (shapes,
// ranges, α a permutation) is enforced at construction. Whether the tables
// satisfy any axiom is reported by check_axioms, never assumed.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nslab/clause.hpp"
#include "nslab/report.hpp"
#include "nslab/tables.hpp"
#include "nslab/term.hpp"

namespace nsl {

struct FiniteNearSemiring {
  std::string name;
  std::size_t n = 0;
  BinaryTable add;
  BinaryTable mul;
  std::optional<UnaryTable> inv;
  Element zero = 0;
  Element one = 0;
  /// Display names, one per element. Empty means decimal indices.
  std::vector<std::string> labels;
  /// Free-form provenance line carried through documents.
  std::string comment;

  Element plus(Element x, Element y) const noexcept { return add(x, y); }
  Element times(Element x, Element y) const noexcept { return mul(x, y); }
  Element alpha(Element x) const noexcept { return (*inv)[x]; }
  bool has_involution() const noexcept { return inv.has_value(); }
  /// x ≤ y iff x + y = y.
  bool leq(Element x, Element y) const noexcept { return add(x, y) == y; }

  std::string label(Element x) const;

  /// Same carrier size, tables and constants; names and labels are ignored.
  bool same_tables(const FiniteNearSemiring& o) const;
};

/// Throws StructureError / RangeError when tables are unusable.
void validate_structure(const FiniteNearSemiring& a);

/// Builds and validates an algebra from row-major tables.
FiniteNearSemiring make_algebra(std::string name, std::size_t n, std::vector<Element> add, std::vector<Element> mul,
                                std::optional<UnaryTable> inv, Element zero, Element one,
                                std::vector<std::string> labels = {});

/// Element by label (or decimal index when the label is absent).
Element element_named(const FiniteNearSemiring& a, std::string_view name);

enum class AxiomProfile {
  NearSemiring,
  IdempotentAdd,
  CommutativeMul,
  AssociativeMul,
  Integral,
  Semiring,
  Involutive,
  InvolutiveIntegral,
};

std::string_view profile_name(AxiomProfile p);
std::optional<AxiomProfile> parse_profile(std::string_view s);
const std::vector<AxiomProfile>& all_profiles();
bool profile_needs_involution(AxiomProfile p);

/// Interpretation of +, ·, α, 0, 1 and the sum order for term evaluation.
struct NearSemiringView {
  explicit NearSemiringView(const FiniteNearSemiring& a);
  NearSemiringView(const NearSemiringView&) = delete;
  NearSemiringView& operator=(const NearSemiringView&) = delete;

  const FiniteNearSemiring& algebra;
  Relation sum_leq;
  term::Interpretation in;

  Clause clause(std::string id, std::string_view text) const { return Clause::formula(std::move(id), text, in); }
};

/// Clause list behind a profile, in definition order.
std::vector<Clause> profile_clauses(const NearSemiringView& v, AxiomProfile p);

/// Exhaustive check; the smallest failing tuple is recorded per clause.
/// Throws PreconditionError for involutive profiles on algebras without α.
CheckReport check_axioms(const FiniteNearSemiring& a, AxiomProfile p);

bool satisfies(const FiniteNearSemiring& a, AxiomProfile p);

enum class OrderKind { Sum, Mul };

struct PartialOrderReport {
  OrderKind kind = OrderKind::Sum;
  Relation leq;
  bool is_partial_order = false;
  bool is_join_semilattice = false;
  bool is_meet_semilattice = false;
  std::optional<Element> bottom;
  std::optional<Element> top;

  /// Covering pairs (x, y): x < y with nothing strictly between.
  std::vector<std::pair<Element, Element>> covers() const;
};

/// Order x ≤ y iff x+y = y (Sum) or x ⩽ y iff x·y = x (Mul).
/// Requires the operation to be idempotent and commutative.
PartialOrderReport induced_order(const FiniteNearSemiring& a, OrderKind which);

/// Involutivity and antitonicity of α against the sum order.
CheckReport check_involution(const FiniteNearSemiring& a);

/// ⟨R, +_α, ·_α, α, α(0), α(1)⟩ with x +_α y = α(α(x) + α(y)) and x ·_α y = α(α(x) · α(y)).
FiniteNearSemiring dual_algebra(const FiniteNearSemiring& a);

/// Verifies the round trip identities x+y = α(α(x) +_α α(y)), x·y = α(α(x) ·_α α(y)).
PropertyReport duality_suite(const FiniteNearSemiring& a, const FiniteNearSemiring& dual);

/// Right monotonicity of ·, absorption α(x+y)+α(x) = α(x), integral ⇔ α(0) = 1.
PropertyReport core_property_suite(const FiniteNearSemiring& a);

/// Direct product; element (i, j) has index i * b.n + j.
FiniteNearSemiring product(const FiniteNearSemiring& a, const FiniteNearSemiring& b);

/// Algebra whose elements are re-indexed: new index of x is perm[x].
FiniteNearSemiring relabel(const FiniteNearSemiring& a, const std::vector<Element>& perm);

}  // namespace nsl
