#pragma once

// Bounded enumeration of finite near semirings up to isomorphism, model
// finding against named identities, and isomorphism testing.
//
// Canonical form: zero = 0, one = 1, and the concatenation add | inv | mul
// (row-major) is lexicographically minimal over all permutations of the
// carrier fixing 0 and 1.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nslab/algebra.hpp"
#include "nslab/clause.hpp"

namespace nsl {

struct SearchConstraint {
  std::vector<AxiomProfile> profiles;
  /// Catalog identity names that must hold (at the anchor, for parametric ones).
  std::vector<std::string> require;
  /// Catalog identity names that must fail.
  std::vector<std::string> forbid;

  bool needs_involution() const;
  std::string describe() const;
};

/// Comma separated list of profile names and identity names; a leading '!'
/// marks an identity as forbidden. Throws ParseError on unknown names.
SearchConstraint parse_constraint(std::string_view text);

struct IdentityViolation {
  std::string identity;
  Failure failure;
};

struct FoundModel {
  FiniteNearSemiring algebra;
  /// Element at which the parametric identities are evaluated.
  std::optional<Element> anchor;
  std::vector<IdentityViolation> violations;
};

struct SearchResult {
  std::vector<FoundModel> models;
  bool exhaustive = false;
  std::uint64_t nodes = 0;
  double elapsed_seconds = 0;
  /// Largest size that was searched.
  std::size_t size_reached = 0;
};

struct SearchOptions {
  unsigned threads = 1;
  bool allow_large = false;
  std::size_t bound = 6;
};

/// Whether a finished algebra meets the constraint, checked with the
/// ordinary checkers. Fills anchor and violations of `out`.
bool meets_constraint(const FiniteNearSemiring& a, const SearchConstraint& c, FoundModel* out = nullptr);

/// All canonical models of size n, sorted by their tables.
SearchResult enumerate(std::size_t n, const SearchConstraint& c, const SearchOptions& opt = {});

/// First model of size 1..n_max meeting the constraint, or none after exhaustive search.
SearchResult find_model(std::size_t n_max, const SearchConstraint& c, const SearchOptions& opt = {});

/// Canonical representative of the isomorphism class (by brute force over permutations).
FiniteNearSemiring canonical_form(const FiniteNearSemiring& a);

/// Lexicographically first isomorphism A → B as an image array, or none.
/// Throws PreconditionError when exactly one of them has an involution.
std::optional<std::vector<Element>> are_isomorphic(const FiniteNearSemiring& a, const FiniteNearSemiring& b);

}  // namespace nsl
