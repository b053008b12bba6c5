#pragma once

// Congruences of finite near semirings as canonical block maps, the lattice
// they form, factor pairs, quotients and the witness-term identities.

#include <optional>
#include <string>
#include <vector>

#include "nslab/algebra.hpp"

namespace nsl {

/// Partition of the carrier. Block ids are numbered by first occurrence.
class Congruence {
 public:
  Congruence() = default;
  /// Any block labelling; it is renumbered canonically.
  explicit Congruence(std::vector<Element> blocks);

  static Congruence identity(std::size_t n);
  static Congruence all(std::size_t n);

  std::size_t size() const noexcept { return blocks_.size(); }
  Element block(Element x) const noexcept { return blocks_[x]; }
  bool same(Element x, Element y) const noexcept { return blocks_[x] == blocks_[y]; }
  std::size_t block_count() const noexcept { return count_; }
  const std::vector<Element>& blocks() const noexcept { return blocks_; }
  std::vector<std::vector<Element>> classes() const;
  Relation relation() const;

  bool is_identity() const noexcept { return count_ == blocks_.size(); }
  bool is_all() const noexcept { return count_ <= 1; }
  /// θ ⊆ φ.
  bool finer_than(const Congruence& o) const;

  /// "{0,2}{1}" style.
  std::string render(const FiniteNearSemiring& a) const;

  bool operator==(const Congruence& o) const { return blocks_ == o.blocks_; }
  /// More blocks first, then block maps lexicographically.
  bool operator<(const Congruence& o) const;

 private:
  std::vector<Element> blocks_;
  std::size_t count_ = 0;
};

/// First operation instance breaking compatibility, or nullopt.
std::optional<std::string> compatibility_failure(const FiniteNearSemiring& a, const Congruence& c);
bool is_compatible(const FiniteNearSemiring& a, const Congruence& c);

/// Smallest congruence identifying a and b.
Congruence principal_congruence(const FiniteNearSemiring& a, Element x, Element y);

Congruence join(const Congruence& p, const Congruence& q);
Congruence meet(const Congruence& p, const Congruence& q);
/// x (p∘q) z iff x p y q z for some y.
Relation compose(const Congruence& p, const Congruence& q);

/// The whole congruence lattice, sorted.
std::vector<Congruence> all_congruences(const FiniteNearSemiring& a);

/// p∧q = Δ, p∨q = ∇ and p∘q = q∘p = ∇. Throws PreconditionError for non-congruences.
bool is_factor_pair(const FiniteNearSemiring& a, const Congruence& p, const Congruence& q);

/// A/θ; block i is the i-th block in canonical order, labelled by its least element.
FiniteNearSemiring quotient(const FiniteNearSemiring& a, const Congruence& c);

/// Regularity, Mal'cev and majority terms. Requires a Łukasiewicz near semiring.
PropertyReport witness_term_checks(const FiniteNearSemiring& a);

/// Permutability of all pairs and distributivity of the lattice.
PropertyReport congruence_lattice_suite(const std::vector<Congruence>& cons);

}  // namespace nsl
