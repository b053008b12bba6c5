#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nslab/tables.hpp"

namespace nsl {

struct Violation {
  std::string clause;
  Tuple witness;
  std::string detail;

  bool operator<(const Violation& o) const {
    if (clause != o.clause) return clause < o.clause;
    return witness < o.witness;
  }
};

/// Outcome of an exhaustive conformance check. passed is true iff violations is empty.
struct CheckReport {
  std::string profile;
  bool passed = true;
  std::vector<Violation> violations;
  /// Extra facts established along the way, e.g. "semiring".
  std::vector<std::string> tags;
  std::vector<std::string> notes;

  /// Sorts violations and recomputes passed.
  void finalize();
  bool has_tag(const std::string& t) const;
  const Violation* find(const std::string& clause) const;
};

struct ClauseResult {
  std::string clause;
  bool passed = true;
  std::optional<Tuple> counterexample;
  std::string detail;
  /// Set when the clause was vacuous or not applicable.
  std::string note;
};

/// Ordered list of clause results; order is fixed by the suite definition.
struct PropertyReport {
  std::string suite;
  std::vector<ClauseResult> clauses;

  bool passed() const;
  const ClauseResult* find(const std::string& clause) const;
  void add(ClauseResult r) { clauses.push_back(std::move(r)); }
  void add_flag(std::string clause, bool ok, std::string detail = {}, std::string note = {});
};

}  // namespace nsl
