#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nslab/report.hpp"
#include "nslab/term.hpp"

namespace nsl {

/// A universally quantified statement over a finite universe.
class Clause {
 public:
  /// Returns a failure description, or nullopt when the instance holds.
  using Check = std::function<std::optional<std::string>(std::span<const Element>)>;

  Clause(std::string id, std::size_t arity, Check check)
      : id_(std::move(id)), arity_(arity), check_(std::move(check)) {}

  /// Clause from formula text; variables bind in witness order.
  static Clause formula(std::string id, std::string_view text, const term::Interpretation& in);

  const std::string& id() const noexcept { return id_; }
  std::size_t arity() const noexcept { return arity_; }
  std::optional<std::string> check(std::span<const Element> xs) const { return check_(xs); }

 private:
  std::string id_;
  std::size_t arity_;
  Check check_;
};

struct Failure {
  Tuple witness;
  std::string detail;
};

/// Lexicographically smallest failing tuple.
std::optional<Failure> first_failure(std::size_t n, const Clause& c);

/// Smallest failing tuple among those starting with `prefix`.
std::optional<Failure> first_failure(std::size_t n, const Clause& c, std::span<const Element> prefix);

/// Runs every clause exhaustively; one violation (the smallest) per failing clause.
CheckReport run_check(std::string profile, std::size_t n, std::span<const Clause> clauses);

ClauseResult evaluate(std::size_t n, const Clause& c);

void append(PropertyReport& r, std::size_t n, std::span<const Clause> clauses);

}  // namespace nsl
