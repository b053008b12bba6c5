#pragma once

// Shared helpers for the unit tests.

#include <string>
#include <vector>

#include "nslab/fixtures.hpp"
#include "nslab/search.hpp"

namespace testing {

inline std::vector<nsl::FiniteNearSemiring> models(std::size_t n, const std::string& constraint) {
  std::vector<nsl::FiniteNearSemiring> out;
  for (auto& m : nsl::enumerate(n, nsl::parse_constraint(constraint)).models) out.push_back(std::move(m.algebra));
  return out;
}

/// Models of every size from 1 to n.
inline std::vector<nsl::FiniteNearSemiring> models_upto(std::size_t n, const std::string& constraint) {
  std::vector<nsl::FiniteNearSemiring> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (auto& m : models(k, constraint)) out.push_back(std::move(m));
  return out;
}

/// Every catalog fixture that is a near semiring, plus the near semirings of the others.
inline std::vector<nsl::FiniteNearSemiring> fixture_algebras() {
  std::vector<nsl::FiniteNearSemiring> out;
  for (const auto& f : nsl::fixture_list()) {
    if (f.name == "O6") continue;  // not orthomodular, no near semiring
    out.push_back(nsl::fixture_near_semiring(f.name));
  }
  return out;
}

inline bool is_stored_ns(const nsl::FixtureInfo& f) { return f.kind == nsl::StructureKind::NearSemiring; }

}  // namespace testing
