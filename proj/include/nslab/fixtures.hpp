#pragma once

// Built-in algebras. Stored fixtures are literal tables; derived ones are
// rebuilt from their construction on first use and self-checked.

#include <string>
#include <string_view>
#include <vector>

#include "nslab/io.hpp"

namespace nsl {

enum class StructureKind { NearSemiring, Basic, Ortho };

std::string_view kind_name(StructureKind k);
StructureKind kind_of(const Structure& s);

struct FixtureInfo {
  std::string name;
  StructureKind kind = StructureKind::NearSemiring;
  bool derived = false;
  std::string description;
};

const std::vector<FixtureInfo>& fixture_list();

/// Catalog entry by name. "A*B*..." builds the direct product of near
/// semiring fixtures. Throws ParseError for unknown names.
Structure fixture(std::string_view spec);

/// Same, with basic algebras and orthomodular lattices carried over to their
/// near semirings.
FiniteNearSemiring fixture_near_semiring(std::string_view spec);

/// Near semiring of any structure, via the term equivalences.
FiniteNearSemiring as_near_semiring(const Structure& s);

}  // namespace nsl
