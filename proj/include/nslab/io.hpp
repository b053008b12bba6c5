#pragma once

// Algebra documents (JSON) and deterministic rendering of reports as text,
// JSON and Graphviz DOT.

#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nslab/algebra.hpp"
#include "nslab/center.hpp"
#include "nslab/congruence.hpp"
#include "nslab/search.hpp"
#include "nslab/transforms.hpp"
#include "nslab/varieties.hpp"

namespace nsl {

using Structure = std::variant<FiniteNearSemiring, BasicAlgebra, OrthoLattice>;

/// Kind is decided by the tables present: add/mul, oplus/neg or join/ortho.
/// Throws ParseError, RangeError or StructureError.
Structure parse_document(std::string_view text);

/// Near-semiring document only; other kinds are a ParseError.
FiniteNearSemiring load_algebra(std::string_view text);

std::string to_document(const FiniteNearSemiring& a);
std::string to_document(const BasicAlgebra& b);
std::string to_document(const OrthoLattice& l);
std::string to_document(const Structure& s);

using LabelFn = std::function<std::string(Element)>;

LabelFn labels_of(const FiniteNearSemiring& a);

std::string render_text(const CheckReport& r, const LabelFn& label);
std::string render_json(const CheckReport& r, const LabelFn& label);

std::string render_text(const PropertyReport& r, const LabelFn& label);
std::string render_json(const PropertyReport& r, const LabelFn& label);

std::string render_text(const PartialOrderReport& r, const FiniteNearSemiring& a);
std::string render_json(const PartialOrderReport& r, const FiniteNearSemiring& a);
/// Hasse diagram, bottom to top.
std::string render_dot(const PartialOrderReport& r, const FiniteNearSemiring& a);

std::string render_text(const std::vector<Congruence>& cons, const FiniteNearSemiring& a);
std::string render_json(const std::vector<Congruence>& cons, const FiniteNearSemiring& a);
/// Hasse diagram of the congruence lattice ordered by inclusion.
std::string render_dot(const std::vector<Congruence>& cons, const FiniteNearSemiring& a);

std::string render_text(const CenterReport& r, const FiniteNearSemiring& a);
std::string render_json(const CenterReport& r, const FiniteNearSemiring& a);

std::string render_text(const DecompositionResult& d, const FiniteNearSemiring& a);
std::string render_json(const DecompositionResult& d, const FiniteNearSemiring& a);

std::string render_text(const RoundTripReport& r, const LabelFn& label);
std::string render_json(const RoundTripReport& r, const LabelFn& label);

/// Never includes timing, so output is reproducible.
std::string render_text(const SearchResult& r, const SearchConstraint& c);
std::string render_json(const SearchResult& r, const SearchConstraint& c);

}  // namespace nsl
