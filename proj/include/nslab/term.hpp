#pragma once

// Terms and clause formulas over the signatures used in the lab. A term is
// parsed once and evaluated against an Interpretation that supplies the
// tables for whatever symbols it mentions.
//
// Syntax (UTF-8):
//   binary, loose:  +  ⊕  ∨
//   binary, tight:  ·  *  ∧
//   prefix:         α(t)  ~t
//   postfix:        t′  t'
//   constants:      0  1
//   variables:      single lowercase letters
//   atoms:          t = s   t ≠ s   t ≤ s
//   formulas:       atom & atom ...   [⇒ | ⇔]  atom & atom ...

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nslab/tables.hpp"

namespace nsl::term {

enum class Op : std::uint8_t { Var, Zero, One, Add, Mul, Oplus, Join, Meet, Alpha, Prime };

/// Post-order node; children always precede their parent.
struct Node {
  Op op = Op::Var;
  std::int16_t left = -1;
  std::int16_t right = -1;
  char var = 0;
};

inline constexpr std::size_t kMaxNodes = 96;

class Term {
 public:
  static Term parse(std::string_view text);

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  /// Distinct variables in order of first appearance.
  const std::string& variables() const noexcept { return vars_; }
  bool is_atomic() const noexcept { return nodes_.size() == 1; }

 private:
  friend class Parser;
  std::vector<Node> nodes_;
  std::string vars_;
};

/// Tables giving meaning to the operation symbols. Unused symbols may be null.
struct Interpretation {
  std::size_t n = 0;
  const BinaryTable* add = nullptr;
  const BinaryTable* mul = nullptr;
  const BinaryTable* oplus = nullptr;
  const BinaryTable* join = nullptr;
  const BinaryTable* meet = nullptr;
  const UnaryTable* alpha = nullptr;
  const UnaryTable* prime = nullptr;
  Element zero = 0;
  Element one = 0;
  /// Order used by ≤ atoms.
  const Relation* leq = nullptr;
  const std::vector<std::string>* labels = nullptr;

  std::string label(Element x) const;
};

/// Values of the variables 'a'..'z'.
using Assignment = std::array<Element, 26>;

Element eval(const Term& t, const Interpretation& in, const Assignment& a);

/// Term text with variables replaced by element labels.
std::string render(const Term& t, const Interpretation& in, const Assignment& a);

enum class Rel : std::uint8_t { Eq, Neq, Leq };

struct Atom {
  Term lhs;
  Rel rel = Rel::Eq;
  Term rhs;
};

enum class Connective : std::uint8_t { None, Implies, Iff };

class Formula {
 public:
  static Formula parse(std::string_view text);

  /// Variables in canonical witness order (see witness_order()).
  const std::string& variables() const noexcept { return vars_; }
  bool holds(const Interpretation& in, const Assignment& a) const;
  /// Human description of a failing instance.
  std::string describe_failure(const Interpretation& in, const Assignment& a) const;

  const std::vector<Atom>& left() const noexcept { return left_; }
  const std::vector<Atom>& right() const noexcept { return right_; }
  Connective connective() const noexcept { return conn_; }

 private:
  std::vector<Atom> left_;
  Connective conn_ = Connective::None;
  std::vector<Atom> right_;
  std::string vars_;
};

/// Preferred variable order for witness tuples: e x y z u v w, then the rest.
const std::string& witness_order();

}  // namespace nsl::term
