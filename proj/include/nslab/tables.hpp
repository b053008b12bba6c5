#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace nsl {

/// Dense index of an element in a finite universe.
using Element = std::uint32_t;

/// Ordered tuple of elements, used for clause witnesses.
using Tuple = std::vector<Element>;

/// n×n operation table, row = left argument.
class BinaryTable {
 public:
  BinaryTable() = default;
  explicit BinaryTable(std::size_t n, Element fill = 0) : n_(n), data_(n * n, fill) {}
  /// Row-major entries; the caller is responsible for range validation.
  BinaryTable(std::size_t n, std::vector<Element> entries);

  std::size_t size() const noexcept { return n_; }
  Element operator()(Element x, Element y) const noexcept { return data_[x * n_ + y]; }
  void set(Element x, Element y, Element v) noexcept { data_[x * n_ + y] = v; }
  std::span<const Element> entries() const noexcept { return data_; }
  std::span<const Element> row(Element x) const noexcept {
    return std::span<const Element>(data_).subspan(x * n_, n_);
  }

  /// True when every entry lies in [0, n).
  bool in_range() const noexcept;

  bool operator==(const BinaryTable&) const = default;
  auto operator<=>(const BinaryTable&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Element> data_;
};

using UnaryTable = std::vector<Element>;

/// Boolean n×n relation stored row-major.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}
  std::size_t size() const noexcept { return n_; }
  bool operator()(Element x, Element y) const noexcept { return bits_[x * n_ + y] != 0; }
  void set(Element x, Element y, bool v = true) noexcept { bits_[x * n_ + y] = v ? 1 : 0; }
  bool operator==(const Relation&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

bool is_permutation(const UnaryTable& t);

}  // namespace nsl
