#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>

#include "abslab/tree.hpp"

namespace abslab {

/// Label-invariant encoding of a free tree: equal codes iff isomorphic trees.
///
/// The bytes are a balanced parenthesis string of the tree rooted at its
/// center, children sorted by their own encodings. For a bicentral tree the
/// smaller of the two center-rooted strings is kept.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  explicit CanonicalCode(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  std::string hex() const;
  static CanonicalCode from_hex(const std::string& hex);

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;

 private:
  std::string bytes_;
};

CanonicalCode canonical_code(const Tree& t);

/// Center vertices (one or two) found by repeated leaf stripping.
std::vector<Vertex> tree_centers(const Tree& t);

}  // namespace abslab

template <>
struct std::hash<abslab::CanonicalCode> {
  std::size_t operator()(const abslab::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.bytes());
  }
};
