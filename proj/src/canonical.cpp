#include "abslab/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace abslab {

std::string CanonicalCode::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char c : bytes_) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xF]);
  }
  return out;
}

CanonicalCode CanonicalCode::from_hex(const std::string& hex) {
  if (hex.size() % 2) throw std::invalid_argument("hex code has odd length");
  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw std::invalid_argument("invalid hex digit");
  };
  std::string bytes;
  for (std::size_t i = 0; i < hex.size(); i += 2)
    bytes.push_back(static_cast<char>(nibble(hex[i]) << 4 | nibble(hex[i + 1])));
  return CanonicalCode(std::move(bytes));
}

std::vector<Vertex> tree_centers(const Tree& t) {
  const int n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<int> degree = degree_sequence(t);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) layer.push_back(v);
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      degree[leaf] = 0;
      for (Vertex w : t.neighbors(leaf))
        if (--degree[w] == 1) next.push_back(w);
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

namespace {

std::string rooted_code(const Tree& t, Vertex root) {
  const auto n = static_cast<std::size_t>(t.order());
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> order{root};
  order.reserve(n);
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : t.neighbors(order[i])) {
      if (parent[w] == -1) {
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  std::vector<std::vector<std::string>> child_codes(n);
  std::string code;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    auto& children = child_codes[v];
    std::sort(children.begin(), children.end());
    code.assign(1, '(');
    for (auto& c : children) code += c;
    code.push_back(')');
    children.clear();
    children.shrink_to_fit();
    if (v != root) child_codes[parent[v]].push_back(code);
  }
  return code;
}

}  // namespace

CanonicalCode canonical_code(const Tree& t) {
  auto centers = tree_centers(t);
  std::string best = rooted_code(t, centers[0]);
  if (centers.size() == 2) best = std::min(best, rooted_code(t, centers[1]));
  return CanonicalCode(std::move(best));
}

}  // namespace abslab
