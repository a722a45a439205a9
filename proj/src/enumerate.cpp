#include "abslab/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace abslab {

namespace {

using Layout = std::vector<int>;

// Splits a level sequence at the second vertex of level 1: `left` is the
// first principal subtree (levels shifted up by one), `rest` the root with
// the remaining subtrees.
void split_tree(const Layout& layout, Layout& left, Layout& rest) {
  std::size_t m = layout.size();
  bool one_found = false;
  for (std::size_t i = 0; i < layout.size(); ++i) {
    if (layout[i] == 1) {
      if (one_found) {
        m = i;
        break;
      }
      one_found = true;
    }
  }
  left.clear();
  for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
  rest.assign(1, 0);
  for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
}

// Next rooted tree in reverse lexicographic order, starting the search at
// position p (the last position not at level 1 when p < 0).
bool next_rooted_tree(Layout& layout, std::ptrdiff_t p = -1) {
  if (p < 0) {
    p = static_cast<std::ptrdiff_t>(layout.size()) - 1;
    while (layout[p] == 1) --p;
  }
  if (p == 0) return false;
  std::ptrdiff_t q = p - 1;
  while (layout[q] != layout[p] - 1) --q;
  for (std::size_t i = static_cast<std::size_t>(p); i < layout.size(); ++i) layout[i] = layout[i - p + q];
  return true;
}

// Moves `candidate` to the nearest layout that is the canonical (center
// rooted) form of a free tree.
void next_tree(Layout& candidate) {
  Layout left;
  Layout rest;
  split_tree(candidate, left, rest);
  const int left_height = *std::max_element(left.begin(), left.end());
  const int rest_height = *std::max_element(rest.begin(), rest.end());
  bool valid = rest_height >= left_height;
  if (valid && rest_height == left_height) {
    if (left.size() > rest.size())
      valid = false;
    else if (left.size() == rest.size() && left > rest)
      valid = false;
  }
  if (valid) return;

  const auto p = static_cast<std::ptrdiff_t>(left.size());
  const int old_at_p = candidate[p];
  next_rooted_tree(candidate, p);
  if (old_at_p > 2) {
    split_tree(candidate, left, rest);
    const int new_left_height = *std::max_element(left.begin(), left.end());
    // overwrite the tail with 1, 2, ..., new_left_height + 1
    const std::size_t len = static_cast<std::size_t>(new_left_height) + 1;
    for (std::size_t i = 0; i < len; ++i) candidate[candidate.size() - len + i] = static_cast<int>(i) + 1;
  }
}

struct LevelStats {
  int leaves = 0;
  int max_degree = 0;
};

LevelStats level_stats(const Layout& levels) {
  const std::size_t n = levels.size();
  LevelStats stats;
  if (n == 1) return stats;
  std::vector<int> degree(n, 0);
  std::vector<std::size_t> last_at_level(n + 1, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t parent = last_at_level[levels[i] - 1];
    ++degree[parent];
    ++degree[i];
    last_at_level[levels[i]] = i;
  }
  for (int d : degree) {
    stats.leaves += d == 1;
    stats.max_degree = std::max(stats.max_degree, d);
  }
  return stats;
}

}  // namespace

LevelSequenceGenerator::LevelSequenceGenerator(int order) {
  if (order < 1) throw std::invalid_argument("tree order must be at least 1");
  if (order <= 3) {
    // one tree each; 0 / 0 1 / 0 1 1
    for (int i = 0; i < order; ++i) layout_.push_back(i == 0 ? 0 : 1);
    return;
  }
  for (int i = 0; i <= order / 2; ++i) layout_.push_back(i);
  for (int i = 1; i < (order + 1) / 2; ++i) layout_.push_back(i);
}

const std::vector<int>* LevelSequenceGenerator::next() {
  if (done_) return nullptr;
  if (layout_.size() <= 3) {
    done_ = started_;
    started_ = true;
    return done_ ? nullptr : &layout_;
  }
  if (started_ && !next_rooted_tree(layout_)) {
    done_ = true;
    return nullptr;
  }
  started_ = true;
  next_tree(layout_);
  return &layout_;
}

Tree tree_from_levels(const std::vector<int>& levels) {
  std::vector<Vertex> parent(levels.size(), 0);
  std::vector<Vertex> last_at_level(levels.size() + 1, 0);
  for (std::size_t i = 1; i < levels.size(); ++i) {
    parent[i] = last_at_level[levels[i] - 1];
    last_at_level[levels[i]] = static_cast<Vertex>(i);
  }
  return Tree::from_parents(parent);
}

TreeStream::TreeStream(EnumSpec spec) : spec_(spec), gen_(spec.order) {
  if (spec_.max_degree && *spec_.max_degree < 1) throw std::invalid_argument("max degree must be at least 1");
  if (spec_.parts < 1 || spec_.part < 0 || spec_.part >= spec_.parts)
    throw std::invalid_argument("invalid stream partition");
  if (spec_.pendent) {
    const int n = spec_.order;
    const int p = *spec_.pendent;
    // n = 1 has no pendent vertex, n = 2 has two, otherwise 2 <= p <= n-1.
    bool possible = n == 1 ? p == 0 : n == 2 ? p == 2 : (p >= 2 && p <= n - 1);
    empty_ = !possible;
  }
}

bool TreeStream::accepts(const std::vector<int>& levels) const {
  if (!spec_.pendent && !spec_.max_degree) return true;
  auto stats = level_stats(levels);
  if (spec_.pendent && stats.leaves != *spec_.pendent) return false;
  if (spec_.max_degree && stats.max_degree > *spec_.max_degree) return false;
  return true;
}

const std::vector<int>* TreeStream::next_levels() {
  if (empty_) return nullptr;
  while (const auto* levels = gen_.next()) {
    const bool mine = position_++ % spec_.parts == spec_.part;
    if (mine && accepts(*levels)) return levels;
  }
  return nullptr;
}

std::optional<Tree> TreeStream::next() {
  if (const auto* levels = next_levels()) return tree_from_levels(*levels);
  return std::nullopt;
}

std::vector<Tree> enumerate_trees(const EnumSpec& spec) {
  std::vector<Tree> trees;
  TreeStream stream(spec);
  while (auto t = stream.next()) trees.push_back(std::move(*t));
  return trees;
}

void for_each_tree(const EnumSpec& spec, const std::function<void(const Tree&)>& visit) {
  TreeStream stream(spec);
  while (auto t = stream.next()) visit(*t);
}

std::int64_t count_trees(const EnumSpec& spec) {
  TreeStream stream(spec);
  std::int64_t count = 0;
  while (stream.next_levels()) ++count;
  return count;
}

}  // namespace abslab
