#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "abslab/tree.hpp"

namespace abslab {

/// Which free trees to generate. `part`/`parts` split the stream round-robin
/// into disjoint sub-streams whose union is the full stream.
struct EnumSpec {
  int order = 1;
  std::optional<int> pendent;
  std::optional<int> max_degree;
  int part = 0;
  int parts = 1;
};

/// Successor generator over canonical level sequences of free trees
/// (Wright, Richmond, Odlyzko and McKay). Each isomorphism class appears
/// exactly once; the order of emission is fixed for a given `order`.
///
/// A level sequence lists vertex depths in preorder of the tree rooted at a
/// center; it is the only state kept between calls.
class LevelSequenceGenerator {
 public:
  explicit LevelSequenceGenerator(int order);

  /// Next level sequence, or nullptr when exhausted. The pointer stays valid
  /// until the following call.
  const std::vector<int>* next();

 private:
  std::vector<int> layout_;
  bool started_ = false;
  bool done_ = false;
};

/// Builds the tree of a level sequence: vertex i is joined to the closest
/// earlier vertex one level up.
Tree tree_from_levels(const std::vector<int>& levels);

/// Filtered, deterministic stream of non-isomorphic trees.
class TreeStream {
 public:
  /// Throws std::invalid_argument for order < 1, max_degree < 1 or a bad partition.
  explicit TreeStream(EnumSpec spec);
  std::optional<Tree> next();
  /// Level sequence of the next accepted tree, without building it.
  const std::vector<int>* next_levels();

 private:
  bool accepts(const std::vector<int>& levels) const;

  EnumSpec spec_;
  LevelSequenceGenerator gen_;
  std::int64_t position_ = 0;
  bool empty_ = false;
};

std::vector<Tree> enumerate_trees(const EnumSpec& spec);
void for_each_tree(const EnumSpec& spec, const std::function<void(const Tree&)>& visit);
/// Stream length, computed from level sequences without building trees.
std::int64_t count_trees(const EnumSpec& spec);

}  // namespace abslab
