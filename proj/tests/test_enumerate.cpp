#include <doctest.h>

#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "abslab/canonical.hpp"
#include "abslab/enumerate.hpp"
#include "oracles.hpp"

using namespace abslab;

namespace {

Tree shuffled(const Tree& t, std::mt19937_64& rng) {
  std::vector<Vertex> label(t.order());
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  return Tree(t.order(), relabel_edges(t, label));
}

}  // namespace

TEST_CASE("canonical code basics") {
  const Tree a(4, {{0, 1}, {1, 2}, {2, 3}});
  const Tree b(4, {{2, 0}, {0, 3}, {3, 1}});
  CHECK(canonical_code(a) == canonical_code(b));
  CHECK(canonical_code(a) != canonical_code(Tree::star(3)));
  const auto code = canonical_code(Tree::star(5));
  CHECK(CanonicalCode::from_hex(code.hex()) == code);
  CHECK(tree_centers(Tree::path(4)) == std::vector<Vertex>{1, 2});
  CHECK(tree_centers(Tree::path(5)) == std::vector<Vertex>{2});
}

TEST_CASE("canonical code is invariant under relabeling") {
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 12; ++n)
    for (const auto& t : enumerate_trees({.order = n}))
      for (int k = 0; k < 3; ++k) CHECK(canonical_code(shuffled(t, rng)) == canonical_code(t));
}

TEST_CASE("canonical code agrees with brute-force isomorphism up to order 8") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 8; ++n) {
    std::vector<Tree> pool;
    for (const auto& t : enumerate_trees({.order = n})) {
      pool.push_back(t);
      pool.push_back(shuffled(t, rng));
    }
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = i; j < pool.size(); ++j)
        CHECK((canonical_code(pool[i]) == canonical_code(pool[j])) == oracle::isomorphic(pool[i], pool[j]));
  }
}

TEST_CASE("canonical code on all labeled trees of order <= 6") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::string> oracle_forms;
    std::set<CanonicalCode> codes;
    oracle::for_each_labeled_tree(n, [&](const Tree& t) {
      oracle_forms.insert(oracle::all_roots_form(t));
      codes.insert(canonical_code(t));
    });
    CHECK(codes.size() == oracle_forms.size());
  }
}

TEST_CASE("free tree counts") {
  const std::int64_t known[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};
  for (int n = 1; n <= 14; ++n) CHECK(count_trees({.order = n}) == known[n - 1]);
  for (int n = 1; n <= 9; ++n) CHECK(oracle::free_tree_count(n) == known[n - 1]);
  CHECK(enumerate_trees({.order = 4}).size() == 2);
  CHECK(enumerate_trees({.order = 7}).size() == 11);
}

TEST_CASE("enumeration emits each class exactly once") {
  for (int n = 1; n <= 12; ++n) {
    std::unordered_set<CanonicalCode> seen;
    for_each_tree({.order = n}, [&](const Tree& t) {
      CHECK(t.order() == n);
      CHECK(t.size() == static_cast<std::size_t>(n > 0 ? n - 1 : 0));
      CHECK(t.connected());
      CHECK(seen.insert(canonical_code(t)).second);
    });
  }
}

TEST_CASE("filters") {
  std::int64_t total = 0;
  for (int p = 0; p <= 7; ++p) {
    for (const auto& t : enumerate_trees({.order = 7, .pendent = p})) CHECK(pendent_count(t) == p);
    total += count_trees({.order = 7, .pendent = p});
  }
  CHECK(total == 11);

  CHECK(count_trees({.order = 5, .max_degree = 2}) == 1);
  for (int p = 2; p <= 10; ++p) {
    const auto only = enumerate_trees({.order = p + 1, .pendent = p});
    REQUIRE(only.size() == 1);
    CHECK(canonical_code(only[0]) == canonical_code(Tree::star(p)));
  }
  CHECK(count_trees({.order = 2, .pendent = 2}) == 1);
  CHECK(count_trees({.order = 1, .pendent = 0}) == 1);
  CHECK(count_trees({.order = 6, .pendent = 6}) == 0);
  for (const auto& t : enumerate_trees({.order = 10, .max_degree = 3})) CHECK(t.max_degree() <= 3);
  CHECK_THROWS_AS(count_trees({.order = 5, .max_degree = 0}), std::invalid_argument);
}

TEST_CASE("partitioned streams cover the full stream deterministically") {
  const auto full = enumerate_trees({.order = 11});
  std::vector<CanonicalCode> merged;
  for (int part = 0; part < 3; ++part)
    for (const auto& t : enumerate_trees({.order = 11, .part = part, .parts = 3})) merged.push_back(canonical_code(t));
  std::vector<CanonicalCode> expected;
  for (const auto& t : full) expected.push_back(canonical_code(t));
  std::sort(merged.begin(), merged.end());
  std::sort(expected.begin(), expected.end());
  CHECK(merged == expected);
  CHECK(enumerate_trees({.order = 9}) == enumerate_trees({.order = 9}));
  CHECK_THROWS_AS(enumerate_trees({.order = 5, .part = 2, .parts = 2}), std::invalid_argument);
}
