#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shoda/builtins.hpp"
#include "shoda/components.hpp"
#include "shoda/io.hpp"

using namespace shoda;

namespace {

Subgroup gens(GroupPtr g, const std::string& words) { return subgroup_from_words(g, words); }

}  // namespace

TEST_CASE("euler phi") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(6) == 2);
  CHECK(euler_phi(8) == 4);
  CHECK(euler_phi(10) == 4);
  CHECK(euler_phi(97) == 96);
}

TEST_CASE("whole-group leaf gives the one-dimensional tower") {
  auto s3 = builtin("symmetric(3)");
  const auto tree = build_tree(s3, full_subgroup(s3));
  const auto leaves = shoda_leaves(tree);
  REQUIRE(leaves.size() == 1);
  const auto tower = tower_of_leaf(tree, leaves[0]);
  CHECK(tower.k == 1);
  CHECK(tower.base_field_degree == 1);
  CHECK(tower.levels.empty());
  CHECK(tower.predicted_dimension == 1);
}

TEST_CASE("cyclic quotient pair gives a commutative component") {
  auto c6 = builtin("cyclic(6)");
  const auto tree = build_tree(c6, trivial_subgroup(c6));
  const auto leaves = shoda_leaves(tree);
  REQUIRE(leaves.size() == 1);
  const auto tower = tower_of_leaf(tree, leaves[0]);
  CHECK(tower.k == 6);
  CHECK(tower.base_field_degree == 2);
  REQUIRE(tower.levels.size() == 1);
  CHECK(tower.levels[0].matrix_degree == 1);
  CHECK(tower.levels[0].crossed_order == 1);
  CHECK(tower.predicted_dimension == 2);
}

TEST_CASE("the S3 pair (A3,1) gives the 4-dimensional matrix component") {
  auto s3 = builtin("symmetric(3)");
  const auto tree = build_tree(s3, trivial_subgroup(s3));
  const auto leaves = shoda_leaves(tree);
  REQUIRE(leaves.size() == 1);
  const auto tower = tower_of_leaf(tree, leaves[0]);
  CHECK(tower.k == 3);
  CHECK(tower.base_field_degree == 2);
  REQUIRE(tower.levels.size() == 1);
  CHECK(tower.levels[0].matrix_degree == 1);
  CHECK(tower.levels[0].crossed_order == 2);
  CHECK(tower.predicted_dimension == 4);
}

TEST_CASE("dimension audits pass on the small fixtures") {
  for (const auto* name : {"symmetric(3)", "dihedral(4)", "quaternion8", "cyclic(6)"}) {
    auto g = builtin(name);
    const auto trees = forest(g);
    const auto records = build_records(g, trees);
    long long total = 0;
    for (const auto& r : records) {
      const auto tower =
          tower_of_leaf(trees[static_cast<std::size_t>(r.tree_index)], r.leaf);
      total += dimension_audit(r, tower);
    }
    CHECK(total == g->order());
  }
}

TEST_CASE("dimension audits pass on the order-54 example") {
  auto g = builtin("paper-ex2");
  const auto trees = forest(g);
  const auto records = build_records(g, trees);
  REQUIRE(records.size() == 8);
  long long total = 0;
  for (const auto& r : records) {
    const auto tower = tower_of_leaf(trees[static_cast<std::size_t>(r.tree_index)], r.leaf);
    CHECK(tower.predicted_dimension == ideal_rank(r.pci));
    total += tower.predicted_dimension;
  }
  CHECK(total == 54);
}

TEST_CASE("height-2 strong pairs degenerate to the classical matrix degree") {
  for (const auto* name : {"paper-ex2", "symmetric(4)", "dihedral(6)", "quaternion8"}) {
    auto g = builtin(name);
    const auto full = full_subgroup(g);
    const auto trees = forest(g);
    for (const auto& r : build_records(g, trees)) {
      if (r.height != 2 || !r.strong) continue;
      const auto tower = tower_of_leaf(trees[static_cast<std::size_t>(r.tree_index)], r.leaf);
      REQUIRE(tower.levels.size() == 1);
      const auto ngk = normalizer(full, r.K);
      CHECK(tower.levels[0].matrix_degree == g->order() / ngk.order());
      CHECK(tower.levels[0].crossed_order == ngk.order() / r.H.order());
    }
  }
}

TEST_CASE("audit failure carries both numbers") {
  auto s3 = builtin("symmetric(3)");
  const auto trees = forest(s3);
  const auto records = build_records(s3, trees);
  ComponentTower wrong;
  wrong.k = 1;
  wrong.base_field_degree = 1;
  wrong.predicted_dimension = 5;
  CHECK_THROWS_WITH_AS(dimension_audit(records[0], wrong),
                       doctest::Contains("tower predicts 5"), AuditFailure);
}

TEST_CASE("mixed-level towers on the order-54 example") {
  // the two height-3 leaves: M3(Q(xi_6)) components of dimension 18
  auto g = builtin("paper-ex2");
  const auto tree = build_tree(g, trivial_subgroup(g));
  const auto leaves = shoda_leaves(tree);
  REQUIRE(leaves.size() == 2);
  for (const auto& leaf : leaves) {
    const auto tower = tower_of_leaf(tree, leaf);
    const auto& lt = tree.nodes[static_cast<std::size_t>(leaf.node)].triple;
    CHECK(tower.k == lt.H.order() / lt.K.order());
    CHECK(tower.predicted_dimension == 18);
    REQUIRE(tower.levels.size() == 2);
    CHECK(tower.levels[0].matrix_degree == 3);
    CHECK(tower.levels[0].crossed_order == 1);
    CHECK(tower.levels[1].matrix_degree == 1);
    CHECK(tower.levels[1].crossed_order == 1);
  }
}
