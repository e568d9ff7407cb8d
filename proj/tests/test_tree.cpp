#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "shoda/builtins.hpp"
#include "shoda/io.hpp"
#include "shoda/tree.hpp"

using namespace shoda;

namespace {

Subgroup sub(GroupPtr g, const std::string& words) { return subgroup_from_words(g, words); }

struct Shape {
  int nodes;
  int leaves;
  std::vector<int> heights;  // sorted leaf heights
};

Shape shape_of(const ShodaTree& t) {
  Shape s{static_cast<int>(t.nodes.size()), 0, {}};
  for (const auto& leaf : shoda_leaves(t)) {
    ++s.leaves;
    s.heights.push_back(leaf.height());
  }
  std::sort(s.heights.begin(), s.heights.end());
  return s;
}

}  // namespace

TEST_CASE("inertia on the order-1000 example") {
  auto g = builtin("paper-ex1");
  const auto full = full_subgroup(g);
  const auto n4 = sub(g, "x4,x5,x6");
  const auto n5 = sub(g, "x6");
  // centralizing A mod K keeps all of H
  CHECK(inertia(n4, n5, n5) == n4);
  // the kernels of the three order-5 line characters all have inertia N4
  CHECK(inertia(full, n4, sub(g, "x5,x6")) == n4);
  CHECK(inertia(full, n4, sub(g, "x4,x6")) == n4);
  CHECK(inertia(full, n4, sub(g, "x4^-1*x5,x6")) == n4);
  // faithful character of the center: inertia is <x3,x4,x5,x6>
  CHECK(inertia(full, n5, trivial_subgroup(g)) == sub(g, "x3,x4,x5,x6"));
}

TEST_CASE("inertia satisfies the structural containments") {
  auto g = builtin("paper-ex2");
  const auto full = full_subgroup(g);
  const auto a = sub(g, "c,d");
  const auto k = sub(g, "c");
  const auto i = inertia(full, a, k);
  CHECK(i == sub(g, "a,c,d"));
  const auto nk = normalizer(full, k);
  CHECK(is_subset(a, i));
  CHECK(is_subset(i, nk));
  CHECK(is_normal_in(i, nk));
}

TEST_CASE("direct correspondents of the order-1000 roots") {
  auto g = builtin("paper-ex1");
  const auto full = full_subgroup(g);
  const auto triple = make_triple(g, full, sub(g, "x6"), sub(g, "x6"));
  Subgroup chosen;
  const auto kids = clifford_children(g, triple, &chosen);
  CHECK(chosen == sub(g, "x4,x5,x6"));
  REQUIRE(kids.size() == 3);
  // kernels: one class rep per line orbit; two are the paper's own choices
  std::vector<Subgroup> kernels;
  for (const auto& kid : kids) {
    CHECK(kid.H == sub(g, "x4,x5,x6"));
    CHECK(kid.A == sub(g, "x4,x5,x6"));
    kernels.push_back(kid.K);
  }
  CHECK(std::count(kernels.begin(), kernels.end(), sub(g, "x5,x6")) == 1);
  CHECK(std::count(kernels.begin(), kernels.end(), sub(g, "x4,x6")) == 1);
  // the third is conjugate to <x4^-1*x5, x6>
  const auto paper_rep = sub(g, "x4^-1*x5,x6");
  bool conjugate_found = false;
  for (const auto& k : kernels) {
    for (int x = 0; x < g->order() && !conjugate_found; ++x)
      if (conjugate_subgroup(paper_rep, x) == k) conjugate_found = true;
  }
  CHECK(conjugate_found);
}

TEST_CASE("cyclic quotient gives exactly one correspondent") {
  auto g = builtin("paper-ex1");
  const auto full = full_subgroup(g);
  for (const auto* words : {"x2,x3,x4,x5,x6", "x3,x4,x5,x6", "x4,x5,x6"}) {
    const auto n = sub(g, words);
    const auto kids = clifford_children(g, make_triple(g, full, n, n));
    REQUIRE(kids.size() == 1);
    CHECK(kids[0].H == full);
    CHECK(kids[0].A == full);
    CHECK(kids[0].K == n);
  }
}

TEST_CASE("abelian non-cyclic quotient gives no correspondents") {
  auto g = builtin("paper-ex2");
  const auto n7 = sub(g, "d");
  const auto kids = clifford_children(g, make_triple(g, full_subgroup(g), n7, n7));
  CHECK(kids.empty());
}

TEST_CASE("tree shapes of the order-1000 example") {
  auto g = builtin("paper-ex1");
  const auto trees = forest(g);
  REQUIRE(trees.size() == 6);
  // canonical order: N of orders 1, 5, 125, 250, 500, 1000
  const auto s_triv = shape_of(trees[0]);   // N = 1
  CHECK(s_triv.nodes == 5);
  CHECK(s_triv.leaves == 2);
  CHECK(s_triv.heights == std::vector<int>{4, 4});
  const auto s_n5 = shape_of(trees[1]);     // N = <x6>
  CHECK(s_n5.nodes == 4);
  CHECK(s_n5.leaves == 3);
  CHECK(s_n5.heights == std::vector<int>{2, 2, 2});
  for (int i = 2; i <= 4; ++i) {            // single edges
    const auto s = shape_of(trees[static_cast<std::size_t>(i)]);
    CHECK(s.nodes == 2);
    CHECK(s.leaves == 1);
    CHECK(s.heights == std::vector<int>{2});
  }
  const auto s_full = shape_of(trees[5]);   // N = G
  CHECK(s_full.nodes == 1);
  CHECK(s_full.leaves == 1);
  CHECK(s_full.heights == std::vector<int>{1});
}

TEST_CASE("tree for the trivial kernel of the order-54 example") {
  auto g = builtin("paper-ex2");
  const auto tree = build_tree(g, trivial_subgroup(g));
  const auto s = shape_of(tree);
  CHECK(s.nodes == 4);
  CHECK(s.leaves == 2);
  CHECK(s.heights == std::vector<int>{3, 3});
  // the two Shoda pairs of this tree
  std::vector<std::pair<Subgroup, Subgroup>> pairs;
  for (const auto& leaf : shoda_leaves(tree)) {
    const auto& t = tree.nodes[static_cast<std::size_t>(leaf.node)].triple;
    pairs.emplace_back(t.H, t.K);
  }
  REQUIRE(pairs.size() == 2);
  const auto g1 = sub(g, "a,c,d");
  CHECK(pairs[0].first == g1);
  CHECK(pairs[1].first == g1);
  std::vector<Subgroup> kernels{pairs[0].second, pairs[1].second};
  std::sort(kernels.begin(), kernels.end());
  CHECK(kernels[0] == sub(g, "c"));
  CHECK(kernels[1] == sub(g, "a,c"));
}

TEST_CASE("forest of the order-54 example") {
  auto g = builtin("paper-ex2");
  const auto trees = forest(g);
  REQUIRE(trees.size() == 8);
  int pair_count = 0;
  for (const auto& t : trees) pair_count += static_cast<int>(shoda_leaves(t).size());
  CHECK(pair_count == 8);
  // the tree over <d> contributes nothing
  for (const auto& t : trees)
    if (t.normal == sub(g, "d")) {
      CHECK(t.nodes.size() == 1);
      CHECK(shoda_leaves(t).empty());
    }
}

TEST_CASE("single-vertex tree over the whole group") {
  auto g = builtin("symmetric(3)");
  const auto tree = build_tree(g, full_subgroup(g));
  CHECK(tree.nodes.size() == 1);
  const auto leaves = shoda_leaves(tree);
  REQUIRE(leaves.size() == 1);
  CHECK(leaves[0].height() == 1);
}

TEST_CASE("tree construction fails cleanly outside the supported class") {
  // S5 has no nontrivial abelian normal subgroup, so the tree over the
  // trivial kernel cannot grow
  auto s5 = builtin("symmetric(5)");
  CHECK_FALSE(is_in_class_c(s5));
  CHECK_THROWS_AS(build_tree(s5, trivial_subgroup(s5)), PreconditionError);
}

TEST_CASE("stalled root over an abelian non-cyclic quotient has no pair") {
  // C2 x C2 x C3 over the trivial subgroup: quotient abelian, not cyclic
  const auto g = parse_group(
      R"js({"kind":"product","factors":[{"kind":"builtin","name":"klein4"},
          {"kind":"builtin","name":"cyclic(3)"}]})js");
  const auto tree = build_tree(g, trivial_subgroup(g));
  CHECK(tree.nodes.size() == 1);
  CHECK(shoda_leaves(tree).empty());
  CHECK_FALSE(tree.nodes[0].shoda_type());
}

TEST_CASE("structural invariants along every path") {
  for (const auto* name : {"paper-ex2", "symmetric(4)", "dihedral(6)", "quaternion8"}) {
    auto g = builtin(name);
    for (const auto& tree : forest(g)) {
      for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
        const auto& node = tree.nodes[i];
        // H = A exactly at childless non-root nodes (a root may stall)
        if (node.shoda_type()) CHECK(node.children.empty());
        if (!node.children.empty()) CHECK_FALSE(node.shoda_type());
        // triples are valid by construction
        CHECK_NOTHROW(make_triple(g, node.triple.H, node.triple.A, node.triple.K));
        if (node.parent >= 0) {
          const auto& up = tree.nodes[static_cast<std::size_t>(node.parent)].triple;
          // strictly increasing A-chain
          CHECK(is_subset(up.A, node.triple.A));
          CHECK(node.triple.A.order() > up.A.order());
          // inertia containments
          const auto nk = normalizer(up.H, node.triple.K);
          CHECK(is_subset(node.triple.A, node.triple.H));
          CHECK(is_subset(node.triple.H, nk));
          CHECK(is_normal_in(node.triple.H, nk));
        }
        // when H/K is abelian the chosen maximal subgroup is H itself and all
        // candidate kernels sit in singleton classes (each is normal in H)
        if (!node.children.empty() &&
            commutator_set_in(node.triple.H, node.triple.H, node.triple.K)) {
          REQUIRE(node.chosen_a.has_value());
          CHECK(*node.chosen_a == node.triple.H);
          for (int c : node.children)
            CHECK(is_normal_in(tree.nodes[static_cast<std::size_t>(c)].triple.K, node.triple.H));
        }
      }
    }
  }
}

TEST_CASE("goodness") {
  auto g1 = builtin("paper-ex1");
  for (const auto& tree : forest(g1))
    for (const auto& leaf : shoda_leaves(tree)) CHECK(good_leaf(tree, leaf));
  auto g2 = builtin("paper-ex2");
  for (const auto& tree : forest(g2))
    for (const auto& leaf : shoda_leaves(tree)) {
      CHECK(good_leaf(tree, leaf));
      if (leaf.height() <= 2) CHECK(good_leaf(tree, leaf));
    }
}

TEST_CASE("parallel construction matches the sequential one") {
  auto g = builtin("paper-ex2");
  const auto seq_trees = forest(g, 2000, 1);
  const auto par_trees = forest(g, 2000, 3);
  REQUIRE(seq_trees.size() == par_trees.size());
  for (std::size_t i = 0; i < seq_trees.size(); ++i) {
    REQUIRE(seq_trees[i].nodes.size() == par_trees[i].nodes.size());
    for (std::size_t v = 0; v < seq_trees[i].nodes.size(); ++v) {
      CHECK(seq_trees[i].nodes[v].triple.H == par_trees[i].nodes[v].triple.H);
      CHECK(seq_trees[i].nodes[v].triple.K == par_trees[i].nodes[v].triple.K);
    }
  }
}

TEST_CASE("tree serialization") {
  auto g = builtin("paper-ex1");
  const auto tree = build_tree(g, sub(g, "x6"));
  const auto dot = tree_dot(tree);
  CHECK(std::count(dot.begin(), dot.end(), '\n') > 4);
  // 4 nodes, 3 edges
  std::size_t arrows = 0, labels = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1))
    ++arrows;
  for (std::size_t p = dot.find("label="); p != std::string::npos; p = dot.find("label=", p + 1))
    ++labels;
  CHECK(arrows == 3);
  CHECK(labels == 4);
  // deterministic output
  CHECK(tree_dot(build_tree(g, sub(g, "x6"))) == dot);

  const auto j = tree_json(tree);
  CHECK(j["nodes"].size() == 4);
  CHECK(j["nodes"][0]["depth"] == 1);
  int good_leaves = 0;
  for (const auto& n : j["nodes"])
    if (n["shoda_leaf"].get<bool>() && n["good"].get<bool>()) ++good_leaves;
  CHECK(good_leaves == 3);
}
