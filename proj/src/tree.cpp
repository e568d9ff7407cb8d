#include "shoda/tree.hpp"

#include <algorithm>
#include <future>
#include <map>

namespace shoda {

CharTriple make_triple(GroupPtr g, Subgroup h, Subgroup a, Subgroup k) {
  if (!is_subset(a, h) || !is_normal_in(a, h))
    throw PreconditionError("triple requires A normal in H");
  if (!is_subset(k, a)) throw PreconditionError("triple requires K <= A");
  if (!is_normal_in(k, h)) throw PreconditionError("triple requires K normal in H");
  if (!is_cyclic_quotient(a, k)) throw PreconditionError("triple requires A/K cyclic");
  if (!commutator_set_in(h, a, k))
    throw PreconditionError("triple requires the character to be invariant in H");
  Subgroup n = core(g, k);
  return CharTriple{std::move(h), std::move(a), std::move(k), std::move(n)};
}

Subgroup inertia(const Subgroup& h, const Subgroup& a, const Subgroup& k) {
  if (!is_subset(a, h) || !is_normal_in(a, h) || !is_subset(k, a))
    throw PreconditionError("inertia requires K <= A normal in H");
  if (!is_cyclic_quotient(a, k)) throw PreconditionError("inertia requires A/K cyclic");
  const auto& G = *h.parent();
  std::vector<int> out;
  for (int x : h.members()) {
    bool ok = true;
    for (int y : a.members())
      if (!k.contains(G.commutator(x, y))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return Subgroup(h.parent(), std::move(out));  // validated
}

std::vector<CharTriple> clifford_children(GroupPtr g, const CharTriple& t, Subgroup* chosen_a,
                                          int subgroup_cap) {
  if (t.H == t.A) return {};
  const Subgroup aa = maximal_abelian_normal_over(t.H, t.K);
  if (aa.order() <= t.A.order()) {
    // inside the supported class the chosen subgroup always grows strictly;
    // stalling here would reproduce the parent triple forever
    throw PreconditionError(
        "maximal abelian normal subgroup does not grow past A; the group is outside "
        "the supported class (check with classc)");
  }
  if (chosen_a) *chosen_a = aa;

  // candidate kernels live between K and A*; enumerate in the abelian quotient
  auto q = quotient(aa, t.K);
  std::vector<Subgroup> candidates;
  for (const auto& u : all_subgroups(q.table, subgroup_cap)) {
    if (!is_cyclic_quotient(full_subgroup(q.table), u)) continue;
    Subgroup k2 = q.pullback(u.members(), aa);
    if (intersect(k2, t.A) != t.K) continue;
    if (core(g, k2) != t.N) continue;
    candidates.push_back(std::move(k2));
  }
  std::sort(candidates.begin(), candidates.end());

  // one representative per H-conjugacy class; candidates are sorted, so the
  // first unclaimed one is the lexicographically smallest of its orbit
  std::map<std::vector<int>, bool> claimed;
  for (const auto& c : candidates) claimed[c.members()] = false;
  std::vector<CharTriple> out;
  const auto& G = *g;
  for (const auto& c : candidates) {
    if (claimed[c.members()]) continue;
    for (int x : t.H.members()) {
      std::vector<int> img;
      img.reserve(c.order());
      for (int m : c.members()) img.push_back(G.conj(m, x));
      std::sort(img.begin(), img.end());
      auto it = claimed.find(img);
      if (it != claimed.end()) it->second = true;
    }
    Subgroup i = inertia(t.H, aa, c);
    out.push_back(CharTriple{std::move(i), aa, c, t.N});
  }
  return out;
}

ShodaTree build_tree(GroupPtr g, const Subgroup& n, int subgroup_cap) {
  if (!is_normal_in(n, full_subgroup(g)))
    throw PreconditionError("tree root requires a normal subgroup");
  ShodaTree tree{g, n, {}};
  tree.nodes.push_back(TreeNode{make_triple(g, full_subgroup(g), n, n), std::nullopt, -1, 1, {}});
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    Subgroup chosen;
    auto kids = clifford_children(g, tree.nodes[i].triple, &chosen, subgroup_cap);
    if (tree.nodes[i].triple.H != tree.nodes[i].triple.A)
      tree.nodes[i].chosen_a = std::move(chosen);
    for (auto& kid : kids) {
      const int id = static_cast<int>(tree.nodes.size());
      tree.nodes.push_back(TreeNode{std::move(kid), std::nullopt, static_cast<int>(i),
                                    tree.nodes[i].depth + 1, {}});
      tree.nodes[i].children.push_back(id);
    }
  }
  return tree;
}

std::vector<int> ShodaTree::path_to(int node) const {
  std::vector<int> path;
  for (int v = node; v >= 0; v = nodes[static_cast<std::size_t>(v)].parent) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<ShodaTree> forest(GroupPtr g, int subgroup_cap, int jobs) {
  const auto normals = normal_subgroups(g);
  std::vector<ShodaTree> out(normals.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < normals.size(); ++i) out[i] = build_tree(g, normals[i], subgroup_cap);
    return out;
  }
  std::vector<std::future<ShodaTree>> tasks;
  tasks.reserve(normals.size());
  for (const auto& n : normals)
    tasks.push_back(std::async(std::launch::async,
                               [&, n] { return build_tree(g, n, subgroup_cap); }));
  for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i].get();
  return out;
}

std::vector<LeafRef> shoda_leaves(const ShodaTree& t) {
  std::vector<LeafRef> out;
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& node = t.nodes[i];
    if (node.is_sink() && node.shoda_type())
      out.push_back(LeafRef{static_cast<int>(i), t.path_to(static_cast<int>(i))});
  }
  return out;
}

bool good_leaf(const ShodaTree& t, const LeafRef& leaf) {
  const auto& leaf_triple = t.nodes[static_cast<std::size_t>(leaf.node)].triple;
  const Subgroup& h = leaf_triple.H;
  const Subgroup& k = leaf_triple.K;
  for (std::size_t i = 1; i < leaf.path.size(); ++i) {
    const auto& above = t.nodes[static_cast<std::size_t>(leaf.path[i - 1])].triple;
    const auto& here = t.nodes[static_cast<std::size_t>(leaf.path[i])].triple;
    const Subgroup nrm = normalizer(above.H, here.K);
    const Subgroup cen = centralizer_of_element_in(above.H, e_sum(here.H, h, k));
    if (!is_subset(nrm, cen)) return false;
  }
  return true;
}

}  // namespace shoda
