#pragma once

#include <optional>
#include <vector>

#include "shoda/algebra.hpp"
#include "shoda/group.hpp"

namespace shoda {

/// Kernel-encoded linear character triple (H, A, theta): A normal in H, theta
/// a linear character of A invariant in H, represented by K = ker theta.
/// N caches the core of K in the ambient group.
struct CharTriple {
  Subgroup H;
  Subgroup A;
  Subgroup K;
  Subgroup N;
};

// validates the triple invariants: A normal in H, K <= A, A/K cyclic, K normal
// in H, invariance ([H,A] <= K), and core_G(K) = N
CharTriple make_triple(GroupPtr g, Subgroup h, Subgroup a, Subgroup k);

// inertia group of a linear character of A with kernel K inside H:
// { h in H : [h,a] in K for all a in A }
Subgroup inertia(const Subgroup& h, const Subgroup& a, const Subgroup& k);

struct TreeNode {
  CharTriple triple;
  std::optional<Subgroup> chosen_a;  // the fixed maximal abelian normal over K
  int parent = -1;
  int depth = 1;  // root depth 1
  std::vector<int> children;

  bool is_sink() const { return children.empty(); }
  bool shoda_type() const { return triple.H == triple.A; }
};

/// The rooted directed tree of triples grown from (G, N, 1_N).
struct ShodaTree {
  GroupPtr group;
  Subgroup normal;
  std::vector<TreeNode> nodes;  // index 0 is the root

  std::vector<int> path_to(int node) const;  // node ids, root first
};

// direct Clifford correspondents of a triple: candidate kernels K' between K
// and the chosen maximal abelian normal subgroup with cyclic quotient,
// K' ∩ A = K and core_G(K') = N, one representative per H-conjugacy class
// (lexicographically smallest member list), mapped to
// (inertia(H, A*, K'), A*, K'). Empty when H = A.
std::vector<CharTriple> clifford_children(GroupPtr g, const CharTriple& t,
                                          Subgroup* chosen_a = nullptr,
                                          int subgroup_cap = 2000);

ShodaTree build_tree(GroupPtr g, const Subgroup& n, int subgroup_cap = 2000);

// one tree per normal subgroup, in canonical (order, members) order
std::vector<ShodaTree> forest(GroupPtr g, int subgroup_cap = 2000, int jobs = 1);

struct LeafRef {
  int node = -1;
  std::vector<int> path;  // node ids root..leaf
  int height() const { return static_cast<int>(path.size()); }
};

// sinks with H = A, each with its root path; these carry the Shoda pairs
// (H, K). Stalled sinks with H != A are excluded.
std::vector<LeafRef> shoda_leaves(const ShodaTree& t);

// operational goodness test along the root path: for every level i > 1 the
// normalizer of ker theta_i in H_{i-1} centralizes e(H_i, H, K)
bool good_leaf(const ShodaTree& t, const LeafRef& leaf);

}  // namespace shoda
