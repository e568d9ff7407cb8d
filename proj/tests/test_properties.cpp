#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "shoda/builtins.hpp"
#include "shoda/idempotents.hpp"

using namespace shoda;

namespace {

std::vector<GroupPtr> small_fixtures() {
  return {builtin("symmetric(3)"), builtin("dihedral(4)"), builtin("quaternion8"),
          builtin("cyclic(6)"),   builtin("dihedral(6)"),  builtin("paper-ex2")};
}

// explicit linear character of A/K as exponents along a generator coset;
// the independent oracle for the kernel-encoded inertia computation
struct CyclicCharacter {
  std::map<int, int> value;  // element of A -> exponent in Z_m
  int modulus = 1;

  static CyclicCharacter of(const Subgroup& a, const Subgroup& k) {
    CyclicCharacter chi;
    const auto& G = *a.parent();
    const int m = a.order() / k.order();
    chi.modulus = m;
    int gen = -1;
    for (int x : a.members()) {
      int y = x, ord = 1;
      while (!k.contains(y)) {
        y = G.mul(y, x);
        ++ord;
      }
      if (ord == m) {
        gen = x;
        break;
      }
    }
    REQUIRE(gen >= 0);
    int p = 0;
    for (int t = 0; t < m; ++t) {
      for (int kk : k.members()) chi.value[G.mul(p, kk)] = t;
      p = G.mul(p, gen);
    }
    return chi;
  }
};

}  // namespace

TEST_CASE("random spot checks of the table axioms") {
  std::mt19937 rng(20240811);
  for (auto& g : small_fixtures()) {
    std::uniform_int_distribution<int> pick(0, g->order() - 1);
    for (int trial = 0; trial < 2000; ++trial) {
      const int a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
      CHECK(g->mul(a, g->inv(a)) == 0);
      CHECK(g->mul(0, a) == a);
    }
  }
}

TEST_CASE("subgroup closure and Lagrange for every computed subgroup") {
  for (auto& g : small_fixtures()) {
    for (const auto& s : all_subgroups(g)) {
      CHECK(g->order() % s.order() == 0);
      for (int x : s.members()) {
        CHECK(s.contains(g->inv(x)));
        for (int y : s.members()) CHECK(s.contains(g->mul(x, y)));
      }
    }
  }
}

TEST_CASE("normal subgroup lattice is closed under meet and join") {
  for (auto& g : small_fixtures()) {
    if (g->order() > 200) continue;
    const auto normals = normal_subgroups(g);
    std::set<std::vector<int>> index;
    for (const auto& n : normals) index.insert(n.members());
    for (const auto& a : normals)
      for (const auto& b : normals) {
        CHECK(index.count(intersect(a, b).members()) == 1);
        CHECK(index.count(join(a, b).members()) == 1);
      }
  }
}

TEST_CASE("the chosen maximal subgroup contains the center preimage") {
  for (auto& g : small_fixtures()) {
    for (const auto& h : normal_subgroups(g)) {
      if (h.order() == 1) continue;
      for (const auto& k : normal_subgroups(g)) {
        if (!is_subset(k, h) || !is_normal_in(k, h)) continue;
        const auto chosen = maximal_abelian_normal_over(h, k);
        // preimage of the center of H/K
        const auto q = quotient(h, k);
        const auto zq = center_of(full_subgroup(q.table));
        const auto center_preimage = q.pullback(zq.members(), h);
        CHECK(is_subset(center_preimage, chosen));
        // proper containment when H/K is non-abelian (class-C group)
        if (!commutator_set_in(h, h, k))
          CHECK(chosen.order() > center_preimage.order());
      }
    }
  }
}

TEST_CASE("epsilon is an idempotent for every normal kernel") {
  for (auto& g : small_fixtures()) {
    if (g->order() > 60) continue;
    const auto subs = all_subgroups(g);
    for (const auto& h : subs)
      for (const auto& k : subs) {
        if (!is_subset(k, h) || !is_normal_in(k, h)) continue;
        const auto e = epsilon(h, k);
        CHECK(mul(e, e) == e);
      }
  }
}

TEST_CASE("epsilon of a sub-kernel absorbs epsilon of the pair") {
  // for K normal in H with H/K cyclic, A normal in H, D = K ∩ A:
  // eps(H,K) * eps(A,D) = eps(H,K)
  for (auto& g : small_fixtures()) {
    if (g->order() > 60) continue;
    const auto subs = all_subgroups(g);
    for (const auto& h : subs)
      for (const auto& k : subs) {
        if (!is_subset(k, h) || !is_normal_in(k, h) || !is_cyclic_quotient(h, k)) continue;
        for (const auto& a : subs) {
          if (!is_subset(a, h) || !is_normal_in(a, h)) continue;
          const auto d = intersect(k, a);
          const auto lhs = mul(epsilon(h, k), epsilon(a, d));
          CHECK(lhs == epsilon(h, k));
        }
      }
  }
}

TEST_CASE("e_sum commutes with the ambient subgroup") {
  std::mt19937 rng(7);
  for (auto& g : small_fixtures()) {
    const auto subs = all_subgroups(g);
    std::uniform_int_distribution<std::size_t> pick(0, subs.size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
      const auto& h = subs[pick(rng)];
      for (const auto& k : normal_subgroups(h)) {
        if (!is_cyclic_quotient(h, k)) continue;
        const auto e = e_sum(full_subgroup(g), h, k);
        CHECK(commutes_with_all(e, full_subgroup(g)));
      }
    }
  }
}

TEST_CASE("kernel-encoded inertia matches the explicit character oracle") {
  std::mt19937 rng(99);
  for (auto& g : small_fixtures()) {
    if (g->order() > 60) continue;
    const auto subs = all_subgroups(g);
    const auto& G = *g;
    for (const auto& h : subs) {
      const auto h_normals = normal_subgroups(h);
      for (const auto& a : h_normals)
        for (const auto& k : h_normals) {
          if (!is_subset(k, a) || !is_cyclic_quotient(a, k)) continue;
          const auto by_kernel = inertia(h, a, k);
          const auto chi = CyclicCharacter::of(a, k);
          std::vector<int> by_character;
          for (int x : h.members()) {
            bool fixes = true;
            for (int y : a.members()) {
              // chi^x(y) = chi(x y x^-1)
              const int moved = G.mul(G.mul(x, y), G.inv(x));
              if (chi.value.at(moved) != chi.value.at(y)) {
                fixes = false;
                break;
              }
            }
            if (fixes) by_character.push_back(x);
          }
          CHECK(by_kernel.members() == by_character);
        }
    }
  }
}

TEST_CASE("level idempotents: orthogonal conjugates and centralizer containment") {
  for (const auto* name : {"paper-ex2", "symmetric(4)", "dihedral(6)"}) {
    auto g = builtin(name);
    for (const auto& tree : forest(g))
      for (const auto& leaf : shoda_leaves(tree)) {
        const auto& lt = tree.nodes[static_cast<std::size_t>(leaf.node)].triple;
        for (int i = 2; i <= leaf.height(); ++i) {
          const auto& hi = tree.nodes[static_cast<std::size_t>(leaf.path[i - 1])].triple.H;
          const auto& ki = tree.nodes[static_cast<std::size_t>(leaf.path[i - 1])].triple.K;
          const auto& hprev = tree.nodes[static_cast<std::size_t>(leaf.path[i - 2])].triple.H;
          const auto ei = e_sum(hi, lt.H, lt.K);
          // distinct conjugates over the previous level are mutually orthogonal
          std::set<std::vector<std::pair<int, Rational>>> distinct;
          for (int x : hprev.members()) distinct.insert(conj_elt(ei, x).terms);
          std::vector<AlgebraElement> cs;
          for (const auto& t : distinct) cs.push_back(AlgebraElement{g, t});
          for (std::size_t p = 0; p < cs.size(); ++p)
            for (std::size_t q = p + 1; q < cs.size(); ++q)
              CHECK(mul(cs[p], cs[q]).is_zero());
          // the centralizer of the level idempotent normalizes the kernel
          const auto cen = centralizer_of_element_in(hprev, ei);
          CHECK(is_subset(cen, normalizer(hprev, ki)));
        }
      }
  }
}

TEST_CASE("goodness substitution gives the same alpha") {
  for (const auto* name : {"paper-ex2", "symmetric(4)", "dihedral(6)", "quaternion8"}) {
    auto g = builtin(name);
    for (const auto& tree : forest(g))
      for (const auto& leaf : shoda_leaves(tree)) {
        if (!good_leaf(tree, leaf)) continue;
        CHECK(alpha_formula(tree, leaf) == alpha_formula_by_normalizers(tree, leaf));
      }
  }
}

TEST_CASE("ranks over a complete orthogonal family sum to the group order") {
  for (const auto* name : {"symmetric(3)", "dihedral(4)", "cyclic(6)", "paper-ex2"}) {
    auto g = builtin(name);
    const auto records = build_records(g, forest(g));
    const auto rep = verify_complete(g, records, true);
    CHECK(rep.sums_to_one);
    CHECK(rep.rank_sum == g->order());
  }
}
