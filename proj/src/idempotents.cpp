#include "shoda/idempotents.hpp"

#include <algorithm>
#include <future>
#include <set>

namespace shoda {

namespace {

Rational index_ratio(const Subgroup& big, const Subgroup& small) {
  return Rational(big.order(), small.order());
}

}  // namespace

Rational alpha_formula(const ShodaTree& t, const LeafRef& leaf) {
  const auto& nodes = t.nodes;
  const auto& lt = nodes[static_cast<std::size_t>(leaf.node)].triple;
  const int n = leaf.height();
  if (n == 1) return Rational(1);
  const auto eps = epsilon(lt.H, lt.K);
  const Subgroup cen_g = centralizer_of_element_in(full_subgroup(t.group), eps);
  const auto& h_prev = nodes[static_cast<std::size_t>(leaf.path[n - 2])].triple.H;
  const Subgroup cen_prev = centralizer_of_element_in(h_prev, eps);
  Rational alpha = index_ratio(cen_g, cen_prev);
  for (int i = 2; i <= n - 1; ++i) {
    const auto& hi = nodes[static_cast<std::size_t>(leaf.path[i - 1])].triple.H;
    const auto& hi_prev = nodes[static_cast<std::size_t>(leaf.path[i - 2])].triple.H;
    const Subgroup cen = centralizer_of_element_in(hi_prev, e_sum(hi, lt.H, lt.K));
    alpha /= index_ratio(cen, hi);
  }
  return alpha;
}

Rational alpha_formula_by_normalizers(const ShodaTree& t, const LeafRef& leaf) {
  const auto& nodes = t.nodes;
  const auto& lt = nodes[static_cast<std::size_t>(leaf.node)].triple;
  const int n = leaf.height();
  if (n == 1) return Rational(1);
  const auto eps = epsilon(lt.H, lt.K);
  const Subgroup cen_g = centralizer_of_element_in(full_subgroup(t.group), eps);
  const auto& h_prev = nodes[static_cast<std::size_t>(leaf.path[n - 2])].triple.H;
  const Subgroup cen_prev = centralizer_of_element_in(h_prev, eps);
  Rational alpha = index_ratio(cen_g, cen_prev);
  for (int i = 2; i <= n - 1; ++i) {
    const auto& here = nodes[static_cast<std::size_t>(leaf.path[i - 1])].triple;
    const auto& hi_prev = nodes[static_cast<std::size_t>(leaf.path[i - 2])].triple.H;
    const Subgroup nrm = normalizer(hi_prev, here.K);
    alpha /= index_ratio(nrm, here.H);
  }
  return alpha;
}

AlgebraElement pci_of(GroupPtr g, const Subgroup& h, const Subgroup& k, const Rational& alpha) {
  AlgebraElement e = scale(e_sum(full_subgroup(g), h, k), alpha);
  if (!is_idempotent(e) || !commutes_with_all(e, full_subgroup(g)))
    throw IdempotencyFailure("alpha * e(G,H,K) is not a central idempotent");
  return e;
}

bool is_strong_shoda(GroupPtr g, const Subgroup& h, const Subgroup& k) {
  if (!is_subset(k, h) || !is_normal_in(k, h) || !is_cyclic_quotient(h, k))
    throw PreconditionError("strong-pair test requires K normal in H with H/K cyclic");
  const Subgroup ngk = normalizer(full_subgroup(g), k);
  if (!is_subset(h, ngk) || !is_normal_in(h, ngk)) return false;

  // H/K must be a maximal abelian subgroup of N_G(K)/K, i.e. self-centralizing
  const auto q = quotient(ngk, k);
  std::vector<int> him;
  for (int x : h.members()) him.push_back(q.projection[x]);
  std::sort(him.begin(), him.end());
  him.erase(std::unique(him.begin(), him.end()), him.end());
  const Subgroup h_bar = Subgroup::unchecked(q.table, him);
  if (!is_abelian(h_bar)) return false;
  if (centralizer_of_set(full_subgroup(q.table), h_bar.members()) != h_bar) return false;

  // distinct G-conjugates of eps(H,K) pairwise orthogonal
  const auto eps = epsilon(h, k);
  std::set<std::vector<std::pair<int, Rational>>> distinct;
  for (int x = 0; x < g->order(); ++x) distinct.insert(conj_elt(eps, x).terms);
  std::vector<AlgebraElement> conjugates;
  for (const auto& t : distinct) conjugates.push_back(AlgebraElement{g, t});
  for (std::size_t i = 0; i < conjugates.size(); ++i)
    for (std::size_t j = i + 1; j < conjugates.size(); ++j)
      if (!mul(conjugates[i], conjugates[j]).is_zero()) return false;
  return true;
}

bool cor52_precheck(const ShodaTree& t, const LeafRef& leaf) {
  if (leaf.height() == 1) return true;
  const auto& second = t.nodes[static_cast<std::size_t>(leaf.path[1])].triple;
  const auto& h = t.nodes[static_cast<std::size_t>(leaf.node)].triple.H;
  const Subgroup nrm = normalizer(full_subgroup(t.group), second.K);
  return is_subset(h, nrm) && is_normal_in(h, nrm);
}

bool is_shoda_bruteforce(GroupPtr g, const Subgroup& h, const Subgroup& k) {
  if (!is_subset(k, h)) throw PreconditionError("K must be contained in H");
  if (!is_normal_in(k, h) || !is_cyclic_quotient(h, k)) return false;
  const auto& G = *g;
  for (int x = 0; x < G.order(); ++x) {
    if (h.contains(x)) continue;
    bool hypothesis = true;  // [H,x] ∩ H <= K
    for (int y : h.members()) {
      const int c = G.commutator(y, x);
      if (h.contains(c) && !k.contains(c)) {
        hypothesis = false;
        break;
      }
    }
    if (hypothesis) return false;
  }
  return true;
}

std::vector<ShodaRecord> build_records(GroupPtr g, const std::vector<ShodaTree>& trees,
                                       int jobs) {
  struct Job {
    int tree_index;
    LeafRef leaf;
  };
  std::vector<Job> todo;
  for (std::size_t ti = 0; ti < trees.size(); ++ti)
    for (auto& leaf : shoda_leaves(trees[ti]))
      todo.push_back(Job{static_cast<int>(ti), std::move(leaf)});

  auto make = [&g](const ShodaTree& tree, const Job& job) {
    const auto& lt = tree.nodes[static_cast<std::size_t>(job.leaf.node)].triple;
    ShodaRecord r;
    r.H = lt.H;
    r.K = lt.K;
    r.N = tree.normal;
    r.tree_index = job.tree_index;
    r.leaf = job.leaf;
    r.height = job.leaf.height();
    r.alpha = alpha_formula(tree, job.leaf);
    r.pci = pci_of(g, lt.H, lt.K, r.alpha);
    r.good = good_leaf(tree, job.leaf);
    r.cor52 = cor52_precheck(tree, job.leaf);
    r.strong = is_strong_shoda(g, lt.H, lt.K);
    return r;
  };

  std::vector<ShodaRecord> out(todo.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < todo.size(); ++i)
      out[i] = make(trees[static_cast<std::size_t>(todo[i].tree_index)], todo[i]);
  } else {
    // workers get their own tree copies: subgroups cache generating sets
    // lazily, so sharing nodes across threads would race
    std::vector<std::future<ShodaRecord>> tasks;
    for (const auto& job : todo)
      tasks.push_back(std::async(
          std::launch::async,
          [&make, job, tree = trees[static_cast<std::size_t>(job.tree_index)]] {
            return make(tree, job);
          }));
    for (std::size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i].get();
  }
  return out;
}

VerifyReport verify_complete(GroupPtr g, const std::vector<ShodaRecord>& records,
                             bool with_ranks) {
  VerifyReport rep;
  rep.record_count = static_cast<int>(records.size());
  rep.group_order = g->order();

  std::set<std::vector<std::pair<int, Rational>>> distinct;
  for (const auto& r : records) distinct.insert(r.pci.terms);
  rep.distinct_pci_count = static_cast<int>(distinct.size());

  rep.pairwise_orthogonal = true;
  rep.orthogonality.assign(records.size(), std::vector<bool>(records.size(), true));
  for (std::size_t i = 0; i < records.size(); ++i)
    for (std::size_t j = i + 1; j < records.size(); ++j) {
      if (records[i].pci == records[j].pci) continue;
      const bool zero = mul(records[i].pci, records[j].pci).is_zero();
      rep.orthogonality[i][j] = rep.orthogonality[j][i] = zero;
      if (!zero) rep.pairwise_orthogonal = false;
    }

  AlgebraElement sum = zero_element(g);
  for (const auto& t : distinct) sum = add(sum, AlgebraElement{g, t});
  rep.sums_to_one = (sum == one_element(g));

  rep.all_good = std::all_of(records.begin(), records.end(),
                             [](const ShodaRecord& r) { return r.good; });

  if (with_ranks) {
    rep.ranks_checked = true;
    std::set<std::vector<std::pair<int, Rational>>> seen;
    for (const auto& r : records) {
      if (!seen.insert(r.pci.terms).second) continue;
      const long long rank = ideal_rank(r.pci);
      rep.ranks.push_back(rank);
      rep.rank_sum += rank;
    }
  }
  return rep;
}

std::vector<AlgebraElement> bruteforce_pci_set(GroupPtr g, int subgroup_cap) {
  const auto subs = all_subgroups(g, subgroup_cap);
  std::set<std::vector<std::pair<int, Rational>>> distinct;
  for (const auto& h : subs)
    for (const auto& k : subs) {
      if (!is_subset(k, h)) continue;
      if (!is_normal_in(k, h) || !is_cyclic_quotient(h, k)) continue;
      if (!is_shoda_bruteforce(g, h, k)) continue;
      const auto e = e_sum(full_subgroup(g), h, k);
      const Rational lambda = idempotency_scalar(e);
      distinct.insert(scale(e, Rational(1) / lambda).terms);
    }
  std::vector<AlgebraElement> out;
  for (const auto& t : distinct) out.push_back(AlgebraElement{g, t});
  return out;
}

}  // namespace shoda
