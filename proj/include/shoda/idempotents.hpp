#pragma once

#include <vector>

#include "shoda/algebra.hpp"
#include "shoda/tree.hpp"

namespace shoda {

/// Everything the pipeline knows about one Shoda pair: where it came from,
/// its alpha, its primitive central idempotent and the structural flags.
struct ShodaRecord {
  Subgroup H;
  Subgroup K;
  Subgroup N;       // the tree it came from
  int tree_index;   // position in the canonical forest
  LeafRef leaf;
  int height;
  Rational alpha;
  AlgebraElement pci;
  bool strong = false;
  bool good = false;
  bool cor52 = false;  // sufficient precheck for strongness
};

// alpha along the root path:
//   [Cen_G(eps(H,K)) : Cen_{H_{n-1}}(eps(H,K))]
//   / prod_{2<=i<=n-1} [Cen_{H_{i-1}}(e(H_i,H,K)) : H_i]
// (1 for a single-vertex path)
Rational alpha_formula(const ShodaTree& t, const LeafRef& leaf);

// the same product with Cen_{H_{i-1}}(e(H_i,H,K)) replaced by
// N_{H_{i-1}}(ker theta_i); agrees with alpha_formula on good leaves
Rational alpha_formula_by_normalizers(const ShodaTree& t, const LeafRef& leaf);

// alpha * e(G,H,K), asserted to be a central idempotent
AlgebraElement pci_of(GroupPtr g, const Subgroup& h, const Subgroup& k, const Rational& alpha);

// direct check of the strong-pair conditions: K <| H <| N_G(K); H/K cyclic
// and self-centralizing in N_G(K)/K; distinct G-conjugates of eps(H,K)
// mutually orthogonal
bool is_strong_shoda(GroupPtr g, const Subgroup& h, const Subgroup& k);

// H normal in N_G(ker theta_2) implies strong; cheap sufficient condition
bool cor52_precheck(const ShodaTree& t, const LeafRef& leaf);

// literal evaluation of the Shoda criterion: K <| H with H/K cyclic, and
// every g with [H,g] ∩ H <= K lies in H
bool is_shoda_bruteforce(GroupPtr g, const Subgroup& h, const Subgroup& k);

std::vector<ShodaRecord> build_records(GroupPtr g, const std::vector<ShodaTree>& trees,
                                       int jobs = 1);

struct VerifyReport {
  int record_count = 0;
  int distinct_pci_count = 0;
  bool pairwise_orthogonal = false;
  bool sums_to_one = false;
  bool all_good = false;
  bool ranks_checked = false;
  long long rank_sum = 0;
  long long group_order = 0;
  std::vector<long long> ranks;  // per distinct PCI, in record order
  // orthogonality[i][j]: product of records i and j vanishes (diagonal true)
  std::vector<std::vector<bool>> orthogonality;

  bool complete() const {
    return pairwise_orthogonal && sums_to_one && distinct_pci_count == record_count &&
           (!ranks_checked || rank_sum == group_order);
  }
};

// orthogonality matrix, dedup count, sum-to-one flag, goodness, rank
// accounting over the records of a forest
VerifyReport verify_complete(GroupPtr g, const std::vector<ShodaRecord>& records,
                             bool with_ranks = true);

// all (H,K) with the brute-force Shoda criterion, PCIs formed through the
// idempotency scalar; the oracle route for tiny monomial groups
std::vector<AlgebraElement> bruteforce_pci_set(GroupPtr g, int subgroup_cap = 2000);

}  // namespace shoda
