#include "shoda/components.hpp"

#include <string>

namespace shoda {

long long euler_phi(long long n) {
  long long out = n;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out -= out / p;
    while (n % p == 0) n /= p;
  }
  if (n > 1) out -= out / n;
  return out;
}

ComponentTower tower_of_leaf(const ShodaTree& t, const LeafRef& leaf) {
  const auto& nodes = t.nodes;
  const auto& lt = nodes[static_cast<std::size_t>(leaf.node)].triple;
  const int n = leaf.height();
  ComponentTower tower;
  tower.k = lt.H.order() / lt.K.order();
  tower.base_field_degree = euler_phi(tower.k);
  long long degree_product = 1, crossed_product = 1;
  for (int i = 1; i <= n - 1; ++i) {
    const auto& hi = nodes[static_cast<std::size_t>(leaf.path[i - 1])].triple.H;
    const auto& hnext = nodes[static_cast<std::size_t>(leaf.path[i])].triple.H;
    const Subgroup cen = centralizer_of_element_in(hi, e_sum(hnext, lt.H, lt.K));
    TowerLevel level;
    level.matrix_degree = hi.order() / cen.order();
    if (i == n - 1) {
      const Subgroup nrm = normalizer(hi, lt.K);
      level.crossed_order = nrm.order() / lt.H.order();
    } else {
      level.crossed_order = cen.order() / hnext.order();
    }
    degree_product *= level.matrix_degree;
    crossed_product *= level.crossed_order;
    tower.levels.push_back(level);
  }
  tower.predicted_dimension =
      tower.base_field_degree * degree_product * degree_product * crossed_product;
  return tower;
}

long long dimension_audit(const ShodaRecord& record, const ComponentTower& tower) {
  const long long rank = ideal_rank(record.pci);
  if (rank != tower.predicted_dimension)
    throw AuditFailure("component dimension mismatch: tower predicts " +
                       std::to_string(tower.predicted_dimension) + ", ideal rank is " +
                       std::to_string(rank));
  return rank;
}

}  // namespace shoda
