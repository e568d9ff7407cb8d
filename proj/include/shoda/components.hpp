#pragma once

#include <vector>

#include "shoda/idempotents.hpp"
#include "shoda/tree.hpp"

namespace shoda {

/// Numeric shadow of a simple component: matrix degrees and crossed-product
/// factor orders of the nested description, over the field of k-th roots of
/// unity. predicted_dimension = phi(k) * (prod matrix_degree)^2 * prod
/// crossed_order.
struct TowerLevel {
  long long matrix_degree = 1;
  long long crossed_order = 1;
};

struct ComponentTower {
  long long k = 1;             // [H : K]
  long long base_field_degree = 1;  // Euler phi(k)
  std::vector<TowerLevel> levels;   // outermost first; empty for a height-1 leaf
  long long predicted_dimension = 1;
};

long long euler_phi(long long n);

ComponentTower tower_of_leaf(const ShodaTree& t, const LeafRef& leaf);

// predicted_dimension must equal ideal_rank(record.pci); throws AuditFailure
// with both numbers otherwise, returns the agreed dimension
long long dimension_audit(const ShodaRecord& record, const ComponentTower& tower);

}  // namespace shoda
