#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "shoda/errors.hpp"

namespace shoda {

class GroupTable;
using GroupPtr = std::shared_ptr<const GroupTable>;

/// A finite group materialized as a dense multiplication table over element
/// indices 0..order-1. Index 0 is always the identity. Immutable once built.
class GroupTable {
 public:
  // Validates the table before returning: Latin square, identity at 0,
  // inverses, and associativity (exhaustive up to audit_cap, spot-checked on
  // 10000 random triples above it).
  static GroupPtr create(int order, std::vector<std::uint16_t> mul,
                         std::vector<std::string> labels = {},
                         std::map<std::string, int> named_gens = {},
                         int audit_cap = kDefaultAuditCap);

  static constexpr int kDefaultAuditCap = 256;
  static constexpr int kMaxOrder = 65535;

  int order() const { return order_; }
  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return 0; }

  int conj(int x, int g) const { return mul(mul(inv(g), x), g); }  // x^g = g^-1 x g
  int commutator(int x, int y) const { return mul(inv(mul(y, x)), mul(x, y)); }  // [x,y]=x^-1 y^-1 x y
  int power(int x, long long e) const;
  int element_order(int x) const;
  bool is_abelian() const;

  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::map<std::string, int>& named_gens() const { return named_gens_; }

  // orbits under conjugation, each sorted, ordered by smallest member
  std::vector<std::vector<int>> conjugacy_classes() const;

 private:
  GroupTable() = default;
  int order_ = 0;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> inv_;
  std::vector<std::string> labels_;
  std::map<std::string, int> named_gens_;
};

/// A subgroup as a sorted set of element indices of a parent GroupTable,
/// with O(1) membership and a lazily computed generating set.
class Subgroup {
 public:
  Subgroup() = default;
  // members must be closed under mul/inv; validated on construction
  Subgroup(GroupPtr parent, std::vector<int> members);

  // fast path for internal algorithms whose output is a subgroup by
  // construction; only identity membership and Lagrange are checked
  static Subgroup unchecked(GroupPtr parent, std::vector<int> members);

  const GroupPtr& parent() const { return parent_; }
  const std::vector<int>& members() const { return members_; }
  int order() const { return static_cast<int>(members_.size()); }
  bool contains(int x) const { return mask_[x] != 0; }
  const std::vector<int>& gens() const;  // cached

  bool operator==(const Subgroup& o) const {
    return parent_ == o.parent_ && members_ == o.members_;
  }
  bool operator!=(const Subgroup& o) const { return !(*this == o); }
  // order by (size, member list); total order used for all deterministic tie-breaks
  bool operator<(const Subgroup& o) const {
    if (members_.size() != o.members_.size()) return members_.size() < o.members_.size();
    return members_ < o.members_;
  }

 private:
  GroupPtr parent_;
  std::vector<int> members_;
  std::vector<std::uint8_t> mask_;
  mutable std::vector<int> gens_;
};

/// Coset group of a normal subgroup, with the projection homomorphism and a
/// section picking the least representative of each coset. The identity coset
/// has index 0.
struct QuotientGroup {
  GroupPtr table;
  std::vector<int> projection;  // parent element -> coset index, -1 off the domain
  std::vector<int> section;     // coset index -> least representative

  // preimage in the parent of a set of coset indices
  Subgroup pullback(const std::vector<int>& coset_members, const Subgroup& domain) const;
};

Subgroup trivial_subgroup(GroupPtr g);
Subgroup full_subgroup(GroupPtr g);

// smallest subgroup containing gens (breadth-first product closure)
Subgroup closure(GroupPtr g, const std::vector<int>& gens);

Subgroup conjugate_subgroup(const Subgroup& h, int g);  // H^g = g^-1 H g

// N_U(H) = { u in U : H^u = H }
Subgroup normalizer(const Subgroup& u, const Subgroup& h);

// elements of U commuting with every member of the given set
Subgroup centralizer_of_set(const Subgroup& u, const std::vector<int>& elems);

// largest normal subgroup of G contained in H
Subgroup core(GroupPtr g, const Subgroup& h);

Subgroup intersect(const Subgroup& a, const Subgroup& b);
Subgroup join(const Subgroup& a, const Subgroup& b);

bool is_subset(const Subgroup& a, const Subgroup& b);       // a <= b
bool is_normal_in(const Subgroup& h, const Subgroup& u);    // every u-conjugate of H is H
bool is_abelian(const Subgroup& s);
Subgroup center_of(const Subgroup& s);

// true iff [h,a] lies in K for every h in H, a in A
bool commutator_set_in(const Subgroup& h, const Subgroup& a, const Subgroup& k);

// all subgroups normal in S, each exactly once, sorted by (order, member list)
std::vector<Subgroup> normal_subgroups(const Subgroup& s);
std::vector<Subgroup> normal_subgroups(GroupPtr g);

// coset group S/K; requires K normal in S
QuotientGroup quotient(const Subgroup& s, const Subgroup& k);
QuotientGroup quotient(GroupPtr g, const Subgroup& k);

// true iff some coset generates A/K; requires K normal in A
bool is_cyclic_quotient(const Subgroup& a, const Subgroup& k);

// minimal normal subgroups of H properly containing K, pulled back from H/K
std::vector<Subgroup> minimal_normals_over(const Subgroup& h, const Subgroup& k);

// among normal subgroups M of H with K <= M and M/K abelian, the one of
// maximal order; ties broken by lexicographically smallest member list
Subgroup maximal_abelian_normal_over(const Subgroup& h, const Subgroup& k);

// every subgroup of G exactly once (cyclic seeding + iterative join closure);
// throws CapExceeded when |G| > cap
std::vector<Subgroup> all_subgroups(GroupPtr g, int cap = 2000);

// every subgroup and every quotient of G is abelian or has a non-central
// abelian normal subgroup
bool is_in_class_c(GroupPtr g, int cap = 2000);

}  // namespace shoda
