#include "shoda/group.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

namespace shoda {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u + static_cast<std::size_t>(x) + 0x9e3779b9u;
    return h;
  }
};

}  // namespace

GroupPtr GroupTable::create(int order, std::vector<std::uint16_t> mul,
                            std::vector<std::string> labels,
                            std::map<std::string, int> named_gens, int audit_cap) {
  if (order <= 0 || order > kMaxOrder)
    throw MalformedSpec("group order out of range: " + std::to_string(order));
  if (mul.size() != static_cast<std::size_t>(order) * order)
    throw MalformedSpec("multiplication table has wrong shape");
  const std::size_t n = static_cast<std::size_t>(order);
  for (auto v : mul)
    if (v >= n) throw NotClosed("table entry out of range");

  auto at = [&](int a, int b) { return mul[static_cast<std::size_t>(a) * n + b]; };

  for (int x = 0; x < order; ++x)
    if (at(0, x) != x || at(x, 0) != x)
      throw NotClosed("element 0 is not a two-sided identity");

  // Latin square: every row and column is a permutation
  std::vector<std::uint8_t> seen(n);
  for (int a = 0; a < order; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < order; ++b) {
      if (seen[at(a, b)]++) throw NotClosed("row " + std::to_string(a) + " is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < order; ++b) {
      if (seen[at(b, a)]++) throw NotClosed("column " + std::to_string(a) + " is not a permutation");
    }
  }

  std::vector<std::uint16_t> inv(n);
  for (int a = 0; a < order; ++a) {
    int found = -1;
    for (int b = 0; b < order; ++b)
      if (at(a, b) == 0) {
        found = b;
        break;
      }
    if (found < 0 || at(found, a) != 0) throw NotClosed("missing two-sided inverse");
    inv[a] = static_cast<std::uint16_t>(found);
  }

  if (order <= audit_cap) {
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b) {
        const int ab = at(a, b);
        for (int c = 0; c < order; ++c)
          if (at(ab, c) != at(a, at(b, c))) throw NotClosed("associativity fails");
      }
  } else {
    std::mt19937_64 rng(0x51053u);
    std::uniform_int_distribution<int> pick(0, order - 1);
    for (int i = 0; i < 10000; ++i) {
      const int a = pick(rng), b = pick(rng), c = pick(rng);
      if (at(at(a, b), c) != at(a, at(b, c))) throw NotClosed("associativity spot-check fails");
    }
  }

  if (labels.empty()) {
    labels.resize(n);
    labels[0] = "1";
    for (int i = 1; i < order; ++i) labels[i] = "e" + std::to_string(i);
  }
  if (labels.size() != n) throw MalformedSpec("label list has wrong length");

  auto g = std::shared_ptr<GroupTable>(new GroupTable());
  g->order_ = order;
  g->mul_ = std::move(mul);
  g->inv_ = std::move(inv);
  g->labels_ = std::move(labels);
  g->named_gens_ = std::move(named_gens);
  return g;
}

int GroupTable::power(int x, long long e) const {
  const int n = element_order(x);
  long long r = e % n;
  if (r < 0) r += n;
  int acc = 0;
  for (long long i = 0; i < r; ++i) acc = mul(acc, x);
  return acc;
}

int GroupTable::element_order(int x) const {
  int n = 1, y = x;
  while (y != 0) {
    y = mul(y, x);
    ++n;
  }
  return n;
}

bool GroupTable::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<int>> GroupTable::conjugacy_classes() const {
  std::vector<std::uint8_t> done(order_, 0);
  std::vector<std::vector<int>> classes;
  for (int x = 0; x < order_; ++x) {
    if (done[x]) continue;
    std::vector<int> cls;
    for (int g = 0; g < order_; ++g) {
      const int y = conj(x, g);
      if (!done[y]) {
        done[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<int> members)
    : Subgroup(unchecked(std::move(parent), std::move(members))) {
  for (int a : members_) {
    if (!mask_[parent_->inv(a)]) throw PreconditionError("subgroup not closed under inverse");
    for (int b : members_)
      if (!mask_[parent_->mul(a, b)]) throw PreconditionError("subgroup not closed under product");
  }
}

Subgroup Subgroup::unchecked(GroupPtr parent, std::vector<int> members) {
  Subgroup s;
  s.parent_ = std::move(parent);
  s.members_ = std::move(members);
  std::sort(s.members_.begin(), s.members_.end());
  s.members_.erase(std::unique(s.members_.begin(), s.members_.end()), s.members_.end());
  const int n = s.parent_->order();
  s.mask_.assign(n, 0);
  for (int x : s.members_) {
    if (x < 0 || x >= n) throw PreconditionError("subgroup member out of range");
    s.mask_[x] = 1;
  }
  if (s.members_.empty() || s.members_[0] != 0)
    throw PreconditionError("subgroup must contain the identity");
  if (n % s.order() != 0) throw PreconditionError("subgroup order does not divide group order");
  return s;
}

const std::vector<int>& Subgroup::gens() const {
  if (!gens_.empty() || order() == 1) return gens_;
  // greedy: grow a closure until it covers all members
  std::vector<std::uint8_t> have(parent_->order(), 0);
  have[0] = 1;
  std::vector<int> got{0};
  for (int x : members_) {
    if (have[x]) continue;
    gens_.push_back(x);
    // extend the closure with the new generator
    std::vector<int> frontier = got;
    std::size_t head = 0;
    got.push_back(x);
    have[x] = 1;
    frontier.push_back(x);
    while (head < frontier.size()) {
      const int y = frontier[head++];
      for (int g : gens_) {
        const int z = parent_->mul(y, g);
        if (!have[z]) {
          have[z] = 1;
          got.push_back(z);
          frontier.push_back(z);
        }
      }
    }
    if (got.size() == members_.size()) break;
  }
  return gens_;
}

Subgroup trivial_subgroup(GroupPtr g) { return Subgroup::unchecked(std::move(g), {0}); }

Subgroup full_subgroup(GroupPtr g) {
  std::vector<int> all(g->order());
  for (int i = 0; i < g->order(); ++i) all[i] = i;
  return Subgroup::unchecked(std::move(g), std::move(all));
}

Subgroup closure(GroupPtr g, const std::vector<int>& gens) {
  const int n = g->order();
  std::vector<std::uint8_t> have(n, 0);
  std::vector<int> out{0};
  have[0] = 1;
  std::vector<int> frontier{0};
  std::size_t head = 0;
  while (head < frontier.size()) {
    const int x = frontier[head++];
    for (int s : gens) {
      if (s < 0 || s >= n) throw PreconditionError("generator index out of range");
      const int y = g->mul(x, s);
      if (!have[y]) {
        have[y] = 1;
        out.push_back(y);
        frontier.push_back(y);
      }
    }
  }
  return Subgroup::unchecked(std::move(g), std::move(out));
}

Subgroup conjugate_subgroup(const Subgroup& h, int g) {
  const auto& G = *h.parent();
  std::vector<int> out;
  out.reserve(h.order());
  for (int x : h.members()) out.push_back(G.conj(x, g));
  return Subgroup::unchecked(h.parent(), std::move(out));
}

Subgroup normalizer(const Subgroup& u, const Subgroup& h) {
  const auto& G = *u.parent();
  std::vector<int> out;
  for (int g : u.members()) {
    bool ok = true;
    for (int x : h.members())
      if (!h.contains(G.conj(x, g))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return Subgroup::unchecked(u.parent(), std::move(out));
}

Subgroup centralizer_of_set(const Subgroup& u, const std::vector<int>& elems) {
  const auto& G = *u.parent();
  std::vector<int> out;
  for (int g : u.members()) {
    bool ok = true;
    for (int x : elems)
      if (G.mul(g, x) != G.mul(x, g)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(g);
  }
  return Subgroup::unchecked(u.parent(), std::move(out));
}

Subgroup core(GroupPtr g, const Subgroup& h) {
  const auto& G = *g;
  std::vector<std::uint8_t> keep(G.order(), 0);
  for (int x : h.members()) keep[x] = 1;
  for (int t = 0; t < G.order(); ++t)
    for (int x = 0; x < G.order(); ++x)
      if (keep[x] && !h.contains(G.conj(x, G.inv(t)))) keep[x] = 0;
  std::vector<int> out;
  for (int x = 0; x < G.order(); ++x)
    if (keep[x]) out.push_back(x);
  return Subgroup::unchecked(std::move(g), std::move(out));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  std::vector<int> out;
  for (int x : a.members())
    if (b.contains(x)) out.push_back(x);
  return Subgroup::unchecked(a.parent(), std::move(out));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<int> g = a.gens();
  for (int x : b.gens()) g.push_back(x);
  return closure(a.parent(), g);
}

bool is_subset(const Subgroup& a, const Subgroup& b) {
  for (int x : a.members())
    if (!b.contains(x)) return false;
  return true;
}

bool is_normal_in(const Subgroup& h, const Subgroup& u) {
  const auto& G = *h.parent();
  for (int g : u.gens())
    for (int x : h.members())
      if (!h.contains(G.conj(x, g))) return false;
  return true;
}

bool is_abelian(const Subgroup& s) {
  const auto& G = *s.parent();
  const auto& m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (G.mul(m[i], m[j]) != G.mul(m[j], m[i])) return false;
  return true;
}

Subgroup center_of(const Subgroup& s) { return centralizer_of_set(s, s.members()); }

bool commutator_set_in(const Subgroup& h, const Subgroup& a, const Subgroup& k) {
  const auto& G = *h.parent();
  for (int x : h.members())
    for (int y : a.members())
      if (!k.contains(G.commutator(x, y))) return false;
  return true;
}

namespace {

// conjugacy classes of S under S-conjugation, in parent coordinates
std::vector<std::vector<int>> classes_of(const Subgroup& s) {
  const auto& G = *s.parent();
  std::vector<std::uint8_t> done(G.order(), 0);
  std::vector<std::vector<int>> classes;
  for (int x : s.members()) {
    if (done[x]) continue;
    std::vector<int> cls;
    for (int g : s.members()) {
      const int y = G.conj(x, g);
      if (!done[y]) {
        done[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace

std::vector<Subgroup> normal_subgroups(const Subgroup& s) {
  // join-closure of the normal closures of conjugacy classes
  auto classes = classes_of(s);
  std::unordered_set<std::vector<int>, VecHash> seen;
  std::vector<Subgroup> out;
  auto add = [&](Subgroup n) {
    if (seen.insert(n.members()).second) out.push_back(std::move(n));
  };
  add(trivial_subgroup(s.parent()));
  for (const auto& cls : classes) add(closure(s.parent(), cls));
  for (std::size_t i = 1; i < out.size(); ++i)
    for (std::size_t j = 1; j < i; ++j) add(join(out[i], out[j]));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> normal_subgroups(GroupPtr g) { return normal_subgroups(full_subgroup(g)); }

QuotientGroup quotient(const Subgroup& s, const Subgroup& k) {
  if (!is_subset(k, s) || !is_normal_in(k, s))
    throw PreconditionError("quotient requires a normal subgroup");
  const auto& G = *s.parent();
  const int q = s.order() / k.order();
  QuotientGroup out;
  out.projection.assign(G.order(), -1);
  out.section.reserve(q);
  for (int x : s.members()) {
    if (out.projection[x] >= 0) continue;
    const int c = static_cast<int>(out.section.size());
    out.section.push_back(x);
    for (int n : k.members()) out.projection[G.mul(x, n)] = c;
  }
  std::vector<std::uint16_t> table(static_cast<std::size_t>(q) * q);
  std::vector<std::string> labels(q);
  for (int a = 0; a < q; ++a) {
    labels[a] = G.label(out.section[a]);
    for (int b = 0; b < q; ++b)
      table[static_cast<std::size_t>(a) * q + b] =
          static_cast<std::uint16_t>(out.projection[G.mul(out.section[a], out.section[b])]);
  }
  out.table = GroupTable::create(q, std::move(table), std::move(labels));
  return out;
}

QuotientGroup quotient(GroupPtr g, const Subgroup& k) { return quotient(full_subgroup(g), k); }

Subgroup QuotientGroup::pullback(const std::vector<int>& coset_members,
                                 const Subgroup& domain) const {
  std::vector<std::uint8_t> want(table->order(), 0);
  for (int c : coset_members) want[c] = 1;
  std::vector<int> out;
  for (int x : domain.members())
    if (projection[x] >= 0 && want[projection[x]]) out.push_back(x);
  return Subgroup::unchecked(domain.parent(), std::move(out));
}

bool is_cyclic_quotient(const Subgroup& a, const Subgroup& k) {
  if (!is_subset(k, a) || !is_normal_in(k, a))
    throw PreconditionError("cyclic-quotient test requires a normal subgroup");
  const auto& G = *a.parent();
  const int index = a.order() / k.order();
  if (index == 1) return true;
  for (int x : a.members()) {
    // order of the coset xK
    int y = x, m = 1;
    while (!k.contains(y)) {
      y = G.mul(y, x);
      ++m;
    }
    if (m == index) return true;
  }
  return false;
}

std::vector<Subgroup> minimal_normals_over(const Subgroup& h, const Subgroup& k) {
  if (h.order() == k.order()) return {};
  auto q = quotient(h, k);
  const auto& Q = *q.table;
  // normal closures of nontrivial cyclic subgroups, filtered to inclusion-minimal
  std::unordered_set<std::vector<int>, VecHash> seen;
  std::vector<Subgroup> closures;
  auto full_q = full_subgroup(q.table);
  for (int x = 1; x < Q.order(); ++x) {
    std::vector<int> orbit;
    for (int g = 0; g < Q.order(); ++g) orbit.push_back(Q.conj(x, g));
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    auto n = closure(q.table, orbit);
    if (seen.insert(n.members()).second) closures.push_back(std::move(n));
  }
  std::vector<Subgroup> minimal;
  for (const auto& c : closures) {
    bool is_min = true;
    for (const auto& d : closures)
      if (d.order() < c.order() && is_subset(d, c)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(c);
  }
  std::vector<Subgroup> out;
  for (const auto& m : minimal) out.push_back(q.pullback(m.members(), h));
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup maximal_abelian_normal_over(const Subgroup& h, const Subgroup& k) {
  if (!is_subset(k, h) || !is_normal_in(k, h))
    throw PreconditionError("kernel must be normal in the ambient subgroup");
  const Subgroup* best = nullptr;
  auto normals = normal_subgroups(h);
  std::vector<Subgroup> eligible;
  for (auto& m : normals) {
    if (!is_subset(k, m)) continue;
    if (!commutator_set_in(m, m, k)) continue;  // M/K abelian
    eligible.push_back(std::move(m));
  }
  for (const auto& m : eligible) {
    if (!best || m.order() > best->order() ||
        (m.order() == best->order() && m.members() < best->members()))
      best = &m;
  }
  // K itself is always eligible, so best is never null
  return *best;
}

std::vector<Subgroup> all_subgroups(GroupPtr g, int cap) {
  if (g->order() > cap)
    throw CapExceeded("subgroup enumeration needs |G| <= " + std::to_string(cap) +
                      ", got " + std::to_string(g->order()));
  std::unordered_set<std::vector<int>, VecHash> seen;
  std::vector<Subgroup> out;
  auto add = [&](Subgroup s) -> bool {
    if (seen.insert(s.members()).second) {
      out.push_back(std::move(s));
      return true;
    }
    return false;
  };
  add(trivial_subgroup(g));
  for (int x = 1; x < g->order(); ++x) add(closure(g, {x}));
  // iterative pairwise join closure
  for (std::size_t i = 1; i < out.size(); ++i) {
    for (std::size_t j = 1; j < i; ++j) {
      if (is_subset(out[i], out[j]) || is_subset(out[j], out[i])) continue;
      add(join(out[i], out[j]));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// abelian, or contains a non-central abelian normal subgroup
bool class_c_property(const Subgroup& s) {
  if (is_abelian(s)) return true;
  auto z = center_of(s);
  for (const auto& n : normal_subgroups(s))
    if (n.order() > 1 && is_abelian(n) && !is_subset(n, z)) return true;
  return false;
}

}  // namespace

bool is_in_class_c(GroupPtr g, int cap) {
  auto subs = all_subgroups(g, cap);
  // the property is conjugation-invariant, so test one subgroup per conjugacy class
  std::unordered_set<std::vector<int>, VecHash> skip;
  for (const auto& s : subs) {
    if (skip.count(s.members())) continue;
    for (int t = 0; t < g->order(); ++t) {
      std::vector<int> c;
      c.reserve(s.order());
      for (int x : s.members()) c.push_back(g->conj(x, t));
      std::sort(c.begin(), c.end());
      skip.insert(std::move(c));
    }
    if (!class_c_property(s)) return false;
  }
  for (const auto& n : normal_subgroups(g)) {
    auto q = quotient(g, n);
    if (!class_c_property(full_subgroup(q.table))) return false;
  }
  return true;
}

}  // namespace shoda
