#include "shoda/algebra.hpp"

#include <algorithm>
#include <set>

namespace shoda {

Rational AlgebraElement::coeff(int x) const {
  auto it = std::lower_bound(terms.begin(), terms.end(), x,
                             [](const auto& t, int v) { return t.first < v; });
  if (it != terms.end() && it->first == x) return it->second;
  return Rational(0);
}

AlgebraElement zero_element(GroupPtr g) { return AlgebraElement{std::move(g), {}}; }

AlgebraElement one_element(GroupPtr g) {
  return AlgebraElement{std::move(g), {{0, Rational(1)}}};
}

AlgebraElement from_terms(GroupPtr g, std::vector<std::pair<int, Rational>> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<int, Rational>> out;
  for (auto& t : terms) {
    if (t.first < 0 || t.first >= g->order()) throw PreconditionError("term index out of range");
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& t) { return t.second == 0; }),
            out.end());
  return AlgebraElement{std::move(g), std::move(out)};
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
  std::vector<std::pair<int, Rational>> out;
  out.reserve(x.terms.size() + y.terms.size());
  auto a = x.terms.begin(), b = y.terms.begin();
  while (a != x.terms.end() || b != y.terms.end()) {
    if (b == y.terms.end() || (a != x.terms.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == x.terms.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  return AlgebraElement{x.parent, std::move(out)};
}

AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y) {
  return add(x, scale(y, Rational(-1)));
}

AlgebraElement scale(const AlgebraElement& x, const Rational& c) {
  if (c == 0) return zero_element(x.parent);
  std::vector<std::pair<int, Rational>> out;
  out.reserve(x.terms.size());
  for (const auto& t : x.terms) out.emplace_back(t.first, t.second * c);
  return AlgebraElement{x.parent, std::move(out)};
}

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.parent != y.parent) throw PreconditionError("algebra elements of different parents");
  const auto& G = *x.parent;
  std::vector<Rational> acc(G.order(), Rational(0));
  std::vector<std::uint8_t> touched(G.order(), 0);
  for (const auto& [a, ca] : x.terms)
    for (const auto& [b, cb] : y.terms) {
      const int i = G.mul(a, b);
      acc[i] += ca * cb;
      touched[i] = 1;
    }
  std::vector<std::pair<int, Rational>> out;
  for (int i = 0; i < G.order(); ++i)
    if (touched[i] && acc[i] != 0) out.emplace_back(i, std::move(acc[i]));
  return AlgebraElement{x.parent, std::move(out)};
}

AlgebraElement conj_elt(const AlgebraElement& x, int g) {
  const auto& G = *x.parent;
  std::vector<std::pair<int, Rational>> out;
  out.reserve(x.terms.size());
  for (const auto& t : x.terms) out.emplace_back(G.conj(t.first, g), t.second);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return AlgebraElement{x.parent, std::move(out)};
}

AlgebraElement hat(const Subgroup& s) {
  const Rational c(1, s.order());
  std::vector<std::pair<int, Rational>> out;
  out.reserve(s.order());
  for (int x : s.members()) out.emplace_back(x, c);
  return AlgebraElement{s.parent(), std::move(out)};
}

AlgebraElement epsilon(const Subgroup& h, const Subgroup& k) {
  if (!is_subset(k, h) || !is_normal_in(k, h))
    throw PreconditionError("epsilon requires K normal in H");
  AlgebraElement out = hat(k);
  if (h.order() == k.order()) return out;
  const auto khat = hat(k);
  for (const auto& l : minimal_normals_over(h, k)) out = mul(out, sub(khat, hat(l)));
  return out;
}

AlgebraElement e_sum(const Subgroup& u, const Subgroup& h, const Subgroup& k) {
  if (!is_subset(h, u)) throw PreconditionError("e_sum requires H <= U");
  const auto eps = epsilon(h, k);
  std::set<std::vector<std::pair<int, Rational>>> distinct;
  for (int g : u.members()) distinct.insert(conj_elt(eps, g).terms);
  AlgebraElement out = zero_element(u.parent());
  for (const auto& t : distinct) out = add(out, AlgebraElement{u.parent(), t});
  return out;
}

bool commutes_with_all(const AlgebraElement& x, const Subgroup& u) {
  for (int g : u.gens())
    if (conj_elt(x, g) != x) return false;
  return true;
}

bool is_idempotent(const AlgebraElement& x) { return mul(x, x) == x; }

Subgroup centralizer_of_element_in(const Subgroup& u, const AlgebraElement& x) {
  std::vector<int> out;
  for (int g : u.members())
    if (conj_elt(x, g) == x) out.push_back(g);
  return Subgroup(u.parent(), std::move(out));  // validated
}

Rational idempotency_scalar(const AlgebraElement& x) {
  if (x.is_zero()) throw PreconditionError("idempotency scalar of zero");
  const auto sq = mul(x, x);
  const Rational lambda = sq.coeff(x.terms.front().first) / x.terms.front().second;
  if (lambda == 0 || sq != scale(x, lambda))
    throw NotScalarMultiple("x^2 is not a nonzero rational multiple of x");
  return lambda;
}

namespace {

// left-multiplication matrix rows g*e in integer form: row[g][h] = D*e(g^-1 h)
std::vector<std::vector<Int>> action_matrix(const AlgebraElement& e) {
  const auto& G = *e.parent;
  const int n = G.order();
  Int d(1);
  for (const auto& t : e.terms) d = boost::multiprecision::lcm(d, denominator(t.second));
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
  for (int g = 0; g < n; ++g)
    for (const auto& t : e.terms) {
      const Rational c = t.second * d;
      m[g][G.mul(g, t.first)] = numerator(c);
    }
  return m;
}

long long bareiss_rank(std::vector<std::vector<Int>> m) {
  const int n = static_cast<int>(m.size());
  Int prev(1);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    // the update must hit every row below the pivot, zero entry or not, to
    // keep all entries exact minors (otherwise later divisions truncate)
    for (int r = rank + 1; r < n; ++r) {
      for (int c = col + 1; c < n; ++c)
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

constexpr std::uint64_t kRankPrimes[] = {1000000007ULL, 998244353ULL, 754974721ULL,
                                         167772161ULL};

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = (unsigned __int128)r * b % p;
    b = (unsigned __int128)b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t residue(const Rational& q, std::uint64_t p) {
  const Int num = numerator(q) % Int(p);
  const Int den = denominator(q) % Int(p);
  const std::uint64_t a = Int(num < 0 ? num + Int(p) : num).convert_to<std::uint64_t>();
  const std::uint64_t b = den.convert_to<std::uint64_t>();
  return (unsigned __int128)a * mod_pow(b, p - 2, p) % p;
}

long long rank_mod_p(const AlgebraElement& e, std::uint64_t p, bool complement) {
  const auto& G = *e.parent;
  const int n = G.order();
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n, 0));
  for (const auto& t : e.terms) {
    std::uint64_t r = residue(t.second, p);
    if (complement) r = (p - r) % p;
    for (int g = 0; g < n; ++g) m[g][G.mul(g, t.first)] = r;
  }
  if (complement)
    for (int g = 0; g < n; ++g) m[g][g] = (m[g][g] + 1) % p;
  long long rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int r = static_cast<int>(rank); r < n; ++r)
      if (m[r][col]) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const std::uint64_t inv = mod_pow(m[rank][col], p - 2, p);
    for (int r = static_cast<int>(rank) + 1; r < n; ++r) {
      if (!m[r][col]) continue;
      const std::uint64_t f = (unsigned __int128)m[r][col] * inv % p;
      for (int c = col; c < n; ++c) {
        const std::uint64_t s = (unsigned __int128)f * m[rank][c] % p;
        m[r][c] = (m[r][c] + p - s) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

long long rank_bareiss(const AlgebraElement& e) { return bareiss_rank(action_matrix(e)); }

long long rank_modular_certified(const AlgebraElement& e) {
  if (!is_idempotent(e)) throw PreconditionError("certified rank requires an idempotent");
  const int n = e.parent->order();
  for (std::uint64_t p : kRankPrimes) {
    bool bad = false;
    for (const auto& t : e.terms)
      if (denominator(t.second) % Int(p) == 0) bad = true;
    if (bad) continue;
    const long long r = rank_mod_p(e, p, false);
    const long long rc = rank_mod_p(e, p, true);
    // ranks can only drop mod p; QG = im(e) + im(1-e) forces r + rc = n over Q
    if (r + rc == n) return r;
  }
  throw AuditFailure("no prime certified the modular rank");
}

long long ideal_rank(const AlgebraElement& e) {
  if (!is_idempotent(e)) throw PreconditionError("ideal_rank requires an idempotent");
  if (e.parent->order() <= 160) return rank_bareiss(e);
  return rank_modular_certified(e);
}

}  // namespace shoda
