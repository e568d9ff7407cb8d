#include "shoda/builtins.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace shoda {

namespace {

using Table = std::vector<std::uint16_t>;

std::string power_label(const std::string& g, int e) {
  if (e == 0) return "";
  if (e == 1) return g;
  return g + "^" + std::to_string(e);
}

std::string join_labels(std::vector<std::string> parts) {
  parts.erase(std::remove(parts.begin(), parts.end(), std::string()), parts.end());
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
  return out;
}

}  // namespace

GroupPtr cyclic_group(int n, const std::string& g) {
  if (n < 1 || n > GroupTable::kMaxOrder) throw MalformedSpec("cyclic order out of range");
  Table mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) labels[a] = a == 0 ? "1" : power_label(g, a);
  std::map<std::string, int> gens;
  if (n > 1) gens[g] = 1;
  return GroupTable::create(n, std::move(mul), std::move(labels), std::move(gens));
}

GroupPtr heisenberg_group(int p, const std::string& g1, const std::string& g2,
                          const std::string& z) {
  if (p < 2) throw MalformedSpec("heisenberg parameter must be an odd prime");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw MalformedSpec("heisenberg parameter must be an odd prime");
  if (p == 2) throw MalformedSpec("heisenberg parameter must be an odd prime");
  const int n = p * p * p;
  // element g1^i g2^j z^k at index j + p*i + p^2*k; [g2,g1] = z, z central
  auto idx = [p](int i, int j, int k) { return j + p * i + p * p * k; };
  Table mul(static_cast<std::size_t>(n) * n);
  for (int i1 = 0; i1 < p; ++i1)
    for (int j1 = 0; j1 < p; ++j1)
      for (int k1 = 0; k1 < p; ++k1)
        for (int i2 = 0; i2 < p; ++i2)
          for (int j2 = 0; j2 < p; ++j2)
            for (int k2 = 0; k2 < p; ++k2)
              mul[static_cast<std::size_t>(idx(i1, j1, k1)) * n + idx(i2, j2, k2)] =
                  static_cast<std::uint16_t>(
                      idx((i1 + i2) % p, (j1 + j2) % p, (k1 + k2 + i2 * j1) % p));
  std::vector<std::string> labels(n);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j)
      for (int k = 0; k < p; ++k)
        labels[idx(i, j, k)] =
            join_labels({power_label(g1, i), power_label(g2, j), power_label(z, k)});
  std::map<std::string, int> gens{{g1, idx(1, 0, 0)}, {g2, idx(0, 1, 0)}, {z, idx(0, 0, 1)}};
  return GroupTable::create(n, std::move(mul), std::move(labels), std::move(gens));
}

GroupPtr quaternion_group() {
  // a^4 = 1, b^2 = a^2, b^-1 a b = a^-1; element a^i b^j at index i + 4j
  const int n = 8;
  auto idx = [](int i, int j) { return i + 4 * j; };
  Table mul(64);
  for (int i1 = 0; i1 < 4; ++i1)
    for (int j1 = 0; j1 < 2; ++j1)
      for (int i2 = 0; i2 < 4; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) {
          int i = (j1 ? i1 - i2 + 4 : i1 + i2) % 4;
          if (j1 && j2) i = (i + 2) % 4;
          mul[static_cast<std::size_t>(idx(i1, j1)) * n + idx(i2, j2)] =
              static_cast<std::uint16_t>(idx(i, (j1 + j2) % 2));
        }
  std::vector<std::string> labels(n);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      labels[idx(i, j)] = join_labels({power_label("a", i), power_label("b", j)});
  return GroupTable::create(n, std::move(mul), std::move(labels), {{"a", 1}, {"b", 4}});
}

namespace {

std::string cycle_label(const std::vector<int>& perm) {
  std::vector<bool> done(perm.size(), false);
  std::string out;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (done[s] || perm[s] == static_cast<int>(s)) continue;
    out += "(";
    std::size_t x = s;
    bool first = true;
    while (!done[x]) {
      done[x] = true;
      out += (first ? "" : " ") + std::to_string(x);
      first = false;
      x = static_cast<std::size_t>(perm[x]);
    }
    out += ")";
  }
  return out.empty() ? "1" : out;
}

}  // namespace

GroupPtr permutation_group(int degree, const std::vector<std::vector<int>>& gens) {
  if (degree < 1) throw MalformedSpec("permutation degree must be positive");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != degree)
      throw MalformedSpec("permutation generator has wrong degree");
    std::vector<bool> seen(degree, false);
    for (int v : g) {
      if (v < 0 || v >= degree || seen[v]) throw MalformedSpec("not a permutation");
      seen[v] = true;
    }
  }
  std::vector<int> identity(degree);
  for (int i = 0; i < degree; ++i) identity[i] = i;
  std::vector<std::vector<int>> elems{identity};
  std::map<std::vector<int>, int> index{{identity, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      std::vector<int> prod(degree);
      for (int i = 0; i < degree; ++i) prod[i] = g[elems[head][i]];  // apply elems[head], then g
      if (index.emplace(prod, static_cast<int>(elems.size())).second) elems.push_back(prod);
      if (elems.size() > static_cast<std::size_t>(GroupTable::kMaxOrder))
        throw CapExceeded("permutation closure exceeds the maximum group order");
    }
  }
  const int n = static_cast<int>(elems.size());
  Table mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> prod(degree);
      for (int i = 0; i < degree; ++i) prod[i] = elems[b][elems[a][i]];
      mul[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>(index.at(prod));
    }
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) labels[a] = cycle_label(elems[a]);
  std::map<std::string, int> named;
  for (std::size_t i = 0; i < gens.size(); ++i)
    named["g" + std::to_string(i + 1)] = index.at(gens[i]);
  return GroupTable::create(n, std::move(mul), std::move(labels), std::move(named));
}

GroupPtr direct_product(GroupPtr a, GroupPtr b) {
  const int na = a->order(), nb = b->order();
  const long long n = static_cast<long long>(na) * nb;
  if (n > GroupTable::kMaxOrder) throw CapExceeded("product exceeds the maximum group order");
  auto idx = [na](int x, int y) { return x + na * y; };
  Table mul(static_cast<std::size_t>(n) * n);
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          mul[static_cast<std::size_t>(idx(x1, y1)) * n + idx(x2, y2)] =
              static_cast<std::uint16_t>(idx(a->mul(x1, x2), b->mul(y1, y2)));
  std::vector<std::string> labels(n);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) {
      std::vector<std::string> parts;
      if (x) parts.push_back(a->label(x));
      if (y) parts.push_back(b->label(y));
      labels[idx(x, y)] = join_labels(parts);
    }
  std::map<std::string, int> named;
  for (const auto& [k, v] : a->named_gens()) named[k] = idx(v, 0);
  for (const auto& [k, v] : b->named_gens()) {
    if (named.count(k)) throw MalformedSpec("product factors share generator name " + k);
    named[k] = idx(0, v);
  }
  return GroupTable::create(static_cast<int>(n), std::move(mul), std::move(labels),
                            std::move(named));
}

namespace {

// extend generator images to the whole group along breadth-first words and
// verify the result is an automorphism
std::vector<int> automorphism_from_images(const GroupTable& g, const std::vector<int>& gens,
                                          const std::vector<int>& images) {
  const int n = g.order();
  std::vector<int> word_prev(n, -1), word_gen(n, -1);
  std::vector<int> order{0};
  for (std::size_t head = 0; head < order.size(); ++head)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const int y = g.mul(order[head], gens[k]);
      if (y != 0 && word_prev[y] < 0) {
        word_prev[y] = order[head];
        word_gen[y] = static_cast<int>(k);
        order.push_back(y);
      }
    }
  if (order.size() != static_cast<std::size_t>(n))
    throw MalformedSpec("action generators do not generate the normal subgroup");
  std::vector<int> phi(n, -1);
  phi[0] = 0;
  for (std::size_t i = 1; i < order.size(); ++i) {
    const int y = order[i];
    phi[y] = g.mul(phi[word_prev[y]], images[static_cast<std::size_t>(word_gen[y])]);
  }
  std::vector<bool> hit(n, false);
  for (int v : phi) {
    if (v < 0 || hit[v]) throw MalformedSpec("action does not extend to a bijection");
    hit[v] = true;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (phi[g.mul(x, y)] != g.mul(phi[x], phi[y]))
        throw MalformedSpec("action generator images do not define an automorphism");
  return phi;
}

std::vector<std::pair<std::string, int>> ordered_named_gens(const GroupTable& g) {
  return {g.named_gens().begin(), g.named_gens().end()};  // map order = lexicographic
}

}  // namespace

GroupPtr semidirect_product(GroupPtr n, GroupPtr q,
                            const std::vector<std::vector<std::string>>& action) {
  const auto ngens = ordered_named_gens(*n);
  const auto qgens = ordered_named_gens(*q);
  if (action.size() != qgens.size())
    throw MalformedSpec("semidirect action must list one row per acting generator");
  std::vector<int> ngen_idx;
  for (const auto& [name, v] : ngens) ngen_idx.push_back(v);

  // phi[q] = the automorphism x -> x^q of N, built as an anti-homomorphism
  // from the generator actions
  const int nn = n->order(), nq = q->order();
  std::vector<std::vector<int>> phi(nq);
  std::vector<std::vector<int>> gen_phi;
  for (std::size_t r = 0; r < action.size(); ++r) {
    if (action[r].size() != ngens.size())
      throw MalformedSpec("semidirect action row has wrong length");
    std::vector<int> images;
    for (const auto& w : action[r]) images.push_back(resolve_word(*n, w));
    gen_phi.push_back(automorphism_from_images(*n, ngen_idx, images));
  }
  std::vector<int> prev(nq, -1), gen(nq, -1);
  std::vector<int> order{0};
  {
    std::vector<int> qg;
    for (const auto& [name, v] : qgens) qg.push_back(v);
    for (std::size_t head = 0; head < order.size(); ++head)
      for (std::size_t k = 0; k < qg.size(); ++k) {
        const int y = q->mul(order[head], qg[k]);
        if (y != 0 && prev[y] < 0) {
          prev[y] = order[head];
          gen[y] = static_cast<int>(k);
          order.push_back(y);
        }
      }
  }
  if (order.size() != static_cast<std::size_t>(nq))
    throw MalformedSpec("named generators do not generate the acting group");
  {
    std::vector<int> id(nn);
    for (int i = 0; i < nn; ++i) id[i] = i;
    phi[0] = id;
  }
  for (std::size_t i = 1; i < order.size(); ++i) {
    const int y = order[i];
    const auto& a = gen_phi[static_cast<std::size_t>(gen[y])];
    const auto& b = phi[prev[y]];
    std::vector<int> comp(nn);
    for (int x = 0; x < nn; ++x) comp[x] = a[b[x]];  // phi_{p*g} = phi_g o phi_p
    phi[y] = std::move(comp);
  }
  for (int q1 = 0; q1 < nq; ++q1)
    for (int q2 = 0; q2 < nq; ++q2) {
      const auto& lhs = phi[q->mul(q1, q2)];
      for (int x : ngen_idx)
        if (lhs[x] != phi[q2][phi[q1][x]])
          throw MalformedSpec("action is not compatible with the acting group's relations");
    }

  const long long total = static_cast<long long>(nn) * nq;
  if (total > GroupTable::kMaxOrder)
    throw CapExceeded("semidirect product exceeds the maximum group order");
  const int nt = static_cast<int>(total);
  auto idx = [nn](int x, int y) { return x + nn * y; };
  Table mul(static_cast<std::size_t>(nt) * nt);
  for (int q1 = 0; q1 < nq; ++q1) {
    const auto& act = phi[q->inv(q1)];
    for (int n1 = 0; n1 < nn; ++n1)
      for (int q2 = 0; q2 < nq; ++q2)
        for (int n2 = 0; n2 < nn; ++n2)
          mul[static_cast<std::size_t>(idx(n1, q1)) * nt + idx(n2, q2)] =
              static_cast<std::uint16_t>(idx(n->mul(n1, act[n2]), q->mul(q1, q2)));
  }
  std::vector<std::string> labels(nt);
  for (int x = 0; x < nn; ++x)
    for (int y = 0; y < nq; ++y) {
      std::vector<std::string> parts;
      if (x) parts.push_back(n->label(x));
      if (y) parts.push_back(q->label(y));
      labels[idx(x, y)] = join_labels(parts);
    }
  std::map<std::string, int> named;
  for (const auto& [k, v] : n->named_gens()) named[k] = idx(v, 0);
  for (const auto& [k, v] : q->named_gens()) {
    if (named.count(k)) throw MalformedSpec("semidirect factors share generator name " + k);
    named[k] = idx(0, v);
  }
  return GroupTable::create(nt, std::move(mul), std::move(labels), std::move(named));
}

// ---- word parser -----------------------------------------------------------

namespace {

struct WordParser {
  const GroupTable& g;
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  long long parse_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw MalformedSpec("expected integer in word: " + s);
    return std::stoll(s.substr(start, pos - start));
  }

  int parse_term() {
    skip_ws();
    int base;
    if (eat('[')) {
      const int a = parse_word();
      if (!eat(',')) throw MalformedSpec("expected ',' in commutator: " + s);
      const int b = parse_word();
      if (!eat(']')) throw MalformedSpec("expected ']' in commutator: " + s);
      base = g.commutator(a, b);
    } else if (pos < s.size() && s[pos] == '1' &&
               (pos + 1 == s.size() || !std::isalnum(static_cast<unsigned char>(s[pos + 1])))) {
      ++pos;
      base = 0;
    } else {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      if (pos == start) throw MalformedSpec("expected generator name in word: " + s);
      const std::string name = s.substr(start, pos - start);
      auto it = g.named_gens().find(name);
      if (it == g.named_gens().end())
        throw MalformedSpec("unknown generator '" + name + "' in word: " + s);
      base = it->second;
    }
    if (eat('^')) return g.power(base, parse_int());
    return base;
  }

  int parse_word() {
    int acc = parse_term();
    while (true) {
      skip_ws();
      if (eat('*')) {
        acc = g.mul(acc, parse_term());
      } else {
        break;
      }
    }
    return acc;
  }
};

}  // namespace

int resolve_word(const GroupTable& g, const std::string& word) {
  WordParser p{g, word};
  const int v = p.parse_word();
  p.skip_ws();
  if (p.pos != word.size()) throw MalformedSpec("trailing input in word: " + word);
  return v;
}

Subgroup subgroup_from_words(GroupPtr g, const std::string& comma_words) {
  std::vector<int> gens;
  std::string cur;
  int depth = 0;
  for (char c : comma_words) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      gens.push_back(resolve_word(*g, cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) gens.push_back(resolve_word(*g, cur));
  return closure(g, gens);
}

// ---- builtins ----------------------------------------------------------------

namespace {

void audit_relations(const GroupTable& g,
                     const std::vector<std::pair<std::string, std::string>>& relations) {
  for (const auto& [lhs, rhs] : relations)
    if (resolve_word(g, lhs) != resolve_word(g, rhs))
      throw ConstructionInvalid("defining relation fails: " + lhs + " = " + rhs);
}

GroupPtr example_group_1000() {
  // Heisenberg group of order 125 extended by a cyclic group of order 8;
  // x2 and x3 name the squares x1^2 and x1^4
  auto heis = heisenberg_group(5, "x4", "x5", "x6");
  auto c8 = cyclic_group(8, "x1");
  auto g = semidirect_product(heis, c8,
                              {{"x4^3*x5^3*x6^4", "x4*x5^2*x6", "x6^3"}});
  std::map<std::string, int> named = g->named_gens();
  named["x2"] = resolve_word(*g, "x1^2");
  named["x3"] = resolve_word(*g, "x1^4");
  auto out = GroupTable::create(g->order(),
                                [&] {
                                  Table t(static_cast<std::size_t>(g->order()) * g->order());
                                  for (int a = 0; a < g->order(); ++a)
                                    for (int b = 0; b < g->order(); ++b)
                                      t[static_cast<std::size_t>(a) * g->order() + b] =
                                          static_cast<std::uint16_t>(g->mul(a, b));
                                  return t;
                                }(),
                                g->labels(), std::move(named));
  audit_relations(*out, {
                            {"x1^2", "x2"},
                            {"x2^2", "x3"},
                            {"x3^2", "1"},
                            {"x4^5", "1"},
                            {"x5^5", "1"},
                            {"x6^5", "1"},
                            {"[x2,x1]", "1"},
                            {"[x3,x1]", "1"},
                            {"[x3,x2]", "1"},
                            {"[x6,x3]", "1"},
                            {"[x6,x4]", "1"},
                            {"[x6,x5]", "1"},
                            {"[x5,x4]", "x6"},
                            {"[x5,x1]", "x4*x5"},
                            {"[x6,x1]", "x6^2"},
                            {"[x4,x2]", "x4*x6^2"},
                            {"[x6,x2]", "x6^3"},
                            {"[x5,x2]", "x5*x6^2"},
                            {"[x5,x3]", "x5^3*x6^2"},
                            {"[x4,x3]", "x4^3*x6^2"},
                            {"[x4,x1]", "x4^2*x5^3*x6^4"},
                        });
  if (out->order() != 1000) throw ConstructionInvalid("expected order 1000");
  return out;
}

GroupPtr example_group_54() {
  // extraspecial group of order 27 and exponent 3, extended by an inverting
  // involution
  auto heis = heisenberg_group(3, "b", "c", "d");
  auto c2 = cyclic_group(2, "a");
  auto g = semidirect_product(heis, c2, {{"b^2", "c^2", "d"}});
  audit_relations(*g, {
                          {"a^2", "1"},
                          {"b^3", "1"},
                          {"c^3", "1"},
                          {"d^3", "1"},
                          {"a^-1*b*a", "b^-1"},
                          {"a^-1*c*a", "c^-1"},
                          {"a^-1*d*a", "d"},
                          {"b^-1*c*b", "c*d"},
                          {"b^-1*d*b", "d"},
                          {"c^-1*d*c", "d"},
                      });
  if (g->order() != 54) throw ConstructionInvalid("expected order 54");
  return g;
}

bool parse_paramed(const std::string& name, const std::string& head, int* arg) {
  if (name.size() < head.size() + 3 || name.compare(0, head.size(), head) != 0) return false;
  if (name[head.size()] != '(' || name.back() != ')') return false;
  const std::string inner = name.substr(head.size() + 1, name.size() - head.size() - 2);
  if (inner.empty() || !std::all_of(inner.begin(), inner.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    throw MalformedSpec("bad builtin parameter in " + name);
  *arg = std::stoi(inner);
  return true;
}

}  // namespace

GroupPtr builtin(const std::string& name) {
  int arg = 0;
  if (parse_paramed(name, "cyclic", &arg)) return cyclic_group(arg);
  if (parse_paramed(name, "dihedral", &arg)) {
    if (arg < 2) throw MalformedSpec("dihedral(n) needs n >= 2");
    return semidirect_product(cyclic_group(arg, "r"), cyclic_group(2, "s"),
                              {{"r^" + std::to_string(arg - 1)}});
  }
  if (parse_paramed(name, "symmetric", &arg)) {
    if (arg < 1 || arg > 5) throw MalformedSpec("symmetric(n) supports 1 <= n <= 5");
    if (arg == 1) return cyclic_group(1);
    std::vector<int> t(arg), c(arg);
    for (int i = 0; i < arg; ++i) t[i] = i, c[i] = (i + 1) % arg;
    std::swap(t[0], t[1]);
    if (arg == 2) return permutation_group(arg, {t});
    return permutation_group(arg, {t, c});
  }
  if (parse_paramed(name, "heisenberg", &arg)) return heisenberg_group(arg);
  if (name == "quaternion8") return quaternion_group();
  if (name == "klein4") return direct_product(cyclic_group(2, "a"), cyclic_group(2, "b"));
  if (name == "paper-ex1") return example_group_1000();
  if (name == "paper-ex2") return example_group_54();
  throw MalformedSpec("unknown builtin group: " + name);
}

// ---- spec files ---------------------------------------------------------------

namespace {

using nlohmann::json;

GroupPtr parse_spec(const json& j, int max_order);

GroupPtr parse_semidirect(const json& j, int max_order) {
  auto n = parse_spec(j.at("normal"), max_order);
  auto q = parse_spec(j.at("acting"), max_order);
  std::vector<std::vector<std::string>> action;
  for (const auto& row : j.at("action")) {
    std::vector<std::string> r;
    for (const auto& cell : row) {
      if (cell.is_number_integer()) {
        const int v = cell.get<int>();
        if (v < 0 || v >= n->order()) throw MalformedSpec("action element index out of range");
        r.push_back(n->label(v));
      } else {
        r.push_back(cell.get<std::string>());
      }
    }
    action.push_back(std::move(r));
  }
  return semidirect_product(std::move(n), std::move(q), action);
}

GroupPtr parse_spec(const json& j, int max_order) {
  if (!j.is_object() || !j.contains("kind")) throw MalformedSpec("group spec must have a kind");
  const std::string kind = j.at("kind").get<std::string>();
  GroupPtr g;
  if (kind == "permutation") {
    g = permutation_group(j.at("degree").get<int>(),
                          j.at("generators").get<std::vector<std::vector<int>>>());
  } else if (kind == "table") {
    const auto rows = j.at("table").get<std::vector<std::vector<int>>>();
    const int n = static_cast<int>(rows.size());
    Table mul;
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != n) throw MalformedSpec("table is not square");
      for (int v : row) {
        if (v < 0 || v >= n) throw NotClosed("table entry out of range");
        mul.push_back(static_cast<std::uint16_t>(v));
      }
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    g = GroupTable::create(n, std::move(mul), std::move(labels));
  } else if (kind == "builtin") {
    const std::string name = j.at("name").get<std::string>();
    if (j.contains("names")) {
      // generator renaming for composable factors
      const auto names = j.at("names").get<std::vector<std::string>>();
      int arg = 0;
      if (parse_paramed(name, "cyclic", &arg) && names.size() == 1) {
        g = cyclic_group(arg, names[0]);
      } else if (parse_paramed(name, "heisenberg", &arg) && names.size() == 3) {
        g = heisenberg_group(arg, names[0], names[1], names[2]);
      } else {
        throw MalformedSpec("names field is supported for cyclic (1 name) and heisenberg (3)");
      }
    } else {
      g = builtin(name);
    }
  } else if (kind == "product") {
    const auto& factors = j.at("factors");
    if (factors.empty()) throw MalformedSpec("product needs at least one factor");
    g = parse_spec(factors[0], max_order);
    for (std::size_t i = 1; i < factors.size(); ++i)
      g = direct_product(g, parse_spec(factors[i], max_order));
  } else if (kind == "semidirect") {
    g = parse_semidirect(j, max_order);
  } else {
    throw MalformedSpec("unknown group spec kind: " + kind);
  }
  if (g->order() > max_order)
    throw CapExceeded("group order " + std::to_string(g->order()) + " exceeds cap " +
                      std::to_string(max_order));
  return g;
}

}  // namespace

GroupPtr parse_group(const std::string& json_text, int max_order) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw MalformedSpec(std::string("bad group spec JSON: ") + e.what());
  }
  try {
    return parse_spec(j, max_order);
  } catch (const json::exception& e) {
    throw MalformedSpec(std::string("bad group spec: ") + e.what());
  }
}

GroupPtr parse_group_file(const std::string& path, int max_order) {
  std::ifstream in(path);
  if (!in) throw MalformedSpec("cannot read group spec file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_group(ss.str(), max_order);
}

std::string emit_group(const GroupTable& g) {
  nlohmann::json j;
  j["kind"] = "table";
  std::vector<std::vector<int>> rows(g.order(), std::vector<int>(g.order()));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) rows[a][b] = g.mul(a, b);
  j["table"] = rows;
  j["labels"] = g.labels();
  return j.dump(2);
}

}  // namespace shoda
