#include "shoda/io.hpp"

#include <map>
#include <sstream>

#include "shoda/rational.hpp"

namespace shoda {

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(s));
    return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw MalformedSpec("bad rational literal: " + s);
  }
}

std::string sub_label(const Subgroup& s) {
  if (s.order() == 1) return "1";
  if (s.order() == s.parent()->order()) return "G";
  std::string out = "<";
  bool first = true;
  for (int g : s.gens()) {
    if (!first) out += ",";
    out += s.parent()->label(g);
    first = false;
  }
  return out + ">";
}

nlohmann::json subgroup_json(const Subgroup& s) {
  nlohmann::json j;
  j["order"] = s.order();
  j["members"] = s.members();
  std::vector<std::string> gens;
  for (int g : s.gens()) gens.push_back(s.parent()->label(g));
  j["gens"] = gens;
  j["label"] = sub_label(s);
  return j;
}

nlohmann::json element_json(const AlgebraElement& x) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& [idx, c] : x.terms)
    j.push_back({x.parent->label(idx), rational_string(c)});
  return j;
}

namespace {

std::string triple_label(const TreeNode& node) {
  return "(" + sub_label(node.triple.H) + ", " + sub_label(node.triple.A) + ", " +
         sub_label(node.triple.K) + ")";
}

}  // namespace

nlohmann::json tree_json(const ShodaTree& t) {
  nlohmann::json j;
  j["group_order"] = t.group->order();
  j["normal"] = subgroup_json(t.normal);
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& node = t.nodes[i];
    nlohmann::json nj;
    nj["id"] = i;
    nj["parent"] = node.parent;
    nj["depth"] = node.depth;
    nj["H"] = subgroup_json(node.triple.H);
    nj["A"] = subgroup_json(node.triple.A);
    nj["K"] = subgroup_json(node.triple.K);
    if (node.chosen_a) nj["chosen_A"] = subgroup_json(*node.chosen_a);
    nj["children"] = node.children;
    const bool is_leaf = node.is_sink() && node.shoda_type();
    nj["shoda_leaf"] = is_leaf;
    if (is_leaf)
      nj["good"] = good_leaf(t, LeafRef{static_cast<int>(i), t.path_to(static_cast<int>(i))});
    nodes.push_back(std::move(nj));
  }
  j["nodes"] = std::move(nodes);
  return j;
}

std::string tree_dot(const ShodaTree& t) {
  std::ostringstream os;
  os << "digraph tree_N" << t.normal.order() << " {\n";
  os << "  rankdir=\"BT\";\n  node [shape=box];\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& node = t.nodes[i];
    std::string label = triple_label(node);
    if (node.is_sink() && node.shoda_type()) {
      const bool good =
          good_leaf(t, LeafRef{static_cast<int>(i), t.path_to(static_cast<int>(i))});
      label += good ? " [good]" : " [not good]";
    }
    os << "  n" << i << " [label=\"" << label << "\"];\n";
  }
  for (std::size_t i = 0; i < t.nodes.size(); ++i)
    for (int c : t.nodes[i].children) os << "  n" << i << " -> n" << c << ";\n";
  os << "}\n";
  return os.str();
}

std::string tree_text(const ShodaTree& t) {
  std::ostringstream os;
  os << "tree over N = " << sub_label(t.normal) << " (order " << t.normal.order() << ")\n";
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& node = t.nodes[i];
    for (int d = 1; d < node.depth; ++d) os << "  ";
    os << triple_label(node);
    if (node.is_sink() && node.shoda_type()) {
      os << "  -> pair (" << sub_label(node.triple.H) << ", " << sub_label(node.triple.K) << ")";
      const bool good =
          good_leaf(t, LeafRef{static_cast<int>(i), t.path_to(static_cast<int>(i))});
      os << (good ? " good" : " not good");
    }
    os << "\n";
  }
  return os.str();
}

nlohmann::json record_json(const ShodaRecord& r, bool with_pci) {
  nlohmann::json j;
  j["pair"]["H"] = subgroup_json(r.H);
  j["pair"]["K"] = subgroup_json(r.K);
  j["normal"] = subgroup_json(r.N);
  j["tree_index"] = r.tree_index;
  j["height"] = r.height;
  j["alpha"] = rational_string(r.alpha);
  j["strong"] = r.strong;
  j["good"] = r.good;
  j["cor52"] = r.cor52;
  if (with_pci) j["pci"] = element_json(r.pci);
  return j;
}

nlohmann::json tower_json(const ComponentTower& t) {
  nlohmann::json j;
  j["k"] = t.k;
  j["phi_k"] = t.base_field_degree;
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& level : t.levels)
    levels.push_back({{"matrix_degree", level.matrix_degree},
                      {"crossed_order", level.crossed_order}});
  j["levels"] = std::move(levels);
  j["dimension"] = t.predicted_dimension;
  return j;
}

}  // namespace shoda
