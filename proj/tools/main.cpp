#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "shoda/builtins.hpp"
#include "shoda/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitCapExceeded = 3;

struct Options {
  shoda::RunConfig run;
  std::string normal;
  std::string format = "json";
};

void add_common(CLI::App* cmd, Options& opt, bool with_normal) {
  cmd->add_option("--group", opt.run.group, "group source: builtin:<name> or a spec file path")
      ->required();
  cmd->add_option("--format", opt.format, "output format: json, dot or text")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  cmd->add_option("--max-order", opt.run.max_order, "pipeline group-order cap");
  cmd->add_option("--subgroup-cap", opt.run.subgroup_cap, "subgroup-enumeration cap");
  cmd->add_option("--jobs", opt.run.jobs, "parallel workers")->check(CLI::PositiveNumber);
  if (with_normal)
    cmd->add_option("--normal", opt.normal,
                    "normal subgroup: canonical index, gens:<words> or members:<list>")
        ->required();
}

std::string pairs_text(const nlohmann::json& j) {
  std::string out = "group order " + j["group_order"].dump() + ", " +
                    std::to_string(j["pairs"].size()) + " pairs\n";
  for (const auto& p : j["pairs"]) {
    out += "  (" + p["pair"]["H"]["label"].get<std::string>() + ", " +
           p["pair"]["K"]["label"].get<std::string>() + ")";
    out += "  alpha=" + p["alpha"].get<std::string>();
    out += std::string("  strong=") + (p["strong"].get<bool>() ? "yes" : "no");
    out += std::string("  good=") + (p["good"].get<bool>() ? "yes" : "no");
    out += "  height=" + p["height"].dump() + "\n";
    if (p.contains("pci")) {
      out += "    pci:";
      for (const auto& term : p["pci"])
        out += " " + term[0].get<std::string>() + ":" + term[1].get<std::string>();
      out += "\n";
    }
  }
  return out;
}

std::string components_text(const nlohmann::json& j) {
  std::string out = "group order " + j["group_order"].dump() + "\n";
  for (const auto& c : j["components"]) {
    out += "  (" + c["pair"]["H"]["label"].get<std::string>() + ", " +
           c["pair"]["K"]["label"].get<std::string>() + ")  k=" + c["k"].dump() +
           " phi=" + c["phi_k"].dump() + " levels=[";
    bool first = true;
    for (const auto& level : c["levels"]) {
      if (!first) out += ", ";
      out += "M" + level["matrix_degree"].dump() + "*c" + level["crossed_order"].dump();
      first = false;
    }
    out += "] dim=" + c["dimension"].dump() + "\n";
  }
  out += "dimension sum = " + j["dimension_sum"].dump() + "\n";
  return out;
}

std::string verify_text(const nlohmann::json& j) {
  std::string out;
  out += std::to_string(j["distinct_pcis"].get<int>()) + " PCIs, sum=" +
         (j["sums_to_one"].get<bool>() ? "1" : "INCOMPLETE") + "\n";
  if (j["in_class"].is_boolean() && !j["in_class"].get<bool>())
    out += "note: the group is outside the supported class; completeness is not expected\n";
  out += "pairwise orthogonal: " + std::string(j["pairwise_orthogonal"].get<bool>() ? "yes" : "NO") + "\n";
  out += "rank sum: " + j["rank_sum"].dump() + " / " + j["group_order"].dump() + "\n";
  out += "alpha oracle: " + std::string(j["alpha_scalar_agreement"].get<bool>() ? "ok" : "FAIL") + "\n";
  out += "shoda criterion: " + std::string(j["shoda_criterion_agreement"].get<bool>() ? "ok" : "FAIL") + "\n";
  out += "dimension audits: " + std::string(j["dimension_audits"].get<bool>() ? "ok" : "FAIL") + "\n";
  out += "strongness coherence: " + std::string(j["strongness_coherent"].get<bool>() ? "ok" : "FAIL") + "\n";
  out += "all leaves good: " + std::string(j["all_good"].get<bool>() ? "yes" : "no (irredundancy not guaranteed)") + "\n";
  out += std::string(j["passed"].get<bool>() ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shoda pairs, primitive central idempotents and simple components of QG"};
  app.require_subcommand(1);

  Options opt;
  auto* cmd_tree = app.add_subcommand("tree", "emit the character-triple tree over one normal subgroup");
  add_common(cmd_tree, opt, true);
  auto* cmd_pairs = app.add_subcommand("pairs", "list the Shoda pairs with alpha and flags");
  add_common(cmd_pairs, opt, false);
  auto* cmd_pci = app.add_subcommand("pci", "list the pairs with their primitive central idempotents");
  add_common(cmd_pci, opt, false);
  auto* cmd_components = app.add_subcommand("components", "describe the simple components");
  add_common(cmd_components, opt, false);
  auto* cmd_verify = app.add_subcommand("verify", "run the full verification battery");
  add_common(cmd_verify, opt, false);
  auto* cmd_classc = app.add_subcommand("classc", "test the class membership predicate");
  add_common(cmd_classc, opt, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse error
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    auto g = shoda::load_group(opt.run);
    if (cmd_tree->parsed()) {
      const auto n = shoda::resolve_normal_selector(g, opt.normal);
      if (opt.format == "dot") {
        std::cout << shoda::tree_dot(shoda::build_tree(g, n, opt.run.subgroup_cap));
      } else if (opt.format == "text") {
        std::cout << shoda::tree_text(shoda::build_tree(g, n, opt.run.subgroup_cap));
      } else {
        std::cout << shoda::run_tree(g, n, opt.run.subgroup_cap).dump(2) << "\n";
      }
      return kExitOk;
    }
    if (opt.format == "dot") throw shoda::UnsupportedFormat("dot output is for trees only");
    if (cmd_pairs->parsed() || cmd_pci->parsed()) {
      const auto j = shoda::run_pairs(g, opt.run, cmd_pci->parsed());
      std::cout << (opt.format == "text" ? pairs_text(j) : j.dump(2) + "\n");
      return kExitOk;
    }
    if (cmd_components->parsed()) {
      const auto j = shoda::run_components(g, opt.run);
      std::cout << (opt.format == "text" ? components_text(j) : j.dump(2) + "\n");
      return kExitOk;
    }
    if (cmd_classc->parsed()) {
      const auto j = shoda::run_classc(g, opt.run);
      if (opt.format == "text")
        std::cout << (j["in_class"].get<bool>() ? "true" : "false") << "\n";
      else
        std::cout << j.dump(2) << "\n";
      return kExitOk;
    }
    if (cmd_verify->parsed()) {
      const auto j = shoda::run_verify(g, opt.run);
      std::cout << (opt.format == "text" ? verify_text(j) : j.dump(2) + "\n");
      return j["passed"].get<bool>() ? kExitOk : kExitVerifyFailed;
    }
  } catch (const shoda::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
