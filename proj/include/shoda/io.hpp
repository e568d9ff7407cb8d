#pragma once

#include <string>

#include <json.hpp>

#include "shoda/components.hpp"
#include "shoda/idempotents.hpp"
#include "shoda/tree.hpp"

namespace shoda {

// display form of a subgroup through its generator labels, e.g. "<x5,x6>"
std::string sub_label(const Subgroup& s);

nlohmann::json subgroup_json(const Subgroup& s);

// canonical text form: (element label, "num/den") pairs sorted by element index
nlohmann::json element_json(const AlgebraElement& x);

nlohmann::json tree_json(const ShodaTree& t);
std::string tree_dot(const ShodaTree& t);
std::string tree_text(const ShodaTree& t);

nlohmann::json record_json(const ShodaRecord& r, bool with_pci);
nlohmann::json tower_json(const ComponentTower& t);

}  // namespace shoda
