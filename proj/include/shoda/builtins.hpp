#pragma once

#include <string>
#include <vector>

#include "shoda/group.hpp"

namespace shoda {

// ---- structural constructors -------------------------------------------

GroupPtr cyclic_group(int n, const std::string& g = "g");
GroupPtr heisenberg_group(int p, const std::string& g1 = "a", const std::string& g2 = "b",
                          const std::string& z = "c");
GroupPtr quaternion_group();
GroupPtr permutation_group(int degree, const std::vector<std::vector<int>>& gens);
GroupPtr direct_product(GroupPtr a, GroupPtr b);

// Semidirect product N x| Q. Per acting generator of Q (in lexicographic
// order of Q's named generators) an image word for every named generator of N
// (same order), giving the conjugation action n -> q^-1 n q. The extension of
// the generator images is validated to be a homomorphic action before the
// table is built.
GroupPtr semidirect_product(GroupPtr n, GroupPtr q,
                            const std::vector<std::vector<std::string>>& action);

// ---- builtin registry ----------------------------------------------------

// name in { cyclic(n), dihedral(n), symmetric(n<=5), quaternion8, klein4,
//           heisenberg(p), paper-ex1, paper-ex2 }
GroupPtr builtin(const std::string& name);

// ---- words over named generators ------------------------------------------

// evaluates a word like "x4^-1*x5" or "[x5,x4]" over the group's named
// generators; "1" is the identity
int resolve_word(const GroupTable& g, const std::string& word);

// subgroup generated by comma-separated words
Subgroup subgroup_from_words(GroupPtr g, const std::string& comma_words);

// ---- group spec files -------------------------------------------------------

// JSON group spec (see README): kinds permutation | table | builtin | product
// | semidirect
GroupPtr parse_group(const std::string& json_text, int max_order = 5000);
GroupPtr parse_group_file(const std::string& path, int max_order = 5000);

// deterministic JSON form of a group table; parse(emit(g)) reproduces g
std::string emit_group(const GroupTable& g);

}  // namespace shoda
