#pragma once

#include <gmpxx.h>

#include <vector>

#include "lieindex/rootsys.hpp"

namespace lieindex {

using WeylWord = std::vector<int>;  // letters applied right to left: w = s_{w[0]} ... s_{w[n-1]}

// s_i(v) = v - <v, beta_i^vee> beta_i
Root reflect(const RootSystem& rs, int i, const Root& v);
std::vector<mpq_class> reflect(const RootSystem& rs, int i, const std::vector<mpq_class>& v);

// Reduced word of the longest element of W_S, found by descent from an
// S-regular dominant vector.
WeylWord longest_word(const RootSystem& rs, const NodeSet& S);

Root apply_word(const RootSystem& rs, const WeylWord& w, const Root& v);
std::vector<mpq_class> apply_word(const RootSystem& rs, const WeylWord& w, const std::vector<mpq_class>& v);

Root longest_element_action(const RootSystem& rs, const NodeSet& S, const Root& v);
std::vector<mpq_class> longest_element_action(const RootSystem& rs, const NodeSet& S,
                                              const std::vector<mpq_class>& v);

}  // namespace lieindex
