#pragma once
// Test-side reference computations, written without the library's own
// enumeration code.

#include <map>
#include <set>
#include <vector>

#include "lieindex/rootsys.hpp"

namespace oracle {

using lieindex::Root;

// s_i(v) = v - <v, beta_i^vee> beta_i straight from the Cartan matrix
inline Root reflect(const std::vector<std::vector<int>>& c, int i, Root v) {
  int p = 0;
  for (size_t j = 0; j < v.size(); ++j) p += v[j] * c[i][j];
  v[i] -= p;
  return v;
}

// All roots as the closure of the simple roots under simple reflections.
inline std::set<Root> roots_by_reflection(const std::vector<std::vector<int>>& c) {
  const int l = static_cast<int>(c.size());
  std::set<Root> seen;
  std::vector<Root> todo;
  for (int i = 0; i < l; ++i) {
    Root e(l, 0);
    e[i] = 1;
    seen.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    Root v = todo.back();
    todo.pop_back();
    for (int i = 0; i < l; ++i) {
      Root w = reflect(c, i, v);
      if (seen.insert(w).second) todo.push_back(w);
    }
  }
  return seen;
}

// Weyl group as words, by breadth-first search on the orbit of a regular vector.
inline std::map<Root, std::vector<int>> weyl_orbit(const std::vector<std::vector<int>>& c, const Root& regular) {
  std::map<Root, std::vector<int>> word{{regular, {}}};
  std::vector<Root> frontier{regular};
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& v : frontier)
      for (int i = 0; i < static_cast<int>(c.size()); ++i) {
        Root w = reflect(c, i, v);
        if (word.count(w)) continue;
        auto wd = word[v];
        wd.insert(wd.begin(), i);  // s_i applied last
        word[w] = wd;
        next.push_back(w);
      }
    frontier = std::move(next);
  }
  return word;
}

inline Root apply(const std::vector<std::vector<int>>& c, const std::vector<int>& word, Root v) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = reflect(c, *it, v);
  return v;
}

}  // namespace oracle
