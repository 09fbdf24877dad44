#include "lieindex/weyl.hpp"

namespace lieindex {

Root reflect(const RootSystem& rs, int i, const Root& v) {
  Root out = v;
  out[i] -= rs.pairing_simple(v, i);
  return out;
}

std::vector<mpq_class> reflect(const RootSystem& rs, int i, const std::vector<mpq_class>& v) {
  mpq_class p = 0;
  for (int j = 0; j < rs.rank(); ++j) p += rs.cartan(i, j) * v[j];
  std::vector<mpq_class> out = v;
  out[i] -= p;
  return out;
}

WeylWord longest_word(const RootSystem& rs, const NodeSet& S) {
  // Work with pairings w_i = <lambda, beta_i^vee>, starting from w_i = 1 on S.
  // s_i changes them by w_j -= w_i * C[j][i].
  const int l = rs.rank();
  std::vector<long> w(l, 0);
  for (int i : S) w[i] = 1;
  WeylWord word;
  while (true) {
    int pick = -1;
    for (int i : S)
      if (w[i] > 0) { pick = i; break; }
    if (pick < 0) break;
    long wi = w[pick];
    for (int j = 0; j < l; ++j) w[j] -= wi * rs.cartan(j, pick);
    word.push_back(pick);
  }
  // Letters were applied left to right to lambda: lambda -> s_{a_k}...s_{a_1} lambda.
  // Reverse so that apply_word uses the rightmost letter first.
  return WeylWord(word.rbegin(), word.rend());
}

Root apply_word(const RootSystem& rs, const WeylWord& w, const Root& v) {
  Root out = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = reflect(rs, *it, out);
  return out;
}

std::vector<mpq_class> apply_word(const RootSystem& rs, const WeylWord& w, const std::vector<mpq_class>& v) {
  std::vector<mpq_class> out = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out = reflect(rs, *it, out);
  return out;
}

Root longest_element_action(const RootSystem& rs, const NodeSet& S, const Root& v) {
  return apply_word(rs, longest_word(rs, S), v);
}

std::vector<mpq_class> longest_element_action(const RootSystem& rs, const NodeSet& S,
                                              const std::vector<mpq_class>& v) {
  return apply_word(rs, longest_word(rs, S), v);
}

}  // namespace lieindex
