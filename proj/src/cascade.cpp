#include "lieindex/cascade.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lieindex {

Cascade::Cascade(const RootSystem& rs, const NodeSet& S) {
  NodeSet sorted = S;
  std::sort(sorted.begin(), sorted.end());
  recurse(rs, sorted, std::nullopt);
  for (size_t k = 0; k < elements_.size(); ++k)
    for (const Root& a : elements_[k].gamma) owner_[a] = static_cast<int>(k);
}

void Cascade::recurse(const RootSystem& rs, const NodeSet& S, std::optional<int> parent) {
  if (S.empty()) return;
  for (const NodeSet& comp : rs.connected_components(S)) {
    CascadeElement e;
    e.subset = comp;
    e.epsilon = rs.highest_root(comp);
    e.parent = parent;
    for (const Root& a : rs.subsystem_roots(comp))
      if (rs.pairing(a, e.epsilon) > 0) {
        e.gamma.push_back(a);
        if (a != e.epsilon) e.gamma0.push_back(a);
      }
    NodeSet rest;
    for (int i : comp)
      if (rs.pairing(rs.simple_root(i), e.epsilon) == 0) rest.push_back(i);
    int me = static_cast<int>(elements_.size());
    elements_.push_back(std::move(e));
    recurse(rs, rest, me);
  }
}

int Cascade::k_alpha(const Root& alpha) const {
  auto it = owner_.find(alpha);
  if (it == owner_.end()) throw std::invalid_argument("k_alpha: " + format_root(alpha) + " is not a positive root of the cascade");
  return it->second;
}

std::vector<Root> Cascade::epsilons() const {
  std::vector<Root> out;
  for (auto& e : elements_) out.push_back(e.epsilon);
  return out;
}

int Cascade::find_epsilon(const Root& r) const {
  for (size_t k = 0; k < elements_.size(); ++k)
    if (elements_[k].epsilon == r) return static_cast<int>(k);
  return -1;
}

Cascade kostant_cascade(const RootSystem& rs, const NodeSet& S) { return Cascade(rs, S); }

Cascade kostant_cascade(const RootSystem& rs) { return Cascade(rs, rs.full_base()); }

int k_g(SimpleType t) {
  RootSystem rs(t);
  return static_cast<int>(kostant_cascade(rs).size());
}

std::vector<Root> gamma1(const RootSystem& rs, const CascadeElement& K, const std::vector<Root>& imaginary) {
  std::set<Root> im(imaginary.begin(), imaginary.end());
  std::vector<Root> out;
  for (const Root& a : K.gamma0) {
    Root d = sub(K.epsilon, a);
    if (is_positive(d) && im.count(d) && rs.is_root(d)) out.push_back(a);
  }
  return out;
}

}  // namespace lieindex
