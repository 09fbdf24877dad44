#pragma once

#include <optional>
#include <vector>

#include "lieindex/rootsys.hpp"

namespace lieindex {

struct CascadeElement {
  NodeSet subset;
  Root epsilon;
  std::vector<Root> gamma;   // roots of Delta^K pairing positively with epsilon
  std::vector<Root> gamma0;  // gamma minus epsilon
  std::optional<int> parent;
};

class Cascade {
 public:
  Cascade(const RootSystem& rs, const NodeSet& S);

  const std::vector<CascadeElement>& elements() const { return elements_; }
  size_t size() const { return elements_.size(); }
  const CascadeElement& operator[](size_t k) const { return elements_[k]; }

  // K_alpha: index of the element whose Gamma contains the positive root alpha
  int k_alpha(const Root& alpha) const;
  std::vector<Root> epsilons() const;
  int find_epsilon(const Root& r) const;  // -1 if r is not a cascade root

 private:
  void recurse(const RootSystem& rs, const NodeSet& S, std::optional<int> parent);

  std::vector<CascadeElement> elements_;
  std::map<Root, int> owner_;
};

Cascade kostant_cascade(const RootSystem& rs, const NodeSet& S);
Cascade kostant_cascade(const RootSystem& rs);
int k_g(SimpleType t);

// Gamma_1^K = { alpha in Gamma_0^K : epsilon_K - alpha in imaginary }
std::vector<Root> gamma1(const RootSystem& rs, const CascadeElement& K, const std::vector<Root>& imaginary);

}  // namespace lieindex
