#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "lieindex/linalg.hpp"
#include "lieindex/rootsys.hpp"

namespace lieindex {

// Dense coordinates over the basis H_1..H_l, X_alpha (positive roots), X_-alpha.
using Elem = QVec;

// Chevalley basis structure constants from extraspecial pairs.
class StructureConstants {
 public:
  explicit StructureConstants(const RootSystem& rs);

  const RootSystem& root_system() const { return rs_; }
  int dim() const { return l_ + 2 * npos_; }
  int rank() const { return l_; }
  int basis_of_root(int root_idx) const { return l_ + root_idx; }
  int basis_of_root(const Root& r) const;
  int root_of_basis(int b) const { return b < l_ ? -1 : b - l_; }

  // root index of r+s, -1 if not a root, -2 if r+s = 0
  int sum_index(int r, int s) const { return sum_[r * nroots_ + s]; }
  // N_{r,s}; zero when r+s is not a root
  int N(int r, int s) const { return n_[r * nroots_ + s]; }
  int N(const Root& a, const Root& b) const;
  // H_r = [X_r, X_-r] in H_i coordinates
  const std::vector<int>& coroot(int r) const { return coroot_[r]; }
  // r(H_i) = <r, beta_i^vee>
  int root_value(int r, int i) const { return value_[r * l_ + i]; }

  Elem zero() const { return Elem(dim(), 0); }
  Elem basis(int b) const;
  Elem x(const Root& r) const { return basis(basis_of_root(r)); }
  Elem h(int i) const { return basis(i); }

  // sparse bracket of two basis vectors
  void bracket_basis(int a, int b, std::vector<std::pair<int, int>>& out) const;
  Elem bracket(const Elem& x, const Elem& y) const;

  // trace form of the adjoint representation
  int64_t kappa_basis(int a, int b) const;
  Q kappa(const Elem& x, const Elem& y) const;
  QMat ad_matrix(const Elem& x) const;

  bool ad_semisimple(const Elem& x) const;
  bool ad_semisimple_general(const Elem& x) const;

  // exhaustive checks; return violation counts
  int64_t jacobi_violations() const;
  int64_t string_violations() const;  // |N_{a,b}| = p+1 and antisymmetry

 private:
  int compute_n(int r, int s);
  int compute_pos(int r, int s);
  bool semisimple_borel(const Elem& x) const;

  RootSystem rs_;
  int l_, npos_, nroots_;
  std::vector<int> sum_;
  std::vector<int> n_;
  std::vector<char> n_done_;
  std::vector<std::vector<int>> coroot_;
  std::vector<int> value_;
  std::vector<int64_t> kappa_h_;  // l x l
  std::vector<int64_t> kappa_x_;  // per root: kappa(X_r, X_-r)
  std::vector<int> extra_;        // per positive root: first member of its extraspecial pair (-1 if simple)
};

}  // namespace lieindex
