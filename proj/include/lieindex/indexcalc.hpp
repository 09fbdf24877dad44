#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lieindex/chevalley.hpp"
#include "lieindex/realform.hpp"

namespace lieindex {

// Subalgebra spanned by a torus (vectors in the H_i coordinates) and root
// vectors.  Basis order: torus vectors, then root vectors in the given order.
class Subalgebra {
 public:
  Subalgebra(std::shared_ptr<const StructureConstants> sc, std::vector<QVec> torus, std::vector<int> roots);

  const StructureConstants& ambient() const { return *sc_; }
  std::shared_ptr<const StructureConstants> ambient_ptr() const { return sc_; }
  int dim() const { return static_cast<int>(torus_.size() + roots_.size()); }
  int torus_dim() const { return static_cast<int>(torus_.size()); }
  const std::vector<QVec>& torus() const { return torus_; }
  const std::vector<int>& roots() const { return roots_; }
  int position_of_root(int root_idx) const;  // -1 if absent

  Elem element(const QVec& coords) const;
  QVec coords(const Elem& x) const;  // throws if x is not in the subalgebra
  QVec bracket(const QVec& u, const QVec& v) const;
  QMat skew_matrix(const QVec& phi) const;

 private:
  std::shared_ptr<const StructureConstants> sc_;
  std::vector<QVec> torus_;
  std::vector<int> roots_;
  std::vector<int> pos_;
  std::vector<int> torus_rows_;
  QMat torus_inv_;
  std::vector<std::vector<std::vector<std::pair<int, Q>>>> table_;
};

using Functional = QVec;

struct IndexResult {
  int index = 0;
  int rank = 0;
  std::vector<int> sample_ranks;
  std::vector<int> modular_ranks;
  Functional regular;  // a functional attaining the generic rank
};

uint64_t default_seed();
IndexResult compute_index(const Subalgebra& q, std::optional<uint64_t> seed = std::nullopt);
int index(const Subalgebra& q);

std::vector<QVec> stabilizer(const Subalgebra& q, const Functional& phi);
bool is_stable(const Subalgebra& q, const Functional& phi);
// Requires phi regular; pass the index when already known.
bool is_reductive_form(const Subalgebra& q, const Functional& phi, std::optional<int> known_index = std::nullopt);

std::shared_ptr<const StructureConstants> structure_constants_for(const RootSystem& rs);
Subalgebra build_b(const RealForm& rf);
Subalgebra borel(const RealForm& rf);
Subalgebra minimal_parabolic(const RealForm& rf);
Subalgebra standard_parabolic(std::shared_ptr<const StructureConstants> sc, const NodeSet& S);
Functional phi_u(const RealForm& rf, const CascadeAnalysis& an, const Subalgebra& b);

struct Verdict {
  std::string check;
  bool pass = false;
  std::string detail;
};

struct IndexReport {
  std::string name;
  bool empty = false;
  int dim_b = 0, index_b = 0, rg_diff = 0;
  bool star = false;
  int stab_u_dim = 0, formula_dim = 0;
  bool stable = false, reductive = false;
  std::vector<Verdict> verdicts;
  bool all_pass() const;
};

struct ReportOptions {
  bool equivalence = true;  // extensional check of the [x,u] description (rank <= 6)
  std::optional<uint64_t> seed;
};
IndexReport verify_formule_indice(const RealForm& rf, const CascadeAnalysis& an, ReportOptions opt = {});

}  // namespace lieindex
