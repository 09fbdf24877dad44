#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lieindex/cascade.hpp"
#include "lieindex/linalg.hpp"
#include "lieindex/rootsys.hpp"
#include "lieindex/weyl.hpp"

namespace lieindex {

struct InvolutionSpec {
  NodeSet black;           // 0-based
  std::vector<int> sigma;  // involutive permutation of the nodes
  bool complex_double = false;
};

struct DeclaredRow {
  int rg_g = 0, rg_k = 0, dim_a = 0, k_g = 0, k_m = 0;
  std::string m0_name, m0_type, strongest, note;
};

struct RealFormRecord {
  std::string name;
  SimpleType type;  // complexification, or the doubled factor
  InvolutionSpec involution;
  DeclaredRow declared;
};

class RegistryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A real form with its theta-action on the root lattice, contract-checked on
// construction.
class RealForm {
 public:
  explicit RealForm(RealFormRecord rec);

  const RealFormRecord& record() const { return rec_; }
  const std::string& name() const { return rec_.name; }
  const RootSystem& roots() const { return *rs_; }
  const Cascade& cascade() const { return *cascade_; }
  bool is_compact() const;
  bool is_complex_double() const { return rec_.involution.complex_double; }

  Root theta(const Root& a) const;
  QVec theta(const QVec& v) const;
  Root sigma(const Root& a) const;

  const std::vector<Root>& imaginary_positive() const { return imag_pos_; }  // Delta'_+
  const std::vector<Root>& b_roots() const { return b_roots_; }              // Delta''_+
  // basis of the (-1)-eigenspace of theta on h*, integral vectors
  const std::vector<QVec>& a_hat() const { return a_hat_; }
  int dim_a() const { return static_cast<int>(a_hat_.size()); }
  const NodeSet& black() const { return rec_.involution.black; }
  // rank of k: rg g minus the 2-cycles of the diagram part of theta
  int rank_k() const;

 private:
  void validate() const;

  RealFormRecord rec_;
  std::shared_ptr<RootSystem> rs_;
  std::shared_ptr<Cascade> cascade_;
  WeylWord w_black_;
  std::vector<Root> imag_pos_, b_roots_;
  std::vector<QVec> a_hat_;
};

struct PropertyFlags {
  bool A = false, B = false, Bprime = false, C = false;
  std::string strongest;  // rien, (A), (B), (C)
};

struct CascadeAnalysis {
  std::string name;
  bool empty_b = false;
  std::vector<int> kpp, kp, kreel;
  std::vector<std::pair<int, int>> kcomp_pairs;  // (chosen member, partner)
  std::vector<int> kcomp_plus;
  bool property_P = true;
  bool star = false;
  std::vector<int> gamma1_sizes;  // per cascade element (0 outside kpp)
  int dim_a = 0, k_g = 0, k_m = 0, rg_g = 0, rg_k = 0;
  int kcomp_size() const { return 2 * static_cast<int>(kcomp_pairs.size()); }
  PropertyFlags flags;
};

CascadeAnalysis analyze(const RealForm& rf);
PropertyFlags classify_properties(const CascadeAnalysis& an);
std::vector<Root> gamma1_of(const RealForm& rf, int k);

struct KcompReport {
  int formula = 0, counted = 0;
  bool match = false;
};
// Requires condition (*).
KcompReport kcomp_count(const CascadeAnalysis& an);

struct CalculKReport {
  int lhs = 0, rhs = 0;  // dim a - #K_reel, rg g - rg k
  bool inequality = false, equality = false, star = false;
  bool equality_matches_star() const { return equality == star; }
};
CalculKReport verify_calcul_k(const CascadeAnalysis& an);

struct CayleyState {
  int dim_a = 0;
  std::vector<int> kpp, kp, kreel;
  bool property_P = true, star = false;
};
CayleyState cayley_state(const CascadeAnalysis& an);
CayleyState cayley_reduce(const CayleyState& s, int k);

// registry
const char* registry_text();
std::vector<RealFormRecord> parse_registry(const std::string& text);
const std::vector<std::shared_ptr<RealForm>>& registry();
// lookup tolerant to swapped signature arguments, e.g. su(2,1) = su(1,2)
std::shared_ptr<RealForm> registry_lookup(const std::string& name);
std::vector<std::string> registry_names();

}  // namespace lieindex
