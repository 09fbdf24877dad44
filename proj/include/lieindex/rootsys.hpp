#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace lieindex {

enum class Family { A, B, C, D, E, F, G };

// Family letter plus rank, with the classical rank bounds enforced.
struct SimpleType {
  Family family;
  int rank;

  static SimpleType make(char letter, int rank);
  static SimpleType parse(const std::string& text);  // "E8", "B3", ...
  char letter() const;
  std::string name() const;
  bool operator==(const SimpleType&) const = default;
};

class TypeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Coordinates in the simple-root basis.
using Root = std::vector<int>;
using NodeSet = std::vector<int>;  // sorted simple-root indices (0-based)

int height(const Root& r);
bool is_positive(const Root& r);
Root negate(const Root& r);
Root add(const Root& a, const Root& b);
Root sub(const Root& a, const Root& b);
std::string format_root(const Root& r);

// Root system of a product of simple types; components occupy consecutive
// node ranges.  Immutable once built.
class RootSystem {
 public:
  explicit RootSystem(SimpleType t);
  explicit RootSystem(std::vector<SimpleType> components);

  int rank() const { return rank_; }
  const std::vector<SimpleType>& components() const { return components_; }
  std::string type_name() const;
  bool is_simple() const { return components_.size() == 1; }

  // C[i][j] = <beta_j, beta_i^vee>
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  // d_i = (beta_i, beta_i) / 2, positive integers
  int symmetrizer(int i) const { return sym_[i]; }

  int64_t inner(const Root& a, const Root& b) const;
  // <a, b^vee> = 2(a,b)/(b,b); b must be a nonzero lattice vector of a root
  int pairing(const Root& a, const Root& b) const;
  // <a, beta_i^vee>
  int pairing_simple(const Root& a, int i) const;

  const std::vector<Root>& positive_roots() const { return roots_pos_; }
  // positive roots first, then their negatives in the same order
  const std::vector<Root>& roots() const { return roots_all_; }
  int num_positive() const { return static_cast<int>(roots_pos_.size()); }
  int index_of(const Root& r) const;  // -1 if not a root
  bool is_root(const Root& r) const { return index_of(r) >= 0; }
  int negative_index(int idx) const { return idx < num_positive() ? idx + num_positive() : idx - num_positive(); }
  Root simple_root(int i) const;

  NodeSet full_base() const;
  bool connected(const NodeSet& S) const;
  std::vector<NodeSet> connected_components(const NodeSet& S) const;
  Root highest_root(const NodeSet& S) const;
  std::vector<Root> subsystem_roots(const NodeSet& S) const;
  std::vector<Root> subsystem_positive_roots(const NodeSet& S) const;
  bool supported_in(const Root& r, const NodeSet& S) const;

 private:
  void build();
  void enumerate_positive();

  std::vector<SimpleType> components_;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> sym_;
  std::vector<Root> roots_pos_;
  std::vector<Root> roots_all_;
  std::map<Root, int> lookup_;
};

// Cartan matrix and symmetrizer of one simple type (local numbering).
std::vector<std::vector<int>> cartan_matrix(SimpleType t);
std::vector<int> symmetrizer(SimpleType t);
int positive_root_count(SimpleType t);

// Classify a connected Cartan matrix; used to name subsystems like "D4" or "A1".
std::string classify_connected(const std::vector<std::vector<int>>& c);
// Canonical semisimple type of the subsystem spanned by S, e.g. "A1^2+B3",
// "0" when S is empty.  Low-rank coincidences are normalized (B1=C1=A1, C2=B2,
// D2=A1^2, D3=A3).
std::string subsystem_type(const RootSystem& rs, const NodeSet& S);
std::string canonical_type_string(const std::string& text);

}  // namespace lieindex
