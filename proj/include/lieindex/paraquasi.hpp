#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "lieindex/cascade.hpp"
#include "lieindex/chevalley.hpp"
#include "lieindex/rootsys.hpp"

namespace lieindex {

// Positive roots split by the span E of the cascade roots:
// d1 outside E, d2 the cascade roots, d3 the rest of E.
struct RootPartition {
  std::vector<Root> d1, d2, d3, d3prime;
  std::map<Root, int> witnesses;  // alpha in d3prime -> K'_alpha with alpha = (eps_{K_alpha} - eps_{K'})/2
};

RootPartition partition_roots(const RootSystem& rs, const Cascade& c);

// Cascade elements M with eps_M + alpha a root.
std::vector<int> kprime_set(const RootSystem& rs, const Cascade& c, const Root& alpha);

// Quasi-reductivity of p_{alpha} from the root partition; i is a 0-based node.
bool parabolic_quasi_reductive(const RootSystem& rs, const Cascade& c, int i);

class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Same question answered by computing a regular form of p_{alpha} and testing
// its stabilizer.  Rank at most 4.
bool direct_parabolic_check(const RootSystem& rs, std::shared_ptr<const StructureConstants> sc, int i);

struct CondRootReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// The three properties relating simple roots to the cascade.
CondRootReport check_cond_root(const RootSystem& rs, const Cascade& c);

struct Table4Row {
  SimpleType type;
  std::vector<bool> verdict;  // per node, true = quasi-reductive
  std::vector<int> d3prime_nodes;
};

Table4Row table4_row(SimpleType t);
std::vector<SimpleType> table4_types(int max_rank = 8);

}  // namespace lieindex
