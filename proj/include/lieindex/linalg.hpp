#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace lieindex {

using Q = mpq_class;
using QVec = std::vector<Q>;
using QMat = std::vector<QVec>;  // row-major
using ZVec = std::vector<mpz_class>;
using ZMat = std::vector<ZVec>;

bool is_zero(const QVec& v);

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(QMat& m);
int rank(const QMat& m);
// Basis of { x : m x = 0 } (m has `cols` columns; m may have zero rows).
std::vector<QVec> nullspace(const QMat& m, int cols);

// Scale each row by the lcm of its denominators.
ZMat integer_rows(const QMat& m);
// Fraction-free Gaussian elimination; returns the rank.
int bareiss_rank(ZMat m);
int modular_rank(const ZMat& m, uint64_t p);

// Exact span maintained in echelon form; insertion reports independence.
class Span {
 public:
  explicit Span(int dim) : dim_(dim) {}
  bool insert(QVec v);
  bool contains(QVec v) const;
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return dim_; }
  const std::vector<QVec>& basis() const { return rows_; }

 private:
  void reduce(QVec& v) const;
  int dim_;
  std::vector<QVec> rows_;
  std::vector<int> pivots_;
};

// Dimension of the intersection of two spans given by generators.
int intersection_dim(const std::vector<QVec>& a, const std::vector<QVec>& b, int dim);

// Polynomials over Q, coefficient k for x^k.
using Poly = std::vector<Q>;
void poly_trim(Poly& p);
int poly_degree(const Poly& p);
Poly poly_derivative(const Poly& p);
Poly poly_mod(Poly a, const Poly& b);
Poly poly_div(Poly a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);  // monic
Poly poly_lcm(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);

// Minimal polynomial of a square matrix via lcm of Krylov annihilators.
Poly minimal_polynomial(const QMat& a);
bool squarefree(const Poly& p);

}  // namespace lieindex
