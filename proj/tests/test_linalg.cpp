#include <random>

#include "doctest.h"
#include "lieindex/linalg.hpp"

using namespace lieindex;

namespace {
QMat random_matrix(std::mt19937& g, int r, int c, int rank) {
  // product of r x rank and rank x c integer matrices
  std::uniform_int_distribution<int> d(-5, 5);
  QMat a(r, QVec(rank)), b(rank, QVec(c)), m(r, QVec(c, 0));
  for (auto& row : a)
    for (auto& x : row) x = d(g);
  for (auto& row : b)
    for (auto& x : row) x = d(g);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      for (int k = 0; k < rank; ++k) m[i][j] += a[i][k] * b[k][j];
  return m;
}
}  // namespace

TEST_CASE("ranks agree across exact, fraction-free and modular elimination") {
  std::mt19937 g(7);
  for (int t = 0; t < 40; ++t) {
    int r = 2 + t % 7, c = 3 + t % 5, k = 1 + t % std::min(r, c);
    QMat m = random_matrix(g, r, c, k);
    QMat e = m;
    int rr = static_cast<int>(rref(e).size());
    CHECK(rank(m) == rr);
    ZMat z = integer_rows(m);
    CHECK(bareiss_rank(z) == rr);
    CHECK(modular_rank(z, 1073741789ULL) == rr);
    CHECK(rr <= k);
  }
}

TEST_CASE("nullspace vectors are annihilated and span the kernel") {
  std::mt19937 g(11);
  for (int t = 0; t < 20; ++t) {
    QMat m = random_matrix(g, 4, 7, 3);
    auto ns = nullspace(m, 7);
    CHECK(static_cast<int>(ns.size()) == 7 - rank(m));
    for (auto& v : ns)
      for (auto& row : m) {
        Q s = 0;
        for (int j = 0; j < 7; ++j) s += row[j] * v[j];
        CHECK(s == 0);
      }
  }
  CHECK(nullspace(QMat{}, 3).size() == 3);
}

TEST_CASE("spans and intersections") {
  Span s(3);
  CHECK(s.insert({1, 0, 0}));
  CHECK(s.insert({1, 1, 0}));
  CHECK(!s.insert({2, 3, 0}));
  CHECK(s.contains({5, -2, 0}));
  CHECK(!s.contains({0, 0, 1}));
  CHECK(intersection_dim({{1, 0, 0}, {0, 1, 0}}, {{0, 1, 0}, {0, 0, 1}}, 3) == 1);
  CHECK(intersection_dim({{1, 1, 0}}, {{1, -1, 0}}, 3) == 0);
}

TEST_CASE("minimal polynomial and squarefreeness") {
  // diag(1,1,2): (x-1)(x-2)
  QMat d{{1, 0, 0}, {0, 1, 0}, {0, 0, 2}};
  Poly p = minimal_polynomial(d);
  CHECK(poly_degree(p) == 2);
  CHECK(squarefree(p));
  // Jordan block
  QMat j{{3, 1}, {0, 3}};
  CHECK(poly_degree(minimal_polynomial(j)) == 2);
  CHECK(!squarefree(minimal_polynomial(j)));
  // rotation by 90 degrees: x^2 + 1 is squarefree over Q
  QMat r{{0, -1}, {1, 0}};
  CHECK(squarefree(minimal_polynomial(r)));
  // polynomial arithmetic
  Poly a{-1, 0, 1}, b{1, 1};  // x^2 - 1, x + 1
  CHECK(poly_gcd(a, b) == Poly{1, 1});
  CHECK(poly_div(a, b) == Poly{-1, 1});
  CHECK(poly_degree(poly_lcm(Poly{-1, 1}, Poly{1, 1})) == 2);
}
