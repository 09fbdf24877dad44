#include "doctest.h"
#include "lieindex/rootsys.hpp"
#include "oracle.hpp"

using namespace lieindex;

namespace {
std::vector<SimpleType> small_types() {
  std::vector<SimpleType> v;
  for (const char* s : {"A1", "A2", "A4", "B2", "B3", "B5", "C3", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"})
    v.push_back(SimpleType::parse(s));
  return v;
}
}  // namespace

TEST_CASE("positive root counts follow the classical formulas") {
  for (int l = 1; l <= 8; ++l) CHECK(RootSystem(SimpleType::make('A', l)).num_positive() == l * (l + 1) / 2);
  for (int l = 2; l <= 8; ++l) CHECK(RootSystem(SimpleType::make('B', l)).num_positive() == l * l);
  for (int l = 3; l <= 8; ++l) CHECK(RootSystem(SimpleType::make('C', l)).num_positive() == l * l);
  for (int l = 4; l <= 8; ++l) CHECK(RootSystem(SimpleType::make('D', l)).num_positive() == l * (l - 1));
  CHECK(RootSystem(SimpleType::parse("E6")).num_positive() == 36);
  CHECK(RootSystem(SimpleType::parse("E7")).num_positive() == 63);
  CHECK(RootSystem(SimpleType::parse("E8")).num_positive() == 120);
  CHECK(RootSystem(SimpleType::parse("F4")).num_positive() == 24);
  CHECK(RootSystem(SimpleType::parse("G2")).num_positive() == 6);
}

TEST_CASE("root enumeration matches the reflection closure") {
  for (SimpleType t : small_types()) {
    RootSystem rs(t);
    auto want = oracle::roots_by_reflection(rs.cartan_matrix());
    std::set<Root> got(rs.roots().begin(), rs.roots().end());
    CHECK_MESSAGE(got == want, t.name());
  }
}

TEST_CASE("simple roots come first and roots sort by height") {
  for (SimpleType t : small_types()) {
    RootSystem rs(t);
    for (int i = 0; i < rs.rank(); ++i) CHECK(rs.positive_roots()[i] == rs.simple_root(i));
    for (int r = 1; r < rs.num_positive(); ++r)
      CHECK(height(rs.positive_roots()[r - 1]) <= height(rs.positive_roots()[r]));
    for (int r = 0; r < rs.num_positive(); ++r) CHECK(rs.roots()[rs.negative_index(r)] == negate(rs.roots()[r]));
  }
}

TEST_CASE("Cartan matrices in Bourbaki numbering") {
  CHECK(cartan_matrix(SimpleType::parse("B3")) == std::vector<std::vector<int>>{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
  CHECK(cartan_matrix(SimpleType::parse("C3")) == std::vector<std::vector<int>>{{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}});
  CHECK(cartan_matrix(SimpleType::parse("F4")) ==
        std::vector<std::vector<int>>{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}});
  // beta_1 long
  CHECK(cartan_matrix(SimpleType::parse("G2")) == std::vector<std::vector<int>>{{2, -1}, {-3, 2}});
  CHECK(symmetrizer(SimpleType::parse("G2")) == std::vector<int>{3, 1});
  CHECK(symmetrizer(SimpleType::parse("F4")) == std::vector<int>{2, 2, 1, 1});
}

TEST_CASE("symmetrized Cartan matrix is symmetric") {
  for (SimpleType t : small_types()) {
    auto c = cartan_matrix(t);
    auto d = symmetrizer(t);
    for (int i = 0; i < t.rank; ++i)
      for (int j = 0; j < t.rank; ++j) CHECK(d[i] * c[i][j] == d[j] * c[j][i]);
  }
}

TEST_CASE("highest roots") {
  CHECK(RootSystem(SimpleType::parse("G2")).highest_root({0, 1}) == Root{2, 3});
  CHECK(RootSystem(SimpleType::parse("F4")).highest_root({0, 1, 2, 3}) == Root{2, 3, 4, 2});
  CHECK(RootSystem(SimpleType::parse("E8")).highest_root({0, 1, 2, 3, 4, 5, 6, 7}) == Root{2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(RootSystem(SimpleType::parse("B3")).highest_root({0, 1, 2}) == Root{1, 2, 2});
  CHECK(RootSystem(SimpleType::parse("C3")).highest_root({0, 1, 2}) == Root{2, 2, 1});
  RootSystem a3(SimpleType::parse("A3"));
  CHECK_THROWS(a3.highest_root({0, 2}));
  CHECK_THROWS(a3.highest_root({}));
}

TEST_CASE("type bounds") {
  CHECK_THROWS_AS(SimpleType::make('H', 3), TypeError);
  CHECK_THROWS_AS(SimpleType::make('B', 1), TypeError);
  CHECK_THROWS_AS(SimpleType::make('C', 2), TypeError);
  CHECK_THROWS_AS(SimpleType::make('D', 3), TypeError);
  CHECK_THROWS_AS(SimpleType::make('E', 9), TypeError);
  CHECK_THROWS_AS(SimpleType::make('A', 0), TypeError);
  CHECK(SimpleType::parse("D4").name() == "D4");
}

TEST_CASE("subsystem types") {
  RootSystem e8(SimpleType::parse("E8"));
  CHECK(subsystem_type(e8, {1, 2, 3, 4}) == "D4");
  CHECK(subsystem_type(e8, {}) == "0");
  RootSystem b3(SimpleType::parse("B3"));
  CHECK(subsystem_type(b3, {1, 2}) == "B2");
  CHECK(subsystem_type(b3, {0, 2}) == "A1^2");
  CHECK(canonical_type_string("C2") == "B2");
  CHECK(canonical_type_string("D3") == "A3");
  RootSystem d5(SimpleType::parse("D5"));
  CHECK(subsystem_type(d5, {2, 3, 4}) == "A3");
}

TEST_CASE("pairings") {
  RootSystem g2(SimpleType::parse("G2"));
  Root b1{1, 0}, b2{0, 1};
  CHECK(g2.pairing(b2, b1) == -1);
  CHECK(g2.pairing(b1, b2) == -3);
  CHECK(g2.inner(b1, b1) == 6);
  CHECK(g2.inner(b2, b2) == 2);
}
