#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "lieindex/cascade.hpp"

using namespace lieindex;

namespace {

// E vectors written as in the published tables: top row b1 b3 b4 ..., then b2.
Root display(int l, const std::string& top, int b2) {
  std::istringstream in(top);
  std::vector<int> a;
  for (int x; in >> x;) a.push_back(x);
  Root r(l, 0);
  r[0] = a[0];
  r[1] = b2;
  for (size_t k = 1; k < a.size(); ++k) r[k + 1] = a[k];
  return r;
}

std::set<Root> eps_set(const std::string& type) {
  RootSystem rs(SimpleType::parse(type));
  auto e = kostant_cascade(rs).epsilons();
  return {e.begin(), e.end()};
}

}  // namespace

TEST_CASE("k_g") {
  for (int l = 1; l <= 12; ++l) CHECK(k_g(SimpleType::make('A', l)) == (l + 1) / 2);
  for (int l = 2; l <= 12; ++l) CHECK(k_g(SimpleType::make('B', l)) == l);
  for (int l = 3; l <= 12; ++l) CHECK(k_g(SimpleType::make('C', l)) == l);
  for (int l = 4; l <= 12; ++l) CHECK(k_g(SimpleType::make('D', l)) == 2 * (l / 2));
  CHECK(k_g(SimpleType::parse("E6")) == 4);
  CHECK(k_g(SimpleType::parse("E7")) == 7);
  CHECK(k_g(SimpleType::parse("E8")) == 8);
  CHECK(k_g(SimpleType::parse("F4")) == 4);
  CHECK(k_g(SimpleType::parse("G2")) == 2);
}

TEST_CASE("exceptional cascades in display notation") {
  CHECK(eps_set("E6") == std::set<Root>{display(6, "1 2 3 2 1", 2), display(6, "1 1 1 1 1", 0),
                                        display(6, "0 1 1 1 0", 0), display(6, "0 0 1 0 0", 0)});
  CHECK(eps_set("E7") == std::set<Root>{display(7, "2 3 4 3 2 1", 2), display(7, "0 1 2 2 2 1", 1),
                                        display(7, "0 1 2 1 0 0", 1), display(7, "0 0 0 0 0 1", 0),
                                        display(7, "0 0 0 0 0 0", 1), display(7, "0 1 0 0 0 0", 0),
                                        display(7, "0 0 0 1 0 0", 0)});
  CHECK(eps_set("E8") == std::set<Root>{display(8, "2 4 6 5 4 3 2", 3), display(8, "2 3 4 3 2 1 0", 2),
                                        display(8, "0 1 2 2 2 1 0", 1), display(8, "0 1 2 1 0 0 0", 1),
                                        display(8, "0 0 0 0 0 1 0", 0), display(8, "0 0 0 0 0 0 0", 1),
                                        display(8, "0 1 0 0 0 0 0", 0), display(8, "0 0 0 1 0 0 0", 0)});
  CHECK(eps_set("F4") == std::set<Root>{{2, 3, 4, 2}, {0, 1, 2, 2}, {0, 1, 2, 0}, {0, 1, 0, 0}});
}

TEST_CASE("G2 cascade: the second root is beta_2") {
  // the published (1,2) is not the highest root of any connected subset
  CHECK(eps_set("G2") == std::set<Root>{{2, 3}, {0, 1}});
  RootSystem g2(SimpleType::parse("G2"));
  for (NodeSet s : {NodeSet{0}, NodeSet{1}, NodeSet{0, 1}}) CHECK(g2.highest_root(s) != Root{1, 2});
}

TEST_CASE("classical cascades") {
  CHECK(eps_set("A5") == std::set<Root>{{1, 1, 1, 1, 1}, {0, 1, 1, 1, 0}, {0, 0, 1, 0, 0}});
  CHECK(eps_set("B5") == std::set<Root>{{1, 2, 2, 2, 2}, {0, 0, 1, 2, 2}, {1, 0, 0, 0, 0}, {0, 0, 1, 0, 0},
                                        {0, 0, 0, 0, 1}});
  CHECK(eps_set("B6") == std::set<Root>{{1, 2, 2, 2, 2, 2}, {0, 0, 1, 2, 2, 2}, {0, 0, 0, 0, 1, 2},
                                        {1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 0}});
  CHECK(eps_set("C5") == std::set<Root>{{2, 2, 2, 2, 1}, {0, 2, 2, 2, 1}, {0, 0, 2, 2, 1}, {0, 0, 0, 2, 1},
                                        {0, 0, 0, 0, 1}});
  CHECK(eps_set("D6") == std::set<Root>{{1, 2, 2, 2, 1, 1}, {0, 0, 1, 2, 1, 1}, {1, 0, 0, 0, 0, 0},
                                        {0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}});
  CHECK(eps_set("D7") == std::set<Root>{{1, 2, 2, 2, 2, 1, 1}, {0, 0, 1, 2, 2, 1, 1}, {1, 0, 0, 0, 0, 0, 0},
                                        {0, 0, 1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 0},
                                        {0, 0, 0, 0, 1, 1, 1}});
}

TEST_CASE("cascade roots are pairwise strongly orthogonal and Gamma partitions the positive roots") {
  for (const char* n : {"A6", "B4", "C5", "D5", "D6", "E6", "E7", "E8", "F4", "G2"}) {
    RootSystem rs(SimpleType::parse(n));
    Cascade c = kostant_cascade(rs);
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = i + 1; j < c.size(); ++j) {
        CHECK(!rs.is_root(add(c[i].epsilon, c[j].epsilon)));
        CHECK(!rs.is_root(sub(c[i].epsilon, c[j].epsilon)));
      }
    std::map<Root, int> seen;
    for (size_t k = 0; k < c.size(); ++k) {
      CHECK(c[k].epsilon == rs.highest_root(c[k].subset));
      CHECK(c[k].gamma.size() == c[k].gamma0.size() + 1);
      for (const Root& a : c[k].gamma) {
        ++seen[a];
        CHECK(is_positive(a));
        CHECK(c.k_alpha(a) == static_cast<int>(k));
      }
    }
    CHECK(static_cast<int>(seen.size()) == rs.num_positive());
    for (auto& [r, m] : seen) CHECK(m == 1);
  }
}

TEST_CASE("parents precede children") {
  RootSystem rs(SimpleType::parse("E8"));
  Cascade c = kostant_cascade(rs);
  for (size_t k = 0; k < c.size(); ++k)
    if (c[k].parent) {
      CHECK(*c[k].parent < static_cast<int>(k));
      const NodeSet& p = c[*c[k].parent].subset;
      CHECK(std::includes(p.begin(), p.end(), c[k].subset.begin(), c[k].subset.end()));
    }
}
