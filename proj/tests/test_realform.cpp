#include <set>

#include "doctest.h"
#include "lieindex/realform.hpp"

using namespace lieindex;

namespace {
std::shared_ptr<RealForm> get(const std::string& n) {
  auto rf = registry_lookup(n);
  REQUIRE_MESSAGE(rf, n);
  return rf;
}
}  // namespace

TEST_CASE("registry loads with unique names") {
  auto names = registry_names();
  CHECK(names.size() >= 150);
  std::set<std::string> u(names.begin(), names.end());
  CHECK(u.size() == names.size());
  CHECK(registry_lookup("su(2,1)") == registry_lookup("su(1,2)"));
  CHECK(registry_lookup("no-such-form") == nullptr);
}

TEST_CASE("theta is an involution fixing exactly the black roots") {
  for (auto& rf : registry()) {
    const RootSystem& rs = rf->roots();
    for (const Root& a : rs.roots()) {
      Root t = rf->theta(a);
      CHECK(rs.is_root(t));
      CHECK(rf->theta(t) == a);
      CHECK((t == a) == rs.supported_in(a, rf->black()));
    }
    // a-hat is the (-1)-eigenspace
    for (const QVec& v : rf->a_hat()) {
      QVec t = rf->theta(v);
      for (size_t i = 0; i < v.size(); ++i) CHECK(t[i] == -v[i]);
    }
  }
}

TEST_CASE("declared columns are reproduced") {
  for (auto& rf : registry()) {
    const auto& d = rf->record().declared;
    CHECK_MESSAGE(rf->dim_a() == d.dim_a, rf->name());
    CHECK_MESSAGE(rf->rank_k() == d.rg_k, rf->name());
    CHECK_MESSAGE(static_cast<int>(rf->cascade().size()) == d.k_g, rf->name());
    CHECK_MESSAGE(subsystem_type(rf->roots(), rf->black()) == canonical_type_string(d.m0_type), rf->name());
  }
}

TEST_CASE("strongest properties of named rows") {
  CHECK(analyze(*get("EIV")).flags.strongest == "rien");
  CHECK(!analyze(*get("EIV")).star);
  CHECK(analyze(*get("so*(8)")).flags.strongest == "(C)");
  CHECK(analyze(*get("sl(3,R)")).flags.strongest == "(B)");
  CHECK(analyze(*get("sl(2,R)")).flags.strongest == "(C)");
  CHECK(analyze(*get("complex-A2")).flags.strongest == "(A)");
  CHECK(get("compact-G2")->is_compact());
}

TEST_CASE("K_comp of complex doubles has 2 k_s elements") {
  for (const char* n : {"complex-A1", "complex-A3", "complex-G2", "complex-F4"}) {
    auto rf = get(n);
    CascadeAnalysis an = analyze(*rf);
    CHECK(an.kcomp_size() == 2 * k_g(rf->record().type));
    CHECK(an.star);
    CHECK(kcomp_count(an).match);
  }
}

TEST_CASE("K_comp formula in odd orthogonal rows") {
  CHECK(analyze(*get("so(5,5)")).kcomp_size() == 0);
  CHECK(analyze(*get("so(7,7)")).kcomp_size() == 0);
  CHECK(analyze(*get("so(3,5)")).kcomp_size() == 2);
  CHECK(analyze(*get("so(5,7)")).kcomp_size() == 2);
}

TEST_CASE("the chosen K_comp member carries Gamma_1") {
  auto rf = get("sl(2,H)");
  CascadeAnalysis an = analyze(*rf);
  REQUIRE(an.kcomp_plus.size() == 1);
  CHECK(an.gamma1_sizes[an.kcomp_plus[0]] == 2);
  CHECK_THROWS(kcomp_count(an));  // condition (*) fails
}

TEST_CASE("dim a - #K_reel bounds rg g - rg k and star forces equality") {
  for (auto& rf : registry()) {
    if (rf->is_compact()) continue;
    CalculKReport r = verify_calcul_k(analyze(*rf));
    CHECK(r.inequality);
    if (r.star) CHECK(r.equality);
  }
}

TEST_CASE("Cayley reduction removes one real root per step") {
  CascadeAnalysis an = analyze(*get("sl(5,R)"));
  CayleyState s = cayley_state(an);
  int inv = s.dim_a - static_cast<int>(s.kreel.size());
  size_t steps = 0;
  while (!s.kreel.empty()) {
    s = cayley_reduce(s, s.kreel.back());
    CHECK(s.dim_a - static_cast<int>(s.kreel.size()) == inv);
    ++steps;
  }
  CHECK(steps == an.kreel.size());
  CHECK_THROWS(cayley_reduce(s, 0));
}

TEST_CASE("bad registry input is rejected") {
  CHECK_THROWS_AS(parse_registry("x\tA2\t-\t-\t0\n"), RegistryError);
  // sigma that is not a diagram symmetry
  RealFormRecord rec = parse_registry("bad\tB3\t-\t1:3\t0\t3\t3\t3\t3\t0\t0\t0\t-\t-\n").at(0);
  CHECK_THROWS_AS(RealForm{rec}, RegistryError);
  // theta moves a black root
  RealFormRecord rec2 = parse_registry("bad2\tA3\t1,3\t1:3\t0\t3\t3\t1\t2\t0\t0\t0\t-\t-\n").at(0);
  CHECK_THROWS_AS(RealForm{rec2}, RegistryError);
}
