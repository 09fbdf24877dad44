#include "doctest.h"
#include "lieindex/report.hpp"
#include "lieindex/verify.hpp"

using namespace lieindex;

TEST_CASE("cascade JSON") {
  Json j = cascade_json(SimpleType::parse("F4"));
  CHECK(j["k_g"] == 4);
  CHECK(j["cascade"].size() == 4);
  CHECK(j["cascade"][0]["epsilon"] == "(2,3,4,2)");
  CHECK(j["cascade"][0]["parent"].is_null());
}

TEST_CASE("analysis JSON schema") {
  Json j = analysis_json(*registry_lookup("so*(8)"));
  for (const char* k : {"name", "kpp", "kp", "kreel", "kcomp_pairs", "property_P", "star", "properties"})
    CHECK_MESSAGE(j.contains(k), k);
  CHECK(j["properties"]["strongest"] == "(C)");
  Json c = analysis_json(*registry_lookup("compact-G2"));
  CHECK(c["b_is_zero"] == true);
}

TEST_CASE("renderers") {
  Json j = {{"a", 1}, {"b", "x,y"}, {"c", {1, 2}}};
  CHECK(render(j, Format::Json) == "{\"a\":1,\"b\":\"x,y\",\"c\":[1,2]}\n");
  CHECK(render(j, Format::Text) == "a: 1\nb: x,y\nc: [1, 2]\n");
  CHECK(render(j, Format::Csv) == "key,value\na,1\nb,\"x,y\"\nc,\"[1,2]\"\n");
  Json rows = Json::array({{{"k", 1}, {"v", true}}, {{"k", 2}, {"v", false}}});
  CHECK(render(rows, Format::Csv) == "k,v\n1,true\n2,false\n");
  CHECK_THROWS(parse_format("xml"));
}

TEST_CASE("verification scopes") {
  CHECK(valid_scope("all"));
  CHECK(!valid_scope("everything"));
  CHECK(criteria_in_scope("all").size() == 12);
  CHECK(criteria_in_scope("cascade") == std::vector<int>{1, 2});
  CheckResult r = run_criterion(1);
  CHECK(r.passed);
}
