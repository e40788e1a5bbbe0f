#include <doctest.h>

#include "cuspcount/error.hpp"
#include "cuspcount/json_io.hpp"

using namespace cuspcount;

TEST_CASE("group specs round-trip through JSON") {
  for (const std::string text : {R"({"SL":3})", R"({"Res":[2,{"U":1}]})", R"({"Product":[{"Sp":4},{"U":1}]})"}) {
    const GroupSpec g = group_spec_from_json(text);
    CHECK(group_spec_from_json(group_spec_to_json(g)) == g);
  }
  CHECK(parse_group_option("Sp:6") == GroupSpec::sp(6));
}

TEST_CASE("curve data round-trip through JSON") {
  const CurveDatum c = elliptic_curve(5, -2, {1, 1, 3}, {2});
  CHECK(curve_from_json(curve_to_json(c)) == c);
  const CurveDatum p1 = curve_from_json(R"({"q": 4, "s_degrees": [1, 1]})");
  CHECK(p1 == projective_line(4, {1, 1}));
  CHECK(curve_from_json(R"({"q": 3, "weil_numerator": ["1", "0", "3"], "s_degrees": [1]})").genus() == 1);
}

TEST_CASE("malformed JSON is a ParseError") {
  CHECK_THROWS_AS(group_spec_from_json("{\"SL\":"), ParseError);
  CHECK_THROWS_AS(group_spec_from_json(R"({"XL":3})"), ParseError);
  CHECK_THROWS_AS(group_spec_from_json(R"({"SL":3,"GL":2})"), ParseError);
  CHECK_THROWS_AS(curve_from_json(R"({"q": 6, "s_degrees": [1]})"), ParseError);
  CHECK_THROWS_AS(curve_from_json(R"({"q": 3, "s_degrees": [1], "genus": 0})"), ParseError);
  CHECK_THROWS_AS(parse_group_option("SL-4"), ParseError);
  CHECK_THROWS_AS(load_json_argument("/nonexistent/curve.json"), ParseError);
}
