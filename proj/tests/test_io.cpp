#include <doctest.h>

#include "hopf/io.hpp"
#include "support.hpp"

using namespace hopf;
using test_support::ptr;
using test_support::vec;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("algebra JSON round trip is structure-constant identical") {
  const FieldSpec fields[] = {FieldSpec::rationals(), FieldSpec::prime(3), FieldSpec::prime(5),
                              FieldSpec::rational_functions(3, {"X1"})};
  for (const auto& f : fields) {
    std::vector<HopfAlgebra> algebras{sweedler4(f), cyclic_group_algebra(2, f), cyclic_group_algebra(4, f),
                                      tensor_hopf(sweedler4(f), cyclic_group_algebra(2, f))};
    if (f.characteristic() == 3) {
      algebras.push_back(line_nilpotent(3, f));
      algebras.push_back(line_semisimple(3, f));
    }
    for (const auto& a : algebras) {
      const std::string text = algebra_to_json(a).dump();
      const HopfAlgebra b = algebra_from_json(parse_json_text(text));
      CHECK(structure_identical(a, b));
      CHECK(b.name == a.name);
      CHECK(b.presentation.has_value() == a.presentation.has_value());
      CHECK(algebra_to_json(b).dump() == text);
    }
  }
}

TEST_CASE("crossed products round trip through JSON and still verify") {
  const FieldSpec f3 = FieldSpec::prime(3);
  const AlgebraPtr A = ptr(line_semisimple(3, f3));
  const CrossedProduct p = build_A_a(H4CocycleParam::make(A, vec(f3, {0, 2, 0})));
  const HopfAlgebra back = algebra_from_json(parse_json_text(algebra_to_json(*p.product).dump()));
  CHECK(structure_identical(*p.product, back));
  CHECK(verify_hopf(back).ok());
}

TEST_CASE("JSON errors carry codes and positions") {
  SUBCASE("syntax error reports the byte offset") {
    try {
      parse_json_text("{\"dim\": 2,,}");
      FAIL("expected ParseError");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ParseError);
      CHECK(std::string(e.what()).find("byte 11") != std::string::npos);
    }
  }
  SUBCASE("schema violations are MalformedData") {
    Json j = algebra_to_json(sweedler4(FieldSpec::prime(3)));
    Json missing = j;
    missing.erase("antipode");
    CHECK(code_of([&] { algebra_from_json(missing); }) == Errc::MalformedData);
    Json bad_index = j;
    bad_index["mult"].push_back(Json::array({0, 9, 0, "1"}));
    CHECK(code_of([&] { algebra_from_json(bad_index); }) == Errc::MalformedData);
    Json bad_arity = j;
    bad_arity["antipode"].push_back(Json::array({0, 0}));
    CHECK(code_of([&] { algebra_from_json(bad_arity); }) == Errc::MalformedData);
    Json bad_field = j;
    bad_field["field"] = "f4";
    CHECK(code_of([&] { algebra_from_json(bad_field); }) != Errc::MalformedData);
  }
  SUBCASE("bad coefficients are ParseError") {
    Json j = algebra_to_json(sweedler4(FieldSpec::prime(3)));
    j["unit"][0] = "1/";
    CHECK(code_of([&] { algebra_from_json(j); }) == Errc::ParseError);
  }
  SUBCASE("omitted entries are zero") {
    Json j = algebra_to_json(cyclic_group_algebra(2, FieldSpec::rationals()));
    j["mult"].push_back(Json::array({1, 1, 1, "0"}));
    CHECK(structure_identical(algebra_from_json(j), cyclic_group_algebra(2, FieldSpec::rationals())));
  }
}

TEST_CASE("field JSON accepts both spellings") {
  for (const char* s : {"q", "f3", "f5(X1,X2)"}) {
    const FieldSpec f = FieldSpec::parse(s);
    CHECK(field_from_json(field_to_json(f)) == f);
    CHECK(field_from_json(Json(s)) == f);
  }
}

TEST_CASE("element parser over basis labels") {
  const FieldSpec k = FieldSpec::rational_functions(3, {"X1"});
  const HopfAlgebra a = line_nilpotent(3, k);
  CHECK(parse_element(a, "y") == vec(k, {0, 1, 0}));
  CHECK(parse_element(a, "2*y - y^2") == vec(k, {0, 2, -1}));
  CHECK(parse_element(a, "1 + y") == vec(k, {1, 1, 0}));
  CHECK(parse_element(a, "(X1+1)*y") == Vec{k.zero(), k.parse_scalar("X1+1"), k.zero()});
  CHECK(parse_element(a, "X1*y") == Vec{k.zero(), k.variable(0), k.zero()});
  CHECK_THROWS_AS(parse_element(a, "y +"), Error);
  CHECK_THROWS_AS(parse_element(a, "z"), Error);
  const HopfAlgebra h = sweedler4(FieldSpec::prime(5));
  CHECK(parse_element(h, "gx - 2*x") == vec(FieldSpec::prime(5), {0, 0, -2, 1}));
}

TEST_CASE("crossed system JSON round trip") {
  const FieldSpec f3 = FieldSpec::prime(3);
  const AlgebraPtr A = ptr(line_nilpotent(3, f3));
  const CrossedSystem s = cocycle_from_param(H4CocycleParam::make(A, vec(f3, {0, 1, 0})));
  const Json j = crossed_to_json(s, "catalog:line0:3", "catalog:sweedler4");
  auto resolve = [&](const std::string& ref) -> AlgebraPtr {
    return ref == "catalog:line0:3" ? s.A : s.H;
  };
  CHECK(crossed_from_json(parse_json_text(j.dump()), resolve) == s);
  Json trivial{{"A", "catalog:line0:3"}, {"H", "catalog:sweedler4"}, {"action", "trivial"}, {"cocycle", "trivial"}};
  CHECK(crossed_from_json(trivial, resolve) == trivial_system(s.A, s.H));
}
