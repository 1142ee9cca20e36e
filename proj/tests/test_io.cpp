#include <doctest.h>

#include "superpoisson/cohomology.hpp"
#include "superpoisson/io.hpp"
#include "superpoisson/library.hpp"

using namespace spo;

namespace {

std::string data(const std::string& name) { return std::string(SPO_DATA_DIR) + "/" + name + ".alg"; }

ErrorKind kind_of(const std::string& text) {
  try {
    parse_algebra(text);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error for " << text);
  return ErrorKind::ValidationError;
}

const char* kPlane = R"({"field": {"degree": 1}, "basis": [{"name": "e", "parity": 0}, {"name": "f", "parity": 1}],)";

std::string plane(const std::string& rest) { return std::string(kPlane) + rest + "}"; }

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("reading the (2|2) example") {
    AlgebraBundle a = load_algebra(data("example_2_2"));
    CHECK(a.dim() == 4);
    CHECK(eval_squaring(a, a.basis(2)) == a.basis(0));
    CHECK(eval_product(a, a.basis(2), a.basis(3)) == a.basis(1));
    CHECK(eval_product(a, a.basis(3), a.basis(2)) == a.basis(1));
    CHECK(a.bracket->is_zero());
    REQUIRE(a.unit);
    CHECK(*a.unit == a.basis(0));
  }

  TEST_CASE("data files match the built-in examples") {
    for (const auto& name : library_names()) {
      CAPTURE(name);
      AlgebraBundle file = load_algebra(data(name)), lib = library_algebra(name);
      CHECK(file.space == lib.space);
      CHECK(file.product.has_value() == lib.product.has_value());
      if (file.product && lib.product) CHECK(*file.product == *lib.product);
      CHECK(*file.bracket == *lib.bracket);
      CHECK(*file.squaring == *lib.squaring);
      CHECK(file.unit == lib.unit);
    }
  }

  TEST_CASE("round trip") {
    for (const auto& name : library_names()) {
      CAPTURE(name);
      AlgebraBundle a = library_algebra(name);
      std::string text = serialize_algebra(a);
      AlgebraBundle b = parse_algebra(text);
      CHECK(b.space == a.space);
      CHECK(b.bracket == a.bracket);
      CHECK(b.squaring == a.squaring);
      CHECK(b.product == a.product);
      CHECK(b.unit == a.unit);
      CHECK(serialize_algebra(b) == text);
    }
    Field f4(2);
    AlgebraBundle a = library_algebra("example_2_2", f4);
    a.squaring->at(2) = scaled(f4, 0b10, a.basis(0));
    AlgebraBundle b = parse_algebra(serialize_algebra(a));
    CHECK(b.field == f4);
    CHECK(b.squaring == a.squaring);
  }

  TEST_CASE("combinations") {
    AlgebraBundle a = library_algebra("example_2_2");
    CHECK(parse_combination(a.field, a.space, "e1 + e3", "t") == Vec{1, 0, 1, 0});
    CHECK(parse_combination(a.field, a.space, "e1 + e1", "t") == Vec{0, 0, 0, 0});
    CHECK(parse_combination(a.field, a.space, "0", "t") == Vec{0, 0, 0, 0});
    CHECK_THROWS_AS(parse_combination(a.field, a.space, "e9", "t"), Error);
    Field f4(2);
    CHECK(parse_combination(f4, a.space, "3*e2", "t") == Vec{0, 3, 0, 0});
  }

  TEST_CASE("missing and empty tables") {
    AlgebraBundle a = parse_algebra(plane(R"("bracket": {})"));
    CHECK_FALSE(a.product);
    REQUIRE(a.bracket);
    CHECK(a.bracket->is_zero());
    REQUIRE(a.squaring);
    CHECK(is_zero((*a.squaring)[1]));
    AlgebraBundle b = parse_algebra(plane(R"("product": {}, "bracket": {}, "squaring": {})"));
    CHECK(b.product->is_zero());
  }

  TEST_CASE("malformed input") {
    CHECK(kind_of("not json") == ErrorKind::ParseError);
    CHECK(kind_of(plane(R"("product": {"f,e": "f"})")) == ErrorKind::ParseError);
    CHECK(kind_of(plane(R"("product": {"e,g": "f"})")) == ErrorKind::ParseError);
    CHECK(kind_of(plane(R"("product": {"e,f": "e"})")) == ErrorKind::ValidationError);
    CHECK(kind_of(plane(R"("bracket": {}, "squaring": {"e": "e"})")) == ErrorKind::ValidationError);
    CHECK(kind_of(plane(R"("bracket": {}, "squaring": {"f": "f"})")) == ErrorKind::ValidationError);
    CHECK(kind_of(plane(R"("unit": "e")")) == ErrorKind::ValidationError);
    CHECK(kind_of(plane(R"("product": {}, "unit": "e")")) == ErrorKind::ValidationError);
    CHECK_THROWS_AS(load_algebra(data("does_not_exist")), Error);
  }

  TEST_CASE("noncommutative products") {
    AlgebraBundle a = parse_algebra(plane(R"("noncommutative_product": true, "product": {"f,e": "f", "e,e": "e"})"));
    CHECK(eval_product(a, a.basis(1), a.basis(0)) == a.basis(1));
    CHECK(is_zero(eval_product(a, a.basis(0), a.basis(1))));
  }

  TEST_CASE("two-product files") {
    TwoProductBundle b = make_two_product(Field(1), SuperSpace({{"e1", 0}, {"e2", 0}}), "plane");
    b.star.at(0, 0) = b.basis(1);
    b.triangle.at(0, 1) = b.basis(1);
    TwoProductBundle c = parse_two_product(serialize_two_product(b));
    CHECK(c.space == b.space);
    CHECK(c.star == b.star);
    CHECK(c.triangle == b.triangle);
  }

  TEST_CASE("layer files") {
    AlgebraBundle a = library_algebra("example_1_1");
    CochainSpace s(a, adjoint_module(a), 2);
    std::vector<std::string> names;
    for (std::size_t c = 0; c < s.dim(); ++c) names.push_back(s.coord_name(c));
    auto layers = parse_layers(R"({"layers": [{"omega(f)->e": "1"}, {}]})", names, a.field);
    REQUIRE(layers.size() == 2);
    for (std::size_t c = 0; c < s.dim(); ++c) CHECK(layers[0][c] == (names[c] == "omega(f)->e" ? 1 : 0));
    CHECK(is_zero(layers[1]));
    CHECK_THROWS_AS(parse_layers(R"({"layers": [{"omega(g)->e": "1"}]})", names, a.field), Error);
  }

  TEST_CASE("report JSON") {
    Report ok;
    CHECK(report_to_json(ok)["status"] == "pass");
    Report bad;
    bad.fail("jacobi", "(e3, e4, e3)", "e1", "0");
    auto j = report_to_json(bad);
    CHECK(j["status"] == "fail");
    CHECK(j["violation_count"] == 1);
    CHECK(j["violations"][0]["law"] == "jacobi");
    CHECK(j["violations"][0]["witness"] == "(e3, e4, e3)");
  }
}
