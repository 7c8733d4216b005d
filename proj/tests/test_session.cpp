#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "idealkit/session.hpp"

using namespace idealkit;

TEST_CASE("parses a ring with a relation and an ideal") {
  SessionFile s = parse_session(
      "ring R = QQ[x,y,z]/(x^2+y^5+z^5) dim 2\n"
      "ideal I = (x, y^3, y^2*z, y*z^2, z^3) in R\n");
  const RingPresentation& R = s.ring("R");
  CHECK(R.variables == std::vector<std::string>{"x", "y", "z"});
  CHECK(R.declared_dim == 2);
  REQUIRE(R.relations.size() == 1);
  CHECK(R.relations[0] ==
        parse_polynomial("x^2+y^5+z^5", R.variables, R.field));
  const IdealDecl& I = s.ideal("I");
  CHECK(I.ring_name == "R");
  REQUIRE(I.gens.size() == 5);
  CHECK(I.gens[0] == parse_polynomial("x", R.variables, R.field));
  CHECK(I.gens[2] == parse_polynomial("y^2*z", R.variables, R.field));
}

TEST_CASE("regular presentations and prime fields") {
  SessionFile s = parse_session("ring S = QQ[x,y] dim 2\n"
                                "ring F = GF(7)[u,v] dim 2\n");
  CHECK(s.ring("S").regular());
  CHECK(s.ring("S").field.kind == Field::Kind::rationals);
  CHECK(s.ring("F").field.characteristic() == 7);
  CHECK(s.ring_order == std::vector<std::string>{"S", "F"});
}

TEST_CASE("error cases carry locations") {
  CHECK_THROWS_AS(parse_session("ring T = GF(4)[x] dim 1\n"), ParseError);
  try {
    parse_session("ring T = GF(4)[x] dim 1\n");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.column > 1);
  }

  // Unknown variable in an ideal generator.
  CHECK_THROWS_AS(parse_session("ring S = QQ[x,y] dim 2\n"
                                "ideal I = (x, w^2) in S\n"),
                  ParseError);
  try {
    parse_session("ring S = QQ[x,y] dim 2\n"
                  "ideal I = (x, w^2) in S\n");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }

  // Ideal referencing an undeclared ring.
  CHECK_THROWS_AS(parse_session("ideal I = (x) in R\n"), ParseError);
  // Garbage token.
  CHECK_THROWS_AS(parse_session("ring = QQ[x] dim 1\n"), ParseError);
  // Polynomial syntax error.
  CHECK_THROWS_AS(parse_session("ring S = QQ[x,y] dim 2\n"
                                "ideal I = (x^^2) in S\n"),
                  ParseError);
}

TEST_CASE("whitespace is insignificant") {
  SessionFile a = parse_session(
      "ring R=QQ[x,y]/(x^2+y^3)dim 1 ideal I=(x,y^2)in R");
  SessionFile b = parse_session(
      "ring  R  =  QQ [ x , y ] / ( x^2 + y^3 )  dim  1\n"
      "ideal I = ( x , y^2 ) in R\n");
  CHECK(a.ring("R").same_presentation(b.ring("R")));
  CHECK(a.ideal("I").gens == b.ideal("I").gens);
}

TEST_CASE("round-trip through pretty_print") {
  const std::string corpus_like =
      "ring R = QQ[x,y,z]/(x^2+y^5+z^5) dim 2\n"
      "ring S = QQ[x,y] dim 2\n"
      "ring P = GF(5)[x,y] dim 2\n"
      "ideal I = (x, y^3, y^2*z, y*z^2, z^3) in R\n"
      "ideal J = (x^3, x*y, y^2) in S\n"
      "ideal K = (x^2, y^3) in P\n"
      "ideal L = (x^2-y^2, 2*x*y+y^3) in S\n";
  SessionFile s = parse_session(corpus_like);
  SessionFile t = parse_session(pretty_print(s));
  CHECK(s.ring_order == t.ring_order);
  CHECK(s.ideal_order == t.ideal_order);
  for (auto& name : s.ring_order)
    CHECK(s.ring(name).same_presentation(t.ring(name)));
  for (auto& name : s.ideal_order) {
    CHECK(s.ideal(name).ring_name == t.ideal(name).ring_name);
    CHECK(s.ideal(name).gens == t.ideal(name).gens);
  }
  // Printing is a fixed point after one round.
  CHECK(pretty_print(t) == pretty_print(s));
}

TEST_CASE("polynomial parser handles signs and rational coefficients") {
  Field F = Field::rationals();
  std::vector<std::string> vars = {"x", "y"};
  CHECK(parse_polynomial("-x^2 + 3*x*y - y", vars, F) ==
        parse_polynomial("3*y*x - x^2 - y", vars, F));
  CHECK(parse_polynomial("x - x", vars, F).is_zero());
  CHECK(parse_polynomial("2*x + x", vars, F) ==
        parse_polynomial("3*x", vars, F));
  CHECK_THROWS_AS(parse_polynomial("x + q", vars, F), ParseError);
}
