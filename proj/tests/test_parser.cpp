#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "wrvar/expr_parse.hpp"
#include "wrvar/structure.hpp"

using namespace wrvar;

namespace {

std::string canon(const std::string& s) { return expr_text(parse_group_expr(s)); }

std::size_t error_pos(const std::string& s) {
  try {
    parse_group_expr(s);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no parse error for: " << s);
  return SIZE_MAX;
}

}  // namespace

TEST_CASE("canonical forms round trip") {
  const std::vector<std::string> fixed = {
      "C(6)",
      "D(4)",
      "Q8",
      "S(4)",
      "A(5)",
      "E(2,3)",
      "Heis(2,3)",
      "Wr(C(2),C(3))",
      "C(2) X C(3) X C(4)",
      "C(2) X (C(3) X C(4))",
      "Wr(C(2) X C(2),D(3))",
      "Perm(5;(1 2 3)(4 5),(1 2))",
      "Perm(3;())",
  };
  for (const std::string& s : fixed) {
    CAPTURE(s);
    CHECK(canon(s) == s);
    CHECK(canon(canon(s)) == canon(s));
  }
}

TEST_CASE("whitespace and sugar") {
  CHECK(canon("  C( 6 ) ") == "C(6)");
  CHECK(canon("Wr( C(2) , C(3) )") == "Wr(C(2),C(3))");
  CHECK(canon("C(2)XC(2)") == "C(2) X C(2)");
  CHECK(canon("E( 2 , 3 )") == "E(2,3)");
  CHECK(canon("Perm(5; (1 2 3)(4 5), (1 2))") == "Perm(5;(1 2 3)(4 5),(1 2))");
  CHECK(canon("Perm(5;(1,2,3)(4,5),(1,2))") == "Perm(5;(1 2 3)(4 5),(1 2))");
  // Left association is the canonical shape; explicit left parens drop.
  CHECK(canon("(C(2) X C(3)) X C(4)") == "C(2) X C(3) X C(4)");
  CHECK(canon("((C(5)))") == "C(5)");
}

TEST_CASE("parsed trees build the right groups") {
  CHECK(build(parse_group_expr("C(6)")).order() == 6);
  CHECK(build(parse_group_expr("Wr(C(2),C(2))")).order() == 8);
  CHECK(build(parse_group_expr("C(2) X C(3) X C(4)")).order() == 24);
  CHECK(exponent(build(parse_group_expr("C(2) X C(3) X C(4)"))) == 12);
  FiniteGroup s3 = build(parse_group_expr("Perm(3;(1 2 3),(1 2))"));
  CHECK(s3.order() == 6);
  CHECK(are_isomorphic(s3, symmetric_group(3)));
  FiniteGroup t = build(parse_group_expr("Perm(4;())"));
  CHECK(t.order() == 1);
  CHECK(t.degree() == 4);
}

TEST_CASE("parse errors carry the offending offset") {
  CHECK(error_pos("") == 0);
  CHECK(error_pos("   ") == 3);
  CHECK(error_pos("C(") == 2);
  CHECK(error_pos("C(x)") == 2);
  CHECK(error_pos("C(2") == 3);
  CHECK(error_pos("C(2) X") == 6);
  CHECK(error_pos("X C(2)") == 0);
  CHECK(error_pos("Foo(3)") == 0);
  CHECK(error_pos("C(2))") == 4);
  CHECK(error_pos("Q8 Q8") == 3);
  CHECK(error_pos("(C(2)") == 5);
  CHECK(error_pos("Wr(C(2)C(3))") == 7);
  CHECK(error_pos("C(99999999999)") == 2);
  CHECK(error_pos("E(2 3)") == 4);
  CHECK(error_pos("Perm(3)") == 6);        // missing ';'
  CHECK(error_pos("Perm(3;)") == 7);       // a generator needs a cycle list
  CHECK(error_pos("Perm(3; (1 4))") == 11);  // point past the degree
  CHECK(error_pos("Perm(3; (0 1))") == 9);   // points are 1-based
  CHECK(error_pos("Heis(2)") == 6);
  // Names must not continue as longer identifiers.
  CHECK(error_pos("Cyc(3)") == 0);
  CHECK(error_pos("Q87") == 2);  // parses Q8, then trailing '7'
}

TEST_CASE("well formed text can still name an invalid group") {
  CHECK_THROWS_AS(build(parse_group_expr("C(0)")), BadParameter);
  CHECK_THROWS_AS(build(parse_group_expr("E(4,2)")), BadParameter);
  CHECK_THROWS_AS(build(parse_group_expr("Heis(2,4)")), BadParameter);
  CHECK_THROWS_AS(build(parse_group_expr("Perm(70000;(1 2))")), PointLimitExceeded);
  CHECK_THROWS_AS(build(parse_group_expr("Wr(C(2),C(5))"), 100), ClosureExceedsCap);
}
