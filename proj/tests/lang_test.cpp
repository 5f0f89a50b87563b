#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "ivlp/grounder.hpp"
#include "ivlp/parser.hpp"
#include "support/test_util.hpp"

using namespace ivlp;

TEST_CASE("parses propositional clauses") {
  Program p = parse_program("p :- not q.\nq :- false.");
  REQUIRE(p.clauses.size() == 2);
  CHECK(p.clauses[0].head.pred == "p");
  REQUIRE(p.clauses[0].body.size() == 1);
  CHECK(p.clauses[0].body[0].kind == Literal::Kind::Negative);
  CHECK(p.clauses[0].body[0].atom.pred == "q");
  CHECK(p.clauses[1].body[0].kind == Literal::Kind::FalseConst);
}

TEST_CASE("parses rules with variables") {
  Program p = parse_program(
      "e(a,b).\nr(X,Y) :- e(X,Y).\nr(X,Y) :- e(X,Z), r(Z,Y).");
  REQUIRE(p.clauses.size() == 3);
  CHECK(p.clauses[0].body.empty());  // fact, normalized later by grounding
  CHECK(p.clauses[2].body.size() == 2);
  CHECK(p.clauses[2].head.args == std::vector<std::string>{"X", "Y"});
}

TEST_CASE("comments and whitespace") {
  Program p = parse_program("% leading comment\np. % trailing\n\n q :- p.\n");
  CHECK(p.clauses.size() == 2);
}

TEST_CASE("rejects function terms") {
  CHECK_THROWS_AS(parse_program("p :- q(f(X))."), ParseError);
  CHECK_THROWS_AS(parse_program("p(f(a))."), ParseError);
}

TEST_CASE("rejects reserved words and stray syntax") {
  CHECK_THROWS_AS(parse_program("true :- p."), ParseError);
  CHECK_THROWS_AS(parse_program("p :- not true."), ParseError);
  CHECK_THROWS_AS(parse_program("p :- q"), ParseError);   // missing period
  CHECK_THROWS_AS(parse_program("X :- p."), ParseError);  // variable head
  try {
    parse_program("p :- q.\nr :- ,s.");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.col() == 6);
  }
}

TEST_CASE("grounding normalizes facts to true-bodies") {
  Program g = ivlp::test::prog("p.");
  REQUIRE(g.clauses.size() == 1);
  REQUIRE(g.clauses[0].body.size() == 1);
  CHECK(g.clauses[0].body[0].kind == Literal::Kind::TrueConst);
  REQUIRE(g.base.size() == 1);
  CHECK(g.base[0].pred == "p");
}

TEST_CASE("grounding adds false-rules for ruleless atoms") {
  Program g = ivlp::test::prog("p :- not q.");
  REQUIRE(g.base.size() == 2);
  auto q_rules = std::count_if(g.clauses.begin(), g.clauses.end(),
                               [](const Clause& c) { return c.head.pred == "q"; });
  REQUIRE(q_rules == 1);
  for (const Clause& c : g.clauses)
    if (c.head.pred == "q")
      CHECK(c.body[0].kind == Literal::Kind::FalseConst);
}

TEST_CASE("grounding instantiates over program constants") {
  Program g = ivlp::test::prog("e(a,b). r(X,Y) :- e(X,Y).");
  // 4 e-atoms + 4 r-atoms over constants {a,b}
  CHECK(g.base.size() == 8);
  std::size_t false_rules = 0;
  for (const Clause& c : g.clauses)
    if (c.body[0].kind == Literal::Kind::FalseConst) ++false_rules;
  // e(a,a), e(b,a), e(b,b) are underivable; all r-atoms head instances
  CHECK(false_rules == 3);
  // every base atom heads at least one clause
  for (const Atom& a : g.base) {
    bool headed = std::any_of(g.clauses.begin(), g.clauses.end(),
                              [&](const Clause& c) { return c.head == a; });
    CHECK(headed);
  }
}

TEST_CASE("rejects unsafe rules") {
  CHECK_THROWS_AS(ivlp::test::prog("p(X). q(a)."), GroundingError);
  CHECK_THROWS_AS(ivlp::test::prog("p :- not q(X). q(a)."), GroundingError);
  CHECK_THROWS_AS(ivlp::test::prog("p(X) :- q(X)."), GroundingError);  // no constants
}

TEST_CASE("grounding is idempotent") {
  for (const char* text :
       {"p :- not q.\nq :- false.", "e(a,b). r(X,Y) :- e(X,Y).",
        "p. q :- p, not r."}) {
    Program once = ivlp::test::prog(text);
    Program twice = ground(once);
    CHECK(once.clauses == twice.clauses);
    CHECK(once.base == twice.base);
  }
}

TEST_CASE("render then parse is the identity on ground programs") {
  for (const char* text :
       {"p :- not q.\nq :- false.", "e(a,b). r(X,Y) :- e(X,Y), not e(Y,X).",
        "p. q :- p."}) {
    Program g = ivlp::test::prog(text);
    Program back = ground(parse_program(g.to_string()));
    CHECK(back.clauses == g.clauses);
    CHECK(back.base == g.base);
  }
}

TEST_CASE("duplicate clauses are deduplicated") {
  Program g = ivlp::test::prog("p :- q.\np :- q.\nq.");
  std::size_t p_rules = 0;
  for (const Clause& c : g.clauses)
    if (c.head.pred == "p") ++p_rules;
  CHECK(p_rules == 1);
}
