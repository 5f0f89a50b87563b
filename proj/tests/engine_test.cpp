#include <catch2/catch_amalgamated.hpp>

#include "ivlp/engine.hpp"
#include "support/test_util.hpp"

using namespace ivlp;
using ivlp::test::F;
using ivlp::test::T;
using ivlp::test::Z;
using ivlp::test::interp;
using ivlp::test::prog;

namespace {

const char* kMainExample =
    "p :- not q.\n"
    "q :- not r.\n"
    "s :- p.\n"
    "s :- not s.\n"
    "r :- false.\n";

}  // namespace

TEST_CASE("immediate consequence operator") {
  Program p1 = prog("p :- not q.\np :- not p.\nq :- false.");
  CHECK(tp_step(p1, interp(p1, {{"p", T(0)}, {"q", T(1)}})) ==
        interp(p1, {{"p", F(2)}, {"q", F(0)}}));

  Program p2 = prog("p :- not q.\nq :- false.");
  CHECK(tp_step(p2, interp(p2, {{"q", F(0)}, {"p", T(2)}})) ==
        interp(p2, {{"q", F(0)}, {"p", T(1)}}));

  Program p3 = prog(
      "p :- not q.\ns :- p.\nt :- not s.\nt :- u.\nu :- t.\nq :- false.");
  CHECK(tp_step(p3, interp(p3, {{"p", T(1)},
                                {"q", F(0)},
                                {"s", F(0)},
                                {"t", T(1)},
                                {"u", F(0)}})) ==
        interp(p3, {{"p", T(1)},
                    {"q", F(0)},
                    {"s", T(1)},
                    {"t", T(1)},
                    {"u", T(1)}}));
}

TEST_CASE("stage operator on the four-atom example") {
  Program p = prog(kMainExample);

  SECTION("level 0 from the empty interpretation") {
    StageRecord st = omega_iterate(p, empty_interpretation(p), 0, true);
    REQUIRE(st.iterates.size() == 3);
    CHECK(st.iterates[1] ==
          interp(p, {{"p", T(1)}, {"q", T(1)}, {"r", F(0)}, {"s", T(1)}}));
    CHECK(st.iterates[2] ==
          interp(p, {{"p", F(2)}, {"q", T(1)}, {"r", F(0)}, {"s", T(1)}}));
    CHECK(st.stabilized_true.empty());
    CHECK(st.stabilized_false ==
          std::vector<std::size_t>{p.atom_index({"r", {}})});
    CHECK(st.result ==
          interp(p, {{"p", F(1)}, {"q", F(1)}, {"r", F(0)}, {"s", F(1)}}));
  }

  SECTION("level 1 from M_0") {
    Interpretation m0 =
        interp(p, {{"p", F(1)}, {"q", F(1)}, {"r", F(0)}, {"s", F(1)}});
    StageRecord st = omega_iterate(p, m0, 1);
    CHECK(st.stabilized_true ==
          std::vector<std::size_t>{p.atom_index({"q", {}})});
    CHECK(st.stabilized_false.empty());
    CHECK(st.result ==
          interp(p, {{"p", F(2)}, {"q", T(1)}, {"r", F(0)}, {"s", F(2)}}));
  }

  SECTION("level 3 from M_2 stabilizes nothing") {
    Interpretation m2 =
        interp(p, {{"p", F(2)}, {"q", T(1)}, {"r", F(0)}, {"s", F(3)}});
    StageRecord st = omega_iterate(p, m2, 3, true);
    CHECK(st.iterates[1] ==
          interp(p, {{"p", F(2)}, {"q", T(1)}, {"r", F(0)}, {"s", T(4)}}));
    CHECK(st.stabilized_nothing());
    CHECK(st.result ==
          interp(p, {{"p", F(2)}, {"q", T(1)}, {"r", F(0)}, {"s", F(4)}}));
  }
}

TEST_CASE("stage operator rejects non-chains") {
  Program p = prog(kMainExample);
  // starting level 2 from a value pattern the chain machinery cannot have
  // produced makes consecutive iterates incomparable at the level
  Interpretation bogus =
      interp(p, {{"p", T(0)}, {"q", F(0)}, {"r", T(2)}, {"s", F(2)}});
  CHECK_THROWS_AS(omega_iterate(p, bogus, 2), AlphaChainError);
}

TEST_CASE("minimum model of the worked examples") {
  Program main = prog(kMainExample);
  SolveTrace tr = solve(main);
  CHECK(tr.model ==
        interp(main, {{"p", F(2)}, {"q", T(1)}, {"r", F(0)}, {"s", Z()}}));
  CHECK(tr.depth == 3);

  Program intro = prog("p :- true.\nr :- not p.\ns :- not q.\nq :- false.");
  CHECK(solve(intro).model ==
        interp(intro, {{"p", T(0)}, {"q", F(0)}, {"r", F(1)}, {"s", T(1)}}));

  Program works = prog("works :- not tired.\ntired :- false.");
  CHECK(solve(works).model ==
        interp(works, {{"tired", F(0)}, {"works", T(1)}}));

  Program tired = prog("tired :- not works.\nworks :- false.");
  CHECK(solve(tired).model ==
        interp(tired, {{"tired", T(1)}, {"works", F(0)}}));
}

TEST_CASE("self-negation collapses to Zero at depth 0") {
  Program p = prog("p :- not p.");
  SolveTrace tr = solve(p, {.verify_extra_stage = true});
  CHECK(tr.depth == 0);
  CHECK(tr.model == interp(p, {{"p", Z()}}));
}

TEST_CASE("collapse of the minimum model") {
  Program main = prog(kMainExample);
  auto wfm = collapse_model(solve(main).model);
  std::vector<ThreeValued> expect(4);
  expect[main.atom_index({"p", {}})] = ThreeValued::False;
  expect[main.atom_index({"q", {}})] = ThreeValued::True;
  expect[main.atom_index({"r", {}})] = ThreeValued::False;
  expect[main.atom_index({"s", {}})] = ThreeValued::Undefined;
  CHECK(wfm == expect);

  Program intro = prog("p :- true.\nr :- not p.\ns :- not q.\nq :- false.");
  auto wfm2 = collapse_model(solve(intro).model);
  CHECK(wfm2[intro.atom_index({"p", {}})] == ThreeValued::True);
  CHECK(wfm2[intro.atom_index({"q", {}})] == ThreeValued::False);
  CHECK(wfm2[intro.atom_index({"r", {}})] == ThreeValued::False);
  CHECK(wfm2[intro.atom_index({"s", {}})] == ThreeValued::True);

  CHECK(collapse_model({F(0), F(0)}) ==
        std::vector<ThreeValued>{ThreeValued::False, ThreeValued::False});
}

TEST_CASE("T_P is not monotone under the limit order") {
  Program p = prog(
      "p :- not q.\ns :- p.\nt :- not s.\nt :- u.\nu :- t.\nq :- false.");
  Interpretation i = interp(
      p, {{"p", T(1)}, {"q", F(0)}, {"s", F(0)}, {"t", T(1)}, {"u", F(0)}});
  Interpretation j = interp(
      p, {{"p", T(1)}, {"q", F(0)}, {"s", F(1)}, {"t", F(1)}, {"u", F(1)}});
  REQUIRE(le_infty(i, j));
  CHECK(!le_infty(tp_step(p, i), tp_step(p, j)));
}

TEST_CASE("structural invariants of solve") {
  for (const char* text :
       {kMainExample, "p :- not p.", "p :- not q.\nq :- not p.",
        "p :- true.\nr :- not p.\ns :- not q.\nq :- false.",
        "a :- not b.\nb :- not c.\nc :- not a."}) {
    Program p = prog(text);
    SolveTrace tr = solve(p, {.verify_extra_stage = true});
    CHECK(tp_step(p, tr.model) == tr.model);
    CHECK(is_model(p, tr.model));
    CHECK(tr.depth <= p.base.size());
    REQUIRE(tr.stages.size() == tr.depth + 1);
    for (std::uint64_t a = 0; a < tr.depth; ++a)
      CHECK(!tr.stages[a].stabilized_nothing());
    CHECK(tr.stages[tr.depth].stabilized_nothing());
    for (TruthValue v : tr.model)
      CHECK((v.is_zero() || v.order() < tr.depth || tr.depth == 0));
  }
}
