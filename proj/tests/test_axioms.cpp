#include <doctest.h>

#include "actalab/axioms.hpp"
#include "actalab/error.hpp"
#include "support.hpp"

using namespace actalab;
using actalab::test::monoid;

namespace {

  // Identity and compatibility laws by direct iteration over a raw table.
  bool raw_is_left_act(FiniteMonoid const& M, std::size_t n,
                       std::vector<Point> const& t) {
    for (Point a = 0; a < n; ++a) {
      if (t[M.identity() * n + a] != a) {
        return false;
      }
      for (Elem s = 0; s < M.size(); ++s) {
        for (Elem u = 0; u < M.size(); ++u) {
          if (t[s * n + t[u * n + a]] != t[M.mul(s, u) * n + a]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool all_hold(ActionView view, std::vector<Sentence> const& sentences) {
    for (auto const& s : sentences) {
      if (model_check(view, s)) {
        return false;
      }
    }
    return true;
  }

  // {e, a, b} with a and b left zeros: aS ∩ bS = ∅.
  MonoidPtr left_zero() {
    return std::make_shared<FiniteMonoid const>(FiniteMonoid::validate(
        "left_zero", {"e", "a", "b"},
        {{"e", "a", "b"}, {"a", "a", "a"}, {"b", "b", "b"}}, "e"));
  }

}  // namespace

TEST_SUITE("axioms") {
  TEST_CASE("act axioms hold on exactly the valid tables") {
    for (char const* expr : {"z2", "null_adjoined(2)", "inverse_omega_chain(2)"}) {
      auto              M     = monoid(expr);
      auto              sigma = act_axioms(*M);
      std::size_t const max   = M->size() == 2 ? 3 : 2;
      for (std::size_t n = 1; n <= max; ++n) {
        test::for_each_tuple(M->size() * n, n, [&](std::vector<Point> const& t) {
          CHECK(all_hold(ActionView{n, t}, sigma) == raw_is_left_act(*M, n, t));
        });
      }
    }
  }

  TEST_CASE("every axiom set starts with the identity axiom") {
    for (auto const& M : test::zoo_set()) {
      for (Condition c : {Condition::P, Condition::E, Condition::EP, Condition::W,
                          Condition::PWP}) {
        auto ax = emit_axioms(*M, c);
        REQUIRE_FALSE(ax.sentences.empty());
        CHECK(ax.sentences.size() == ax.provenance.size());
        auto const& first = ax.sentences.front();
        REQUIRE(std::holds_alternative<Equation>(first.body));
        auto const& eq = std::get<Equation>(first.body);
        CHECK(eq.lhs.word == std::vector<Elem>{M->identity()});
        CHECK(eq.rhs.word.empty());
        auto const& one = M->label(M->identity());
        CHECK(format_sentence(*M, first)
              == "(∀x)(" + one + (one.size() == 1 ? "" : "·") + "x = x)");
        CHECK(ax.provenance.front().origin == "act");
        for (auto const& s : ax.sentences) {
          CHECK_NOTHROW(check_sentence(*M, s));
        }
      }
    }
    CHECK_THROWS_AS(emit_axioms(*monoid("z2"), Condition::SF), Error);
  }

  TEST_CASE("one schema sentence per parameter") {
    auto M = monoid("nat_min_adjoined(3)");
    std::size_t const n = M->size();
    for (Condition c : {Condition::P, Condition::E, Condition::EP, Condition::W,
                        Condition::PWP}) {
      auto        ax     = emit_axioms(*M, c);
      std::size_t schema = 0;
      for (auto const& p : ax.provenance) {
        schema += p.origin != "act";
      }
      CHECK(schema == (c == Condition::PWP ? n : n * n));
    }
  }

  TEST_CASE("PWP over Z2 at t = g") {
    auto M  = monoid("z2");
    auto ax = emit_axioms(*M, Condition::PWP);
    Elem g  = M->index_of("g");
    bool seen = false;
    for (std::size_t i = 0; i < ax.sentences.size(); ++i) {
      auto const& p = ax.provenance[i];
      if (p.origin == "act" || p.t != g) {
        continue;
      }
      seen = true;
      CHECK(p.pair_generators == std::vector<ElemPair>{{0, 0}});
      auto const& imp = std::get<Implication>(ax.sentences[i].body);
      REQUIRE(imp.antecedent.size() == 1);
      CHECK(imp.antecedent[0].lhs.word == std::vector<Elem>{g});
      CHECK(imp.antecedent[0].rhs.word == std::vector<Elem>{g});
      CHECK(imp.exists.size() == 1);
      REQUIRE(imp.disjuncts.size() == 1);
      REQUIRE(imp.disjuncts[0].size() == 2);
      for (auto const& eq : imp.disjuncts[0]) {
        CHECK(eq.rhs.var == imp.exists[0]);
        CHECK(eq.rhs.word == std::vector<Elem>{M->identity()});
      }
    }
    CHECK(seen);
  }

  TEST_CASE("W empty case and its model check") {
    auto M  = left_zero();
    auto ax = emit_axioms(*M, Condition::W);
    Elem a = M->index_of("a"), b = M->index_of("b");
    std::optional<Sentence> empty_case;
    for (std::size_t i = 0; i < ax.sentences.size(); ++i) {
      if (ax.provenance[i].s == a && ax.provenance[i].t == b) {
        empty_case = ax.sentences[i];
        CHECK(ax.provenance[i].generators.empty());
      }
    }
    REQUIRE(empty_case);
    REQUIRE(std::holds_alternative<Inequation>(empty_case->body));
    CHECK(format_sentence(*M, *empty_case) == "(∀x)(∀y)(ax ≠ by)");

    // one point: a p = b p, so the inequation fails at (p, p)
    auto B = Act::validate(M, Side::Left, {"p"}, std::vector<Point>{0, 0, 0});
    auto r = model_check(B, *empty_case);
    REQUIRE(r);
    CHECK(B.act(a, (*r)[0]) == B.act(b, (*r)[1]));
    auto S = regular_act(M, Side::Left);
    CHECK_FALSE(model_check(S, *empty_case));
  }

  TEST_CASE("W sentences hold on the regular act") {
    for (auto const& M : test::zoo_set()) {
      auto S   = regular_act(M, Side::Left);
      auto res = model_check(S, emit_axioms(*M, Condition::W));
      CHECK(res.holds);
    }
    auto M = left_zero();
    CHECK(model_check(regular_act(M, Side::Left), emit_axioms(*M, Condition::W))
              .holds);
  }

  TEST_CASE("schemas agree with the direct checks") {
    std::vector<MonoidPtr> ms = test::zoo_set();
    ms.push_back(left_zero());
    for (auto const& M : ms) {
      std::size_t const max = M->size() <= 3 ? 3 : 2;
      for (Condition c : {Condition::P, Condition::E, Condition::EP, Condition::W,
                          Condition::PWP}) {
        auto ax = emit_axioms(*M, c);
        for (auto const& B : enumerate_acts(M, Side::Left, max)) {
          auto res = model_check(B, ax);
          CHECK(res.holds == !check_condition(B, c).fails());
          if (!res.holds) {
            CHECK(ax.provenance[res.failing_sentence].origin != "act");
            CHECK(model_check(B, ax.sentences[res.failing_sentence]));
          }
        }
      }
    }
  }

  TEST_CASE("verify_axiomatisation examples") {
    for (Condition c : {Condition::P, Condition::E, Condition::EP, Condition::W,
                        Condition::PWP}) {
      auto r = verify_axiomatisation(monoid("trivial"), c, 3);
      CHECK(r.agrees());
      CHECK(r.acts == 3);
      CHECK(r.in_class == r.acts);
    }
    auto w = verify_axiomatisation(monoid("z2"), Condition::W, 4, 2);
    CHECK(w.agrees());
    auto pwp = verify_axiomatisation(monoid("null_adjoined(2)"), Condition::PWP, 3);
    CHECK(pwp.agrees());
    CHECK(pwp.in_class < pwp.acts);
    auto again = verify_axiomatisation(monoid("null_adjoined(2)"), Condition::PWP,
                                       3, 4);
    CHECK(again.acts == pwp.acts);
    CHECK(again.in_class == pwp.in_class);
  }

  TEST_CASE("emission is deterministic") {
    for (auto const& M : test::zoo_set()) {
      for (Condition c : {Condition::P, Condition::EP, Condition::W}) {
        CHECK(emit_axioms(*M, c) == emit_axioms(*M, c));
      }
    }
  }

  TEST_CASE("EP witness sets") {
    for (auto const& M : test::zoo_set()) {
      for (Elem s = 0; s < M->size(); ++s) {
        for (Elem t = 0; t < M->size(); ++t) {
          auto w = ep_witness_set(*M, s, t);
          auto R = R_set(*M, s, t);
          CHECK(w.empty() == R.empty());
          for (auto p : w) {
            CHECK(M->mul(s, p.first) == M->mul(t, p.second));
          }
        }
      }
    }
  }

  TEST_CASE("term evaluation and sentence checks") {
    auto M = monoid("z3");
    auto S = regular_act(M, Side::Left);
    Elem g = M->index_of("g");
    Term t{{g, g}, 0};
    CHECK(evaluate(S.view(), t, {0}) == M->index_of("g2"));
    Sentence bad{{"x"}, {0}, Equation{Term{{}, 0}, Term{{}, 1}}};
    CHECK_THROWS_AS(check_sentence(*M, bad), Error);
    Sentence out_of_range{{"x"}, {0}, Equation{Term{{7}, 0}, Term{{}, 0}}};
    CHECK_THROWS_AS(check_sentence(*M, out_of_range), Error);
    Sentence nested{{"x"}, {0}, Equation{Term{{g, g}, 0}, Term{{}, 0}}};
    CHECK(format_sentence(*M, nested) == "(∀x)(g(gx) = x)");
    CHECK(model_check(S, nested));
  }

  TEST_CASE("model checking refuses a foreign axiom set") {
    auto ax = emit_axioms(*monoid("z2"), Condition::W);
    auto B  = regular_act(monoid("z3"), Side::Left);
    try {
      model_check(B, ax);
      FAIL("accepted");
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::MonoidMismatch);
    }
  }
}
