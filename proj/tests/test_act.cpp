#include <doctest.h>

#include <numeric>

#include "actalab/act.hpp"
#include "actalab/error.hpp"
#include "support.hpp"

using namespace actalab;
using actalab::test::monoid;

namespace {

  // Valid raw tables of size n, and the number of isomorphism classes.
  std::pair<std::size_t, std::size_t> brute_act_counts(FiniteMonoid const& M,
                                                       Side side, std::size_t n) {
    std::size_t const           cells = M.size() * n;
    std::size_t                 valid = 0;
    std::set<std::vector<Point>> classes;
    std::vector<Point>          perm(n);
    test::for_each_tuple(cells, n, [&](std::vector<Point> const& t) {
      if (act_law_violation(M, side, ActionView{n, t})) {
        return;
      }
      ++valid;
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<Point> best;
      do {
        std::vector<Point> r(cells);
        for (Elem s = 0; s < M.size(); ++s) {
          for (Point a = 0; a < n; ++a) {
            r[s * n + perm[a]] = perm[t[s * n + a]];
          }
        }
        if (best.empty() || r < best) {
          best = r;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      classes.insert(best);
    });
    return {valid, classes.size()};
  }

  Act swap_act(MonoidPtr const& Z2) {
    return Act::validate(Z2, Side::Left, {"a", "b"},
                         std::map<std::string, std::vector<std::string>>{
                             {"1", {"a", "b"}}, {"g", {"b", "a"}}});
  }

}  // namespace

TEST_SUITE("act-core") {
  TEST_CASE("valid acts") {
    for (auto const& M : test::zoo_set()) {
      for (Side side : {Side::Left, Side::Right}) {
        auto S = regular_act(M, side);
        CHECK(S.size() == M->size());
        CHECK_FALSE(act_law_violation(*M, side, S.view()));
      }
      std::vector<Point> constant(M->size(), 0);
      CHECK_NOTHROW(Act::validate(M, Side::Left, {"p"}, constant));
    }
    auto Z2 = monoid("z2");
    auto A  = swap_act(Z2);
    CHECK(A.act(1, 0) == 1);
    CHECK(A.act(1, A.act(1, 0)) == A.act(Z2->mul(1, 1), 0));
  }

  TEST_CASE("law violations are diagnosed") {
    auto Z2 = monoid("z2");
    using Table = std::map<std::string, std::vector<std::string>>;
    try {
      Act::validate(Z2, Side::Left, {"a", "b"},
                    Table{{"1", {"b", "b"}}, {"g", {"a", "b"}}});
      FAIL("accepted");
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::IdentityLawFail);
    }
    try {
      Act::validate(Z2, Side::Left, {"a", "b"},
                    Table{{"1", {"a", "b"}}, {"g", {"a", "a"}}});
      FAIL("accepted");
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::CompatibilityFail);
    }
    CHECK_THROWS_AS(Act::validate(Z2, Side::Left, {}, std::vector<Point>{}),
                    Error);
    try {
      Act::validate(Z2, Side::Left, {}, std::vector<Point>{});
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::EmptyCarrier);
    }
  }

  TEST_CASE("free right acts") {
    auto Z2 = monoid("z2");
    auto F1 = free_right_act(Z2, 1);
    auto S  = regular_act(Z2, Side::Right);
    // explicit bijection (1, s) -> s
    for (Elem s = 0; s < 2; ++s) {
      for (Elem t = 0; t < 2; ++t) {
        CHECK(F1.act(t, free_point(*Z2, 1, s)) == free_point(*Z2, 1, S.act(t, s)));
      }
    }
    auto F2 = free_right_act(Z2, 2);
    CHECK(F2.size() == 4);
    CHECK(F2.label(free_point(*Z2, 2, 1)) == "x2#g");
    std::set<std::vector<Point>> orbits;
    for (Point p = 0; p < 4; ++p) {
      orbits.insert(subact_generated(F2, {p}));
    }
    CHECK(orbits.size() == 2);
    auto F3 = free_right_act(monoid("trivial"), 3);
    CHECK(F3.size() == 3);
    for (Point p = 0; p < 3; ++p) {
      CHECK(F3.act(0, p) == p);
    }
    CHECK_THROWS_AS(free_right_act(Z2, 0), Error);
  }

  TEST_CASE("congruence closure examples") {
    auto Z2 = monoid("z2");
    auto F2 = free_right_act(Z2, 2);
    auto discrete = congruence_closure(F2, {});
    CHECK(discrete.blocks == 4);
    auto c = congruence_closure(
        F2, {{free_point(*Z2, 1, 0), free_point(*Z2, 2, 0)}});
    CHECK(c.blocks == 2);
    CHECK(c.related(free_point(*Z2, 1, 1), free_point(*Z2, 2, 1)));
    CHECK_FALSE(c.related(free_point(*Z2, 1, 0), free_point(*Z2, 1, 1)));
    auto all = congruence_closure(F2, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(all.blocks == 1);
    auto q = quotient_act(F2, c);
    CHECK(q.act.size() == 2);
    CHECK(q.projection.is_morphism());
    CHECK(quotient_act(F2, all).act.size() == 1);
    CHECK(quotient_act(F2, discrete).act.size() == 4);
  }

  TEST_CASE("congruence closure agrees with saturation on every seed pair") {
    for (char const* expr : {"z2", "null_adjoined(2)", "inverse_omega_chain(2)"}) {
      auto M = monoid(expr);
      for (Side side : {Side::Left, Side::Right}) {
        for (auto const& A : enumerate_acts(M, side, 3)) {
          for (Point a = 0; a < A.size(); ++a) {
            for (Point b = a; b < A.size(); ++b) {
              auto c      = congruence_closure(A, {{a, b}});
              auto oracle = test::naive_congruence(A, {{a, b}});
              CHECK(c.is_compatible(A));
              for (Point x = 0; x < A.size(); ++x) {
                for (Point y = 0; y < A.size(); ++y) {
                  CHECK(c.related(x, y) == oracle[x][y]);
                }
              }
              auto q = quotient_act(A, c);
              CHECK(q.projection.is_morphism());
              CHECK(q.act.size() == c.blocks);
            }
          }
        }
      }
    }
  }

  TEST_CASE("generated subacts") {
    auto Z2 = monoid("z2");
    auto A  = swap_act(Z2);
    CHECK(subact_generated(A, {0}) == std::vector<Point>{0, 1});
    CHECK(subact_generated(A, {0, 1}) == std::vector<Point>{0, 1});
    auto N  = monoid("null_adjoined(2)");
    auto S  = regular_act(N, Side::Left);
    auto Tz = subact_generated(S, {N->index_of("x1")});
    CHECK(Tz == std::vector<Point>{1, 2});
    auto sub = restrict_to(S, Tz);
    CHECK(sub.act.size() == 2);
    CHECK(sub.embedding == Tz);
    CHECK_THROWS_AS(restrict_to(S, {N->index_of("x1")}), Error);
    auto fixed = Act::validate(Z2, Side::Left, {"p", "q"},
                               std::vector<Point>{0, 1, 0, 1});
    CHECK(subact_generated(fixed, {1}) == std::vector<Point>{1});
  }

  TEST_CASE("enumeration examples") {
    auto T = monoid("trivial");
    for (std::size_t k = 1; k <= 4; ++k) {
      std::size_t count = 0;
      for_each_act(T, Side::Left, k, [&](Act const& A) {
        count += A.size() == k;
        return true;
      });
      CHECK(count == 1);
    }
    auto Z2 = monoid("z2");
    std::size_t two = 0;
    for (auto const& A : enumerate_acts(Z2, Side::Left, 2)) {
      two += A.size() == 2;
    }
    CHECK(two == 2);
    for (auto const& M : test::zoo_set()) {
      CHECK(enumerate_acts(M, Side::Right, 1).size() == 1);
    }
    std::size_t seen = 0;
    for_each_act(Z2, Side::Left, 3, [&](Act const&) { return ++seen < 2; });
    CHECK(seen == 2);
  }

  TEST_CASE("enumeration matches a raw-table filter") {
    for (char const* expr :
         {"trivial", "z2", "z3", "null_adjoined(2)", "inverse_omega_chain(2)"}) {
      auto M = monoid(expr);
      for (Side side : {Side::Left, Side::Right}) {
        std::size_t const max = M->size() <= 3 ? 3 : 2;
        std::vector<std::size_t> raw(max + 1), canon(max + 1);
        for (auto const& A : enumerate_acts(M, side, max)) {
          ++raw[A.size()];
          CHECK_FALSE(act_law_violation(*M, side, A.view()));
        }
        for (auto const& A :
             enumerate_acts(M, side, max, EnumerateOptions{true})) {
          ++canon[A.size()];
        }
        for (std::size_t n = 1; n <= max; ++n) {
          auto [valid, classes] = brute_act_counts(*M, side, n);
          CHECK(raw[n] == valid);
          CHECK(canon[n] == classes);
        }
      }
    }
  }

  TEST_CASE("enumeration order is deterministic") {
    auto M = monoid("null_adjoined(2)");
    auto a = enumerate_acts(M, Side::Left, 3);
    auto b = enumerate_acts(M, Side::Left, 3);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i] == b[i]);
    }
  }
}
