#include <doctest.h>

#include "actalab/error.hpp"
#include "actalab/monoid.hpp"
#include "support.hpp"

using namespace actalab;
using actalab::test::monoid;

namespace {

  ErrorKind kind_of(std::function<void()> f) {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::Parse;
  }

  std::vector<Elem> members(FiniteMonoid const& M,
                            std::vector<std::string> const& labels) {
    std::vector<Elem> out;
    for (auto const& l : labels) {
      out.push_back(M.index_of(l));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace

TEST_SUITE("monoid-core") {
  TEST_CASE("validation accepts the trivial monoid and Z2") {
    auto T = FiniteMonoid::validate("t", {"1"}, {{"1"}}, "1");
    CHECK(T.size() == 1);
    auto Z2 = FiniteMonoid::validate("z2", {"1", "g"}, {{"1", "g"}, {"g", "1"}},
                                     "1");
    CHECK(Z2.mul(1, 1) == 0);
    CHECK(Z2.label(Z2.identity()) == "1");
  }

  TEST_CASE("a non-associative table is rejected and the triple named") {
    std::vector<std::vector<std::string>> table{{"b", "b"}, {"a", "a"}};
    // oracle: exhaustive triple check
    auto mul = [&](int i, int j) { return table[i][j] == "a" ? 0 : 1; };
    bool associative = true;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
          associative &= mul(mul(i, j), k) == mul(i, mul(j, k));
        }
      }
    }
    REQUIRE_FALSE(associative);
    try {
      FiniteMonoid::validate("bad", {"a", "b"}, table, "a");
      FAIL("accepted");
    } catch (Error const& e) {
      CHECK(e.kind() == ErrorKind::NonAssociative);
      CHECK(std::string(e.what()).find("at triple (a, a, a)")
            != std::string::npos);
    }
  }

  TEST_CASE("other validation errors") {
    CHECK(kind_of([] {
            FiniteMonoid::validate("d", {"a", "a"}, {{"a", "a"}, {"a", "a"}},
                                   "a");
          })
          == ErrorKind::DuplicateName);
    CHECK(kind_of([] {
            FiniteMonoid::validate("z", {"1", "0"}, {{"0", "0"}, {"0", "0"}},
                                   "1");
          })
          == ErrorKind::BadIdentity);
    CHECK(kind_of([] {
            FiniteMonoid::validate("z", {"1", "0"}, {{"1", "0"}, {"0", "0"}},
                                   "x");
          })
          == ErrorKind::BadIdentity);
    CHECK(kind_of([] {
            FiniteMonoid::validate("r", {"1", "g"}, {{"1", "g"}}, "1");
          })
          == ErrorKind::BadTable);
    CHECK(kind_of([] {
            FiniteMonoid::validate("u", {"1"}, {{"q"}}, "1");
          })
          == ErrorKind::BadTable);
    CHECK(kind_of([] { FiniteMonoid::validate("e", {}, {}, "1"); })
          == ErrorKind::BadIdentity);
  }

  TEST_CASE("principal right ideals") {
    auto G = monoid("z3");
    for (Elem a = 0; a < G->size(); ++a) {
      CHECK(principal_right_ideal(*G, a).size() == 3);
    }
    auto N = monoid("null_adjoined(2)");
    CHECK(principal_right_ideal(*N, N->index_of("x1")).members
          == members(*N, {"x1", "0"}));
    auto M = monoid("nat_min_adjoined(3)");
    CHECK(principal_right_ideal(*M, M->index_of("2")).members
          == members(*M, {"1", "2"}));
  }

  TEST_CASE("intersections of principal ideals") {
    auto G = monoid("z2");
    CHECK(ideal_intersection(*G, 0, 1).size() == 2);
    auto N = monoid("null_adjoined(3)");
    CHECK(ideal_intersection(*N, N->index_of("x1"), N->index_of("x2")).members
          == members(*N, {"0"}));
    auto M = monoid("nat_min_adjoined(3)");
    CHECK(ideal_intersection(*M, M->index_of("2"), M->index_of("3")).members
          == members(*M, {"1", "2"}));
  }

  TEST_CASE("r(s,t)") {
    auto G = monoid("z2");
    CHECK(r_set(*G, 0, 1).empty());
    for (std::size_t n : {3u, 4u}) {
      auto N = build(Family::NullAdjoined, {n});
      auto r = r_set(N, N.index_of("x1"), N.index_of("x2"));
      std::vector<Elem> T;
      for (Elem x = 1; x < N.size(); ++x) {
        T.push_back(x);
      }
      CHECK(r.members == T);
    }
    auto M = monoid("nat_min_adjoined(3)");
    CHECK(r_set(*M, M->index_of("1"), M->index_of("2")).members
          == members(*M, {"1"}));
  }

  TEST_CASE("R(s,t)") {
    auto M = monoid("nat_min_adjoined(3)");
    auto e = M->identity();
    auto diag = R_set(*M, e, e);
    CHECK(diag.size() == M->size());
    for (auto [u, v] : diag.pairs) {
      CHECK(u == v);
    }
    auto G = monoid("z2");
    CHECK(R_set(*G, 0, 1).pairs == std::vector<ElemPair>{{0, 1}, {1, 0}});
    auto N = monoid("null_adjoined(2)");
    Elem x = N->index_of("x1");
    auto R = R_set(*N, x, x);
    std::vector<ElemPair> expect{{0, 0}};
    for (Elem u = 1; u < 3; ++u) {
      for (Elem v = 1; v < 3; ++v) {
        expect.emplace_back(u, v);
      }
    }
    std::sort(expect.begin(), expect.end());
    CHECK(R.pairs == expect);
  }

  TEST_CASE("closure and symmetry of r and R over the zoo") {
    for (auto const& M : test::zoo_set()) {
      for (Elem s = 0; s < M->size(); ++s) {
        for (Elem t = 0; t < M->size(); ++t) {
          auto r = r_set(*M, s, t);
          CHECK(r == r_set(*M, t, s));
          for (Elem u : r.members) {
            for (Elem w = 0; w < M->size(); ++w) {
              CHECK(r.contains(M->mul(u, w)));
            }
          }
          auto R  = R_set(*M, s, t);
          auto Rt = R_set(*M, t, s);
          for (auto [u, v] : R.pairs) {
            CHECK(Rt.contains({v, u}));
            for (Elem w = 0; w < M->size(); ++w) {
              CHECK(R.contains({M->mul(u, w), M->mul(v, w)}));
            }
          }
          CHECK(R.size() == Rt.size());
        }
      }
    }
  }

  TEST_CASE("minimum generating sets match exhaustive subset search") {
    for (auto const& M : test::zoo_set()) {
      for (Elem s = 0; s < M->size(); ++s) {
        for (Elem t = 0; t < M->size(); ++t) {
          auto R = R_set(*M, s, t);
          if (R.size() <= 12) {
            auto gens = min_generating_set(*M, R);
            CHECK(generated_pairs(*M, gens) == R);
            std::function<std::vector<ElemPair>(std::vector<ElemPair> const&)>
                close = [&](auto const& g) { return generated_pairs(*M, g).pairs; };
            CHECK(gens.size() == test::brute_min_generators(R.pairs, close));
          }
          auto r     = r_set(*M, s, t);
          auto rgens = min_generating_set(*M, r);
          CHECK(generated_ideal(*M, rgens) == r);
          std::function<std::vector<Elem>(std::vector<Elem> const&)> close_r
              = [&](auto const& g) { return generated_ideal(*M, g).members; };
          CHECK(rgens.size() == test::brute_min_generators(r.members, close_r));
        }
      }
    }
  }

  TEST_CASE("generator-count examples") {
    auto G = monoid("z3");
    CHECK(min_generating_set(*G, principal_right_ideal(*G, 2)).size() == 1);
    for (Elem s = 0; s < 3; ++s) {
      for (Elem t = 0; t < 3; ++t) {
        CHECK(min_generating_set(*G, R_set(*G, s, t)).size() == 1);
      }
    }
    auto N = monoid("null_adjoined(3)");
    CHECK(min_generating_set(*N, R_set(*N, N->index_of("x1"), N->index_of("x2")))
              .size()
          == 8);
    auto M = monoid("nat_min_adjoined(3)");
    auto g = min_generating_set(*M, R_set(*M, M->index_of("1"), M->index_of("2")));
    CHECK(g == std::vector<ElemPair>{{M->identity(), M->index_of("1")}});
    CHECK(min_generating_set(*M, RightIdeal{}).empty());
  }

  TEST_CASE("left cancellable elements") {
    auto G = monoid("z3");
    for (Elem s = 0; s < 3; ++s) {
      CHECK(is_left_cancellable(*G, s));
    }
    for (std::size_t n : {2u, 3u}) {
      auto N = build(Family::NullAdjoined, {n});
      CHECK_FALSE(is_left_cancellable(N, N.index_of("0")));
      CHECK(is_left_cancellable(N, N.identity()));
    }
  }

  TEST_CASE("all right ideals are exactly the non-empty closed subsets") {
    for (auto const& M : test::zoo_set()) {
      std::set<std::vector<Elem>> expect;
      std::size_t const           n = M->size();
      for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Elem> sub;
        for (Elem x = 0; x < n; ++x) {
          if (mask >> x & 1) {
            sub.push_back(x);
          }
        }
        bool closed = true;
        for (Elem x : sub) {
          for (Elem s = 0; s < n; ++s) {
            closed &= std::binary_search(sub.begin(), sub.end(), M->mul(x, s));
          }
        }
        if (closed) {
          expect.insert(sub);
        }
      }
      std::set<std::vector<Elem>> got;
      for (auto const& I : all_right_ideals(*M)) {
        got.insert(I.members);
      }
      CHECK(got == expect);
    }
  }
}
