#pragma once

// Shared fixtures and brute-force oracles for the test binaries. The oracles
// deliberately avoid the library's algorithms (union-find, preorder classes,
// candidate propagation) so that agreement is meaningful.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "actalab/act.hpp"
#include "actalab/monoid.hpp"
#include "actalab/tensor.hpp"
#include "actalab/zoo.hpp"

namespace actalab::test {

  inline MonoidPtr monoid(std::string const& expr) {
    auto M = build_from_expression(expr);
    if (!M) {
      throw std::runtime_error("bad zoo expression " + expr);
    }
    return std::make_shared<FiniteMonoid const>(std::move(*M));
  }

  inline std::vector<MonoidPtr> zoo_set() {
    std::vector<MonoidPtr> out;
    for (char const* e : {"trivial", "z2", "z3", "inverse_omega_chain(2)",
                          "null_adjoined(2)", "semilattice_of_groups(2,2)",
                          "nat_min_adjoined(3)"}) {
      out.push_back(monoid(e));
    }
    return out;
  }

  // Reflexive-transitive closure of a symmetric edge list by repeated
  // relaxation over a boolean matrix.
  inline std::vector<std::vector<bool>>
  naive_equivalence(std::size_t                                  n,
                    std::vector<std::pair<std::size_t, std::size_t>> const& edges) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      r[i][i] = true;
    }
    for (auto [a, b] : edges) {
      r[a][b] = r[b][a] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!r[i][k]) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (r[k][j]) {
            r[i][j] = true;
          }
        }
      }
    }
    return r;
  }

  // ⊗-equality on A x B (index a * |B| + b) straight from the definition.
  inline std::vector<std::vector<bool>> naive_tensor(Act const& A,
                                                     Act const& B) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (Point a = 0; a < A.size(); ++a) {
      for (Elem s = 0; s < A.monoid().size(); ++s) {
        for (Point b = 0; b < B.size(); ++b) {
          edges.emplace_back(A.act(s, a) * B.size() + b,
                             a * B.size() + B.act(s, b));
        }
      }
    }
    return naive_equivalence(A.size() * B.size(), edges);
  }

  // Least congruence by saturating edge sets until nothing changes.
  inline std::vector<std::vector<bool>>
  naive_congruence(Act const& A, std::vector<std::pair<Point, Point>> seeds) {
    std::vector<std::pair<std::size_t, std::size_t>> edges(seeds.begin(),
                                                           seeds.end());
    while (true) {
      auto rel  = naive_equivalence(A.size(), edges);
      bool grew = false;
      for (Point a = 0; a < A.size(); ++a) {
        for (Point b = 0; b < A.size(); ++b) {
          if (!rel[a][b]) {
            continue;
          }
          for (Elem s = 0; s < A.monoid().size(); ++s) {
            if (!rel[A.act(s, a)][A.act(s, b)]) {
              edges.emplace_back(A.act(s, a), A.act(s, b));
              grew = true;
            }
          }
        }
      }
      if (!grew) {
        return rel;
      }
    }
  }

  // Calls visit on every tuple in {0..k-1}^len.
  inline void for_each_tuple(std::size_t len, std::size_t k,
                             std::function<void(std::vector<Point> const&)> visit) {
    std::vector<Point> t(len, 0);
    while (true) {
      visit(t);
      std::size_t i = len;
      while (i > 0) {
        --i;
        if (++t[i] < k) {
          break;
        }
        t[i] = 0;
        if (i == 0) {
          return;
        }
      }
      if (len == 0) {
        return;
      }
    }
  }

  // Is there a tossing with this skeleton? Exhaustive over all witnesses.
  inline bool brute_tossing_exists(Act const& A, Act const& B,
                                   Skeleton const& sk, Point a, Point b,
                                   Point a2, Point b2) {
    std::size_t const m     = sk.length();
    bool              found = false;
    for_each_tuple(m - 1, A.size(), [&](std::vector<Point> const& am) {
      if (found) {
        return;
      }
      for_each_tuple(m, B.size(), [&](std::vector<Point> const& bm) {
        if (!found
            && validate_tossing(A, B, Tossing{sk, a, b, a2, b2, am, bm})) {
          found = true;
        }
      });
    });
    return found;
  }

  // Smallest k such that some k-subset generates the whole closed set, by
  // trying subsets in order of size. `close` maps a subset to its closure.
  template <typename T>
  std::size_t brute_min_generators(
      std::vector<T> const&                                  all,
      std::function<std::vector<T>(std::vector<T> const&)> close) {
    std::size_t const n = all.size();
    for (std::size_t k = 0; k <= n; ++k) {
      std::vector<bool> pick(n, false);
      std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
      do {
        std::vector<T> subset;
        for (std::size_t i = 0; i < n; ++i) {
          if (pick[i]) {
            subset.push_back(all[i]);
          }
        }
        auto c = close(subset);
        std::sort(c.begin(), c.end());
        if (c == all) {
          return k;
        }
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return n;
  }

}  // namespace actalab::test
