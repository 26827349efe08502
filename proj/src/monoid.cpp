#include "actalab/monoid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "actalab/error.hpp"

namespace actalab {

  namespace {

    // Generation preorder on a finite right-closed set of points. `act(p, s)`
    // returns the position of p·s within `points`.
    template <typename T, typename Act>
    std::vector<T> maximal_class_representatives(FiniteMonoid const&   M,
                                                 std::vector<T> const& points,
                                                 Act&&                 act) {
      std::size_t const n = points.size();
      // orbit[i][j] == true iff points[j] ∈ points[i]·S
      std::vector<std::vector<bool>> orbit(n, std::vector<bool>(n, false));
      for (std::size_t i = 0; i < n; ++i) {
        for (Elem s = 0; s < M.size(); ++s) {
          orbit[i][act(i, s)] = true;
        }
      }
      std::vector<T> out;
      for (std::size_t x = 0; x < n; ++x) {
        bool maximal = true;
        bool lowest  = true;
        for (std::size_t y = 0; y < n && maximal; ++y) {
          if (orbit[y][x] && !orbit[x][y]) {
            maximal = false;
          } else if (y < x && orbit[y][x] && orbit[x][y]) {
            // x shares its class with a lower-indexed point
            lowest = false;
          }
        }
        if (maximal && lowest) {
          out.push_back(points[x]);
        }
      }
      return out;
    }

    [[noreturn]] void fail(ErrorKind kind, std::string const& msg) {
      throw Error(kind, msg);
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteMonoid
  ////////////////////////////////////////////////////////////////////////

  FiniteMonoid FiniteMonoid::validate(std::string              name,
                                      std::vector<std::string> labels,
                                      std::vector<Elem>        table,
                                      Elem                     identity) {
    std::size_t const n = labels.size();
    if (n == 0) {
      fail(ErrorKind::BadTable, "a monoid needs at least one element");
    }
    {
      std::set<std::string> seen;
      for (auto const& l : labels) {
        if (!seen.insert(l).second) {
          fail(ErrorKind::DuplicateName, "label \"" + l + "\" occurs twice");
        }
      }
    }
    if (table.size() != n * n) {
      fail(ErrorKind::BadTable,
           "table has " + std::to_string(table.size()) + " cells, expected "
               + std::to_string(n * n));
    }
    for (auto v : table) {
      if (v >= n) {
        fail(ErrorKind::BadTable, "table entry out of range");
      }
    }
    auto mul = [&](Elem i, Elem j) { return table[i * n + j]; };
    for (Elem i = 0; i < n; ++i) {
      for (Elem j = 0; j < n; ++j) {
        for (Elem k = 0; k < n; ++k) {
          if (mul(mul(i, j), k) != mul(i, mul(j, k))) {
            std::ostringstream os;
            os << "(" << labels[i] << "*" << labels[j] << ")*" << labels[k]
               << " = " << labels[mul(mul(i, j), k)] << " but " << labels[i]
               << "*(" << labels[j] << "*" << labels[k]
               << ") = " << labels[mul(i, mul(j, k))] << " at triple ("
               << labels[i] << ", " << labels[j] << ", " << labels[k] << ")";
            fail(ErrorKind::NonAssociative, os.str());
          }
        }
      }
    }
    if (identity >= n) {
      fail(ErrorKind::BadIdentity, "identity index out of range");
    }
    for (Elem i = 0; i < n; ++i) {
      if (mul(identity, i) != i || mul(i, identity) != i) {
        fail(ErrorKind::BadIdentity,
             labels[identity] + " is not a two-sided identity for element "
                 + labels[i]);
      }
    }
    FiniteMonoid M;
    M._name     = std::move(name);
    M._labels   = std::move(labels);
    M._table    = std::move(table);
    M._identity = identity;
    return M;
  }

  FiniteMonoid
  FiniteMonoid::validate(std::string                           name,
                         std::vector<std::string>              labels,
                         std::vector<std::vector<std::string>> table,
                         std::string const&                    identity_label) {
    std::map<std::string, Elem> index;
    for (Elem i = 0; i < labels.size(); ++i) {
      if (!index.emplace(labels[i], i).second) {
        fail(ErrorKind::DuplicateName,
             "label \"" + labels[i] + "\" occurs twice");
      }
    }
    std::size_t const n = labels.size();
    if (table.size() != n) {
      fail(ErrorKind::BadTable,
           "table has " + std::to_string(table.size()) + " rows, expected "
               + std::to_string(n));
    }
    std::vector<Elem> flat;
    flat.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        fail(ErrorKind::BadTable,
             "row " + labels[i] + " has " + std::to_string(table[i].size())
                 + " entries, expected " + std::to_string(n));
      }
      for (auto const& cell : table[i]) {
        auto it = index.find(cell);
        if (it == index.end()) {
          fail(ErrorKind::BadTable,
               "row " + labels[i] + " mentions unknown element \"" + cell
                   + "\"");
        }
        flat.push_back(it->second);
      }
    }
    auto id = index.find(identity_label);
    if (id == index.end()) {
      fail(ErrorKind::BadIdentity,
           "identity \"" + identity_label + "\" is not an element");
    }
    return validate(std::move(name), std::move(labels), std::move(flat),
                    id->second);
  }

  std::optional<Elem> FiniteMonoid::find(std::string const& label) const {
    auto it = std::find(_labels.begin(), _labels.end(), label);
    if (it == _labels.end()) {
      return std::nullopt;
    }
    return static_cast<Elem>(it - _labels.begin());
  }

  Elem FiniteMonoid::index_of(std::string const& label) const {
    auto i = find(label);
    if (!i) {
      throw Error(ErrorKind::ElementNotFound,
                  "\"" + label + "\" is not an element of " + _name);
    }
    return *i;
  }

  bool RightIdeal::contains(Elem x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }

  bool PairSubact::contains(ElemPair p) const {
    return std::binary_search(pairs.begin(), pairs.end(), p);
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideals and relations
  ////////////////////////////////////////////////////////////////////////

  RightIdeal principal_right_ideal(FiniteMonoid const& M, Elem a) {
    return generated_ideal(M, {a});
  }

  RightIdeal ideal_intersection(FiniteMonoid const& M, Elem s, Elem t) {
    auto       sS = principal_right_ideal(M, s);
    auto       tS = principal_right_ideal(M, t);
    RightIdeal out;
    std::set_intersection(sS.members.begin(), sS.members.end(),
                          tS.members.begin(), tS.members.end(),
                          std::back_inserter(out.members));
    return out;
  }

  RightIdeal r_set(FiniteMonoid const& M, Elem s, Elem t) {
    RightIdeal out;
    for (Elem u = 0; u < M.size(); ++u) {
      if (M.mul(s, u) == M.mul(t, u)) {
        out.members.push_back(u);
      }
    }
    return out;
  }

  PairSubact R_set(FiniteMonoid const& M, Elem s, Elem t) {
    PairSubact out;
    for (Elem u = 0; u < M.size(); ++u) {
      for (Elem v = 0; v < M.size(); ++v) {
        if (M.mul(s, u) == M.mul(t, v)) {
          out.pairs.emplace_back(u, v);
        }
      }
    }
    return out;
  }

  RightIdeal generated_ideal(FiniteMonoid const&      M,
                             std::vector<Elem> const& gens) {
    std::vector<bool> in(M.size(), false);
    for (auto g : gens) {
      for (Elem s = 0; s < M.size(); ++s) {
        in[M.mul(g, s)] = true;
      }
    }
    RightIdeal out;
    for (Elem x = 0; x < M.size(); ++x) {
      if (in[x]) {
        out.members.push_back(x);
      }
    }
    return out;
  }

  PairSubact generated_pairs(FiniteMonoid const&          M,
                             std::vector<ElemPair> const& gens) {
    std::set<ElemPair> in;
    for (auto [u, v] : gens) {
      for (Elem s = 0; s < M.size(); ++s) {
        in.emplace(M.mul(u, s), M.mul(v, s));
      }
    }
    return PairSubact{{in.begin(), in.end()}};
  }

  std::vector<Elem> min_generating_set(FiniteMonoid const& M,
                                       RightIdeal const&   ideal) {
    std::vector<std::size_t> pos(M.size(), 0);
    for (std::size_t i = 0; i < ideal.members.size(); ++i) {
      pos[ideal.members[i]] = i;
    }
    return maximal_class_representatives(
        M, ideal.members, [&](std::size_t i, Elem s) {
          return pos[M.mul(ideal.members[i], s)];
        });
  }

  std::vector<ElemPair> min_generating_set(FiniteMonoid const& M,
                                           PairSubact const&   subact) {
    std::size_t const        n = M.size();
    std::vector<std::size_t> pos(n * n, 0);
    for (std::size_t i = 0; i < subact.pairs.size(); ++i) {
      auto [u, v]      = subact.pairs[i];
      pos[u * n + v] = i;
    }
    return maximal_class_representatives(
        M, subact.pairs, [&](std::size_t i, Elem s) {
          auto [u, v] = subact.pairs[i];
          return pos[M.mul(u, s) * n + M.mul(v, s)];
        });
  }

  bool is_left_cancellable(FiniteMonoid const& M, Elem s) {
    std::vector<bool> hit(M.size(), false);
    for (Elem a = 0; a < M.size(); ++a) {
      Elem sa = M.mul(s, a);
      if (hit[sa]) {
        return false;
      }
      hit[sa] = true;
    }
    return true;
  }

  std::vector<RightIdeal> all_right_ideals(FiniteMonoid const& M) {
    std::set<std::vector<Elem>> seen;
    std::vector<RightIdeal>     principal;
    for (Elem a = 0; a < M.size(); ++a) {
      auto aS = principal_right_ideal(M, a);
      if (seen.insert(aS.members).second) {
        principal.push_back(std::move(aS));
      }
    }
    // Close the principal ideals under pairwise union.
    std::vector<std::vector<Elem>> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
      std::vector<std::vector<Elem>> next;
      for (auto const& I : frontier) {
        for (auto const& P : principal) {
          std::vector<Elem> U;
          std::set_union(I.begin(), I.end(), P.members.begin(),
                         P.members.end(), std::back_inserter(U));
          if (seen.insert(U).second) {
            next.push_back(std::move(U));
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<RightIdeal> out;
    for (auto const& m : seen) {
      out.push_back(RightIdeal{m});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](RightIdeal const& x, RightIdeal const& y) {
                       return x.size() < y.size();
                     });
    return out;
  }

}  // namespace actalab
