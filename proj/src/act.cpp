#include "actalab/act.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "actalab/error.hpp"
#include "actalab/union_find.hpp"

namespace actalab {

  char const* to_string(Side side) noexcept {
    return side == Side::Left ? "left" : "right";
  }

  std::optional<std::string> act_law_violation(FiniteMonoid const& M,
                                               Side                side,
                                               ActionView          table) {
    std::size_t const k = table.points;
    if (k == 0) {
      return "empty carrier";
    }
    if (table.cells.size() != M.size() * k) {
      return "action table has " + std::to_string(table.cells.size())
             + " cells, expected " + std::to_string(M.size() * k);
    }
    for (auto c : table.cells) {
      if (c >= k) {
        return "action table entry out of range";
      }
    }
    Elem const e = M.identity();
    for (Point a = 0; a < k; ++a) {
      if (table(e, a) != a) {
        return "identity law fails at point " + std::to_string(a);
      }
    }
    for (Elem s = 0; s < M.size(); ++s) {
      for (Elem t = 0; t < M.size(); ++t) {
        Elem st = M.mul(s, t);
        for (Point a = 0; a < k; ++a) {
          // left: s(ta) = (st)a; right: (as)t = a(st)
          Point lhs = side == Side::Left ? table(s, table(t, a))
                                         : table(t, table(s, a));
          if (lhs != table(st, a)) {
            std::ostringstream os;
            os << "compatibility fails for s=" << M.label(s)
               << ", t=" << M.label(t) << ", point " << a;
            return os.str();
          }
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Act
  ////////////////////////////////////////////////////////////////////////

  Act Act::validate(MonoidPtr                M,
                    Side                     side,
                    std::vector<std::string> labels,
                    std::vector<Point>       action) {
    std::size_t const k = labels.size();
    if (k == 0) {
      throw Error(ErrorKind::EmptyCarrier, "an act must have a non-empty carrier");
    }
    {
      auto sorted = labels;
      std::sort(sorted.begin(), sorted.end());
      auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      if (dup != sorted.end()) {
        throw Error(ErrorKind::DuplicateName,
                    "carrier label \"" + *dup + "\" occurs twice");
      }
    }
    if (action.size() != M->size() * k) {
      throw Error(ErrorKind::BadTable,
                  "action table has " + std::to_string(action.size())
                      + " cells, expected " + std::to_string(M->size() * k));
    }
    for (auto c : action) {
      if (c >= k) {
        throw Error(ErrorKind::BadTable, "action table entry out of range");
      }
    }
    ActionView view{k, action};
    Elem const e = M->identity();
    for (Point a = 0; a < k; ++a) {
      if (view(e, a) != a) {
        throw Error(ErrorKind::IdentityLawFail,
                    M->label(e) + " moves " + labels[a] + " to "
                        + labels[view(e, a)]);
      }
    }
    for (Elem s = 0; s < M->size(); ++s) {
      for (Elem t = 0; t < M->size(); ++t) {
        Elem st = M->mul(s, t);
        for (Point a = 0; a < k; ++a) {
          Point lhs = side == Side::Left ? view(s, view(t, a))
                                         : view(t, view(s, a));
          if (lhs != view(st, a)) {
            std::ostringstream os;
            os << "(s, t, a) = (" << M->label(s) << ", " << M->label(t)
               << ", " << labels[a] << "): ";
            if (side == Side::Left) {
              os << "s(ta) = " << labels[lhs] << " but (st)a = "
                 << labels[view(st, a)];
            } else {
              os << "(as)t = " << labels[lhs] << " but a(st) = "
                 << labels[view(st, a)];
            }
            throw Error(ErrorKind::CompatibilityFail, os.str());
          }
        }
      }
    }
    Act out;
    out._monoid = std::move(M);
    out._side   = side;
    out._labels = std::move(labels);
    out._action = std::move(action);
    return out;
  }

  Act Act::validate(
      MonoidPtr                                              M,
      Side                                                   side,
      std::vector<std::string>                               labels,
      std::map<std::string, std::vector<std::string>> const& action) {
    std::size_t const k = labels.size();
    if (k == 0) {
      throw Error(ErrorKind::EmptyCarrier, "an act must have a non-empty carrier");
    }
    std::map<std::string, Point> index;
    for (Point a = 0; a < k; ++a) {
      if (!index.emplace(labels[a], a).second) {
        throw Error(ErrorKind::DuplicateName,
                    "carrier label \"" + labels[a] + "\" occurs twice");
      }
    }
    std::vector<Point> table(M->size() * k);
    for (auto const& [s_label, images] : action) {
      if (!M->find(s_label)) {
        throw Error(ErrorKind::BadTable,
                    "action given for unknown monoid element \"" + s_label
                        + "\"");
      }
    }
    for (Elem s = 0; s < M->size(); ++s) {
      auto row = action.find(M->label(s));
      if (row == action.end()) {
        throw Error(ErrorKind::BadTable,
                    "no action given for monoid element \"" + M->label(s)
                        + "\"");
      }
      if (row->second.size() != k) {
        throw Error(ErrorKind::BadTable,
                    "action row for \"" + M->label(s) + "\" has "
                        + std::to_string(row->second.size())
                        + " entries, expected " + std::to_string(k));
      }
      for (Point a = 0; a < k; ++a) {
        auto it = index.find(row->second[a]);
        if (it == index.end()) {
          throw Error(ErrorKind::BadTable,
                      "action row for \"" + M->label(s)
                          + "\" mentions unknown point \"" + row->second[a]
                          + "\"");
        }
        table[s * k + a] = it->second;
      }
    }
    return validate(std::move(M), side, std::move(labels), std::move(table));
  }

  std::optional<Point> Act::find(std::string const& label) const {
    auto it = std::find(_labels.begin(), _labels.end(), label);
    if (it == _labels.end()) {
      return std::nullopt;
    }
    return static_cast<Point>(it - _labels.begin());
  }

  Point Act::index_of(std::string const& label) const {
    auto a = find(label);
    if (!a) {
      throw Error(ErrorKind::ElementNotFound,
                  "\"" + label + "\" is not a point of the act");
    }
    return *a;
  }

  bool Act::operator==(Act const& other) const {
    return _side == other._side && _labels == other._labels
           && _action == other._action && *_monoid == *other._monoid;
  }

  bool ActCongruence::is_compatible(Act const& act) const {
    for (Point a = 0; a < act.size(); ++a) {
      for (Point b = a + 1; b < act.size(); ++b) {
        if (!related(a, b)) {
          continue;
        }
        for (Elem s = 0; s < act.monoid().size(); ++s) {
          if (!related(act.act(s, a), act.act(s, b))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool ActMorphism::is_morphism() const {
    if (source.side() != target.side() || map.size() != source.size()
        || !(source.monoid() == target.monoid())) {
      return false;
    }
    for (Point a = 0; a < source.size(); ++a) {
      if (map[a] >= target.size()) {
        return false;
      }
      for (Elem s = 0; s < source.monoid().size(); ++s) {
        if (map[source.act(s, a)] != target.act(s, map[a])) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  Act regular_act(MonoidPtr const& M, Side side) {
    std::size_t const  n = M->size();
    std::vector<Point> table(n * n);
    for (Elem s = 0; s < n; ++s) {
      for (Elem a = 0; a < n; ++a) {
        table[s * n + a] = side == Side::Left ? M->mul(s, a) : M->mul(a, s);
      }
    }
    return Act::validate(M, side, M->labels(), std::move(table));
  }

  Point free_point(FiniteMonoid const& M, std::size_t copy, Elem s) {
    return static_cast<Point>((copy - 1) * M.size() + s);
  }

  Act free_right_act(MonoidPtr const& M, std::size_t k) {
    if (k == 0) {
      throw Error(ErrorKind::BadParams, "a free act needs at least one generator");
    }
    std::size_t const        n = M->size();
    std::vector<std::string> labels;
    labels.reserve(k * n);
    for (std::size_t i = 1; i <= k; ++i) {
      for (Elem s = 0; s < n; ++s) {
        labels.push_back("x" + std::to_string(i) + "#" + M->label(s));
      }
    }
    std::vector<Point> table(n * k * n);
    for (Elem t = 0; t < n; ++t) {
      for (std::size_t i = 1; i <= k; ++i) {
        for (Elem s = 0; s < n; ++s) {
          table[t * k * n + free_point(*M, i, s)]
              = free_point(*M, i, M->mul(s, t));
        }
      }
    }
    return Act::validate(M, Side::Right, std::move(labels), std::move(table));
  }

  ActCongruence
  congruence_closure(Act const&                                  act,
                     std::vector<std::pair<Point, Point>> const& seeds) {
    UnionFind                             uf(act.size());
    std::deque<std::pair<Point, Point>> work(seeds.begin(), seeds.end());
    while (!work.empty()) {
      auto [a, b] = work.front();
      work.pop_front();
      if (uf.unite(a, b)) {
        for (Elem s = 0; s < act.monoid().size(); ++s) {
          work.emplace_back(act.act(s, a), act.act(s, b));
        }
      }
    }
    ActCongruence out;
    out.block_of = uf.canonical_labels();
    out.blocks   = out.block_of.empty()
                       ? 0
                       : *std::max_element(out.block_of.begin(),
                                           out.block_of.end())
                             + 1;
    return out;
  }

  Quotient quotient_act(Act const& act, ActCongruence const& congruence) {
    std::size_t const        k = congruence.blocks;
    std::vector<Point>       rep(k);
    std::vector<bool>        seen(k, false);
    std::vector<std::string> labels(k);
    for (Point a = 0; a < act.size(); ++a) {
      auto b = congruence.block_of[a];
      if (!seen[b]) {
        seen[b]   = true;
        rep[b]    = a;
        labels[b] = "[" + act.label(a) + "]";
      }
    }
    std::vector<Point> table(act.monoid().size() * k);
    for (Elem s = 0; s < act.monoid().size(); ++s) {
      for (std::size_t b = 0; b < k; ++b) {
        table[s * k + b]
            = static_cast<Point>(congruence.block_of[act.act(s, rep[b])]);
      }
    }
    Act quotient = Act::validate(act.monoid_ptr(), act.side(),
                                 std::move(labels), std::move(table));
    std::vector<Point> proj(act.size());
    for (Point a = 0; a < act.size(); ++a) {
      proj[a] = static_cast<Point>(congruence.block_of[a]);
    }
    ActMorphism projection{act, quotient, std::move(proj)};
    return Quotient{std::move(quotient), std::move(projection)};
  }

  std::vector<Point> subact_generated(Act const&                act,
                                      std::vector<Point> const& subset) {
    std::vector<bool>  in(act.size(), false);
    std::vector<Point> stack;
    for (auto a : subset) {
      if (!in[a]) {
        in[a] = true;
        stack.push_back(a);
      }
    }
    while (!stack.empty()) {
      Point a = stack.back();
      stack.pop_back();
      for (Elem s = 0; s < act.monoid().size(); ++s) {
        Point b = act.act(s, a);
        if (!in[b]) {
          in[b] = true;
          stack.push_back(b);
        }
      }
    }
    std::vector<Point> out;
    for (Point a = 0; a < act.size(); ++a) {
      if (in[a]) {
        out.push_back(a);
      }
    }
    return out;
  }

  Subact restrict_to(Act const& act, std::vector<Point> const& closed_subset) {
    std::vector<Point> embedding = closed_subset;
    std::sort(embedding.begin(), embedding.end());
    embedding.erase(std::unique(embedding.begin(), embedding.end()),
                    embedding.end());
    std::vector<Point> local(act.size(), static_cast<Point>(-1));
    std::vector<std::string> labels;
    for (Point i = 0; i < embedding.size(); ++i) {
      local[embedding[i]] = i;
      labels.push_back(act.label(embedding[i]));
    }
    std::size_t const  k = embedding.size();
    std::vector<Point> table(act.monoid().size() * k);
    for (Elem s = 0; s < act.monoid().size(); ++s) {
      for (Point i = 0; i < k; ++i) {
        Point img = local[act.act(s, embedding[i])];
        if (img == static_cast<Point>(-1)) {
          throw Error(ErrorKind::BadParams, "subset is not closed under the action");
        }
        table[s * k + i] = img;
      }
    }
    return Subact{Act::validate(act.monoid_ptr(), act.side(), std::move(labels),
                                std::move(table)),
                  std::move(embedding)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::string carrier_label(std::size_t i) {
      if (i < 26) {
        return std::string(1, static_cast<char>('a' + i));
      }
      return "p" + std::to_string(i);
    }

    class ActEnumerator {
     public:
      ActEnumerator(MonoidPtr const&                 M,
                    Side                             side,
                    std::size_t                      k,
                    std::function<bool(Act const&)>& visit,
                    bool                             canonical_only)
          : _M(M),
            _side(side),
            _k(k),
            _visit(visit),
            _canonical_only(canonical_only) {
        for (std::size_t i = 0; i < k; ++i) {
          _labels.push_back(carrier_label(i));
        }
        if (canonical_only) {
          std::vector<Point> p(k);
          std::iota(p.begin(), p.end(), Point(0));
          do {
            _perms.push_back(p);
          } while (std::next_permutation(p.begin(), p.end()));
        }
      }

      // Returns false when the visitor asked to stop.
      bool run() {
        std::size_t const               n = _M->size();
        std::vector<std::vector<Point>> rows(n);
        std::vector<bool>               assigned(n, false);
        std::vector<Point>              id(_k);
        std::iota(id.begin(), id.end(), Point(0));
        rows[_M->identity()]     = id;
        assigned[_M->identity()] = true;
        if (!propagate(rows, assigned)) {
          return true;
        }
        return branch(rows, assigned);
      }

     private:
      // Fills in every row forced by products of assigned rows; false on a
      // contradiction.
      bool propagate(std::vector<std::vector<Point>>& rows,
                     std::vector<bool>&               assigned) const {
        std::size_t const n       = _M->size();
        bool              changed = true;
        std::vector<Point> comp(_k);
        while (changed) {
          changed = false;
          for (Elem s = 0; s < n; ++s) {
            if (!assigned[s]) {
              continue;
            }
            for (Elem t = 0; t < n; ++t) {
              if (!assigned[t]) {
                continue;
              }
              Elem st = _M->mul(s, t);
              for (Point a = 0; a < _k; ++a) {
                comp[a] = _side == Side::Left ? rows[s][rows[t][a]]
                                              : rows[t][rows[s][a]];
              }
              if (assigned[st]) {
                if (rows[st] != comp) {
                  return false;
                }
              } else {
                rows[st]     = comp;
                assigned[st] = true;
                changed      = true;
              }
            }
          }
        }
        return true;
      }

      bool branch(std::vector<std::vector<Point>> const& rows,
                  std::vector<bool> const&               assigned) {
        auto next = std::find(assigned.begin(), assigned.end(), false);
        if (next == assigned.end()) {
          return emit(rows);
        }
        Elem const         x = static_cast<Elem>(next - assigned.begin());
        std::vector<Point> row(_k, 0);
        while (true) {
          auto r2 = rows;
          auto a2 = assigned;
          r2[x]   = row;
          a2[x]   = true;
          if (propagate(r2, a2) && !branch(r2, a2)) {
            return false;
          }
          // next row in lexicographic order
          std::size_t i = _k;
          while (i > 0) {
            --i;
            if (++row[i] < _k) {
              break;
            }
            row[i] = 0;
            if (i == 0) {
              return true;
            }
          }
        }
      }

      bool emit(std::vector<std::vector<Point>> const& rows) {
        std::vector<Point> table;
        table.reserve(_M->size() * _k);
        for (auto const& r : rows) {
          table.insert(table.end(), r.begin(), r.end());
        }
        if (_canonical_only && !is_canonical(table)) {
          return true;
        }
        return _visit(Act::validate(_M, _side, _labels, std::move(table)));
      }

      bool is_canonical(std::vector<Point> const& table) const {
        std::vector<Point> relabelled(table.size());
        for (auto const& p : _perms) {
          for (Elem s = 0; s < _M->size(); ++s) {
            for (Point a = 0; a < _k; ++a) {
              relabelled[s * _k + p[a]] = p[table[s * _k + a]];
            }
          }
          if (relabelled < table) {
            return false;
          }
        }
        return true;
      }

      MonoidPtr const&                 _M;
      Side                             _side;
      std::size_t                      _k;
      std::function<bool(Act const&)>& _visit;
      bool                             _canonical_only;
      std::vector<std::string>         _labels;
      std::vector<std::vector<Point>>  _perms;
    };

  }  // namespace

  void for_each_act(MonoidPtr const&                M,
                    Side                            side,
                    std::size_t                     max_size,
                    std::function<bool(Act const&)> visit,
                    EnumerateOptions                opts) {
    for (std::size_t k = 1; k <= max_size; ++k) {
      ActEnumerator e(M, side, k, visit, opts.canonical_only);
      if (!e.run()) {
        return;
      }
    }
  }

  std::vector<Act> enumerate_acts(MonoidPtr const& M,
                                  Side             side,
                                  std::size_t      max_size,
                                  EnumerateOptions opts) {
    std::vector<Act> out;
    for_each_act(
        M, side, max_size,
        [&](Act const& A) {
          out.push_back(A);
          return true;
        },
        opts);
    return out;
  }

}  // namespace actalab
