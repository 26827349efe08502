#include "actalab/tensor.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "actalab/error.hpp"
#include "actalab/union_find.hpp"

namespace actalab {

  Skeleton::Skeleton(std::vector<Elem> seq) : _seq(std::move(seq)) {
    if (_seq.empty() || _seq.size() % 2 != 0) {
      throw Error(ErrorKind::BadParams,
                  "a skeleton has positive even length, got "
                      + std::to_string(_seq.size()));
    }
  }

  std::string to_string(FiniteMonoid const& M, Skeleton const& sk) {
    std::string out = "(";
    for (std::size_t i = 0; i < sk.sequence().size(); ++i) {
      if (i != 0) {
        out += ",";
      }
      out += M.label(sk.sequence()[i]);
    }
    return out + ")";
  }

  std::vector<Skeleton> all_skeletons(FiniteMonoid const& M,
                                      std::size_t         length) {
    std::vector<Skeleton> out;
    std::vector<Elem>     seq(2 * length, 0);
    Elem const            n = static_cast<Elem>(M.size());
    while (true) {
      out.emplace_back(seq);
      std::size_t i = seq.size();
      while (i > 0) {
        --i;
        if (++seq[i] < n) {
          break;
        }
        seq[i] = 0;
        if (i == 0) {
          return out;
        }
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Tensor product
  ////////////////////////////////////////////////////////////////////////

  namespace {

    void check_factors(Act const& A, Act const& B) {
      if (A.side() != Side::Right || B.side() != Side::Left) {
        throw Error(ErrorKind::SideMismatch,
                    std::string("tensor product needs a right act and a left "
                                "act, got ")
                        + to_string(A.side()) + " and " + to_string(B.side()));
      }
      if (!(A.monoid() == B.monoid())) {
        throw Error(ErrorKind::MonoidMismatch,
                    "factors are acts over different monoids ("
                        + A.monoid().name() + ", " + B.monoid().name() + ")");
      }
    }

    // An elementary step between (a·s, b) and (a, s·b). A pull goes from the
    // latter to the former, a push the other way.
    struct Step {
      bool  pull;
      Elem  s;
      Point a;
      Point b;
    };

  }  // namespace

  TensorProduct::TensorProduct(Act const& A, Act const& B) : _A(A), _B(B) {
    check_factors(A, B);
    std::size_t const nb = B.size();
    UnionFind         uf(A.size() * nb);
    for (Point a = 0; a < A.size(); ++a) {
      for (Elem s = 0; s < A.monoid().size(); ++s) {
        for (Point b = 0; b < nb; ++b) {
          uf.unite(A.act(s, a) * nb + b, a * nb + B.act(s, b));
        }
      }
    }
    _class_of = uf.canonical_labels();
    _classes  = _class_of.empty()
                    ? 0
                    : *std::max_element(_class_of.begin(), _class_of.end()) + 1;
  }

  std::size_t TensorProduct::class_of(Point a, Point b) const {
    if (a >= _A.size() || b >= _B.size()) {
      throw Error(ErrorKind::ElementNotFound, "pair outside A x B");
    }
    return _class_of[a * _B.size() + b];
  }

  TensorProduct tensor_product(Act const& A, Act const& B) {
    return TensorProduct(A, B);
  }

  bool tensor_equal(TensorProduct const& T,
                    Point                a,
                    Point                b,
                    Point                a2,
                    Point                b2) {
    return T.class_of(a, b) == T.class_of(a2, b2);
  }

  ////////////////////////////////////////////////////////////////////////
  // Tossings
  ////////////////////////////////////////////////////////////////////////

  bool validate_tossing(Act const& A, Act const& B, Tossing const& T) {
    if (A.side() != Side::Right || B.side() != Side::Left) {
      return false;
    }
    std::size_t const m = T.skeleton.length();
    if (T.a_mid.size() + 1 != m || T.b_mid.size() != m) {
      return false;
    }
    for (Elem x : T.skeleton.sequence()) {
      if (x >= A.monoid().size()) {
        return false;
      }
    }
    auto in_A = [&](Point p) { return p < A.size(); };
    auto in_B = [&](Point p) { return p < B.size(); };
    if (!in_A(T.a) || !in_A(T.a_end) || !in_B(T.b) || !in_B(T.b_end)
        || !std::all_of(T.a_mid.begin(), T.a_mid.end(), in_A)
        || !std::all_of(T.b_mid.begin(), T.b_mid.end(), in_B)) {
      return false;
    }
    auto a_at = [&](std::size_t i) {  // a_1 = a, a_{m+1} = a_end
      return i == 0 ? T.a : (i == m ? T.a_end : T.a_mid[i - 1]);
    };
    auto const& sk = T.skeleton;
    if (T.b != B.act(sk.s(0), T.b_mid[0])) {
      return false;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (A.act(sk.s(i), a_at(i)) != A.act(sk.t(i), a_at(i + 1))) {
        return false;
      }
      if (i + 1 < m
          && B.act(sk.t(i), T.b_mid[i]) != B.act(sk.s(i + 1), T.b_mid[i + 1])) {
        return false;
      }
    }
    return B.act(sk.t(m - 1), T.b_mid[m - 1]) == T.b_end;
  }

  std::optional<Tossing> find_tossing(Act const& A,
                                      Act const& B,
                                      Point      a,
                                      Point      b,
                                      Point      a2,
                                      Point      b2) {
    check_factors(A, B);
    std::size_t const nb = B.size();
    std::size_t const N  = A.size() * nb;
    if (a >= A.size() || a2 >= A.size() || b >= nb || b2 >= nb) {
      throw Error(ErrorKind::ElementNotFound, "pair outside A x B");
    }
    std::vector<std::vector<std::pair<std::size_t, Step>>> adj(N);
    for (Point x = 0; x < A.size(); ++x) {
      for (Elem s = 0; s < A.monoid().size(); ++s) {
        for (Point y = 0; y < nb; ++y) {
          std::size_t left  = A.act(s, x) * nb + y;  // (x·s, y)
          std::size_t right = x * nb + B.act(s, y);  // (x, s·y)
          adj[right].push_back({left, Step{true, s, x, y}});
          adj[left].push_back({right, Step{false, s, x, y}});
        }
      }
    }
    std::size_t const        src = a * nb + b, dst = a2 * nb + b2;
    constexpr std::size_t    none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> parent(N, none);
    std::vector<Step>        via(N);
    std::deque<std::size_t>  queue{src};
    parent[src] = src;
    while (!queue.empty() && parent[dst] == none) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (auto const& [v, step] : adj[u]) {
        if (parent[v] == none) {
          parent[v] = u;
          via[v]    = step;
          queue.push_back(v);
        }
      }
    }
    if (parent[dst] == none) {
      return std::nullopt;
    }
    std::vector<Step> path;
    for (std::size_t v = dst; v != src; v = parent[v]) {
      path.push_back(via[v]);
    }
    std::reverse(path.begin(), path.end());

    // Alternate pull, push, pull, push, ... starting with a pull and ending
    // with a push, padding with identity steps at the current pair.
    Elem const        one = A.monoid().identity();
    std::vector<Step> normal;
    Point             cur_a = a, cur_b = b;
    bool              want_pull = true;
    auto              advance   = [&](Step const& st) {
      normal.push_back(st);
      if (st.pull) {
        cur_a = A.act(st.s, st.a);
        cur_b = st.b;
      } else {
        cur_a = st.a;
        cur_b = B.act(st.s, st.b);
      }
      want_pull = !want_pull;
    };
    for (auto const& st : path) {
      if (st.pull != want_pull) {
        advance(Step{want_pull, one, cur_a, cur_b});
      }
      advance(st);
    }
    if (normal.empty()) {
      advance(Step{true, one, cur_a, cur_b});
    }
    if (!want_pull) {
      advance(Step{false, one, cur_a, cur_b});
    }

    std::vector<Elem> seq;
    Tossing           out{Skeleton({one, one}), a, b, a2, b2, {}, {}};
    for (std::size_t i = 0; i < normal.size(); i += 2) {
      Step const& pull = normal[i];
      Step const& push = normal[i + 1];
      seq.push_back(pull.s);
      seq.push_back(push.s);
      out.b_mid.push_back(pull.b);
      if (i + 2 < normal.size()) {
        out.a_mid.push_back(push.a);
      }
    }
    out.skeleton = Skeleton(std::move(seq));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // δ and γ
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::vector<Point>>
  eval_delta(Act const& A, Skeleton const& sk, Point a, Point a2) {
    if (A.side() != Side::Right) {
      throw Error(ErrorKind::SideMismatch, "δ is evaluated in a right act");
    }
    std::size_t const m = sk.length();
    std::size_t const k = A.size();
    // layer[i][x]: x is a feasible value of x_{i+1}
    std::vector<std::vector<bool>> layer(m, std::vector<bool>(k, false));
    layer[0][a] = true;
    for (std::size_t i = 0; i + 1 < m; ++i) {
      std::vector<bool> reach(k, false);  // values of x_{i+1} s_{i+1}
      for (Point y = 0; y < k; ++y) {
        if (layer[i][y]) {
          reach[A.act(sk.s(i), y)] = true;
        }
      }
      for (Point x = 0; x < k; ++x) {
        layer[i + 1][x] = reach[A.act(sk.t(i), x)];
      }
    }
    Point target = A.act(sk.t(m - 1), a2);
    std::vector<Point> chain(m);
    bool               found = false;
    for (Point y = 0; y < k && !found; ++y) {
      if (layer[m - 1][y] && A.act(sk.s(m - 1), y) == target) {
        chain[m - 1] = y;
        found        = true;
      }
    }
    if (!found) {
      return std::nullopt;
    }
    for (std::size_t i = m - 1; i > 0; --i) {
      Point need = A.act(sk.t(i - 1), chain[i]);
      for (Point y = 0; y < k; ++y) {
        if (layer[i - 1][y] && A.act(sk.s(i - 1), y) == need) {
          chain[i - 1] = y;
          break;
        }
      }
    }
    return std::vector<Point>(chain.begin() + 1, chain.end());
  }

  std::optional<std::vector<Point>>
  eval_gamma(Act const& B, Skeleton const& sk, Point b, Point b2) {
    if (B.side() != Side::Left) {
      throw Error(ErrorKind::SideMismatch, "γ is evaluated in a left act");
    }
    std::size_t const m = sk.length();
    std::size_t const k = B.size();
    // layer[i][x]: x is a feasible value of b_{i+1}
    std::vector<std::vector<bool>> layer(m, std::vector<bool>(k, false));
    for (Point x = 0; x < k; ++x) {
      layer[0][x] = B.act(sk.s(0), x) == b;
    }
    for (std::size_t i = 0; i + 1 < m; ++i) {
      std::vector<bool> reach(k, false);  // values of t_{i+1} b_{i+1}
      for (Point y = 0; y < k; ++y) {
        if (layer[i][y]) {
          reach[B.act(sk.t(i), y)] = true;
        }
      }
      for (Point x = 0; x < k; ++x) {
        layer[i + 1][x] = reach[B.act(sk.s(i + 1), x)];
      }
    }
    std::vector<Point> chain(m);
    bool               found = false;
    for (Point y = 0; y < k && !found; ++y) {
      if (layer[m - 1][y] && B.act(sk.t(m - 1), y) == b2) {
        chain[m - 1] = y;
        found        = true;
      }
    }
    if (!found) {
      return std::nullopt;
    }
    for (std::size_t i = m - 1; i > 0; --i) {
      Point need = B.act(sk.s(i), chain[i]);
      for (Point y = 0; y < k; ++y) {
        if (layer[i - 1][y] && B.act(sk.t(i - 1), y) == need) {
          chain[i - 1] = y;
          break;
        }
      }
    }
    return chain;
  }

  ////////////////////////////////////////////////////////////////////////
  // Standard tossings and the induced morphism
  ////////////////////////////////////////////////////////////////////////

  StandardTossingAct standard_tossing_act(MonoidPtr const& M,
                                          Skeleton const&  sk) {
    std::size_t const m    = sk.length();
    Act               free = free_right_act(M, m + 1);
    Elem const        one  = M->identity();
    std::vector<std::pair<Point, Point>> seeds;
    for (std::size_t i = 0; i < m; ++i) {
      // x_{i+1} s_{i+1} ~ x_{i+2} t_{i+1}, copies numbered from 1
      seeds.emplace_back(free_point(*M, i + 1, sk.s(i)),
                         free_point(*M, i + 2, sk.t(i)));
    }
    auto     rho = congruence_closure(free, seeds);
    Quotient q   = quotient_act(free, rho);
    std::vector<Point> handles;
    for (std::size_t i = 1; i <= m + 1; ++i) {
      handles.push_back(q.projection.map[free_point(*M, i, one)]);
    }
    return StandardTossingAct{sk, std::move(free), std::move(q),
                              std::move(handles)};
  }

  ActMorphism induced_morphism(StandardTossingAct const& standard,
                               Act const&                target,
                               std::vector<Point> const& chain) {
    auto const&       sk = standard.skeleton;
    std::size_t const m  = sk.length();
    if (target.side() != Side::Right) {
      throw Error(ErrorKind::SideMismatch, "target must be a right act");
    }
    if (!(target.monoid() == standard.free.monoid())) {
      throw Error(ErrorKind::MonoidMismatch, "target is over another monoid");
    }
    if (chain.size() != m + 1) {
      throw Error(ErrorKind::WitnessesInvalid,
                  "expected " + std::to_string(m + 1) + " chain points, got "
                      + std::to_string(chain.size()));
    }
    for (auto p : chain) {
      if (p >= target.size()) {
        throw Error(ErrorKind::WitnessesInvalid, "chain point outside target");
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (target.act(sk.s(i), chain[i]) != target.act(sk.t(i), chain[i + 1])) {
        throw Error(ErrorKind::WitnessesInvalid,
                    "equation " + std::to_string(i + 1) + " of the chain fails");
      }
    }
    FiniteMonoid const& M   = standard.free.monoid();
    auto const&         q   = standard.quotient;
    constexpr Point     unset = static_cast<Point>(-1);
    std::vector<Point>  nu(q.act.size(), unset);
    for (std::size_t i = 1; i <= m + 1; ++i) {
      for (Elem s = 0; s < M.size(); ++s) {
        Point psi   = target.act(s, chain[i - 1]);  // (x_i s)ψ = a_i s
        Point block = q.projection.map[free_point(M, i, s)];
        if (nu[block] == unset) {
          nu[block] = psi;
        } else if (nu[block] != psi) {
          throw Error(ErrorKind::WitnessesInvalid,
                      "rho is not contained in the kernel");
        }
      }
    }
    return ActMorphism{q.act, target, std::move(nu)};
  }

  ActMorphism induced_morphism(MonoidPtr const&          M,
                               Skeleton const&           sk,
                               Act const&                target,
                               std::vector<Point> const& chain) {
    return induced_morphism(standard_tossing_act(M, sk), target, chain);
  }

  std::string format_tossing(Act const& A, Act const& B, Tossing const& T) {
    auto const&       M  = A.monoid();
    auto const&       sk = T.skeleton;
    std::size_t const m  = sk.length();
    auto a_at = [&](std::size_t i) {
      return A.label(i == 0 ? T.a : (i == m ? T.a_end : T.a_mid[i - 1]));
    };
    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("", B.label(T.b) + " = " + M.label(sk.s(0)) + " "
                              + B.label(T.b_mid[0]));
    for (std::size_t i = 0; i < m; ++i) {
      std::string left = a_at(i) + " " + M.label(sk.s(i)) + " = " + a_at(i + 1)
                         + " " + M.label(sk.t(i));
      std::string right = M.label(sk.t(i)) + " " + B.label(T.b_mid[i]) + " = "
                          + (i + 1 < m ? M.label(sk.s(i + 1)) + " "
                                             + B.label(T.b_mid[i + 1])
                                       : B.label(T.b_end));
      rows.emplace_back(left, right);
    }
    std::size_t width = 0;
    for (auto const& r : rows) {
      width = std::max(width, r.first.size());
    }
    std::ostringstream os;
    os << "skeleton " << to_string(M, sk) << ", length " << m << "\n";
    for (auto const& [l, r] : rows) {
      os << "  " << l << std::string(width - l.size(), ' ') << "    " << r
         << "\n";
    }
    return os.str();
  }

}  // namespace actalab
