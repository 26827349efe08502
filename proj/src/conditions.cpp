#include "actalab/conditions.hpp"

#include <algorithm>
#include <cctype>

#include "actalab/error.hpp"

namespace actalab {

  char const* to_string(Condition c) noexcept {
    switch (c) {
      case Condition::TF: return "tf";
      case Condition::P: return "p";
      case Condition::E: return "e";
      case Condition::EP: return "ep";
      case Condition::W: return "w";
      case Condition::PWP: return "pwp";
      case Condition::SF: return "sf";
      case Condition::PWF: return "pwf";
      case Condition::WF: return "wf";
      case Condition::Flat: return "flat";
    }
    return "?";
  }

  Condition parse_condition(std::string const& name) {
    std::string lower;
    for (char ch : name) {
      lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
    for (auto c : {Condition::TF, Condition::P, Condition::E, Condition::EP,
                   Condition::W, Condition::PWP, Condition::SF, Condition::PWF,
                   Condition::WF, Condition::Flat}) {
      if (lower == to_string(c)) {
        return c;
      }
    }
    throw Error(ErrorKind::UnknownCondition,
                "\"" + name
                    + "\" (expected tf, p, e, ep, w, pwp, sf, pwf, wf or flat)");
  }

  char const* to_string(Verdict v) noexcept {
    switch (v) {
      case Verdict::Holds: return "holds";
      case Verdict::Fails: return "fails";
      case Verdict::PassesUpToBound: return "passes-up-to-bound";
    }
    return "?";
  }

  namespace {

    void require_left(Act const& B) {
      if (B.side() != Side::Left) {
        throw Error(ErrorKind::SideMismatch,
                    "conditions are checked on left acts");
      }
    }

    // Does the instance satisfy the condition's hypothesis?
    bool triggered(Act const& B, Condition c, Instance const& in) {
      auto const& e = in.elems;
      auto const& p = in.points;
      switch (c) {
        case Condition::TF:
          return is_left_cancellable(B.monoid(), e[0])
                 && B.act(e[0], p[0]) == B.act(e[0], p[1]);
        case Condition::P:
        case Condition::W: return B.act(e[0], p[0]) == B.act(e[1], p[1]);
        case Condition::E:
        case Condition::EP: return B.act(e[0], p[0]) == B.act(e[1], p[0]);
        case Condition::PWP: return B.act(e[0], p[0]) == B.act(e[0], p[1]);
        default: return false;
      }
    }

    // Direct search for the conclusion of an interpolation condition.
    std::optional<Interpolant>
    interpolate(Act const& B, Condition c, Instance const& in) {
      auto const& M = B.monoid();
      auto const& e = in.elems;
      auto const& p = in.points;
      Elem const  n = static_cast<Elem>(M.size());
      switch (c) {
        case Condition::TF:
          if (p[0] == p[1]) {
            return Interpolant{in, {}, p[0]};
          }
          return std::nullopt;
        case Condition::P:
        case Condition::PWP: {
          Elem s = e[0], s2 = c == Condition::P ? e[1] : e[0];
          for (Elem u = 0; u < n; ++u) {
            for (Elem v = 0; v < n; ++v) {
              if (M.mul(s, u) != M.mul(s2, v)) {
                continue;
              }
              for (Point z = 0; z < B.size(); ++z) {
                if (B.act(u, z) == p[0] && B.act(v, z) == p[1]) {
                  return Interpolant{in, {u, v}, z};
                }
              }
            }
          }
          return std::nullopt;
        }
        case Condition::E:
          for (Elem u = 0; u < n; ++u) {
            if (M.mul(e[0], u) != M.mul(e[1], u)) {
              continue;
            }
            for (Point z = 0; z < B.size(); ++z) {
              if (B.act(u, z) == p[0]) {
                return Interpolant{in, {u}, z};
              }
            }
          }
          return std::nullopt;
        case Condition::EP:
          for (Elem u = 0; u < n; ++u) {
            for (Elem v = 0; v < n; ++v) {
              if (M.mul(e[0], u) != M.mul(e[1], v)) {
                continue;
              }
              for (Point z = 0; z < B.size(); ++z) {
                if (B.act(u, z) == p[0] && B.act(v, z) == p[0]) {
                  return Interpolant{in, {u, v}, z};
                }
              }
            }
          }
          return std::nullopt;
        case Condition::W: {
          auto  meet = ideal_intersection(M, e[0], e[1]);
          Point sa   = B.act(e[0], p[0]);
          for (Elem u : meet.members) {
            for (Point z = 0; z < B.size(); ++z) {
              if (B.act(u, z) == sa) {
                return Interpolant{in, {u}, z};
              }
            }
          }
          return std::nullopt;
        }
        default: return std::nullopt;
      }
    }

    // Every hypothesis instance of an interpolation condition, in
    // lexicographic order of (elems, points).
    template <typename Visit>
    bool for_each_instance(Act const& B, Condition c, Visit&& visit) {
      Elem const  n = static_cast<Elem>(B.monoid().size());
      Point const k = static_cast<Point>(B.size());
      switch (c) {
        case Condition::TF:
          for (Elem s = 0; s < n; ++s) {
            for (Point a = 0; a < k; ++a) {
              for (Point b = 0; b < k; ++b) {
                if (!visit(Instance{{s}, {a, b}})) {
                  return false;
                }
              }
            }
          }
          return true;
        case Condition::P:
        case Condition::W:
          for (Elem s = 0; s < n; ++s) {
            for (Elem t = 0; t < n; ++t) {
              for (Point a = 0; a < k; ++a) {
                for (Point b = 0; b < k; ++b) {
                  if (!visit(Instance{{s, t}, {a, b}})) {
                    return false;
                  }
                }
              }
            }
          }
          return true;
        case Condition::E:
        case Condition::EP:
          for (Elem s = 0; s < n; ++s) {
            for (Elem t = 0; t < n; ++t) {
              for (Point a = 0; a < k; ++a) {
                if (!visit(Instance{{s, t}, {a}})) {
                  return false;
                }
              }
            }
          }
          return true;
        case Condition::PWP:
          for (Elem t = 0; t < n; ++t) {
            for (Point a = 0; a < k; ++a) {
              for (Point b = 0; b < k; ++b) {
                if (!visit(Instance{{t}, {a, b}})) {
                  return false;
                }
              }
            }
          }
          return true;
        default: return true;
      }
    }

    ConditionReport check_interpolation(Act const&          B,
                                        Condition           c,
                                        CheckOptions const& opts) {
      ConditionReport report;
      report.condition = c;
      for_each_instance(B, c, [&](Instance const& in) {
        if (!triggered(B, c, in)) {
          return true;
        }
        auto found = interpolate(B, c, in);
        if (!found) {
          report.verdict        = Verdict::Fails;
          report.counterexample = in;
          return false;
        }
        if (opts.interpolants) {
          report.interpolants.push_back(std::move(*found));
        }
        return true;
      });
      if (report.fails()) {
        report.interpolants.clear();
      }
      return report;
    }

    // First pair of K⊗B classes identified in S⊗B, as {m, m'} {b, b'}.
    std::optional<Instance> injectivity_failure(MonoidPtr const&     M,
                                                RightIdeal const&    K,
                                                TensorProduct const& SB,
                                                Act const&           B) {
      auto          sub = restrict_to(regular_act(M, Side::Right), K.members);
      TensorProduct KB(sub.act, B);
      std::size_t const nb = B.size();
      constexpr std::size_t unset = static_cast<std::size_t>(-1);
      // For each S⊗B class, the first K×B pair seen in it.
      std::vector<std::size_t> seen(SB.size(), unset);
      for (std::size_t i = 0; i < KB.classes().size(); ++i) {
        Point       m = static_cast<Point>(i / nb);
        Point       b = static_cast<Point>(i % nb);
        std::size_t c = SB.class_of(sub.embedding[m], b);
        if (seen[c] == unset) {
          seen[c] = i;
        } else if (KB.classes()[seen[c]] != KB.classes()[i]) {
          Point m0 = static_cast<Point>(seen[c] / nb);
          Point b0 = static_cast<Point>(seen[c] % nb);
          return Instance{{sub.embedding[m0], sub.embedding[m]}, {b0, b}};
        }
      }
      return std::nullopt;
    }

    ConditionReport check_ideals(Act const&                     B,
                                 Condition                      c,
                                 std::vector<RightIdeal> const& ideals) {
      require_left(B);
      auto const&     M = B.monoid_ptr();
      TensorProduct   SB(regular_act(M, Side::Right), B);
      ConditionReport report;
      report.condition = c;
      for (auto const& K : ideals) {
        if (auto bad = injectivity_failure(M, K, SB, B)) {
          report.verdict        = Verdict::Fails;
          report.counterexample = std::move(bad);
          report.ideal          = K;
          return report;
        }
      }
      return report;
    }

    bool flat_pair_fails(Act const&   generated,
                         Point        first,
                         Point        last,
                         Act const&   B,
                         Point        b,
                         Point        b2) {
      TensorProduct T(generated, B);
      return !tensor_equal(T, first, b, last, b2);
    }

    FlatContext::Entry make_flat_entry(MonoidPtr const& M, Skeleton sk) {
      auto std_act = standard_tossing_act(M, sk);
      auto closed  = subact_generated(std_act.act(),
                                      {std_act.first(), std_act.last()});
      auto pos = [&](Point p) {
        return static_cast<Point>(
            std::lower_bound(closed.begin(), closed.end(), p) - closed.begin());
      };
      Point first = pos(std_act.first());
      Point last  = pos(std_act.last());
      return FlatContext::Entry{std::move(sk),
                                restrict_to(std_act.act(), closed).act, first,
                                last};
    }

  }  // namespace

  FlatContext::FlatContext(MonoidPtr M, std::size_t m_max)
      : _monoid(std::move(M)), _bound(m_max) {
    if (m_max == 0) {
      throw Error(ErrorKind::BadParams, "flatness bound must be at least 1");
    }
    for (std::size_t m = 1; m <= m_max; ++m) {
      for (auto& sk : all_skeletons(*_monoid, m)) {
        _entries.push_back(make_flat_entry(_monoid, std::move(sk)));
      }
    }
  }

  ConditionReport check_pwf(Act const& B) {
    require_left(B);
    std::vector<RightIdeal> principal;
    for (Elem a = 0; a < B.monoid().size(); ++a) {
      auto aS = principal_right_ideal(B.monoid(), a);
      if (std::find(principal.begin(), principal.end(), aS)
          == principal.end()) {
        principal.push_back(std::move(aS));
      }
    }
    return check_ideals(B, Condition::PWF, principal);
  }

  ConditionReport check_wf(Act const& B) {
    require_left(B);
    return check_ideals(B, Condition::WF, all_right_ideals(B.monoid()));
  }

  ConditionReport check_flat_bounded(Act const& B, FlatContext const& ctx) {
    require_left(B);
    if (!(ctx.monoid() == B.monoid())) {
      throw Error(ErrorKind::MonoidMismatch,
                  "flatness context built for another monoid");
    }
    ConditionReport report;
    report.condition = Condition::Flat;
    report.verdict   = Verdict::PassesUpToBound;
    report.bound     = ctx.bound();
    for (auto const& entry : ctx.entries()) {
      std::optional<TensorProduct> T;
      for (Point b = 0; b < B.size(); ++b) {
        for (Point b2 = 0; b2 < B.size(); ++b2) {
          if (!eval_gamma(B, entry.skeleton, b, b2)) {
            continue;
          }
          if (!T) {
            T.emplace(entry.generated, B);
          }
          if (!tensor_equal(*T, entry.first, b, entry.last, b2)) {
            report.verdict        = Verdict::Fails;
            report.skeleton       = entry.skeleton;
            report.counterexample = Instance{entry.skeleton.sequence(), {b, b2}};
            return report;
          }
        }
      }
    }
    return report;
  }

  ConditionReport check_flat_bounded(Act const& B, std::size_t m_max) {
    return check_flat_bounded(B, FlatContext(B.monoid_ptr(), m_max));
  }

  ConditionReport check_condition(Act const&          B,
                                  Condition           cond,
                                  CheckOptions const& opts) {
    require_left(B);
    switch (cond) {
      case Condition::TF:
      case Condition::P:
      case Condition::E:
      case Condition::EP:
      case Condition::W:
      case Condition::PWP: return check_interpolation(B, cond, opts);
      case Condition::SF: {
        ConditionReport report;
        report.condition = Condition::SF;
        for (auto part : {Condition::P, Condition::E}) {
          auto sub = check_interpolation(B, part, opts);
          if (sub.fails()) {
            report.verdict        = Verdict::Fails;
            report.failed_part    = part;
            report.counterexample = std::move(sub.counterexample);
            report.interpolants.clear();
            return report;
          }
          for (auto& i : sub.interpolants) {
            report.interpolants.push_back(std::move(i));
          }
        }
        return report;
      }
      case Condition::PWF: return check_pwf(B);
      case Condition::WF: return check_wf(B);
      case Condition::Flat:
        if (opts.flat) {
          return check_flat_bounded(B, *opts.flat);
        }
        return check_flat_bounded(B, opts.flat_bound);
    }
    throw Error(ErrorKind::UnknownCondition, "unhandled condition");
  }

  bool is_violation(Act const& B, ConditionReport const& report) {
    if (!report.fails() || !report.counterexample) {
      return false;
    }
    auto const& in = *report.counterexample;
    auto const& M  = B.monoid();
    auto in_range = [&](std::size_t elems, std::size_t points) {
      if (in.elems.size() != elems || in.points.size() != points) {
        return false;
      }
      for (auto e : in.elems) {
        if (e >= M.size()) {
          return false;
        }
      }
      for (auto p : in.points) {
        if (p >= B.size()) {
          return false;
        }
      }
      return true;
    };
    Condition c = report.condition;
    if (c == Condition::SF) {
      if (!report.failed_part) {
        return false;
      }
      c = *report.failed_part;
    }
    switch (c) {
      case Condition::TF:
        return in_range(1, 2) && triggered(B, c, in) && !interpolate(B, c, in);
      case Condition::P:
      case Condition::W:
        return in_range(2, 2) && triggered(B, c, in) && !interpolate(B, c, in);
      case Condition::E:
      case Condition::EP:
        return in_range(2, 1) && triggered(B, c, in) && !interpolate(B, c, in);
      case Condition::PWP:
        return in_range(1, 2) && triggered(B, c, in) && !interpolate(B, c, in);
      case Condition::PWF:
      case Condition::WF: {
        if (!report.ideal || !in_range(2, 2)) {
          return false;
        }
        auto const& K = *report.ideal;
        if (!K.contains(in.elems[0]) || !K.contains(in.elems[1])) {
          return false;
        }
        auto          S = regular_act(B.monoid_ptr(), Side::Right);
        TensorProduct SB(S, B);
        auto sub = restrict_to(S, K.members);
        TensorProduct KB(sub.act, B);
        auto local = [&](Elem m) {
          return static_cast<Point>(
              std::lower_bound(K.members.begin(), K.members.end(), m)
              - K.members.begin());
        };
        return tensor_equal(SB, in.elems[0], in.points[0], in.elems[1],
                            in.points[1])
               && !tensor_equal(KB, local(in.elems[0]), in.points[0],
                                local(in.elems[1]), in.points[1]);
      }
      case Condition::Flat: {
        if (!report.skeleton || in.points.size() != 2
            || in.points[0] >= B.size() || in.points[1] >= B.size()) {
          return false;
        }
        auto const& sk = *report.skeleton;
        if (!eval_gamma(B, sk, in.points[0], in.points[1])) {
          return false;
        }
        auto entry = make_flat_entry(B.monoid_ptr(), sk);
        return flat_pair_fails(entry.generated, entry.first, entry.last, B,
                               in.points[0], in.points[1]);
      }
      case Condition::SF: return false;
    }
    return false;
  }

}  // namespace actalab
