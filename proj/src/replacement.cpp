#include "actalab/replacement.hpp"

#include "actalab/axioms.hpp"
#include "actalab/error.hpp"

namespace actalab {

  char const* to_string(ReplacementStatus s) noexcept {
    switch (s) {
      case ReplacementStatus::Verified: return "verified";
      case ReplacementStatus::Inapplicable: return "inapplicable";
      case ReplacementStatus::Violation: return "violation";
    }
    return "?";
  }

  ReplacementSet replacement_skeletons(FiniteMonoid const& M,
                                       Elem                s,
                                       Elem                t,
                                       Condition           cond) {
    if (s >= M.size() || t >= M.size()) {
      throw Error(ErrorKind::ElementNotFound, "element outside the monoid");
    }
    Elem const     one = M.identity();
    ReplacementSet out{cond, s, t, Skeleton({one, s, t, one}), {}, {}};
    switch (cond) {
      case Condition::P:
        out.generators = min_generating_set(M, R_set(M, s, t));
        break;
      case Condition::EP: out.generators = ep_witness_set(M, s, t); break;
      case Condition::PWP:
        if (s != t) {
          throw Error(ErrorKind::BadParams,
                      "the PWP trigger needs s = t, got " + M.label(s) + ", "
                          + M.label(t));
        }
        out.generators = min_generating_set(M, R_set(M, t, t));
        break;
      case Condition::E:
        for (Elem u : min_generating_set(M, r_set(M, s, t))) {
          out.generators.emplace_back(u, u);
        }
        break;
      case Condition::W:
        for (Elem u : min_generating_set(M, ideal_intersection(M, s, t))) {
          out.generators.emplace_back(u, u);
        }
        break;
      default:
        throw Error(ErrorKind::BadParams,
                    std::string("no replacement skeletons for condition ")
                        + to_string(cond));
    }
    for (auto [u, v] : out.generators) {
      if (cond == Condition::W) {
        out.skeletons.emplace_back(std::vector<Elem>{one, s, u, u, t, one});
      } else {
        out.skeletons.emplace_back(std::vector<Elem>{u, v});
      }
    }
    return out;
  }

  namespace {

    // Returns false on the first trigger with no replacement.
    bool replace_pair(Act const&         S,
                      Act const&         B,
                      Elem               s,
                      Elem               t,
                      Condition          cond,
                      ReplacementReport& report) {
      auto const set = replacement_skeletons(B.monoid(), s, t, cond);
      bool const same_point = cond == Condition::E || cond == Condition::EP;
      for (Point a = 0; a < B.size(); ++a) {
        for (Point b = 0; b < B.size(); ++b) {
          if (same_point && b != a) {
            continue;
          }
          if (B.act(s, a) != B.act(t, b)) {
            continue;
          }
          ++report.triggers;
          Instance trigger{{s, t}, {a, b}};
          bool     done = false;
          for (std::size_t i = 0; i < set.skeletons.size() && !done; ++i) {
            auto const& sk    = set.skeletons[i];
            auto        delta = eval_delta(S, sk, s, t);
            auto        gamma = eval_gamma(B, sk, a, b);
            if (!delta || !gamma) {
              continue;
            }
            Tossing tossing{sk, s, a, t, b, *delta, *gamma};
            if (!validate_tossing(S, B, tossing)) {
              continue;
            }
            if (cond == Condition::W) {
              // sa = tb = u c with c the middle B-witness
              Elem u = set.generators[i].first;
              if (B.act(u, (*gamma)[1]) != B.act(s, a)) {
                continue;
              }
            }
            report.replacements.push_back(
                Replacement{trigger, i, std::move(tossing)});
            done = true;
          }
          if (!done) {
            report.status    = ReplacementStatus::Violation;
            report.violation = trigger;
            return false;
          }
        }
      }
      return true;
    }

    ReplacementReport start(Act const& B, Condition cond) {
      if (B.side() != Side::Left) {
        throw Error(ErrorKind::SideMismatch, "replacement needs a left act");
      }
      ReplacementReport report;
      report.condition = cond;
      if (check_condition(B, cond).fails()) {
        report.status = ReplacementStatus::Inapplicable;
      }
      return report;
    }

  }  // namespace

  ReplacementReport verify_replacement(Act const& B,
                                       Elem       s,
                                       Elem       t,
                                       Condition  cond) {
    // Validates the parameters before anything else.
    replacement_skeletons(B.monoid(), s, t, cond);
    auto report = start(B, cond);
    if (report.status == ReplacementStatus::Inapplicable) {
      return report;
    }
    replace_pair(regular_act(B.monoid_ptr(), Side::Right), B, s, t, cond,
                 report);
    return report;
  }

  ReplacementReport verify_replacement(Act const& B, Condition cond) {
    auto report = start(B, cond);
    if (report.status == ReplacementStatus::Inapplicable) {
      return report;
    }
    auto const S = regular_act(B.monoid_ptr(), Side::Right);
    Elem const n = static_cast<Elem>(B.monoid().size());
    for (Elem s = 0; s < n; ++s) {
      for (Elem t = 0; t < n; ++t) {
        if (cond == Condition::PWP && s != t) {
          continue;
        }
        if (!replace_pair(S, B, s, t, cond, report)) {
          return report;
        }
      }
    }
    return report;
  }

}  // namespace actalab
