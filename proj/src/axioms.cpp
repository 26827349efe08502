#include "actalab/axioms.hpp"

#include <algorithm>

#include "actalab/error.hpp"
#include "actalab/parallel.hpp"

namespace actalab {

  namespace {

    Term term(std::vector<Elem> word, Var v) {
      return Term{std::move(word), v};
    }

    Term var(Var v) {
      return Term{{}, v};
    }

    Equation eq(Term l, Term r) {
      return Equation{std::move(l), std::move(r)};
    }

    // Advances an odometer over points^k; false once it wraps.
    bool next_assignment(std::vector<Point>&     values,
                         std::vector<Var> const& vars,
                         std::size_t             points) {
      for (std::size_t i = vars.size(); i > 0; --i) {
        Point& v = values[vars[i - 1]];
        if (++v < points) {
          return true;
        }
        v = 0;
      }
      return false;
    }

    bool holds(ActionView table, Equation const& e,
               std::vector<Point> const& a) {
      return evaluate(table, e.lhs, a) == evaluate(table, e.rhs, a);
    }

    bool body_holds(ActionView table, Body const& body,
                    std::vector<Point>& a) {
      if (auto const* e = std::get_if<Equation>(&body)) {
        return holds(table, *e, a);
      }
      if (auto const* ne = std::get_if<Inequation>(&body)) {
        return evaluate(table, ne->lhs, a) != evaluate(table, ne->rhs, a);
      }
      auto const& imp = std::get<Implication>(body);
      for (auto const& e : imp.antecedent) {
        if (!holds(table, e, a)) {
          return true;
        }
      }
      for (Var v : imp.exists) {
        a[v] = 0;
      }
      do {
        for (auto const& conj : imp.disjuncts) {
          if (std::all_of(conj.begin(), conj.end(), [&](Equation const& e) {
                return holds(table, e, a);
              })) {
            return true;
          }
        }
      } while (!imp.exists.empty() && next_assignment(a, imp.exists, table.points));
      return false;
    }

  }  // namespace

  void check_sentence(FiniteMonoid const& M, Sentence const& sentence) {
    std::vector<bool> bound(sentence.var_names.size(), false);
    auto bind = [&](Var v) {
      if (v >= bound.size()) {
        throw Error(ErrorKind::BadParams, "quantified variable out of range");
      }
      bound[v] = true;
    };
    for (Var v : sentence.universals) {
      bind(v);
    }
    auto check_term = [&](Term const& t) {
      if (t.var >= bound.size() || !bound[t.var]) {
        throw Error(ErrorKind::BadParams, "term mentions an unbound variable");
      }
      for (Elem e : t.word) {
        if (e >= M.size()) {
          throw Error(ErrorKind::BadParams, "term mentions an unknown element");
        }
      }
    };
    auto check_eq = [&](auto const& e) {
      check_term(e.lhs);
      check_term(e.rhs);
    };
    std::visit(
        [&](auto const& body) {
          using B = std::decay_t<decltype(body)>;
          if constexpr (std::is_same_v<B, Implication>) {
            for (auto const& e : body.antecedent) {
              check_eq(e);
            }
            for (Var v : body.exists) {
              bind(v);
            }
            for (auto const& conj : body.disjuncts) {
              for (auto const& e : conj) {
                check_eq(e);
              }
            }
          } else {
            check_eq(body);
          }
        },
        sentence.body);
  }

  std::vector<Sentence> act_axioms(FiniteMonoid const& M) {
    std::vector<Sentence> out;
    out.push_back(
        Sentence{{"x"}, {0}, eq(term({M.identity()}, 0), var(0))});
    for (Elem s = 0; s < M.size(); ++s) {
      for (Elem t = 0; t < M.size(); ++t) {
        out.push_back(Sentence{
            {"x"}, {0}, eq(term({s, t}, 0), term({M.mul(s, t)}, 0))});
      }
    }
    return out;
  }

  std::vector<ElemPair> ep_witness_set(FiniteMonoid const& M, Elem s, Elem t) {
    auto R    = R_set(M, s, t);
    auto gens = min_generating_set(M, R);
    auto span = generated_pairs(M, gens);
    for (auto [u, v] : R.pairs) {
      if (u == v && !span.contains({u, v})) {
        return R.pairs;
      }
    }
    return gens;
  }

  AxiomSet emit_axioms(FiniteMonoid const& M, Condition cond) {
    AxiomSet out;
    out.condition = cond;
    out.monoid    = M.name();
    for (auto& s : act_axioms(M)) {
      out.sentences.push_back(std::move(s));
      out.provenance.push_back(Provenance{"act", {}, {}, {}, {}});
    }
    auto add = [&](Sentence s, Provenance p) {
      out.sentences.push_back(std::move(s));
      out.provenance.push_back(std::move(p));
    };
    Var const x = 0, y = 1, z = 2;
    Elem const n = static_cast<Elem>(M.size());
    switch (cond) {
      case Condition::W:
      case Condition::P:
        for (Elem s = 0; s < n; ++s) {
          for (Elem t = 0; t < n; ++t) {
            Provenance prov{to_string(cond), s, t, {}, {}};
            bool       empty = cond == Condition::W
                                   ? ideal_intersection(M, s, t).empty()
                                   : R_set(M, s, t).empty();
            if (empty) {
              add(Sentence{{"x", "y"}, {x, y},
                           Inequation{term({s}, x), term({t}, y)}},
                  prov);
              continue;
            }
            Implication imp{{eq(term({s}, x), term({t}, y))}, {z}, {}};
            if (cond == Condition::W) {
              prov.generators
                  = min_generating_set(M, ideal_intersection(M, s, t));
              for (Elem u : prov.generators) {
                imp.disjuncts.push_back({eq(term({s}, x), term({u}, z)),
                                         eq(term({t}, y), term({u}, z))});
              }
            } else {
              prov.pair_generators = min_generating_set(M, R_set(M, s, t));
              for (auto [u, v] : prov.pair_generators) {
                imp.disjuncts.push_back(
                    {eq(var(x), term({u}, z)), eq(var(y), term({v}, z))});
              }
            }
            add(Sentence{{"x", "y", "z"}, {x, y}, std::move(imp)}, prov);
          }
        }
        break;
      case Condition::E:
      case Condition::EP:
        for (Elem s = 0; s < n; ++s) {
          for (Elem t = 0; t < n; ++t) {
            Provenance prov{to_string(cond), s, t, {}, {}};
            bool       empty = cond == Condition::E
                                   ? r_set(M, s, t).empty()
                                   : R_set(M, s, t).empty();
            if (empty) {
              add(Sentence{{"x"}, {x}, Inequation{term({s}, x), term({t}, x)}},
                  prov);
              continue;
            }
            // z takes index 1 in these sentences
            Implication imp{{eq(term({s}, x), term({t}, x))}, {1}, {}};
            if (cond == Condition::E) {
              prov.generators = min_generating_set(M, r_set(M, s, t));
              for (Elem u : prov.generators) {
                imp.disjuncts.push_back({eq(var(x), term({u}, 1))});
              }
            } else {
              prov.pair_generators = ep_witness_set(M, s, t);
              for (auto [u, v] : prov.pair_generators) {
                imp.disjuncts.push_back(
                    {eq(var(x), term({u}, 1)), eq(var(x), term({v}, 1))});
              }
            }
            add(Sentence{{"x", "z"}, {x}, std::move(imp)}, prov);
          }
        }
        break;
      case Condition::PWP:
        for (Elem t = 0; t < n; ++t) {
          Provenance prov{"pwp", t, t, {}, {}};
          auto       R = R_set(M, t, t);
          if (R.empty()) {
            add(Sentence{{"x", "x'"}, {x, y},
                         Inequation{term({t}, x), term({t}, y)}},
                prov);
            continue;
          }
          Implication imp{{eq(term({t}, x), term({t}, y))}, {z}, {}};
          prov.pair_generators = min_generating_set(M, R);
          for (auto [u, v] : prov.pair_generators) {
            imp.disjuncts.push_back(
                {eq(var(x), term({u}, z)), eq(var(y), term({v}, z))});
          }
          add(Sentence{{"x", "x'", "z"}, {x, y}, std::move(imp)}, prov);
        }
        break;
      default:
        throw Error(ErrorKind::BadParams,
                    std::string("no axiom schema for condition ")
                        + to_string(cond));
    }
    return out;
  }

  Point evaluate(ActionView table, Term const& term,
                 std::vector<Point> const& assignment) {
    Point v = assignment[term.var];
    for (auto it = term.word.rbegin(); it != term.word.rend(); ++it) {
      v = table(*it, v);
    }
    return v;
  }

  std::optional<std::vector<Point>> model_check(ActionView      table,
                                                Sentence const& sentence) {
    if (table.points == 0) {
      return std::nullopt;
    }
    std::vector<Point> a(sentence.var_names.size(), 0);
    do {
      if (!body_holds(table, sentence.body, a)) {
        std::vector<Point> out;
        for (Var v : sentence.universals) {
          out.push_back(a[v]);
        }
        return out;
      }
    } while (next_assignment(a, sentence.universals, table.points));
    return std::nullopt;
  }

  std::optional<std::vector<Point>> model_check(Act const&      B,
                                                Sentence const& sentence) {
    return model_check(B.view(), sentence);
  }

  ModelCheckResult model_check(Act const& B, AxiomSet const& axioms) {
    if (B.monoid().name() != axioms.monoid) {
      throw Error(ErrorKind::MonoidMismatch,
                  "sentences are over " + axioms.monoid + ", act is over "
                      + B.monoid().name());
    }
    for (std::size_t i = 0; i < axioms.sentences.size(); ++i) {
      if (auto bad = model_check(B, axioms.sentences[i])) {
        return ModelCheckResult{false, i, std::move(bad)};
      }
    }
    return ModelCheckResult{};
  }

  AxiomatisationReport verify_axiomatisation(MonoidPtr const& M,
                                             Condition        cond,
                                             std::size_t      max_size,
                                             std::size_t      threads) {
    auto axioms = emit_axioms(*M, cond);
    auto acts   = enumerate_acts(M, Side::Left, max_size);
    auto verdicts
        = parallel_map(acts.size(), threads, [&](std::size_t i) {
            bool models = model_check(acts[i], axioms).holds;
            bool direct = !check_condition(acts[i], cond).fails();
            return std::pair{models, direct};
          });
    AxiomatisationReport report;
    report.condition = cond;
    report.max_size  = max_size;
    report.acts      = acts.size();
    for (std::size_t i = 0; i < acts.size(); ++i) {
      auto [models, direct] = verdicts[i];
      report.in_class += direct ? 1 : 0;
      if (models != direct && !report.divergence) {
        report.divergence        = acts[i];
        report.divergence_models = models;
        report.divergence_check  = direct;
      }
    }
    return report;
  }

  std::string format_term(FiniteMonoid const& M, Sentence const& s,
                          Term const& term) {
    std::string out  = s.var_names.at(term.var);
    bool        bare = true;
    for (auto it = term.word.rbegin(); it != term.word.rend(); ++it) {
      std::string const& l = M.label(*it);
      if (!bare) {
        out = l + "(" + out + ")";
      } else if (l.size() == 1) {
        out = l + out;
      } else {
        out = l + "·" + out;
      }
      bare = false;
    }
    return out;
  }

  std::string format_sentence(FiniteMonoid const& M, Sentence const& s) {
    std::string out;
    for (Var v : s.universals) {
      out += "(∀" + s.var_names.at(v) + ")";
    }
    auto fmt_eq = [&](Equation const& e) {
      return format_term(M, s, e.lhs) + " = " + format_term(M, s, e.rhs);
    };
    auto conj = [&](std::vector<Equation> const& es) {
      std::string c;
      for (std::size_t i = 0; i < es.size(); ++i) {
        c += (i ? " ∧ " : "") + fmt_eq(es[i]);
      }
      return c;
    };
    if (auto const* e = std::get_if<Equation>(&s.body)) {
      return out + "(" + fmt_eq(*e) + ")";
    }
    if (auto const* ne = std::get_if<Inequation>(&s.body)) {
      return out + "(" + format_term(M, s, ne->lhs) + " ≠ "
             + format_term(M, s, ne->rhs) + ")";
    }
    auto const& imp = std::get<Implication>(s.body);
    std::string rhs;
    for (Var v : imp.exists) {
      rhs += "(∃" + s.var_names.at(v) + ")";
    }
    std::string dis;
    for (std::size_t i = 0; i < imp.disjuncts.size(); ++i) {
      bool wrap = imp.disjuncts.size() > 1 && imp.disjuncts[i].size() > 1;
      dis += (i ? " ∨ " : "")
             + (wrap ? "(" + conj(imp.disjuncts[i]) + ")"
                     : conj(imp.disjuncts[i]));
    }
    if (imp.disjuncts.empty()) {
      dis = "⊥";
    }
    rhs += "(" + dis + ")";
    if (imp.antecedent.empty()) {
      return out + "(" + rhs + ")";
    }
    return out + "(" + conj(imp.antecedent) + " → " + rhs + ")";
  }

}  // namespace actalab
