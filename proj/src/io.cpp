#include "actalab/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "actalab/error.hpp"

namespace actalab {

  namespace {

    // Runs f, turning nlohmann shape errors into Error(Parse).
    template <typename F>
    auto parsing(char const* what, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (nlohmann::json::exception const& e) {
        throw Error(ErrorKind::Parse, std::string(what) + ": " + e.what());
      }
    }

    Json labels_of(FiniteMonoid const& M, std::vector<Elem> const& xs) {
      Json out = Json::array();
      for (Elem x : xs) {
        out.push_back(M.label(x));
      }
      return out;
    }

    Json points_of(Act const& A, std::vector<Point> const& xs) {
      Json out = Json::array();
      for (Point x : xs) {
        out.push_back(A.label(x));
      }
      return out;
    }

    Json pairs_of(FiniteMonoid const& M, std::vector<ElemPair> const& ps) {
      Json out = Json::array();
      for (auto [u, v] : ps) {
        out.push_back(Json::array({M.label(u), M.label(v)}));
      }
      return out;
    }

    Json term_json(FiniteMonoid const& M, Sentence const& s, Term const& t) {
      return Json{{"word", labels_of(M, t.word)},
                  {"var", s.var_names.at(t.var)}};
    }

    Json eq_json(FiniteMonoid const& M, Sentence const& s, Term const& l,
                 Term const& r) {
      return Json{{"lhs", term_json(M, s, l)}, {"rhs", term_json(M, s, r)}};
    }

    Json instance_json(Act const& B, Instance const& in) {
      return Json{{"elements", labels_of(B.monoid(), in.elems)},
                  {"points", points_of(B, in.points)}};
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Monoids and acts
  ////////////////////////////////////////////////////////////////////////

  Json to_json(FiniteMonoid const& M) {
    Json table = Json::array();
    for (Elem i = 0; i < M.size(); ++i) {
      Json row = Json::array();
      for (Elem j = 0; j < M.size(); ++j) {
        row.push_back(M.label(M.mul(i, j)));
      }
      table.push_back(std::move(row));
    }
    return Json{{"name", M.name()},
                {"elements", M.labels()},
                {"identity", M.label(M.identity())},
                {"table", std::move(table)}};
  }

  FiniteMonoid monoid_from_json(Json const& j) {
    auto [name, labels, table, identity] = parsing("monoid", [&] {
      return std::tuple{j.at("name").get<std::string>(),
                        j.at("elements").get<std::vector<std::string>>(),
                        j.at("table").get<std::vector<std::vector<std::string>>>(),
                        j.at("identity").get<std::string>()};
    });
    return FiniteMonoid::validate(std::move(name), std::move(labels),
                                  std::move(table), identity);
  }

  Json to_json(Act const& act) {
    auto const& M      = act.monoid();
    Json        action = Json::object();
    for (Elem s = 0; s < M.size(); ++s) {
      Json row = Json::array();
      for (Point a = 0; a < act.size(); ++a) {
        row.push_back(act.label(act.act(s, a)));
      }
      action[M.label(s)] = std::move(row);
    }
    return Json{{"monoid", M.name()},
                {"side", to_string(act.side())},
                {"elements", act.labels()},
                {"action", std::move(action)}};
  }

  std::string act_monoid_name(Json const& j) {
    return parsing("act", [&] { return j.at("monoid").get<std::string>(); });
  }

  Act act_from_json(Json const& j, MonoidPtr const& M) {
    auto name = act_monoid_name(j);
    if (name != M->name()) {
      throw Error(ErrorKind::MonoidMismatch,
                  "act is over \"" + name + "\" but the monoid is \""
                      + M->name() + "\"");
    }
    auto [side_text, labels, action] = parsing("act", [&] {
      return std::tuple{
          j.at("side").get<std::string>(),
          j.at("elements").get<std::vector<std::string>>(),
          j.at("action").get<std::map<std::string, std::vector<std::string>>>()};
    });
    Side side;
    if (side_text == "left") {
      side = Side::Left;
    } else if (side_text == "right") {
      side = Side::Right;
    } else {
      throw Error(ErrorKind::Parse,
                  "act: side must be \"left\" or \"right\", got \"" + side_text
                      + "\"");
    }
    return Act::validate(M, side, std::move(labels), action);
  }

  ////////////////////////////////////////////////////////////////////////
  // Skeletons and tossings
  ////////////////////////////////////////////////////////////////////////

  Json to_json(FiniteMonoid const& M, Skeleton const& sk) {
    return Json{{"skeleton", labels_of(M, sk.sequence())}};
  }

  Skeleton skeleton_from_json(Json const& j, FiniteMonoid const& M) {
    auto labels = parsing("skeleton", [&] {
      return j.at("skeleton").get<std::vector<std::string>>();
    });
    std::vector<Elem> seq;
    for (auto const& l : labels) {
      seq.push_back(M.index_of(l));
    }
    return Skeleton(std::move(seq));
  }

  Json to_json(Act const& A, Act const& B, Tossing const& t) {
    return Json{{"skeleton", labels_of(A.monoid(), t.skeleton.sequence())},
                {"length", t.skeleton.length()},
                {"from", Json::array({A.label(t.a), B.label(t.b)})},
                {"to", Json::array({A.label(t.a_end), B.label(t.b_end)})},
                {"a_mid", points_of(A, t.a_mid)},
                {"b_mid", points_of(B, t.b_mid)},
                {"valid", validate_tossing(A, B, t)}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Sentences
  ////////////////////////////////////////////////////////////////////////

  Json to_json(FiniteMonoid const& M, AxiomSet const& axioms) {
    Json sentences = Json::array();
    for (std::size_t i = 0; i < axioms.sentences.size(); ++i) {
      auto const& s = axioms.sentences[i];
      Json        forall = Json::array();
      for (Var v : s.universals) {
        forall.push_back(s.var_names.at(v));
      }
      Json body;
      if (auto const* e = std::get_if<Equation>(&s.body)) {
        body = eq_json(M, s, e->lhs, e->rhs);
        body["kind"] = "equation";
      } else if (auto const* ne = std::get_if<Inequation>(&s.body)) {
        body = eq_json(M, s, ne->lhs, ne->rhs);
        body["kind"] = "inequation";
      } else {
        auto const& imp = std::get<Implication>(s.body);
        Json        ante = Json::array(), any = Json::array(),
             exists = Json::array();
        for (auto const& e : imp.antecedent) {
          ante.push_back(eq_json(M, s, e.lhs, e.rhs));
        }
        for (Var v : imp.exists) {
          exists.push_back(s.var_names.at(v));
        }
        for (auto const& conj : imp.disjuncts) {
          Json c = Json::array();
          for (auto const& e : conj) {
            c.push_back(eq_json(M, s, e.lhs, e.rhs));
          }
          any.push_back(std::move(c));
        }
        body = Json{{"kind", "implication"},
                    {"if", std::move(ante)},
                    {"exists", std::move(exists)},
                    {"any", std::move(any)}};
      }
      auto const& p    = axioms.provenance.at(i);
      Json        prov = Json{{"origin", p.origin}};
      if (p.s) {
        prov["s"] = M.label(*p.s);
      }
      if (p.t) {
        prov["t"] = M.label(*p.t);
      }
      if (!p.generators.empty()) {
        prov["generators"] = labels_of(M, p.generators);
      }
      if (!p.pair_generators.empty()) {
        prov["pair_generators"] = pairs_of(M, p.pair_generators);
      }
      sentences.push_back(Json{{"text", format_sentence(M, s)},
                               {"vars", s.var_names},
                               {"forall", std::move(forall)},
                               {"body", std::move(body)},
                               {"provenance", std::move(prov)}});
    }
    return Json{{"class", to_string(axioms.condition)},
                {"monoid", axioms.monoid},
                {"sentences", std::move(sentences)}};
  }

  AxiomSet axioms_from_json(Json const& j, FiniteMonoid const& M) {
    return parsing("sentences", [&] {
      AxiomSet out;
      out.condition = parse_condition(j.at("class").get<std::string>());
      out.monoid    = j.at("monoid").get<std::string>();
      if (out.monoid != M.name()) {
        throw Error(ErrorKind::MonoidMismatch,
                    "sentences are over \"" + out.monoid
                        + "\" but the monoid is \"" + M.name() + "\"");
      }
      for (auto const& js : j.at("sentences")) {
        Sentence s;
        s.var_names = js.at("vars").get<std::vector<std::string>>();
        auto var_of = [&](std::string const& name) -> Var {
          for (Var v = 0; v < s.var_names.size(); ++v) {
            if (s.var_names[v] == name) {
              return v;
            }
          }
          throw Error(ErrorKind::Parse, "unknown variable \"" + name + "\"");
        };
        auto term_of = [&](Json const& jt) {
          Term t;
          for (auto const& l : jt.at("word")) {
            t.word.push_back(M.index_of(l.get<std::string>()));
          }
          t.var = var_of(jt.at("var").get<std::string>());
          return t;
        };
        auto eq_of = [&](Json const& je) {
          return Equation{term_of(je.at("lhs")), term_of(je.at("rhs"))};
        };
        for (auto const& v : js.at("forall")) {
          s.universals.push_back(var_of(v.get<std::string>()));
        }
        auto const& jb   = js.at("body");
        auto        kind = jb.at("kind").get<std::string>();
        if (kind == "equation") {
          s.body = eq_of(jb);
        } else if (kind == "inequation") {
          auto e = eq_of(jb);
          s.body = Inequation{e.lhs, e.rhs};
        } else if (kind == "implication") {
          Implication imp;
          for (auto const& e : jb.at("if")) {
            imp.antecedent.push_back(eq_of(e));
          }
          for (auto const& v : jb.at("exists")) {
            imp.exists.push_back(var_of(v.get<std::string>()));
          }
          for (auto const& c : jb.at("any")) {
            std::vector<Equation> conj;
            for (auto const& e : c) {
              conj.push_back(eq_of(e));
            }
            imp.disjuncts.push_back(std::move(conj));
          }
          s.body = std::move(imp);
        } else {
          throw Error(ErrorKind::Parse, "unknown sentence kind \"" + kind + "\"");
        }
        check_sentence(M, s);
        Provenance p;
        if (auto it = js.find("provenance"); it != js.end()) {
          p.origin = it->at("origin").get<std::string>();
          if (it->contains("s")) {
            p.s = M.index_of(it->at("s").get<std::string>());
          }
          if (it->contains("t")) {
            p.t = M.index_of(it->at("t").get<std::string>());
          }
          if (it->contains("generators")) {
            for (auto const& l : it->at("generators")) {
              p.generators.push_back(M.index_of(l.get<std::string>()));
            }
          }
          if (it->contains("pair_generators")) {
            for (auto const& pr : it->at("pair_generators")) {
              p.pair_generators.emplace_back(
                  M.index_of(pr.at(0).get<std::string>()),
                  M.index_of(pr.at(1).get<std::string>()));
            }
          }
        }
        out.sentences.push_back(std::move(s));
        out.provenance.push_back(std::move(p));
      }
      return out;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  Json to_json(Act const& B, ConditionReport const& r) {
    auto const& M   = B.monoid();
    Json        out = Json{{"condition", to_string(r.condition)},
                           {"verdict", to_string(r.verdict)}};
    if (r.condition == Condition::Flat) {
      out["bound"] = r.bound;
    }
    if (r.failed_part) {
      out["failed_part"] = to_string(*r.failed_part);
    }
    if (r.ideal) {
      out["ideal"] = labels_of(M, r.ideal->members);
    }
    if (r.skeleton) {
      out["skeleton"] = labels_of(M, r.skeleton->sequence());
    }
    if (r.counterexample) {
      Json ce = instance_json(B, *r.counterexample);
      if (r.condition == Condition::Flat) {
        ce.erase("elements");
      }
      out["counterexample"] = std::move(ce);
    }
    if (!r.interpolants.empty()) {
      Json list = Json::array();
      for (auto const& i : r.interpolants) {
        list.push_back(Json{{"trigger", instance_json(B, i.trigger)},
                            {"elements", labels_of(M, i.elems)},
                            {"point", B.label(i.point)}});
      }
      out["interpolants"] = std::move(list);
    }
    return out;
  }

  Json to_json(FiniteMonoid const& M, ReplacementSet const& set) {
    Json skeletons = Json::array();
    for (auto const& sk : set.skeletons) {
      skeletons.push_back(labels_of(M, sk.sequence()));
    }
    return Json{{"class", to_string(set.condition)},
                {"s", M.label(set.s)},
                {"t", M.label(set.t)},
                {"trigger", labels_of(M, set.trigger.sequence())},
                {"generators", pairs_of(M, set.generators)},
                {"skeletons", std::move(skeletons)}};
  }

  Json to_json(Act const& B, ReplacementReport const& r) {
    auto S   = regular_act(B.monoid_ptr(), Side::Right);
    Json out = Json{{"class", to_string(r.condition)},
                    {"status", to_string(r.status)},
                    {"triggers", r.triggers}};
    if (r.violation) {
      out["violation"] = instance_json(B, *r.violation);
    }
    Json list = Json::array();
    for (auto const& rep : r.replacements) {
      list.push_back(Json{{"trigger", instance_json(B, rep.trigger)},
                          {"tossing", to_json(S, B, rep.tossing)}});
    }
    out["replacements"] = std::move(list);
    return out;
  }

  Json to_json(FamilyReport const& report) {
    Json rows = Json::array();
    for (auto const& row : report.rows) {
      rows.push_back(Json{{"n", row.n},
                          {"monoid", row.monoid},
                          {"s", row.s},
                          {"t", row.t},
                          {"R_generators", row.R_generators},
                          {"r_generators", row.r_generators},
                          {"meet_generators", row.meet_generators}});
    }
    return Json{{"family", to_string(report.family)},
                {"rows", std::move(rows)},
                {"trends", Json{{"R_generators", to_string(report.R_trend)},
                                {"r_generators", to_string(report.r_trend)},
                                {"meet_generators",
                                 to_string(report.meet_trend)}}}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Files
  ////////////////////////////////////////////////////////////////////////

  Json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorKind::Parse, path + ": cannot open file");
    }
    try {
      return Json::parse(in);
    } catch (nlohmann::json::parse_error const& e) {
      throw Error(ErrorKind::Parse, path + ": " + e.what());
    }
  }

  void write_json_file(std::string const& path, Json const& j) {
    std::ofstream out(path);
    if (!out) {
      throw Error(ErrorKind::Parse, path + ": cannot write file");
    }
    out << j.dump(2) << "\n";
  }

}  // namespace actalab
