#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "actalab/act.hpp"
#include "actalab/axioms.hpp"
#include "actalab/conditions.hpp"
#include "actalab/error.hpp"
#include "actalab/io.hpp"
#include "actalab/replacement.hpp"
#include "actalab/tensor.hpp"
#include "actalab/zoo.hpp"

namespace actalab::cli {

  namespace {

    namespace fs = std::filesystem;

    constexpr double default_max_cells = 1e8;

    // Refuses work estimated above ACTALAB_MAX_CELLS cells.
    void check_cells(std::size_t monoid, std::size_t a, std::size_t b) {
      double cap = default_max_cells;
      if (char const* env = std::getenv("ACTALAB_MAX_CELLS")) {
        char*  end   = nullptr;
        double value = std::strtod(env, &end);
        if (end == env || value <= 0) {
          throw Error(ErrorKind::BadParams,
                      std::string("ACTALAB_MAX_CELLS is not a positive number: ")
                          + env);
        }
        cap = value;
      }
      double cells = static_cast<double>(monoid) * static_cast<double>(monoid)
                     * static_cast<double>(a) * static_cast<double>(b);
      if (cells > cap) {
        std::ostringstream os;
        os << "estimated " << cells << " cells (|S|^2 |A| |B| with |S| = "
           << monoid << ", |A| = " << a << ", |B| = " << b
           << ") exceeds the cap of " << cap << " (ACTALAB_MAX_CELLS)";
        throw Error(ErrorKind::SizeCap, os.str());
      }
    }

    MonoidPtr load_monoid(std::string const& source) {
      if (fs::is_regular_file(source)) {
        return std::make_shared<FiniteMonoid const>(
            monoid_from_json(read_json_file(source)));
      }
      if (auto M = build_from_expression(source)) {
        return std::make_shared<FiniteMonoid const>(std::move(*M));
      }
      throw Error(ErrorKind::Parse,
                  source + ": no such file and not a zoo expression");
    }

    // The act's monoid comes from --monoid, else a sibling <name>.json, else
    // the name read as a zoo expression.
    Act load_act(std::string const& path, std::string const& monoid_source) {
      Json j = read_json_file(path);
      MonoidPtr M;
      if (!monoid_source.empty()) {
        M = load_monoid(monoid_source);
      } else {
        std::string name    = act_monoid_name(j);
        fs::path    sibling = fs::path(path).parent_path() / (name + ".json");
        if (fs::is_regular_file(sibling)) {
          M = load_monoid(sibling.string());
        } else if (auto built = build_from_expression(name)) {
          M = std::make_shared<FiniteMonoid const>(std::move(*built));
        } else {
          throw Error(ErrorKind::Parse,
                      path + ": cannot resolve monoid \"" + name
                          + "\"; pass --monoid");
        }
      }
      return act_from_json(j, M);
    }

    Side parse_side(std::string const& s) {
      if (s == "left") {
        return Side::Left;
      }
      if (s == "right") {
        return Side::Right;
      }
      throw Error(ErrorKind::BadParams, "side must be left or right");
    }

    std::vector<std::string> split_commas(std::string const& text) {
      std::vector<std::string> out;
      std::stringstream        ss(text);
      std::string              part;
      while (std::getline(ss, part, ',')) {
        out.push_back(part);
      }
      return out;
    }

    std::pair<Point, Point> parse_pair(Act const&         A,
                                       Act const&         B,
                                       std::string const& text) {
      auto parts = split_commas(text);
      if (parts.size() != 2) {
        throw Error(ErrorKind::BadParams,
                    "expected a pair \"a,b\", got \"" + text + "\"");
      }
      return {A.index_of(parts[0]), B.index_of(parts[1])};
    }

    void emit(std::ostream& out, Json const& j) {
      out << j.dump(2) << "\n";
    }

    std::string join(std::vector<std::string> const& xs,
                     std::string const&              sep = ", ") {
      std::string out;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? sep : "") + xs[i];
      }
      return out;
    }

    // "s = g, t = 1, a = p, a' = q" in the condition's layout.
    std::string describe(Act const& B, Condition c, Instance const& in) {
      std::vector<std::string> elem_names, point_names;
      switch (c) {
        case Condition::TF: elem_names = {"s"}; point_names = {"a", "b"}; break;
        case Condition::P: elem_names = {"s", "s'"}; point_names = {"b", "b'"}; break;
        case Condition::E: elem_names = {"s", "s'"}; point_names = {"b"}; break;
        case Condition::EP: elem_names = {"s", "t"}; point_names = {"a"}; break;
        case Condition::W: elem_names = {"s", "t"}; point_names = {"a", "a'"}; break;
        case Condition::PWP: elem_names = {"t"}; point_names = {"a", "a'"}; break;
        case Condition::PWF:
        case Condition::WF: elem_names = {"m", "m'"}; point_names = {"b", "b'"}; break;
        case Condition::Flat:
        case Condition::SF: point_names = {"b", "b'"}; break;
      }
      std::vector<std::string> parts;
      for (std::size_t i = 0; i < elem_names.size() && i < in.elems.size(); ++i) {
        parts.push_back(elem_names[i] + " = " + B.monoid().label(in.elems[i]));
      }
      for (std::size_t i = 0; i < point_names.size() && i < in.points.size(); ++i) {
        parts.push_back(point_names[i] + " = " + B.label(in.points[i]));
      }
      return join(parts);
    }

    std::string pad(std::string text, std::size_t width) {
      text.resize(std::max(width, text.size() + 1), ' ');
      return text;
    }

    std::string labels(FiniteMonoid const& M, std::vector<Elem> const& xs) {
      std::vector<std::string> out;
      for (Elem x : xs) {
        out.push_back(M.label(x));
      }
      return "{" + join(out) + "}";
    }

    struct Globals {
      bool        json    = false;
      std::size_t threads = 1;
    };

    ////////////////////////////////////////////////////////////////////////
    // Verbs
    ////////////////////////////////////////////////////////////////////////

    int monoid_validate(Globals const& g, std::string const& path,
                        std::ostream& out) {
      auto M = monoid_from_json(read_json_file(path));
      if (g.json) {
        emit(out, Json{{"valid", true},
                       {"name", M.name()},
                       {"size", M.size()},
                       {"identity", M.label(M.identity())}});
      } else {
        out << "valid monoid " << M.name() << ": " << M.size()
            << " elements, identity " << M.label(M.identity()) << "\n";
      }
      return 0;
    }

    int act_validate(Globals const& g, std::string const& path,
                     std::string const& monoid, std::ostream& out) {
      auto A = load_act(path, monoid);
      if (g.json) {
        emit(out, Json{{"valid", true},
                       {"monoid", A.monoid().name()},
                       {"side", to_string(A.side())},
                       {"size", A.size()}});
      } else {
        out << "valid " << to_string(A.side()) << " act over "
            << A.monoid().name() << ": " << A.size() << " elements\n";
      }
      return 0;
    }

    int act_regular(std::string const& monoid, std::string const& side,
                    std::string const& output, std::ostream& out) {
      auto A = regular_act(load_monoid(monoid), parse_side(side));
      if (output.empty()) {
        emit(out, to_json(A));
      } else {
        write_json_file(output, to_json(A));
        out << "wrote " << output << "\n";
      }
      return 0;
    }

    int tensor_cmd(Globals const& g, std::string const& right,
                   std::string const& left, std::string const& monoid,
                   std::string const& equal, std::ostream& out) {
      auto A = load_act(right, monoid);
      auto B = load_act(left, monoid);
      check_cells(A.monoid().size(), A.size(), B.size());
      auto T = tensor_product(A, B);
      std::vector<std::vector<std::string>> classes(T.size());
      for (Point a = 0; a < A.size(); ++a) {
        for (Point b = 0; b < B.size(); ++b) {
          classes[T.class_of(a, b)].push_back("(" + A.label(a) + ","
                                              + B.label(b) + ")");
        }
      }
      std::optional<bool> same;
      if (!equal.empty()) {
        auto parts = split_commas(equal);
        if (parts.size() != 4) {
          throw Error(ErrorKind::BadParams,
                      "--equal expects \"a,b,a',b'\", got \"" + equal + "\"");
        }
        same = tensor_equal(T, A.index_of(parts[0]), B.index_of(parts[1]),
                            A.index_of(parts[2]), B.index_of(parts[3]));
      }
      if (g.json) {
        Json j{{"classes", T.size()}, {"partition", classes}};
        if (same) {
          j["equal"] = *same;
        }
        emit(out, j);
      } else {
        out << "A ⊗ B has " << T.size() << " classes\n";
        for (auto const& c : classes) {
          out << "  {" << join(c) << "}\n";
        }
        if (same) {
          out << (*same ? "equal" : "not equal") << "\n";
        }
      }
      return same && !*same ? 1 : 0;
    }

    int tossing_cmd(Globals const& g, std::string const& right,
                    std::string const& left, std::string const& monoid,
                    std::string const& from, std::string const& to,
                    std::string const& skeleton_path, std::ostream& out) {
      auto A = load_act(right, monoid);
      auto B = load_act(left, monoid);
      check_cells(A.monoid().size(), A.size(), B.size());
      auto [a, b]   = parse_pair(A, B, from);
      auto [a2, b2] = parse_pair(A, B, to);
      std::optional<Tossing> found;
      std::string            failure = "the pairs are not ⊗-equal";
      if (!skeleton_path.empty()) {
        auto sk    = skeleton_from_json(read_json_file(skeleton_path),
                                        A.monoid());
        auto delta = eval_delta(A, sk, a, a2);
        auto gamma = eval_gamma(B, sk, b, b2);
        if (delta && gamma) {
          found = Tossing{sk, a, b, a2, b2, *delta, *gamma};
        } else {
          failure = std::string("no tossing with this skeleton: δ ")
                    + (delta ? "holds" : "fails") + ", γ "
                    + (gamma ? "holds" : "fails");
        }
      } else {
        found = find_tossing(A, B, a, b, a2, b2);
      }
      if (!found) {
        if (g.json) {
          emit(out, Json{{"connected", false}, {"reason", failure}});
        } else {
          out << failure << "\n";
        }
        return 1;
      }
      Json j = to_json(A, B, *found);
      if (g.json) {
        emit(out, j);
      } else {
        out << format_tossing(A, B, *found) << j.dump(2) << "\n";
      }
      return 0;
    }

    int check_cmd(Globals const& g, std::string const& cond_name,
                  std::string const& act, std::string const& monoid,
                  std::size_t flat_bound, bool witness, std::ostream& out) {
      auto cond = parse_condition(cond_name);
      auto B    = load_act(act, monoid);
      check_cells(B.monoid().size(), B.size(), B.size());
      CheckOptions opts;
      opts.interpolants = witness;
      opts.flat_bound   = flat_bound;
      auto report       = check_condition(B, cond, opts);
      if (g.json) {
        emit(out, to_json(B, report));
      } else {
        out << "condition " << to_string(cond) << ": "
            << to_string(report.verdict);
        if (cond == Condition::Flat) {
          out << " (skeleton length <= " << report.bound << ")";
        }
        out << "\n";
        if (report.counterexample) {
          Condition layout = report.failed_part.value_or(cond);
          out << "counterexample";
          if (report.failed_part) {
            out << " to " << to_string(*report.failed_part);
          }
          out << ": " << describe(B, layout, *report.counterexample) << "\n";
          if (report.ideal) {
            out << "right ideal: " << labels(B.monoid(), report.ideal->members)
                << "\n";
          }
          if (report.skeleton) {
            out << "skeleton: " << to_string(B.monoid(), *report.skeleton)
                << "\n";
          }
        }
        for (auto const& i : report.interpolants) {
          out << "  " << describe(B, cond, i.trigger) << "  via "
              << labels(B.monoid(), i.elems) << ", " << B.label(i.point)
              << "\n";
        }
      }
      return report.fails() ? 1 : 0;
    }

    int axioms_emit(Globals const& g, std::string const& cls,
                    std::string const& monoid, std::string const& output,
                    std::ostream& out) {
      auto M      = load_monoid(monoid);
      auto axioms = emit_axioms(*M, parse_condition(cls));
      Json j      = to_json(*M, axioms);
      if (!output.empty()) {
        write_json_file(output, j);
        out << "wrote " << axioms.sentences.size() << " sentences to "
            << output << "\n";
      } else if (g.json) {
        emit(out, j);
      } else {
        for (auto const& s : axioms.sentences) {
          out << format_sentence(*M, s) << "\n";
        }
      }
      return 0;
    }

    int axioms_modelcheck(Globals const& g, std::string const& act,
                          std::string const& sentences,
                          std::string const& monoid, std::ostream& out) {
      auto B      = load_act(act, monoid);
      auto axioms = axioms_from_json(read_json_file(sentences), B.monoid());
      check_cells(B.monoid().size(), B.size(), B.size());
      auto result = model_check(B, axioms);
      std::vector<std::string> assignment;
      std::string              text;
      if (!result.holds) {
        auto const& s = axioms.sentences[result.failing_sentence];
        text          = format_sentence(B.monoid(), s);
        for (std::size_t i = 0; i < s.universals.size(); ++i) {
          assignment.push_back(s.var_names[s.universals[i]] + " = "
                               + B.label((*result.assignment)[i]));
        }
      }
      if (g.json) {
        Json j{{"holds", result.holds}, {"sentences", axioms.sentences.size()}};
        if (!result.holds) {
          j["failing_sentence"] = result.failing_sentence;
          j["text"]             = text;
          j["assignment"]       = assignment;
        }
        emit(out, j);
      } else if (result.holds) {
        out << "all " << axioms.sentences.size() << " sentences hold\n";
      } else {
        out << "sentence " << result.failing_sentence << " fails: " << text
            << "\n  at " << join(assignment) << "\n";
      }
      return result.holds ? 0 : 1;
    }

    int axioms_verify(Globals const& g, std::string const& cls,
                      std::string const& monoid, std::size_t max_size,
                      std::ostream& out) {
      auto M    = load_monoid(monoid);
      auto cond = parse_condition(cls);
      check_cells(M->size(), max_size, max_size);
      auto report = verify_axiomatisation(M, cond, max_size, g.threads);
      if (g.json) {
        Json j{{"class", to_string(cond)},
               {"monoid", M->name()},
               {"max_size", max_size},
               {"acts", report.acts},
               {"in_class", report.in_class},
               {"agrees", report.agrees()}};
        if (report.divergence) {
          j["divergence"] = Json{{"act", to_json(*report.divergence)},
                                 {"models", report.divergence_models},
                                 {"direct", report.divergence_check}};
        }
        emit(out, j);
      } else {
        out << "class " << to_string(cond) << " over " << M->name() << ": "
            << report.acts << " left acts of size <= " << max_size << ", "
            << report.in_class << " in the class\n";
        if (report.agrees()) {
          out << "schema and direct check agree on every act\n";
        } else {
          out << "divergence: schema " << (report.divergence_models ? "holds" : "fails")
              << ", direct check " << (report.divergence_check ? "holds" : "fails")
              << " on\n"
              << to_json(*report.divergence).dump(2) << "\n";
        }
      }
      return report.agrees() ? 0 : 1;
    }

    int replace_compute(Globals const& g, std::string const& cls,
                        std::string const& monoid, std::string const& s,
                        std::string const& t, std::ostream& out) {
      auto M   = load_monoid(monoid);
      auto set = replacement_skeletons(*M, M->index_of(s), M->index_of(t),
                                       parse_condition(cls));
      if (g.json) {
        emit(out, to_json(*M, set));
      } else {
        out << "trigger " << to_string(*M, set.trigger) << ": "
            << set.skeletons.size() << " replacement skeleton(s)\n";
        for (auto const& sk : set.skeletons) {
          out << "  " << to_string(*M, sk) << "\n";
        }
      }
      return 0;
    }

    int replace_verify(Globals const& g, std::string const& cls,
                       std::string const& act, std::string const& monoid,
                       std::string const& s, std::string const& t,
                       std::ostream& out) {
      auto cond = parse_condition(cls);
      auto B    = load_act(act, monoid);
      check_cells(B.monoid().size(), B.size(), B.size());
      if (s.empty() != t.empty()) {
        throw Error(ErrorKind::BadParams, "give both --s and --t or neither");
      }
      auto report = s.empty()
                        ? verify_replacement(B, cond)
                        : verify_replacement(B, B.monoid().index_of(s),
                                             B.monoid().index_of(t), cond);
      if (g.json) {
        emit(out, to_json(B, report));
      } else {
        out << "class " << to_string(cond) << ": " << to_string(report.status)
            << ", " << report.triggers << " trigger instance(s)\n";
        if (report.status == ReplacementStatus::Inapplicable) {
          out << "the act does not satisfy condition " << to_string(cond)
              << "\n";
        }
        if (report.violation) {
          auto const& v = *report.violation;
          out << "no replacement for s = " << B.monoid().label(v.elems[0])
              << ", t = " << B.monoid().label(v.elems[1])
              << ", a = " << B.label(v.points[0])
              << ", b = " << B.label(v.points[1]) << "\n";
        }
        for (auto const& r : report.replacements) {
          out << "  s = " << B.monoid().label(r.trigger.elems[0])
              << ", t = " << B.monoid().label(r.trigger.elems[1])
              << ", a = " << B.label(r.trigger.points[0])
              << ", b = " << B.label(r.trigger.points[1]) << ": skeleton "
              << to_string(B.monoid(), r.tossing.skeleton) << "\n";
        }
      }
      return report.status == ReplacementStatus::Verified ? 0 : 1;
    }

    int zoo_build(std::string const& family, std::size_t n,
                  std::optional<std::size_t> q, std::string const& output,
                  std::ostream& out) {
      auto f = parse_family(family);
      std::vector<std::size_t> params{n};
      if (f == Family::SemilatticeOfGroups) {
        params.push_back(q.value_or(n));
      } else if (q) {
        throw Error(ErrorKind::BadParams, "--q only applies to "
                                          "semilattice_of_groups");
      }
      auto M = build(f, params);
      if (output.empty()) {
        emit(out, to_json(M));
      } else {
        write_json_file(output, to_json(M));
        out << "wrote " << M.name() << " to " << output << "\n";
      }
      return 0;
    }

    int zoo_report(Globals const& g, std::string const& family,
                   std::string const& range, std::string const& s,
                   std::string const& t, std::ostream& out) {
      auto        f   = parse_family(family);
      auto        dot = range.find("..");
      std::size_t lo = 0, hi = 0;
      try {
        if (dot == std::string::npos) {
          lo = hi = std::stoul(range);
        } else {
          lo = std::stoul(range.substr(0, dot));
          hi = std::stoul(range.substr(dot + 2));
        }
      } catch (std::exception const&) {
        throw Error(ErrorKind::BadParams,
                    "--range expects lo..hi, got \"" + range + "\"");
      }
      auto opt = [](std::string const& x) {
        return x.empty() ? std::nullopt : std::optional<std::string>(x);
      };
      auto report = family_report(f, lo, hi, opt(s), opt(t));
      if (g.json) {
        emit(out, to_json(report));
        return 0;
      }
      out << "family " << to_string(f) << "\n";
      out << pad("n", 5) << pad("(s,t)", 12) << pad("|gen R(s,t)|", 15)
          << pad("|gen r(s,t)|", 15) << "|gen sS∩tS|\n";
      for (auto const& row : report.rows) {
        out << pad(std::to_string(row.n), 5)
            << pad("(" + row.s + "," + row.t + ")", 12)
            << pad(std::to_string(row.R_generators), 15)
            << pad(std::to_string(row.r_generators), 15)
            << row.meet_generators << "\n";
      }
      out << "trend of |gen R(s,t)|: " << to_string(report.R_trend) << "\n"
          << "trend of |gen r(s,t)|: " << to_string(report.r_trend) << "\n"
          << "trend of |gen sS∩tS|: " << to_string(report.meet_trend) << "\n";
      return 0;
    }

    int zoo_list(Globals const& g, std::ostream& out) {
      std::vector<std::pair<std::string, std::string>> families{
          {"cyclic_group", "--n N: the cyclic group of order N"},
          {"inverse_omega_chain", "--n N: e0..eN with ei ej = e_max(i,j)"},
          {"null_adjoined", "--n N: null semigroup of N elements (with zero) "
                            "plus an identity"},
          {"semilattice_of_groups",
           "--n P --q Q: Z_P above Z_Q, trivial connecting homomorphism"},
          {"nat_min_adjoined", "--n N: {1..N} under min plus an identity"}};
      auto excluded = excluded_families();
      if (g.json) {
        Json fams = Json::array(), ex = Json::array();
        for (auto const& [name, d] : families) {
          fams.push_back(Json{{"family", name}, {"parameters", d}});
        }
        for (auto const& [name, why] : excluded) {
          ex.push_back(Json{{"family", name}, {"reason", why}});
        }
        emit(out, Json{{"families", fams}, {"excluded", ex}});
        return 0;
      }
      for (auto const& [name, d] : families) {
        out << name << "  " << d << "\n";
      }
      for (auto const& [name, why] : excluded) {
        out << "excluded: " << name << " (" << why << ")\n";
      }
      return 0;
    }

    int enumerate_cmd(Globals const& g, std::string const& monoid,
                      std::string const& side, std::size_t max_size,
                      bool canonical, std::string const& output,
                      std::ostream& out) {
      auto M = load_monoid(monoid);
      check_cells(M->size(), max_size, max_size);
      auto acts = enumerate_acts(M, parse_side(side), max_size,
                                 EnumerateOptions{canonical});
      std::vector<std::size_t> counts(max_size, 0);
      Json                     list = Json::array();
      for (auto const& A : acts) {
        ++counts[A.size() - 1];
        if (!output.empty()) {
          list.push_back(to_json(A));
        }
      }
      if (!output.empty()) {
        write_json_file(output, list);
      }
      if (g.json) {
        emit(out, Json{{"monoid", M->name()},
                       {"side", side},
                       {"canonical", canonical},
                       {"counts", counts},
                       {"total", acts.size()}});
      } else {
        for (std::size_t k = 0; k < max_size; ++k) {
          out << "size " << k + 1 << ": " << counts[k] << " acts\n";
        }
        out << "total: " << acts.size() << "\n";
      }
      return 0;
    }

  }  // namespace

  int run_command(std::vector<std::string> const& args,
                  std::ostream&                   out,
                  std::ostream&                   err) {
    CLI::App app{"Finite monoids, acts, tensor products and flatness "
                 "conditions",
                 "actalab"};
    app.fallthrough();
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.json, "Machine-readable output");
    app.add_option("--threads", g.threads, "Parallel sweep width")
        ->check(CLI::PositiveNumber);

    std::string monoid, act, output, right, left, cls, s, t, sentences;
    std::string file, side = "left", from, to, skeleton, equal, family,
                      range = "2..4", condition;
    std::size_t max_size = 3, flat_bound = 2, n = 2;
    std::optional<std::size_t> q;
    bool                       witness = false, canonical = false;

    auto* monoid_cmd = app.add_subcommand("monoid", "Monoid files");
    monoid_cmd->require_subcommand(1);
    auto* mv = monoid_cmd->add_subcommand("validate", "Validate a monoid");
    mv->add_option("file", file, "Monoid JSON")->required();

    auto* act_cmd = app.add_subcommand("act", "Act files");
    act_cmd->require_subcommand(1);
    auto* av = act_cmd->add_subcommand("validate", "Validate an act");
    av->add_option("file", file, "Act JSON")->required();
    av->add_option("--monoid", monoid, "Monoid JSON or zoo expression");
    auto* ar = act_cmd->add_subcommand("regular", "S acting on itself");
    ar->add_option("--monoid", monoid, "Monoid JSON or zoo expression")
        ->required();
    ar->add_option("--side", side, "left or right");
    ar->add_option("-o,--output", output, "Output path");

    auto* tensor = app.add_subcommand("tensor", "Tensor product A ⊗ B");
    tensor->add_option("--right", right, "Right act A")->required();
    tensor->add_option("--left", left, "Left act B")->required();
    tensor->add_option("--monoid", monoid, "Monoid JSON or zoo expression");
    tensor->add_option("--equal", equal, "Decide a⊗b = a'⊗b' for \"a,b,a',b'\"");

    auto* tossing = app.add_subcommand("tossing", "Find or check a tossing");
    tossing->add_option("--right", right, "Right act A")->required();
    tossing->add_option("--left", left, "Left act B")->required();
    tossing->add_option("--monoid", monoid, "Monoid JSON or zoo expression");
    tossing->add_option("--from", from, "Start pair \"a,b\"")->required();
    tossing->add_option("--to", to, "End pair \"a',b'\"")->required();
    tossing->add_option("--skeleton", skeleton,
                        "Skeleton JSON to test instead of searching");

    auto* check = app.add_subcommand("check", "Decide a condition on a left act");
    check->add_option("--condition", condition,
                      "tf, p, e, ep, w, pwp, sf, pwf, wf or flat")
        ->required();
    check->add_option("--act", act, "Left act JSON")->required();
    check->add_option("--monoid", monoid, "Monoid JSON or zoo expression");
    check->add_option("--flat-bound", flat_bound, "Skeleton length bound")
        ->check(CLI::PositiveNumber);
    check->add_flag("--witness", witness, "Report interpolants when it holds");

    auto* axioms = app.add_subcommand("axioms", "Axiom schemas");
    axioms->require_subcommand(1);
    auto* ae = axioms->add_subcommand("emit", "Emit the sentences for a class");
    ae->add_option("--class", cls, "p, e, ep, w or pwp")->required();
    ae->add_option("--monoid", monoid, "Monoid JSON or zoo expression")
        ->required();
    ae->add_option("-o,--output", output, "Output path");
    auto* am = axioms->add_subcommand("modelcheck", "Model-check sentences");
    am->add_option("--act", act, "Left act JSON")->required();
    am->add_option("--sentences", sentences, "Sentence JSON")->required();
    am->add_option("--monoid", monoid, "Monoid JSON or zoo expression");
    auto* avf = axioms->add_subcommand(
        "verify", "Compare the schema with the direct check on all small acts");
    avf->add_option("--class", cls, "p, e, ep, w or pwp")->required();
    avf->add_option("--monoid", monoid, "Monoid JSON or zoo expression")
        ->required();
    avf->add_option("--max-size", max_size, "Largest carrier")
        ->check(CLI::PositiveNumber);

    auto* replace = app.add_subcommand("replace", "Replacement skeletons");
    replace->require_subcommand(1);
    auto* rc = replace->add_subcommand("compute", "List replacement skeletons");
    rc->add_option("--class", cls, "p, e, ep, w or pwp")->required();
    rc->add_option("--monoid", monoid, "Monoid JSON or zoo expression")
        ->required();
    rc->add_option("--s", s, "Element label")->required();
    rc->add_option("--t", t, "Element label")->required();
    auto* rv = replace->add_subcommand("verify", "Replace every trigger in an act");
    rv->add_option("--class", cls, "p, e, ep, w or pwp")->required();
    rv->add_option("--act", act, "Left act JSON")->required();
    rv->add_option("--monoid", monoid, "Monoid JSON or zoo expression");
    rv->add_option("--s", s, "Element label (default: every pair)");
    rv->add_option("--t", t, "Element label (default: every pair)");

    auto* zoo = app.add_subcommand("zoo", "Example monoid families");
    zoo->require_subcommand(1);
    auto* zb = zoo->add_subcommand("build", "Build a family member");
    zb->add_option("--family", family, "Family name")->required();
    zb->add_option("--n", n, "Size parameter")->required();
    zb->add_option("--q", q, "Second group order (semilattice_of_groups)");
    zb->add_option("-o,--output", output, "Output path");
    auto* zr = zoo->add_subcommand("report", "Generating-set growth table");
    zr->add_option("--family", family, "Family name")->required();
    zr->add_option("--range", range, "Parameter range lo..hi");
    zr->add_option("--s", s, "Override the designated s");
    zr->add_option("--t", t, "Override the designated t");
    auto* zl = zoo->add_subcommand("list", "List the families");

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate small acts");
    enumerate->add_option("--monoid", monoid, "Monoid JSON or zoo expression")
        ->required();
    enumerate->add_option("--side", side, "left or right");
    enumerate->add_option("--max-size", max_size, "Largest carrier")
        ->check(CLI::PositiveNumber);
    enumerate->add_flag("--canonical", canonical,
                        "One act per isomorphism class");
    enumerate->add_option("-o,--output", output, "Write the acts as JSON");

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? 0 : 2;
    }

    try {
      if (mv->parsed()) {
        return monoid_validate(g, file, out);
      }
      if (av->parsed()) {
        return act_validate(g, file, monoid, out);
      }
      if (ar->parsed()) {
        return act_regular(monoid, side, output, out);
      }
      if (tensor->parsed()) {
        return tensor_cmd(g, right, left, monoid, equal, out);
      }
      if (tossing->parsed()) {
        return tossing_cmd(g, right, left, monoid, from, to, skeleton, out);
      }
      if (check->parsed()) {
        return check_cmd(g, condition, act, monoid, flat_bound, witness, out);
      }
      if (ae->parsed()) {
        return axioms_emit(g, cls, monoid, output, out);
      }
      if (am->parsed()) {
        return axioms_modelcheck(g, act, sentences, monoid, out);
      }
      if (avf->parsed()) {
        return axioms_verify(g, cls, monoid, max_size, out);
      }
      if (rc->parsed()) {
        return replace_compute(g, cls, monoid, s, t, out);
      }
      if (rv->parsed()) {
        return replace_verify(g, cls, act, monoid, s, t, out);
      }
      if (zb->parsed()) {
        return zoo_build(family, n, q, output, out);
      }
      if (zr->parsed()) {
        return zoo_report(g, family, range, s, t, out);
      }
      if (zl->parsed()) {
        return zoo_list(g, out);
      }
      if (enumerate->parsed()) {
        return enumerate_cmd(g, monoid, side, max_size, canonical, output, out);
      }
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    err << app.help();
    return 2;
  }

}  // namespace actalab::cli
