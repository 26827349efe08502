#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "actalab/act.hpp"
#include "actalab/conditions.hpp"
#include "actalab/monoid.hpp"

namespace actalab {

  using Var = std::size_t;

  // word = (w_1, ..., w_k) denotes w_1(w_2(...(w_k x))); an empty word is the
  // bare variable.
  struct Term {
    std::vector<Elem> word;
    Var               var = 0;

    bool operator==(Term const&) const = default;
  };

  struct Equation {
    Term lhs;
    Term rhs;

    bool operator==(Equation const&) const = default;
  };

  struct Inequation {
    Term lhs;
    Term rhs;

    bool operator==(Inequation const&) const = default;
  };

  // (conjunction of antecedent) → (∃ exists)(⋁ conjunctions)
  struct Implication {
    std::vector<Equation>              antecedent;
    std::vector<Var>                   exists;
    std::vector<std::vector<Equation>> disjuncts;

    bool operator==(Implication const&) const = default;
  };

  using Body = std::variant<Equation, Inequation, Implication>;

  struct Sentence {
    std::vector<std::string> var_names;
    std::vector<Var>         universals;
    Body                     body;

    bool operator==(Sentence const&) const = default;
  };

  // Throws Error(BadParams) if a term mentions an unbound variable or an
  // element outside M.
  void check_sentence(FiniteMonoid const& M, Sentence const& sentence);

  struct Provenance {
    std::string           origin;  // "act" or the schema name
    std::optional<Elem>   s;
    std::optional<Elem>   t;
    std::vector<Elem>     generators;       // W, E
    std::vector<ElemPair> pair_generators;  // P, EP, PWP

    bool operator==(Provenance const&) const = default;
  };

  struct AxiomSet {
    Condition               condition = Condition::W;
    std::string             monoid;
    std::vector<Sentence>   sentences;
    std::vector<Provenance> provenance;  // parallel to sentences

    bool operator==(AxiomSet const&) const = default;
  };

  // The act axioms (∀x)(1x = x) and (∀x)(s(tx) = (st)x).
  std::vector<Sentence> act_axioms(FiniteMonoid const& M);

  // The generating set used by the EP schema for (s, t): the minimum
  // generating set of R(s, t) when it covers every diagonal pair, else all
  // of R(s, t).
  std::vector<ElemPair> ep_witness_set(FiniteMonoid const& M, Elem s, Elem t);

  // cond ∈ {P, E, EP, W, PWP}; throws Error(BadParams) otherwise.
  AxiomSet emit_axioms(FiniteMonoid const& M, Condition cond);

  // Term value under an assignment, on a possibly invalid table.
  Point evaluate(ActionView table, Term const& term,
                 std::vector<Point> const& assignment);

  // nullopt if the sentence holds, else the failing assignment of the
  // universal variables (in prefix order).
  std::optional<std::vector<Point>> model_check(ActionView      table,
                                                Sentence const& sentence);
  std::optional<std::vector<Point>> model_check(Act const&      B,
                                                Sentence const& sentence);

  struct ModelCheckResult {
    bool                              holds = true;
    std::size_t                       failing_sentence = 0;
    std::optional<std::vector<Point>> assignment;
  };

  // Throws Error(MonoidMismatch) if the set was built over another monoid.
  ModelCheckResult model_check(Act const& B, AxiomSet const& axioms);

  struct AxiomatisationReport {
    Condition   condition = Condition::W;
    std::size_t max_size  = 0;
    std::size_t acts      = 0;
    std::size_t in_class  = 0;
    // First act where the schema and the direct check disagree.
    std::optional<Act> divergence;
    bool               divergence_models = false;
    bool               divergence_check  = false;

    bool agrees() const noexcept {
      return !divergence.has_value();
    }
  };

  AxiomatisationReport verify_axiomatisation(MonoidPtr const& M,
                                             Condition        cond,
                                             std::size_t      max_size,
                                             std::size_t      threads = 1);

  std::string format_term(FiniteMonoid const& M, Sentence const& s,
                          Term const& term);
  std::string format_sentence(FiniteMonoid const& M, Sentence const& sentence);

}  // namespace actalab
