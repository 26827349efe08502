#pragma once

#include <string>

#include <json.hpp>

#include "actalab/act.hpp"
#include "actalab/axioms.hpp"
#include "actalab/conditions.hpp"
#include "actalab/monoid.hpp"
#include "actalab/replacement.hpp"
#include "actalab/tensor.hpp"
#include "actalab/zoo.hpp"

namespace actalab {

  using Json = nlohmann::ordered_json;

  // Shape errors raise Error(Parse); law violations raise the validator's
  // error kinds.
  Json         to_json(FiniteMonoid const& M);
  FiniteMonoid monoid_from_json(Json const& j);

  Json to_json(Act const& act);
  Act  act_from_json(Json const& j, MonoidPtr const& M);
  // The "monoid" field of an act document.
  std::string act_monoid_name(Json const& j);

  Json     to_json(FiniteMonoid const& M, Skeleton const& sk);
  Skeleton skeleton_from_json(Json const& j, FiniteMonoid const& M);

  Json to_json(Act const& A, Act const& B, Tossing const& t);

  Json     to_json(FiniteMonoid const& M, AxiomSet const& axioms);
  AxiomSet axioms_from_json(Json const& j, FiniteMonoid const& M);

  Json to_json(Act const& B, ConditionReport const& report);
  Json to_json(Act const& B, ReplacementReport const& report);
  Json to_json(FiniteMonoid const& M, ReplacementSet const& set);
  Json to_json(FamilyReport const& report);

  // Throws Error(Parse) naming the path and, for syntax errors, the location.
  Json read_json_file(std::string const& path);
  void write_json_file(std::string const& path, Json const& j);

}  // namespace actalab
