#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "actalab/act.hpp"
#include "actalab/conditions.hpp"
#include "actalab/monoid.hpp"
#include "actalab/tensor.hpp"

namespace actalab {

  // Finitely many skeletons replacing every tossing of the trigger shape
  // between (s, a) and (t, b) in S ⊗ B, for B in the condition's class.
  struct ReplacementSet {
    Condition             condition = Condition::P;
    Elem                  s         = 0;
    Elem                  t         = 0;
    Skeleton              trigger;
    std::vector<Skeleton> skeletons;
    // The generating data each skeleton came from, parallel to skeletons:
    // (u, v) for P, EP, PWP; (u, u) for E and W.
    std::vector<ElemPair> generators;
  };

  // cond ∈ {P, E, EP, W, PWP}. For PWP, s must equal t. Throws
  // Error(BadParams) otherwise.
  ReplacementSet replacement_skeletons(FiniteMonoid const& M,
                                       Elem                s,
                                       Elem                t,
                                       Condition           cond);

  enum class ReplacementStatus { Verified, Inapplicable, Violation };

  char const* to_string(ReplacementStatus s) noexcept;

  struct Replacement {
    Instance    trigger;   // {s, t} and {a, b}
    std::size_t skeleton;  // index into the set's skeletons
    Tossing     tossing;   // over S (as a right act) and B
  };

  struct ReplacementReport {
    Condition                condition = Condition::P;
    ReplacementStatus        status    = ReplacementStatus::Verified;
    std::size_t              triggers  = 0;
    std::vector<Replacement> replacements;  // one per trigger instance
    std::optional<Instance>  violation;     // first unreplaceable trigger
  };

  // Checks every trigger instance for the pair (s, t) in a left act B:
  // sa = tb (P, W), sa = ta (E, EP), ta = tb (PWP, needs s = t).
  ReplacementReport verify_replacement(Act const& B,
                                       Elem       s,
                                       Elem       t,
                                       Condition  cond);

  // As above, over every admissible (s, t) pair.
  ReplacementReport verify_replacement(Act const& B, Condition cond);

}  // namespace actalab
