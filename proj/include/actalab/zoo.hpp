#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "actalab/monoid.hpp"

namespace actalab {

  enum class Family {
    CyclicGroup,          // Z_n: "1", "g", "g2", ...
    InverseOmegaChain,    // e_0..e_n, e_i e_j = e_max(i,j)
    NullAdjoined,         // T ∪ {e}, |T| = n with zero "0", T·T = 0
    SemilatticeOfGroups,  // Z_p ("e", "a", ...) above Z_q ("f", "b", ...)
    NatMinAdjoined,       // {1..n} under min, plus identity "e"
  };

  char const* to_string(Family f) noexcept;
  // Throws Error(BadParams) for unknown names.
  Family parse_family(std::string const& name);

  // Parameter count: 2 for SemilatticeOfGroups, else 1. Throws
  // Error(BadParams) for inadmissible parameters.
  FiniteMonoid build(Family family, std::vector<std::size_t> const& params);

  // "cyclic_group(3)", "semilattice_of_groups(2,2)", "trivial", "z2", ...
  // nullopt if the text names no family.
  std::optional<FiniteMonoid> build_from_expression(std::string const& text);

  // The pair (s, t) tabulated by family_report for the given monoid.
  std::pair<Elem, Elem> designated_pair(Family family, FiniteMonoid const& M);

  enum class Trend { Constant, StrictlyIncreasing, NonDecreasing,
                     StrictlyDecreasing, NonIncreasing, Mixed };

  char const* to_string(Trend t) noexcept;
  Trend       trend_of(std::vector<std::size_t> const& values);

  struct FamilyRow {
    std::size_t n = 0;
    std::string monoid;
    std::string s;
    std::string t;
    std::size_t R_generators    = 0;  // minimum generating set of R(s,t)
    std::size_t r_generators    = 0;  // of r(s,t)
    std::size_t meet_generators = 0;  // of sS ∩ tS
  };

  struct FamilyReport {
    Family                 family = Family::CyclicGroup;
    std::vector<FamilyRow> rows;
    Trend                  R_trend    = Trend::Constant;
    Trend                  r_trend    = Trend::Constant;
    Trend                  meet_trend = Trend::Constant;
  };

  // n ranges over [lo, hi]; SemilatticeOfGroups uses (Z_n, Z_n). An explicit
  // (s, t) by label overrides the designated pair.
  FamilyReport family_report(Family                     family,
                             std::size_t                lo,
                             std::size_t                hi,
                             std::optional<std::string> s = std::nullopt,
                             std::optional<std::string> t = std::nullopt);

  // Families left out of the zoo, with the reason.
  std::vector<std::pair<std::string, std::string>> excluded_families();

}  // namespace actalab
