#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "actalab/act.hpp"
#include "actalab/monoid.hpp"
#include "actalab/tensor.hpp"

namespace actalab {

  enum class Condition { TF, P, E, EP, W, PWP, SF, PWF, WF, Flat };

  // Lower-case CLI spelling ("tf", "p", ..., "flat").
  char const* to_string(Condition c) noexcept;
  // Case-insensitive. Throws Error(UnknownCondition).
  Condition parse_condition(std::string const& name);

  enum class Verdict { Holds, Fails, PassesUpToBound };

  char const* to_string(Verdict v) noexcept;

  // Elements and points instantiating a condition's hypothesis. Layouts:
  //   TF  {s}       {a, b}        P   {s, s'}   {b, b'}
  //   E   {s, s'}   {b}           EP  {s, t}    {a}
  //   W   {s, t}    {a, a'}       PWP {t}       {a, a'}
  //   PWF, WF  {m, m'} {b, b'}: (m,b) ~ (m',b') in S⊗B but not in K⊗B
  //   Flat     skeleton sequence, {b, b'}
  struct Instance {
    std::vector<Elem>  elems;
    std::vector<Point> points;

    bool operator==(Instance const&) const = default;
  };

  // How a satisfied hypothesis is met: interpolating elements and a point.
  struct Interpolant {
    Instance          trigger;
    std::vector<Elem> elems;  // u (E, W) or u, v (P, EP, PWP)
    Point             point = 0;
  };

  struct ConditionReport {
    Condition                condition = Condition::TF;
    Verdict                  verdict   = Verdict::Holds;
    std::optional<Instance>  counterexample;
    std::optional<Condition> failed_part;  // SF: whichever of P, E failed
    std::optional<RightIdeal> ideal;       // PWF, WF
    std::optional<Skeleton>  skeleton;     // Flat
    std::size_t              bound = 0;    // Flat
    std::vector<Interpolant> interpolants;

    bool fails() const noexcept {
      return verdict == Verdict::Fails;
    }
  };

  // Per-monoid data for bounded flatness: for every skeleton up to the bound,
  // the subact [x]S ∪ [x']S of the standard tossing act.
  class FlatContext {
   public:
    struct Entry {
      Skeleton skeleton;
      Act      generated;  // [x]S ∪ [x']S
      Point    first;      // [x] in `generated`
      Point    last;       // [x'] in `generated`
    };

    FlatContext(MonoidPtr M, std::size_t m_max);

    FiniteMonoid const& monoid() const noexcept {
      return *_monoid;
    }
    std::size_t bound() const noexcept {
      return _bound;
    }
    std::vector<Entry> const& entries() const noexcept {
      return _entries;
    }

   private:
    MonoidPtr          _monoid;
    std::size_t        _bound;
    std::vector<Entry> _entries;
  };

  struct CheckOptions {
    bool        interpolants = false;
    std::size_t flat_bound   = 2;
    // Reused across calls when set; must match the act's monoid and bound.
    std::shared_ptr<FlatContext const> flat;
  };

  // B must be a left act; throws Error(SideMismatch) otherwise.
  ConditionReport check_condition(Act const&          B,
                                  Condition           cond,
                                  CheckOptions const& opts = {});

  ConditionReport check_pwf(Act const& B);
  ConditionReport check_wf(Act const& B);
  ConditionReport check_flat_bounded(Act const& B, std::size_t m_max);
  ConditionReport check_flat_bounded(Act const& B, FlatContext const& ctx);

  // Re-checks a failing report's counterexample from scratch.
  bool is_violation(Act const& B, ConditionReport const& report);

}  // namespace actalab
