#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "actalab/monoid.hpp"

namespace actalab {

  using Point = std::uint32_t;

  enum class Side { Left, Right };

  char const* to_string(Side side) noexcept;

  using MonoidPtr = std::shared_ptr<FiniteMonoid const>;

  // Non-owning view of an action table: cell [s * points + a] holds s·a (left)
  // or a·s (right). No law is assumed to hold.
  struct ActionView {
    std::size_t             points = 0;
    std::span<Point const> cells;

    Point operator()(Elem s, Point a) const {
      return cells[s * points + a];
    }
  };

  // Describes the first violated act law in a raw table, or nullopt when the
  // table is a valid act. Totality and range are checked first.
  std::optional<std::string> act_law_violation(FiniteMonoid const& M,
                                               Side                side,
                                               ActionView          table);

  // A finite non-empty left or right S-act. Immutable once validated.
  class Act {
   public:
    // action is row-major: action[s * size + a].
    static Act validate(MonoidPtr                M,
                        Side                     side,
                        std::vector<std::string> labels,
                        std::vector<Point>       action);

    // action maps each monoid label to the images of the carrier, in carrier
    // order.
    static Act
    validate(MonoidPtr                                              M,
             Side                                                   side,
             std::vector<std::string>                               labels,
             std::map<std::string, std::vector<std::string>> const& action);

    FiniteMonoid const& monoid() const noexcept {
      return *_monoid;
    }
    MonoidPtr const& monoid_ptr() const noexcept {
      return _monoid;
    }
    Side side() const noexcept {
      return _side;
    }
    std::size_t size() const noexcept {
      return _labels.size();
    }
    std::string const& label(Point a) const {
      return _labels.at(a);
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::optional<Point> find(std::string const& label) const;
    Point                index_of(std::string const& label) const;

    // s·a for a left act, a·s for a right act.
    Point act(Elem s, Point a) const noexcept {
      return _action[s * _labels.size() + a];
    }

    ActionView view() const noexcept {
      return ActionView{_labels.size(), _action};
    }

    std::vector<Point> const& table() const noexcept {
      return _action;
    }

    bool operator==(Act const& other) const;

   private:
    Act() = default;

    MonoidPtr                _monoid;
    Side                     _side = Side::Left;
    std::vector<std::string> _labels;
    std::vector<Point>       _action;
  };

  // Partition of an act's carrier, blocks numbered by first occurrence.
  struct ActCongruence {
    std::vector<std::size_t> block_of;
    std::size_t              blocks = 0;

    bool related(Point a, Point b) const {
      return block_of[a] == block_of[b];
    }
    bool is_compatible(Act const& act) const;
  };

  struct ActMorphism {
    Act                source;
    Act                target;
    std::vector<Point> map;

    bool is_morphism() const;
  };

  struct Quotient {
    Act         act;
    ActMorphism projection;
  };

  struct Subact {
    Act                act;
    std::vector<Point> embedding;  // carrier of `act` -> ambient carrier
  };

  // S acting on itself by multiplication; carrier labels are element labels.
  Act regular_act(MonoidPtr const& M, Side side);

  // k disjoint copies of S, carrier (i, s) labelled "x<i>#<s>" at index
  // (i - 1) * |S| + s, action (i, s)·t = (i, st).
  Act   free_right_act(MonoidPtr const& M, std::size_t k);
  Point free_point(FiniteMonoid const& M, std::size_t copy, Elem s);

  ActCongruence
  congruence_closure(Act const&                                 act,
                     std::vector<std::pair<Point, Point>> const& seeds);

  Quotient quotient_act(Act const& act, ActCongruence const& congruence);

  // Smallest action-closed superset, sorted ascending.
  std::vector<Point> subact_generated(Act const&                act,
                                      std::vector<Point> const& subset);

  // The subact on an action-closed subset, carrier in ascending order.
  Subact restrict_to(Act const& act, std::vector<Point> const& closed_subset);

  struct EnumerateOptions {
    // Emit only the lexicographically least table of each isomorphism class.
    bool canonical_only = false;
  };

  // Visits every valid action table on carriers of size 1..max_size in a
  // deterministic order. Carrier labels are "a", "b", ... The visitor returns
  // false to stop early.
  void for_each_act(MonoidPtr const&                M,
                    Side                            side,
                    std::size_t                     max_size,
                    std::function<bool(Act const&)> visit,
                    EnumerateOptions                opts = {});

  std::vector<Act> enumerate_acts(MonoidPtr const& M,
                                  Side             side,
                                  std::size_t      max_size,
                                  EnumerateOptions opts = {});

}  // namespace actalab
