#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace actalab {

  using Elem     = std::uint32_t;
  using ElemPair = std::pair<Elem, Elem>;

  // A finite monoid given by its multiplication table. Elements are indices
  // 0..size()-1 internally and labels externally. Instances are immutable and
  // can only be obtained through validation.
  class FiniteMonoid {
   public:
    // Validates a labelled table. table[i][j] is the label of e_i * e_j.
    //
    // Checks run in this order: distinct labels, table totality, associativity
    // (first failing triple in lexicographic order), two-sided identity.
    static FiniteMonoid validate(std::string                           name,
                                 std::vector<std::string>              labels,
                                 std::vector<std::vector<std::string>> table,
                                 std::string const& identity_label);

    // Same checks on an index table in row-major order.
    static FiniteMonoid validate(std::string              name,
                                 std::vector<std::string> labels,
                                 std::vector<Elem>        table,
                                 Elem                     identity);

    std::string const& name() const noexcept {
      return _name;
    }

    std::size_t size() const noexcept {
      return _labels.size();
    }

    Elem identity() const noexcept {
      return _identity;
    }

    Elem mul(Elem i, Elem j) const noexcept {
      return _table[i * _labels.size() + j];
    }

    std::string const& label(Elem i) const {
      return _labels.at(i);
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    std::optional<Elem> find(std::string const& label) const;

    // Throws Error(ElementNotFound).
    Elem index_of(std::string const& label) const;

    bool operator==(FiniteMonoid const&) const = default;

   private:
    FiniteMonoid() = default;

    std::string              _name;
    std::vector<std::string> _labels;
    std::vector<Elem>        _table;
    Elem                     _identity = 0;
  };

  // A right ideal of S, members sorted ascending. May be empty.
  struct RightIdeal {
    std::vector<Elem> members;

    bool empty() const noexcept {
      return members.empty();
    }
    std::size_t size() const noexcept {
      return members.size();
    }
    bool contains(Elem x) const;
    bool operator==(RightIdeal const&) const = default;
  };

  // A subact of the right S-act S x S (componentwise action), pairs sorted
  // lexicographically. May be empty.
  struct PairSubact {
    std::vector<ElemPair> pairs;

    bool empty() const noexcept {
      return pairs.empty();
    }
    std::size_t size() const noexcept {
      return pairs.size();
    }
    bool contains(ElemPair p) const;
    bool operator==(PairSubact const&) const = default;
  };

  // aS
  RightIdeal principal_right_ideal(FiniteMonoid const& M, Elem a);

  // sS ∩ tS
  RightIdeal ideal_intersection(FiniteMonoid const& M, Elem s, Elem t);

  // r(s,t) = {u : su = tu}
  RightIdeal r_set(FiniteMonoid const& M, Elem s, Elem t);

  // R(s,t) = {(u,v) : su = tv}
  PairSubact R_set(FiniteMonoid const& M, Elem s, Elem t);

  // Closure of a set of generators under the right action.
  RightIdeal generated_ideal(FiniteMonoid const& M, std::vector<Elem> const& gens);
  PairSubact generated_pairs(FiniteMonoid const&           M,
                             std::vector<ElemPair> const& gens);

  // A minimum-cardinality generating set: one representative (lowest index)
  // of every maximal class of the generation preorder x <= y iff x ∈ yS.
  // An empty input yields an empty set.
  std::vector<Elem>     min_generating_set(FiniteMonoid const& M,
                                           RightIdeal const&   ideal);
  std::vector<ElemPair> min_generating_set(FiniteMonoid const& M,
                                           PairSubact const&   subact);

  bool is_left_cancellable(FiniteMonoid const& M, Elem s);

  // All non-empty right ideals of S, i.e. all unions of principal right
  // ideals, without repetition. Ordered by (size, members).
  std::vector<RightIdeal> all_right_ideals(FiniteMonoid const& M);

}  // namespace actalab
