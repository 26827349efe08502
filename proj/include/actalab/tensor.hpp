#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "actalab/act.hpp"
#include "actalab/monoid.hpp"

namespace actalab {

  // A skeleton (s_1, t_1, ..., s_m, t_m), m >= 1.
  class Skeleton {
   public:
    // Throws Error(BadParams) unless seq has positive even length.
    explicit Skeleton(std::vector<Elem> seq);

    std::size_t length() const noexcept {
      return _seq.size() / 2;
    }
    // 0-based: s(0) is s_1.
    Elem s(std::size_t i) const {
      return _seq[2 * i];
    }
    Elem t(std::size_t i) const {
      return _seq[2 * i + 1];
    }
    std::vector<Elem> const& sequence() const noexcept {
      return _seq;
    }

    bool operator==(Skeleton const&) const = default;

   private:
    std::vector<Elem> _seq;
  };

  std::string to_string(FiniteMonoid const& M, Skeleton const& sk);

  // Every skeleton of the given length, in lexicographic order.
  std::vector<Skeleton> all_skeletons(FiniteMonoid const& M, std::size_t length);

  // A ⊗ B for a right act A and a left act B over the same monoid.
  class TensorProduct {
   public:
    TensorProduct(Act const& A, Act const& B);

    Act const& right() const noexcept {
      return _A;
    }
    Act const& left() const noexcept {
      return _B;
    }
    std::size_t size() const noexcept {
      return _classes;
    }
    std::size_t class_of(Point a, Point b) const;
    std::vector<std::size_t> const& classes() const noexcept {
      return _class_of;
    }

   private:
    Act                      _A;
    Act                      _B;
    std::vector<std::size_t> _class_of;  // index a * |B| + b
    std::size_t              _classes = 0;
  };

  // Throws Error(SideMismatch) or Error(MonoidMismatch).
  TensorProduct tensor_product(Act const& A, Act const& B);

  // Throws Error(ElementNotFound) for points outside the factors.
  bool tensor_equal(TensorProduct const& T, Point a, Point b, Point a2, Point b2);

  // A tossing of length m connecting (a, b) to (a_end, b_end):
  //
  //                                   b = s_1 b_1
  //   a     s_1 = a_2   t_1     t_1 b_1 = s_2 b_2
  //   ...
  //   a_m   s_m = a_end t_m     t_m b_m = b_end
  struct Tossing {
    Skeleton           skeleton;
    Point              a     = 0;
    Point              b     = 0;
    Point              a_end = 0;
    Point              b_end = 0;
    std::vector<Point> a_mid;  // a_2, ..., a_m
    std::vector<Point> b_mid;  // b_1, ..., b_m

    bool operator==(Tossing const&) const = default;
  };

  bool validate_tossing(Act const& A, Act const& B, Tossing const& tossing);

  // Shortest path of elementary steps in A x B, normalised into the
  // alternating two-column form by inserting identity steps. nullopt if the
  // pairs are not ⊗-equal.
  std::optional<Tossing>
  find_tossing(Act const& A, Act const& B, Point a, Point b, Point a2, Point b2);

  // Witnesses x_2, ..., x_m of  x s_1 = x_2 t_1, ..., x_m s_m = x' t_m  in a
  // right act, or nullopt.
  std::optional<std::vector<Point>>
  eval_delta(Act const& A, Skeleton const& sk, Point a, Point a2);

  // Witnesses b_1, ..., b_m of  b = s_1 b_1, t_i b_i = s_{i+1} b_{i+1},
  // t_m b_m = b'  in a left act, or nullopt.
  std::optional<std::vector<Point>>
  eval_gamma(Act const& B, Skeleton const& sk, Point b, Point b2);

  // F^{m+1}/rho for a skeleton of length m, with rho generated by
  // (x s_1, x_2 t_1), ..., (x_m s_m, x' t_m).
  struct StandardTossingAct {
    Skeleton           skeleton;
    Act                free;      // F^{m+1}
    Quotient           quotient;  // F^{m+1}/rho and the projection
    std::vector<Point> handles;   // [x], [x_2], ..., [x_m], [x'] in quotient

    Act const& act() const noexcept {
      return quotient.act;
    }
    Point first() const {
      return handles.front();
    }
    Point last() const {
      return handles.back();
    }
  };

  StandardTossingAct standard_tossing_act(MonoidPtr const& M, Skeleton const& sk);

  // The morphism F^{m+1}/rho -> target sending [x_i] to chain[i], where
  // chain = (a, a_2, ..., a_m, a') satisfies the δ equations in `target`.
  // Throws Error(WitnessesInvalid) otherwise.
  ActMorphism induced_morphism(StandardTossingAct const& standard,
                               Act const&                target,
                               std::vector<Point> const& chain);

  ActMorphism induced_morphism(MonoidPtr const&          M,
                               Skeleton const&           sk,
                               Act const&                target,
                               std::vector<Point> const& chain);

  // Two-column text rendering of a tossing.
  std::string format_tossing(Act const& A, Act const& B, Tossing const& t);

}  // namespace actalab
