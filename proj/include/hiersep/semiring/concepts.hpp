#pragma once

#include <concepts>

namespace hiersep {

  // A finite idempotent semiring (R, +, *, 0, 1) with the canonical order
  // r <= s iff r + s = s. Elements are values with a total order used only
  // for canonical storage.
  template <typename S>
  concept IdempotentSemiring = requires(S const& s, typename S::element_type const& x) {
    typename S::element_type;
    { s.zero() } -> std::same_as<typename S::element_type>;
    { s.one() } -> std::same_as<typename S::element_type>;
    { s.add(x, x) } -> std::same_as<typename S::element_type>;
    { s.mul(x, x) } -> std::same_as<typename S::element_type>;
    { s.leq(x, x) } -> std::convertible_to<bool>;
  } && std::totally_ordered<typename S::element_type>;

  // Base semirings the fixpoint engines run over: the order has a top and the
  // maximal multiplicative idempotents below an element can be listed.
  template <typename S>
  concept EngineSemiring = IdempotentSemiring<S>
      && requires(S const& s, typename S::element_type const& x) {
           { s.top() } -> std::same_as<typename S::element_type>;
           { s.maximal_idempotents_below(x) };
         };

  // Semirings whose order is a lattice with a computable meet.
  template <typename S>
  concept MeetSemiring = IdempotentSemiring<S>
      && requires(S const& s, typename S::element_type const& x) {
           { s.top() } -> std::same_as<typename S::element_type>;
           { s.meet(x, x) } -> std::same_as<typename S::element_type>;
         };

}  // namespace hiersep
