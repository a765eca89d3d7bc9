#pragma once

#include <cstdint>
#include <vector>

#include "hiersep/lang/monoid.hpp"

namespace hiersep {

  // An explicitly tabulated finite idempotent semiring on 0..size()-1.
  // All axioms are checked on construction.
  class IdemSemiring {
   public:
    using element_type = std::uint32_t;

    IdemSemiring(std::vector<std::vector<element_type>> add_table,
                 std::vector<std::vector<element_type>> mul_table,
                 element_type                           zero,
                 element_type                           one);

    // The one-element semiring, where 0 = 1.
    static IdemSemiring trivial();

    std::size_t size() const noexcept {
      return n_;
    }
    element_type zero() const noexcept {
      return zero_;
    }
    element_type one() const noexcept {
      return one_;
    }
    element_type add(element_type x, element_type y) const {
      return add_[x * n_ + y];
    }
    element_type mul(element_type x, element_type y) const {
      return mul_[x * n_ + y];
    }
    bool leq(element_type x, element_type y) const {
      return order_.empty() ? add(x, y) == y : order_[x * n_ + y];
    }
    element_type top() const noexcept {
      return top_;
    }
    std::vector<element_type> maximal_idempotents_below(element_type t) const;

    static constexpr std::size_t order_matrix_limit = 4096;

   private:
    std::size_t               n_;
    std::vector<element_type> add_;
    std::vector<element_type> mul_;
    std::vector<bool>         order_;
    element_type              zero_;
    element_type              one_;
    element_type              top_;
  };

}  // namespace hiersep
