#pragma once

#include <memory>
#include <vector>

#include "hiersep/elem_set.hpp"
#include "hiersep/lang/monoid.hpp"
#include "hiersep/semiring/table_semiring.hpp"

namespace hiersep {

  // The semiring 2^M of subsets of a finite monoid: union, elementwise
  // product, zero = {}, one = {1_M}. Elements are handled as bitsets and the
  // carrier is never enumerated.
  class PowerSemiring {
   public:
    using element_type = ElemSet;

    explicit PowerSemiring(std::shared_ptr<FiniteMonoid const> monoid);

    FiniteMonoid const& monoid() const noexcept {
      return *monoid_;
    }
    std::shared_ptr<FiniteMonoid const> const& monoid_ptr() const noexcept {
      return monoid_;
    }

    ElemSet zero() const {
      return ElemSet(monoid_->size());
    }
    ElemSet one() const {
      return singleton(monoid_->unit());
    }
    ElemSet top() const {
      return ElemSet::full(monoid_->size());
    }
    ElemSet singleton(MonoidElem s) const {
      ElemSet x(monoid_->size());
      x.set(s);
      return x;
    }
    ElemSet add(ElemSet const& x, ElemSet const& y) const {
      return x | y;
    }
    ElemSet meet(ElemSet const& x, ElemSet const& y) const {
      return x & y;
    }
    ElemSet mul(ElemSet const& x, ElemSet const& y) const;
    bool    leq(ElemSet const& x, ElemSet const& y) const {
      return x.subset_of(y);
    }

    // Maximal X <= t with X * X = X.
    std::vector<ElemSet> maximal_idempotents_below(ElemSet const& t) const;

    // Tabulates the full semiring; elements are indexed by their bit pattern.
    // Throws ResourceError when |M| exceeds max_monoid_bits.
    IdemSemiring materialize(std::size_t max_monoid_bits = 6) const;
    ElemSet      from_index(std::uint32_t i) const;
    std::uint32_t to_index(ElemSet const& x) const;

   private:
    std::shared_ptr<FiniteMonoid const> monoid_;
  };

}  // namespace hiersep
