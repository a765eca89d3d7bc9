#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hiersep/budget.hpp"
#include "hiersep/elem_set.hpp"
#include "hiersep/lang/alphabet.hpp"
#include "hiersep/lang/dfa.hpp"

namespace hiersep {

  using MonoidElem = std::uint32_t;

  // A finite monoid on 0..size()-1. Small monoids keep the full Cayley table;
  // large transition monoids keep only the right Cayley graph over their
  // generators and multiply by folding a representative word.
  class FiniteMonoid {
   public:
    // Validates associativity and the unit laws (InputError otherwise).
    static FiniteMonoid from_table(std::vector<std::vector<MonoidElem>> table,
                                   MonoidElem                           unit);

    // Cyclic group Z/nZ with unit 0.
    static FiniteMonoid cyclic_group(std::size_t n);

    // The monoid generated by `generators` under `right` (right Cayley graph
    // `right[s][g]` = s * generator g) with element 0 as unit and a
    // representative word over the generators for each element.
    static FiniteMonoid from_cayley(std::vector<std::vector<MonoidElem>> right,
                                    std::vector<Word> representatives);

    std::size_t size() const noexcept {
      return size_;
    }
    MonoidElem unit() const noexcept {
      return unit_;
    }
    MonoidElem mul(MonoidElem s, MonoidElem t) const;

    bool is_idempotent(MonoidElem s) const {
      return mul(s, s) == s;
    }

    static constexpr std::size_t full_table_limit = 2048;

   private:
    FiniteMonoid() = default;

    std::size_t                          size_ = 0;
    MonoidElem                           unit_ = 0;
    std::vector<MonoidElem>              table_;  // size_*size_ when present
    std::vector<std::vector<MonoidElem>> right_;
    std::vector<Word>                    reps_;
  };

  // A morphism alpha: A* -> M given by letter images, together with the
  // accepting sets F_0..F_n of the languages it recognizes.
  class MonoidMorphism {
   public:
    MonoidMorphism(std::shared_ptr<FiniteMonoid const> monoid,
                   std::vector<MonoidElem>             letter_image,
                   std::vector<ElemSet>                accept_sets = {});

    FiniteMonoid const& monoid() const noexcept {
      return *monoid_;
    }
    std::shared_ptr<FiniteMonoid const> const& monoid_ptr() const noexcept {
      return monoid_;
    }
    std::size_t num_letters() const noexcept {
      return letter_image_.size();
    }
    MonoidElem letter_image(Letter a) const {
      return letter_image_.at(a);
    }
    std::vector<MonoidElem> const& letter_images() const noexcept {
      return letter_image_;
    }
    std::vector<ElemSet> const& accept_sets() const noexcept {
      return accept_sets_;
    }

    MonoidElem eval(Word const& w) const;

    // Shortlex-least word mapped to s, if s lies in the image of A*.
    std::optional<Word> representative(MonoidElem s) const;

   private:
    std::shared_ptr<FiniteMonoid const> monoid_;
    std::vector<MonoidElem>             letter_image_;
    std::vector<ElemSet>                accept_sets_;
    std::vector<std::optional<Word>>    reps_;
  };

  // Transition monoid of the (reachable, jointly minimized) product of the
  // given DFAs. accept_sets()[i] holds the elements sending the initial state
  // into an accepting state of dfas[i]. Element 0 is the identity and elements
  // are numbered in shortlex order of their least representative.
  MonoidMorphism transition_monoid(std::span<Dfa const> dfas,
                                   Budget const&        budget = {});

}  // namespace hiersep
