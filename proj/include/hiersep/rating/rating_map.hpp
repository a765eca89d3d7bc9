#pragma once

// Nice multiplicative rating maps, represented by their letter images:
// rho(w) is the product of the letter images (rho(e) = 1) and rho(K) is the
// sum of rho(w) over w in K.

#include <map>
#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "hiersep/budget.hpp"
#include "hiersep/error.hpp"
#include "hiersep/lang/dfa.hpp"
#include "hiersep/lang/monoid.hpp"
#include "hiersep/semiring/concepts.hpp"
#include "hiersep/semiring/power_semiring.hpp"

namespace hiersep {

  template <IdempotentSemiring SR>
  class RatingMap {
   public:
    using element_type = typename SR::element_type;

    RatingMap(std::shared_ptr<SR const> semiring, std::vector<element_type> letter_image)
        : semiring_(std::move(semiring)), letter_image_(std::move(letter_image)) {
      if (!semiring_ || letter_image_.empty()) {
        throw InputError("rating map needs a semiring and at least one letter");
      }
    }

    SR const& semiring() const noexcept {
      return *semiring_;
    }
    std::shared_ptr<SR const> const& semiring_ptr() const noexcept {
      return semiring_;
    }
    std::size_t num_letters() const noexcept {
      return letter_image_.size();
    }
    element_type const& letter_image(Letter a) const {
      return letter_image_.at(a);
    }
    std::vector<element_type> const& letter_images() const noexcept {
      return letter_image_;
    }

    // rho(A), the sum of the letter images.
    element_type alphabet_image() const {
      auto acc = semiring_->zero();
      for (auto const& x : letter_image_) {
        acc = semiring_->add(acc, x);
      }
      return acc;
    }

   private:
    std::shared_ptr<SR const> semiring_;
    std::vector<element_type> letter_image_;
  };

  template <IdempotentSemiring SR>
  typename SR::element_type eval_word(RatingMap<SR> const& rho, Word const& w) {
    auto r = rho.semiring().one();
    for (auto a : w) {
      r = rho.semiring().mul(r, rho.letter_image(a));
    }
    return r;
  }

  // Sum of rho(w) over the language of K, by saturating the reachable
  // (state, rho-value) pairs of the product with the semiring.
  template <IdempotentSemiring SR>
  typename SR::element_type eval_regular(RatingMap<SR> const& rho,
                                         Dfa const&           k,
                                         Budget const&        budget = {}) {
    if (k.num_letters() != rho.num_letters()) {
      throw InputError("rating map and automaton over different alphabets");
    }
    SR const&                                         sr = rho.semiring();
    std::set<std::pair<State, typename SR::element_type>> seen;
    std::vector<std::pair<State, typename SR::element_type>> stack;
    stack.emplace_back(k.initial(), sr.one());
    seen.insert(stack.back());
    auto total = sr.zero();
    while (!stack.empty()) {
      auto [q, r] = stack.back();
      stack.pop_back();
      if (k.is_accepting(q)) {
        total = sr.add(total, r);
      }
      for (Letter a = 0; a < k.num_letters(); ++a) {
        std::pair<State, typename SR::element_type> next{k.next(q, a),
                                                         sr.mul(r, rho.letter_image(a))};
        if (seen.insert(next).second) {
          if (seen.size() > budget.max_antichain) {
            throw ResourceError("rating evaluation", budget.max_antichain);
          }
          stack.push_back(std::move(next));
        }
      }
    }
    return total;
  }

  // The rating map into 2^M with a -> {alpha(a)}; rho(K) = alpha(K), so
  // rho(K) meets F_i iff K meets L_i.
  inline RatingMap<PowerSemiring> canonical_covering_map(MonoidMorphism const& alpha) {
    auto                 sr = std::make_shared<PowerSemiring const>(alpha.monoid_ptr());
    std::vector<ElemSet> images;
    for (auto s : alpha.letter_images()) {
      images.push_back(sr->singleton(s));
    }
    return RatingMap<PowerSemiring>(std::move(sr), std::move(images));
  }

}  // namespace hiersep
