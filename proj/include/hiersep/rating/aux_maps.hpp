#pragma once

// The auxiliary rating maps driving the level 1 and level 3/2 engines.
//
// For S a downset of R, eta_S maps a letter a to {(rho(a), S rho(a) S)} in
// 2^(R x 2^R). For S a downset of M x R, eta_{alpha,S} maps a to
// {(rho(a), S (alpha(a), rho(a)) S)} in 2^(R x 2^(M x R)).
//
// The engines only ever read the second coordinates through their downward
// closure, and taking the closure commutes with products, so second
// coordinates are stored as antichains. Equality of elements is then equality
// up to that closure, which is exactly what the omega-power computation and
// the completeness conditions observe.

#include <algorithm>
#include <iterator>
#include <memory>
#include <utility>
#include <vector>

#include "hiersep/lang/monoid.hpp"
#include "hiersep/rating/rating_map.hpp"
#include "hiersep/semiring/down_set.hpp"
#include "hiersep/semiring/pointed_down_set.hpp"

namespace hiersep {

  namespace detail {

    template <typename V>
    V sorted_unique(V v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    }

    template <typename V>
    V set_union(V const& x, V const& y) {
      V out;
      out.reserve(x.size() + y.size());
      std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
      return out;
    }

  }  // namespace detail

  template <IdempotentSemiring SR>
  class BpolAuxSemiring {
   public:
    using base_element = typename SR::element_type;
    using pair_type    = std::pair<base_element, DownSet<SR>>;
    using element_type = std::vector<pair_type>;

    explicit BpolAuxSemiring(std::shared_ptr<SR const> base) : base_(std::move(base)) {}

    SR const& base() const noexcept {
      return *base_;
    }

    element_type zero() const {
      return {};
    }
    element_type one() const {
      return {pair_type{base_->one(), DownSet<SR>::of(*base_, {base_->one()})}};
    }
    element_type add(element_type const& x, element_type const& y) const {
      return detail::set_union(x, y);
    }
    element_type mul(element_type const& x, element_type const& y) const {
      element_type out;
      out.reserve(x.size() * y.size());
      for (auto const& [r, u] : x) {
        for (auto const& [q, v] : y) {
          out.emplace_back(base_->mul(r, q), DownSet<SR>::product(*base_, u, v));
        }
      }
      return detail::sorted_unique(std::move(out));
    }
    bool leq(element_type const& x, element_type const& y) const {
      return std::includes(y.begin(), y.end(), x.begin(), x.end());
    }

   private:
    std::shared_ptr<SR const> base_;
  };

  template <IdempotentSemiring SR>
  RatingMap<BpolAuxSemiring<SR>> aux_bpol_map(RatingMap<SR> const& rho, DownSet<SR> const& s) {
    auto      aux = std::make_shared<BpolAuxSemiring<SR> const>(rho.semiring_ptr());
    SR const& sr  = rho.semiring();
    std::vector<typename BpolAuxSemiring<SR>::element_type> images;
    for (auto const& ra : rho.letter_images()) {
      auto middle = DownSet<SR>::product(sr, s, DownSet<SR>::of(sr, {ra}));
      images.push_back({{ra, DownSet<SR>::product(sr, middle, s)}});
    }
    return RatingMap<BpolAuxSemiring<SR>>(std::move(aux), std::move(images));
  }

  template <IdempotentSemiring SR>
  class PbpolAuxSemiring {
   public:
    using base_element = typename SR::element_type;
    using pair_type    = std::pair<base_element, PointedDownSet<SR>>;
    using element_type = std::vector<pair_type>;

    PbpolAuxSemiring(std::shared_ptr<FiniteMonoid const> monoid, std::shared_ptr<SR const> base)
        : monoid_(std::move(monoid)), base_(std::move(base)) {}

    SR const& base() const noexcept {
      return *base_;
    }
    FiniteMonoid const& monoid() const noexcept {
      return *monoid_;
    }

    element_type zero() const {
      return {};
    }
    element_type one() const {
      return {pair_type{base_->one(),
                        PointedDownSet<SR>::of(*base_, {{monoid_->unit(), base_->one()}})}};
    }
    element_type add(element_type const& x, element_type const& y) const {
      return detail::set_union(x, y);
    }
    element_type mul(element_type const& x, element_type const& y) const {
      element_type out;
      out.reserve(x.size() * y.size());
      for (auto const& [r, u] : x) {
        for (auto const& [q, v] : y) {
          out.emplace_back(base_->mul(r, q),
                           PointedDownSet<SR>::product(*base_, *monoid_, u, v));
        }
      }
      return detail::sorted_unique(std::move(out));
    }
    bool leq(element_type const& x, element_type const& y) const {
      return std::includes(y.begin(), y.end(), x.begin(), x.end());
    }

   private:
    std::shared_ptr<FiniteMonoid const> monoid_;
    std::shared_ptr<SR const>           base_;
  };

  template <IdempotentSemiring SR>
  RatingMap<PbpolAuxSemiring<SR>> aux_pbpol_map(MonoidMorphism const&     alpha,
                                                RatingMap<SR> const&      rho,
                                                PointedDownSet<SR> const& s) {
    if (alpha.num_letters() != rho.num_letters()) {
      throw InputError("morphism and rating map over different alphabets");
    }
    auto aux = std::make_shared<PbpolAuxSemiring<SR> const>(alpha.monoid_ptr(), rho.semiring_ptr());
    SR const&           sr = rho.semiring();
    FiniteMonoid const& m  = alpha.monoid();
    std::vector<typename PbpolAuxSemiring<SR>::element_type> images;
    for (Letter a = 0; a < rho.num_letters(); ++a) {
      auto const& ra     = rho.letter_image(a);
      auto        letter = PointedDownSet<SR>::of(sr, {{alpha.letter_image(a), ra}});
      auto middle = PointedDownSet<SR>::product(sr, m, PointedDownSet<SR>::product(sr, m, s, letter), s);
      images.push_back({{ra, std::move(middle)}});
    }
    return RatingMap<PbpolAuxSemiring<SR>>(std::move(aux), std::move(images));
  }

}  // namespace hiersep
