#pragma once

// The pointed imprint of the polynomial closure Pol(C): the least subset of
// M x R that contains (1_M, 1_R), every (alpha(a), rho(a)) and
// (1_M, I_C[rho]), and is closed under downset and product.

#include "hiersep/basis/oracle.hpp"
#include "hiersep/engines/saturate.hpp"
#include "hiersep/lang/monoid.hpp"
#include "hiersep/rating/rating_map.hpp"
#include "hiersep/semiring/pointed_down_set.hpp"

namespace hiersep {

  // Least downset of M x R containing `seed` and the pairs in `extra`, closed
  // under the componentwise product.
  template <IdempotentSemiring SR>
  PointedDownSet<SR> pointed_product_closure(
      FiniteMonoid const&                                  monoid,
      SR const&                                            sr,
      PointedDownSet<SR>                                   seed,
      std::vector<typename PointedDownSet<SR>::pair_type> const& extra,
      Budget const&                                        budget,
      EngineStats&                                         stats) {
    using P = typename PointedDownSet<SR>::pair_type;
    for (auto const& [s, r] : extra) {
      seed.insert(sr, s, r);
    }
    PairMonoid<SR> pm(monoid, sr);
    stats.observe(seed.size(), budget);
    detail::saturate_products(
        seed, seed.maximal(), [&](P const& x) { return seed.insert(sr, x.first, x.second); },
        [&](P const& x, P const& y) { return pm.mul(x, y); }, budget, stats);
    return seed;
  }

  template <IdempotentSemiring SR>
  PointedDownSet<SR> pol_imprint(MonoidMorphism const& alpha,
                                 RatingMap<SR> const&  rho,
                                 BasisOracle const&    oracle,
                                 Budget const&         budget = {},
                                 EngineStats*          stats  = nullptr) {
    if (alpha.num_letters() != rho.num_letters()) {
      throw InputError("morphism and rating map over different alphabets");
    }
    EngineStats local;
    auto&       st = stats ? *stats : local;
    SR const&   sr = rho.semiring();
    std::vector<typename PointedDownSet<SR>::pair_type> seeds{{alpha.monoid().unit(), sr.one()}};
    for (Letter a = 0; a < rho.num_letters(); ++a) {
      seeds.emplace_back(alpha.letter_image(a), rho.letter_image(a));
    }
    seeds.emplace_back(alpha.monoid().unit(), iopti(oracle, rho));
    ++st.rounds;
    return pointed_product_closure(alpha.monoid(), sr, PointedDownSet<SR>{}, seeds, budget, st);
  }

}  // namespace hiersep
