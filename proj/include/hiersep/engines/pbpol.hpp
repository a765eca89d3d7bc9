#pragma once

// Level 3/2, the polynomial closure PBPol(C) of the Boolean level. The least
// PBPol(C)-complete subset S of M x R is obtained by saturation from the
// empty set: downset, product, (r, T) in I_C[eta_S] gives T ⊆ S, and for
// every idempotent (e, f) in ↓T also (e, f (1_R + r) f) in S.

#include <map>

#include "hiersep/basis/oracle.hpp"
#include "hiersep/engines/pol.hpp"
#include "hiersep/engines/saturate.hpp"
#include "hiersep/rating/aux_maps.hpp"

namespace hiersep {

  template <EngineSemiring SR>
  class MaximalIdempotents {
   public:
    explicit MaximalIdempotents(SR const& sr) : sr_(sr) {}

    std::vector<typename SR::element_type> const& below(typename SR::element_type const& t) {
      auto it = cache_.find(t);
      if (it == cache_.end()) {
        it = cache_.emplace(t, sr_.maximal_idempotents_below(t)).first;
      }
      return it->second;
    }

   private:
    SR const&                                                                    sr_;
    std::map<typename SR::element_type, std::vector<typename SR::element_type>> cache_;
  };

  // The pairs demanded by the C-operation and the PBPol(C)-operation for a
  // given auxiliary value. Only maximal idempotents below each maximal
  // element are used: f (1_R + r) f grows with f.
  template <EngineSemiring SR>
  std::vector<typename PointedDownSet<SR>::pair_type> pbpol_demands(
      FiniteMonoid const&                                monoid,
      SR const&                                          sr,
      typename PbpolAuxSemiring<SR>::element_type const& aux,
      MaximalIdempotents<SR>&                            idempotents) {
    std::vector<typename PointedDownSet<SR>::pair_type> out;
    for (auto const& [r, t] : aux) {
      auto const lift = sr.add(sr.one(), r);
      for (auto const& [e, q] : t.maximal()) {
        out.emplace_back(e, q);
        if (!monoid.is_idempotent(e)) {
          continue;
        }
        for (auto const& f : idempotents.below(q)) {
          out.emplace_back(e, sr.mul(sr.mul(f, lift), f));
        }
      }
    }
    return out;
  }

  template <EngineSemiring SR>
  PointedDownSet<SR> pbpol_iopti(MonoidMorphism const& alpha,
                                 RatingMap<SR> const&  rho,
                                 BasisOracle const&    oracle,
                                 Budget const&         budget = {},
                                 EngineStats*          stats  = nullptr) {
    if (alpha.num_letters() != rho.num_letters()) {
      throw InputError("morphism and rating map over different alphabets");
    }
    EngineStats            local;
    auto&                  st = stats ? *stats : local;
    SR const&              sr = rho.semiring();
    MaximalIdempotents<SR> idempotents(sr);
    PointedDownSet<SR>     s;
    for (;;) {
      if (++st.rounds > budget.max_iterations) {
        throw ResourceError("iteration", budget.max_iterations);
      }
      auto aux = iopti(oracle, aux_pbpol_map(alpha, rho, s));
      ++st.aux_iopti_calls;
      bool grew = false;
      for (auto const& [e, q] : pbpol_demands(alpha.monoid(), sr, aux, idempotents)) {
        grew = s.insert(sr, e, q) || grew;
      }
      if (!grew) {
        return s;
      }
      s = pointed_product_closure(alpha.monoid(), sr, std::move(s), {}, budget, st);
    }
  }

  // Least downset containing `iopti`, (1_M, 1_R) and every
  // (alpha(a), rho(a)), closed under product: the PBPol(C) pointed imprint.
  template <IdempotentSemiring SR>
  PointedDownSet<SR> pbpol_pointed_imprint(MonoidMorphism const& alpha,
                                           RatingMap<SR> const&  rho,
                                           PointedDownSet<SR>    iopti_set,
                                           Budget const&         budget = {},
                                           EngineStats*          stats  = nullptr) {
    EngineStats local;
    auto&       st = stats ? *stats : local;
    SR const&   sr = rho.semiring();
    std::vector<typename PointedDownSet<SR>::pair_type> seeds{{alpha.monoid().unit(), sr.one()}};
    for (Letter a = 0; a < rho.num_letters(); ++a) {
      seeds.emplace_back(alpha.letter_image(a), rho.letter_image(a));
    }
    return pointed_product_closure(alpha.monoid(), sr, std::move(iopti_set), seeds, budget, st);
  }

}  // namespace hiersep
