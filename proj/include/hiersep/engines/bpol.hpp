#pragma once

// Level 1, the Boolean closure BPol(C). bpol_iopti computes the greatest
// BPol(C)-complete subset of R by iterating the filter below from S = R:
// s is kept iff there are (r_1, U_1), ..., (r_k, U_k) in
// I_C[eta_S] with s <= r_1 + ... + r_k and r_1 + ... + r_k in every ↓U_i.
// bpol_opti closes the result into the optimal imprint on A*.

#include <map>
#include <set>
#include <stdexcept>

#include "hiersep/basis/oracle.hpp"
#include "hiersep/engines/saturate.hpp"
#include "hiersep/rating/aux_maps.hpp"
#include "hiersep/semiring/down_set.hpp"

namespace hiersep {

  namespace detail {

    // r_1 + ... + r_k over the pairs with r_i <= b and b in ↓U_i. That
    // family is feasible for every b, since its sum lies below b.
    template <IdempotentSemiring SR>
    typename SR::element_type bounded_sum(SR const&                                         sr,
                                          typename BpolAuxSemiring<SR>::element_type const& aux,
                                          typename SR::element_type const&                  b) {
      auto acc = sr.zero();
      for (auto const& [r, u] : aux) {
        if (sr.leq(r, b) && u.contains(sr, b)) {
          acc = sr.add(acc, r);
        }
      }
      return acc;
    }

    // Every achievable sum, grown one pair at a time from 0. Removing a
    // pair from a feasible family keeps it feasible, so this finds them all.
    template <IdempotentSemiring SR>
    std::vector<typename SR::element_type> achievable_sums_by_growth(
        SR const&                                         sr,
        typename BpolAuxSemiring<SR>::element_type const& aux,
        Budget const&                                     budget) {
      using E = typename SR::element_type;
      std::map<E, bool> seen{{sr.zero(), true}};
      std::vector<E>    stack{sr.zero()};
      std::vector<E>    out{sr.zero()};
      while (!stack.empty()) {
        E t = std::move(stack.back());
        stack.pop_back();
        for (auto const& [r, u] : aux) {
          E next = sr.add(t, r);
          if (seen.count(next)) {
            continue;
          }
          bool ok = sr.leq(next, bounded_sum(sr, aux, next));
          seen.emplace(next, ok);
          if (seen.size() > budget.max_antichain) {
            throw ResourceError("antichain", budget.max_antichain);
          }
          if (ok) {
            out.push_back(next);
            stack.push_back(std::move(next));
          }
        }
      }
      return out;
    }

    // Sums covering every maximal achievable one. A maximal sum t equals
    // bounded_sum(b) for b a meet of maxima of the ↓U_i over its family, and
    // such meets are reached from top by meeting one maximum at a time.
    template <MeetSemiring SR>
    std::vector<typename SR::element_type> achievable_sums_by_meets(
        SR const&                                         sr,
        typename BpolAuxSemiring<SR>::element_type const& aux,
        Budget const&                                     budget) {
      using E = typename SR::element_type;
      std::set<E>    seen{sr.top()};
      std::vector<E> stack{sr.top()};
      std::vector<E> out;
      while (!stack.empty()) {
        E b = std::move(stack.back());
        stack.pop_back();
        out.push_back(bounded_sum(sr, aux, b));
        for (auto const& [r, u] : aux) {
          if (!sr.leq(r, b) || u.contains(sr, b)) {
            continue;
          }
          for (auto const& m : u.maximal()) {
            E next = sr.meet(b, m);
            if (sr.leq(r, next) && seen.insert(next).second) {
              if (seen.size() > budget.max_antichain) {
                throw ResourceError("antichain", budget.max_antichain);
              }
              stack.push_back(std::move(next));
            }
          }
        }
      }
      return out;
    }

  }  // namespace detail

  // Sums t = r_1 + ... + r_k over families of pairs of `aux` with t in every
  // ↓U_i; the result contains at least the maximal ones.
  template <IdempotentSemiring SR>
  std::vector<typename SR::element_type> achievable_sums(
      SR const&                                         sr,
      typename BpolAuxSemiring<SR>::element_type const& aux,
      Budget const&                                     budget) {
    if constexpr (MeetSemiring<SR>) {
      return detail::achievable_sums_by_meets(sr, aux, budget);
    } else {
      return detail::achievable_sums_by_growth(sr, aux, budget);
    }
  }

  // One application of the filter: the s of ↓S satisfying the condition for
  // the auxiliary value computed from S.
  template <IdempotentSemiring SR>
  DownSet<SR> bpol_filter(RatingMap<SR> const& rho,
                          BasisOracle const&   oracle,
                          DownSet<SR> const&   s,
                          Budget const&        budget,
                          EngineStats&         stats) {
    auto eta = aux_bpol_map(rho, s);
    auto aux = iopti(oracle, eta);
    ++stats.aux_iopti_calls;
    return DownSet<SR>::of(rho.semiring(), achievable_sums(rho.semiring(), aux, budget));
  }

  template <EngineSemiring SR>
  DownSet<SR> bpol_iopti(RatingMap<SR> const& rho,
                         BasisOracle const&   oracle,
                         Budget const&        budget = {},
                         EngineStats*         stats  = nullptr) {
    EngineStats local;
    auto&       st = stats ? *stats : local;
    SR const&   sr = rho.semiring();
    auto        s  = DownSet<SR>::of(sr, {sr.top()});
    for (;;) {
      if (++st.rounds > budget.max_iterations) {
        throw ResourceError("iteration", budget.max_iterations);
      }
      auto next = bpol_filter(rho, oracle, s, budget, st);
      st.observe(next.size(), budget);
      // eta_S grows with S, hence so does the filter; the sequence descends.
      if (!s.includes(sr, next)) {
        throw std::logic_error("greatest fixpoint sequence is not descending");
      }
      if (next == s) {
        return s;
      }
      s = std::move(next);
    }
  }

  // Least downset containing `iopti`, 1_R and every rho(a), closed under
  // product: the BPol(C)-optimal imprint of A*.
  template <IdempotentSemiring SR>
  DownSet<SR> bpol_opti(RatingMap<SR> const& rho,
                        DownSet<SR>          iopti_set,
                        Budget const&        budget = {},
                        EngineStats*         stats  = nullptr) {
    EngineStats local;
    auto&       st = stats ? *stats : local;
    SR const&   sr = rho.semiring();
    using E        = typename SR::element_type;
    iopti_set.insert(sr, sr.one());
    for (auto const& r : rho.letter_images()) {
      iopti_set.insert(sr, r);
    }
    st.observe(iopti_set.size(), budget);
    detail::saturate_products(
        iopti_set, iopti_set.maximal(), [&](E const& x) { return iopti_set.insert(sr, x); },
        [&](E const& x, E const& y) { return sr.mul(x, y); }, budget, st);
    return iopti_set;
  }

}  // namespace hiersep
