#pragma once

// The MOD basis: Boolean combinations of the languages {w : |w| = k mod m}.

#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <vector>

#include "hiersep/budget.hpp"
#include "hiersep/error.hpp"
#include "hiersep/lang/dfa.hpp"
#include "hiersep/rating/rating_map.hpp"
#include "hiersep/semiring/algebra.hpp"

namespace hiersep {

  // The set of lengths of words in a language, which is eventually periodic:
  // for n >= threshold, n is a length iff n + period is.
  struct LengthProfile {
    std::size_t       threshold = 0;
    std::size_t       period    = 1;
    std::vector<bool> prefix;  // membership of 0..threshold+period-1

    bool contains(std::size_t n) const {
      if (n >= prefix.size()) {
        n = threshold + (n - threshold) % period;
      }
      return prefix[n];
    }
  };

  LengthProfile length_profile(Dfa const& dfa, Budget const& budget = {});

  struct ModSeparation {
    bool                     separable = false;
    std::size_t              modulus   = 0;  // witness d when separable
    std::vector<std::size_t> residues;       // lengths of L1 mod d
  };

  // Decides whether some union of length classes mod some d contains l1 and
  // misses l2. On success the separator is length_residue_dfa(k, modulus,
  // residues).
  ModSeparation mod_separation(Dfa const& l1, Dfa const& l2, Budget const& budget = {});

  inline bool mod_separable(Dfa const& l1, Dfa const& l2) {
    return mod_separation(l1, l2).separable;
  }

  template <IdempotentSemiring SR>
  struct IoptiWitness {
    typename SR::element_type value;
    std::size_t               modulus;  // value = rho((A^modulus)*)
  };

  // rho(A)^omega + 1_R, together with the modulus d for which it is
  // the image of (A^d)*.
  template <IdempotentSemiring SR>
  IoptiWitness<SR> mod_iopti_witness(RatingMap<SR> const& rho,
                                     std::size_t max_steps = std::numeric_limits<std::size_t>::max()) {
    SR const&   sr    = rho.semiring();
    auto        cycle = power_cycle(sr, rho.alphabet_image(), max_steps);
    std::size_t p     = cycle.shape.period;
    std::size_t m     = ((cycle.shape.index + p - 1) / p) * p;
    return {sr.add(cycle.powers[m - 1], sr.one()), m};
  }

  template <IdempotentSemiring SR>
  typename SR::element_type mod_iopti(RatingMap<SR> const& rho,
                                      std::size_t max_steps = std::numeric_limits<std::size_t>::max()) {
    return mod_iopti_witness(rho, max_steps).value;
  }

  using SeparationProcedure = std::function<bool(Dfa const&, Dfa const&)>;

  // The automaton of rho_*^{-1}(r): states are the values reachable from
  // 1_R by right multiplication with letter images.
  template <IdempotentSemiring SR>
  struct ValueAutomaton {
    std::vector<typename SR::element_type> values;  // state q has value values[q]
    std::vector<State>                     delta;

    Dfa preimage(std::size_t num_letters, State q) const {
      ElemSet acc(values.size());
      acc.set(q);
      return Dfa(num_letters, values.size(), 0, delta, std::move(acc));
    }
  };

  template <IdempotentSemiring SR>
  ValueAutomaton<SR> value_automaton(RatingMap<SR> const& rho, Budget const& budget = {}) {
    SR const&                                        sr = rho.semiring();
    std::size_t const                                k  = rho.num_letters();
    ValueAutomaton<SR>                               out;
    std::map<typename SR::element_type, State>       index;
    out.values.push_back(sr.one());
    index.emplace(sr.one(), 0);
    for (std::size_t q = 0; q < out.values.size(); ++q) {
      for (Letter a = 0; a < k; ++a) {
        auto next           = sr.mul(out.values[q], rho.letter_image(a));
        auto [it, inserted] = index.emplace(next, State(out.values.size()));
        if (inserted) {
          if (out.values.size() >= budget.max_states) {
            throw ResourceError("state", budget.max_states);
          }
          out.values.push_back(std::move(next));
        }
        out.delta.push_back(it->second);
      }
    }
    return out;
  }

  // Sum of the reachable r such that {e} is not separable from
  // rho_*^{-1}(r) by the basis decided by `sep`.
  template <IdempotentSemiring SR>
  typename SR::element_type generic_iopti(RatingMap<SR> const&       rho,
                                          SeparationProcedure const& sep,
                                          Budget const&              budget = {}) {
    SR const&  sr    = rho.semiring();
    auto const va    = value_automaton(rho, budget);
    Dfa const  empty = word_dfa(rho.num_letters(), {});
    auto       total = sr.zero();
    for (State q = 0; q < va.values.size(); ++q) {
      if (!sep(empty, va.preimage(rho.num_letters(), q))) {
        total = sr.add(total, va.values[q]);
      }
    }
    return total;
  }

}  // namespace hiersep
