#pragma once

// Generic operations over any finite idempotent semiring.

#include <cstddef>
#include <limits>
#include <map>
#include <set>
#include <vector>

#include "hiersep/error.hpp"
#include "hiersep/semiring/concepts.hpp"

namespace hiersep {

  // Index i >= 1 and period p >= 1 of the cyclic subsemigroup generated by s:
  // s^i = s^(i+p) with i, p least.
  struct CycleShape {
    std::size_t index;
    std::size_t period;
  };

  template <IdempotentSemiring SR>
  struct PowerCycle {
    CycleShape                             shape;
    std::vector<typename SR::element_type> powers;  // powers[k] = s^(k+1)
  };

  template <IdempotentSemiring SR>
  PowerCycle<SR> power_cycle(SR const&                        sr,
                             typename SR::element_type const& s,
                             std::size_t max_steps = std::numeric_limits<std::size_t>::max()) {
    PowerCycle<SR>                                   out;
    std::map<typename SR::element_type, std::size_t> seen;
    auto                                             x = s;
    for (std::size_t k = 1;; ++k) {
      auto [it, fresh] = seen.emplace(x, k);
      if (!fresh) {
        out.shape = {it->second, k - it->second};
        return out;
      }
      if (k > max_steps) {
        throw ResourceError("iteration", max_steps);
      }
      out.powers.push_back(x);
      x = sr.mul(x, s);
    }
  }

  // The unique idempotent among the positive powers of s, i.e. s^m for the
  // least multiple m of the period with m >= index.
  template <IdempotentSemiring SR>
  typename SR::element_type omega_power(SR const&                        sr,
                                        typename SR::element_type const& s,
                                        std::size_t max_steps = std::numeric_limits<std::size_t>::max()) {
    auto        cycle = power_cycle(sr, s, max_steps);
    std::size_t p     = cycle.shape.period;
    std::size_t m     = ((cycle.shape.index + p - 1) / p) * p;
    return cycle.powers[m - 1];
  }

  template <IdempotentSemiring SR, typename Range>
  typename SR::element_type sum(SR const& sr, Range const& xs) {
    auto acc = sr.zero();
    for (auto const& x : xs) {
      acc = sr.add(acc, x);
    }
    return acc;
  }

  // All sums of non-empty subsets of xs, sorted.
  template <IdempotentSemiring SR>
  std::vector<typename SR::element_type>
  add_closure(SR const& sr, std::vector<typename SR::element_type> const& xs) {
    std::set<typename SR::element_type> out;
    for (auto const& x : xs) {
      std::vector<typename SR::element_type> fresh{x};
      for (auto const& t : out) {
        fresh.push_back(sr.add(t, x));
      }
      out.insert(fresh.begin(), fresh.end());
    }
    return {out.begin(), out.end()};
  }

}  // namespace hiersep
