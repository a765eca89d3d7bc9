#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "hiersep/budget.hpp"
#include "hiersep/error.hpp"

namespace hiersep {

  struct EngineStats {
    std::size_t rounds          = 0;  // outer fixpoint iterations
    std::size_t products        = 0;
    std::size_t peak_antichain  = 0;
    std::size_t aux_iopti_calls = 0;

    // Records an antichain size, failing when it exceeds the budget.
    void observe(std::size_t antichain, Budget const& budget) {
      if (antichain > budget.max_antichain) {
        throw ResourceError("antichain", budget.max_antichain);
      }
      peak_antichain = std::max(peak_antichain, antichain);
    }
  };

  namespace detail {

    // Closes a downset under a product. `set` exposes maximal() as a sorted
    // antichain; insert(x) adds ↓x and reports whether the set grew.
    // `pending` lists the maximal elements not yet multiplied with the rest.
    template <typename Set, typename E, typename Insert, typename Mul>
    void saturate_products(Set&           set,
                           std::vector<E> pending,
                           Insert&&       insert,
                           Mul&&          mul,
                           Budget const&  budget,
                           EngineStats&   stats) {
      while (!pending.empty()) {
        E x = std::move(pending.back());
        pending.pop_back();
        auto const& now = set.maximal();
        if (!std::binary_search(now.begin(), now.end(), x)) {
          continue;  // dominated since it was queued
        }
        std::vector<E> snapshot = now;
        for (auto const& y : snapshot) {
          for (E z : {mul(x, y), mul(y, x)}) {
            ++stats.products;
            if (insert(z)) {
              stats.observe(set.size(), budget);
              pending.push_back(std::move(z));
            }
          }
        }
      }
    }

  }  // namespace detail

}  // namespace hiersep
