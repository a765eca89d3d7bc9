#pragma once

// Downward-closed subsets stored by their maximal elements.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "hiersep/semiring/concepts.hpp"

namespace hiersep {

  // Removes duplicates and dominated elements; result sorted.
  template <IdempotentSemiring SR>
  std::vector<typename SR::element_type>
  maximal_elements(SR const& sr, std::vector<typename SR::element_type> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<typename SR::element_type> out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < xs.size() && !dominated; ++j) {
        dominated = j != i && sr.leq(xs[i], xs[j]);
      }
      if (!dominated) {
        out.push_back(xs[i]);
      }
    }
    return out;
  }

  template <IdempotentSemiring SR>
  class DownSet {
   public:
    using element_type = typename SR::element_type;

    DownSet() = default;

    static DownSet of(SR const& sr, std::vector<element_type> xs) {
      DownSet d;
      d.max_ = maximal_elements(sr, std::move(xs));
      return d;
    }

    std::vector<element_type> const& maximal() const noexcept {
      return max_;
    }
    std::size_t size() const noexcept {
      return max_.size();
    }
    bool empty() const noexcept {
      return max_.empty();
    }

    bool contains(SR const& sr, element_type const& x) const {
      return std::any_of(max_.begin(), max_.end(),
                         [&](auto const& m) { return sr.leq(x, m); });
    }

    // Whether `other` denotes a subset of this downset.
    bool includes(SR const& sr, DownSet const& other) const {
      return std::all_of(other.max_.begin(), other.max_.end(),
                         [&](auto const& m) { return contains(sr, m); });
    }

    // Returns true when x was not already a member.
    bool insert(SR const& sr, element_type const& x) {
      if (contains(sr, x)) {
        return false;
      }
      std::erase_if(max_, [&](auto const& m) { return sr.leq(m, x); });
      max_.insert(std::lower_bound(max_.begin(), max_.end(), x), x);
      return true;
    }

    void merge(SR const& sr, DownSet const& other) {
      for (auto const& x : other.max_) {
        insert(sr, x);
      }
    }

    // The pointwise product, downward closed.
    static DownSet product(SR const& sr, DownSet const& x, DownSet const& y) {
      std::vector<element_type> out;
      out.reserve(x.size() * y.size());
      for (auto const& a : x.max_) {
        for (auto const& b : y.max_) {
          out.push_back(sr.mul(a, b));
        }
      }
      return of(sr, std::move(out));
    }

    friend bool operator==(DownSet const&, DownSet const&) = default;
    friend auto operator<=>(DownSet const&, DownSet const&) = default;

   private:
    std::vector<element_type> max_;
  };

  template <IdempotentSemiring SR>
  DownSet<SR> downclose(SR const& sr, std::vector<typename SR::element_type> xs) {
    return DownSet<SR>::of(sr, std::move(xs));
  }

}  // namespace hiersep
