#pragma once

// Subsets of M x R that are downward closed in the R coordinate:
// (s, r) is a member iff r <= r' for some stored maximal (s, r').

#include <algorithm>
#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "hiersep/lang/monoid.hpp"
#include "hiersep/semiring/concepts.hpp"
#include "hiersep/semiring/down_set.hpp"

namespace hiersep {

  template <IdempotentSemiring SR>
  class PointedDownSet {
   public:
    using element_type = typename SR::element_type;
    using pair_type    = std::pair<MonoidElem, element_type>;

    PointedDownSet() = default;

    static PointedDownSet of(SR const& sr, std::vector<pair_type> xs) {
      std::sort(xs.begin(), xs.end());
      PointedDownSet p;
      for (std::size_t i = 0; i < xs.size();) {
        std::size_t j = i;
        std::vector<element_type> group;
        while (j < xs.size() && xs[j].first == xs[i].first) {
          group.push_back(xs[j].second);
          ++j;
        }
        for (auto& r : maximal_elements(sr, std::move(group))) {
          p.max_.emplace_back(xs[i].first, std::move(r));
        }
        i = j;
      }
      return p;
    }

    std::vector<pair_type> const& maximal() const noexcept {
      return max_;
    }
    std::size_t size() const noexcept {
      return max_.size();
    }
    bool empty() const noexcept {
      return max_.empty();
    }

    bool contains(SR const& sr, MonoidElem s, element_type const& r) const {
      auto [lo, hi] = range(s);
      return std::any_of(lo, hi, [&](auto const& p) { return sr.leq(r, p.second); });
    }

    bool includes(SR const& sr, PointedDownSet const& other) const {
      return std::all_of(other.max_.begin(), other.max_.end(), [&](auto const& p) {
        return contains(sr, p.first, p.second);
      });
    }

    bool insert(SR const& sr, MonoidElem s, element_type const& r) {
      if (contains(sr, s, r)) {
        return false;
      }
      std::erase_if(max_, [&](auto const& p) { return p.first == s && sr.leq(p.second, r); });
      pair_type x{s, r};
      max_.insert(std::lower_bound(max_.begin(), max_.end(), x), std::move(x));
      return true;
    }

    // The R-coordinate downset attached to s.
    DownSet<SR> at(SR const& sr, MonoidElem s) const {
      auto [lo, hi] = range(s);
      std::vector<element_type> xs;
      for (auto it = lo; it != hi; ++it) {
        xs.push_back(it->second);
      }
      return DownSet<SR>::of(sr, std::move(xs));
    }

    // {r : (s, r) member for some s}
    DownSet<SR> unpointed(SR const& sr) const {
      std::vector<element_type> xs;
      for (auto const& p : max_) {
        xs.push_back(p.second);
      }
      return DownSet<SR>::of(sr, std::move(xs));
    }

    static PointedDownSet product(SR const&           sr,
                                  FiniteMonoid const& m,
                                  PointedDownSet const& x,
                                  PointedDownSet const& y) {
      std::vector<pair_type> out;
      out.reserve(x.size() * y.size());
      for (auto const& a : x.max_) {
        for (auto const& b : y.max_) {
          out.emplace_back(m.mul(a.first, b.first), sr.mul(a.second, b.second));
        }
      }
      return of(sr, std::move(out));
    }

    friend bool operator==(PointedDownSet const&, PointedDownSet const&) = default;
    friend auto operator<=>(PointedDownSet const&, PointedDownSet const&) = default;

   private:
    auto range(MonoidElem s) const {
      auto lo = std::lower_bound(max_.begin(), max_.end(), s,
                                 [](pair_type const& p, MonoidElem v) { return p.first < v; });
      auto hi = std::upper_bound(max_.begin(), max_.end(), s,
                                 [](MonoidElem v, pair_type const& p) { return v < p.first; });
      return std::pair{lo, hi};
    }

    std::vector<pair_type> max_;
  };

}  // namespace hiersep

namespace hiersep {

  // M x R with the componentwise product and the order
  // (s, r) <= (s', r') iff s = s' and r <= r'.
  template <IdempotentSemiring SR>
  class PairMonoid {
   public:
    using element_type = std::pair<MonoidElem, typename SR::element_type>;

    PairMonoid(FiniteMonoid const& m, SR const& r) : m_(m), r_(r) {}

    element_type unit() const {
      return {m_.unit(), r_.one()};
    }
    element_type mul(element_type const& x, element_type const& y) const {
      return {m_.mul(x.first, y.first), r_.mul(x.second, y.second)};
    }
    bool leq(element_type const& x, element_type const& y) const {
      return x.first == y.first && r_.leq(x.second, y.second);
    }
    bool is_idempotent(element_type const& x) const {
      return mul(x, x) == x;
    }

   private:
    FiniteMonoid const& m_;
    SR const&           r_;
  };

}  // namespace hiersep
