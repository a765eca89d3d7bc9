#pragma once

// A fixed-universe dynamic bitset. Used for state sets, accepting sets and
// as the element representation of the power semiring 2^M.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace hiersep {

  class ElemSet {
   public:
    ElemSet() = default;
    explicit ElemSet(std::size_t universe)
        : n_(universe), words_((universe + 63) / 64, 0) {}
    ElemSet(std::size_t universe, std::initializer_list<std::size_t> xs)
        : ElemSet(universe) {
      for (auto x : xs) {
        set(x);
      }
    }

    static ElemSet full(std::size_t universe) {
      ElemSet s(universe);
      for (std::size_t i = 0; i < universe; ++i) {
        s.set(i);
      }
      return s;
    }

    std::size_t universe() const noexcept {
      return n_;
    }

    void set(std::size_t i) {
      words_[i >> 6] |= (std::uint64_t(1) << (i & 63));
    }
    void reset(std::size_t i) {
      words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
    }
    bool test(std::size_t i) const {
      return (words_[i >> 6] >> (i & 63)) & 1U;
    }

    bool empty() const noexcept {
      for (auto w : words_) {
        if (w != 0) {
          return false;
        }
      }
      return true;
    }

    std::size_t count() const noexcept {
      std::size_t c = 0;
      for (auto w : words_) {
        c += static_cast<std::size_t>(std::popcount(w));
      }
      return c;
    }

    bool subset_of(ElemSet const& other) const noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) {
          return false;
        }
      }
      return true;
    }

    bool intersects(ElemSet const& other) const noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & other.words_[i]) != 0) {
          return true;
        }
      }
      return false;
    }

    ElemSet& operator|=(ElemSet const& other) noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] |= other.words_[i];
      }
      return *this;
    }
    ElemSet& operator&=(ElemSet const& other) noexcept {
      for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= other.words_[i];
      }
      return *this;
    }
    friend ElemSet operator|(ElemSet a, ElemSet const& b) {
      a |= b;
      return a;
    }
    friend ElemSet operator&(ElemSet a, ElemSet const& b) {
      a &= b;
      return a;
    }

    // Calls f(i) for each member in increasing order.
    template <typename F>
    void for_each(F&& f) const {
      for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w != 0) {
          auto bit = static_cast<std::size_t>(std::countr_zero(w));
          f(wi * 64 + bit);
          w &= w - 1;
        }
      }
    }

    std::vector<std::size_t> members() const {
      std::vector<std::size_t> out;
      for_each([&out](std::size_t i) { out.push_back(i); });
      return out;
    }

    std::size_t hash() const noexcept {
      std::size_t h = n_;
      for (auto w : words_) {
        h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6)
             + (h >> 2);
      }
      return h;
    }

    friend bool operator==(ElemSet const&, ElemSet const&) = default;
    friend std::strong_ordering operator<=>(ElemSet const& a,
                                            ElemSet const& b) {
      if (auto c = a.n_ <=> b.n_; c != 0) {
        return c;
      }
      return a.words_ <=> b.words_;
    }

   private:
    std::size_t                n_ = 0;
    std::vector<std::uint64_t> words_;
  };

}  // namespace hiersep

template <>
struct std::hash<hiersep::ElemSet> {
  std::size_t operator()(hiersep::ElemSet const& s) const noexcept {
    return s.hash();
  }
};
