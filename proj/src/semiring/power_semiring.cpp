#include "hiersep/semiring/power_semiring.hpp"

#include "hiersep/error.hpp"
#include "hiersep/semiring/down_set.hpp"

namespace hiersep {

  PowerSemiring::PowerSemiring(std::shared_ptr<FiniteMonoid const> monoid)
      : monoid_(std::move(monoid)) {
    if (!monoid_) {
      throw InputError("power semiring needs a monoid");
    }
  }

  ElemSet PowerSemiring::mul(ElemSet const& x, ElemSet const& y) const {
    ElemSet out(monoid_->size());
    if (x.empty() || y.empty()) {
      return out;
    }
    auto ys = y.members();
    x.for_each([&](std::size_t s) {
      for (auto t : ys) {
        out.set(monoid_->mul(static_cast<MonoidElem>(s), static_cast<MonoidElem>(t)));
      }
    });
    return out;
  }

  namespace {

    // Branch and bound over subsets f with must <= f <= cand and f * f = f.
    class IdempotentSearch {
     public:
      explicit IdempotentSearch(PowerSemiring const& sr) : sr_(sr) {}

      std::vector<ElemSet> run(ElemSet const& t) {
        search(ElemSet(t.universe()), t);
        return maximal_elements(sr_, std::move(found_));
      }

     private:
      bool dominated(ElemSet const& c) const {
        for (auto const& f : found_) {
          if (c.subset_of(f)) {
            return true;
          }
        }
        return false;
      }

      void search(ElemSet must, ElemSet cand) {
        FiniteMonoid const& m = sr_.monoid();
        while (true) {
          // f = f*f forces f into cand*cand.
          ElemSet shrunk = cand & sr_.mul(cand, cand);
          // f * f <= f forces the product closure of must into f.
          ElemSet grown = must | sr_.mul(must, must);
          if (!must.subset_of(shrunk) || !grown.subset_of(shrunk)) {
            return;
          }
          // y in f needs y*y, y*x and x*y in f for every x in must.
          auto must_members = grown.members();
          ElemSet pruned = shrunk;
          shrunk.for_each([&](std::size_t y) {
            if (grown.test(y)) {
              return;
            }
            auto yy  = static_cast<MonoidElem>(y);
            bool bad = !shrunk.test(m.mul(yy, yy));
            for (std::size_t i = 0; i < must_members.size() && !bad; ++i) {
              auto x = static_cast<MonoidElem>(must_members[i]);
              bad    = !shrunk.test(m.mul(yy, x)) || !shrunk.test(m.mul(x, yy));
            }
            if (bad) {
              pruned.reset(y);
            }
          });
          if (pruned == cand && grown == must) {
            break;
          }
          cand = std::move(pruned);
          must = std::move(grown);
        }
        if (dominated(cand)) {
          return;
        }
        if (sr_.mul(cand, cand) == cand) {
          found_.push_back(cand);
          return;
        }
        std::size_t pick = 0;
        bool        have = false;
        cand.for_each([&](std::size_t y) {
          if (!have && !must.test(y)) {
            pick = y;
            have = true;
          }
        });
        if (!have) {
          return;  // must == cand but not closed: impossible at the fixpoint
        }
        ElemSet with = must;
        with.set(pick);
        search(with, cand);
        ElemSet without = cand;
        without.reset(pick);
        search(must, without);
      }

      PowerSemiring const& sr_;
      std::vector<ElemSet> found_;
    };

  }  // namespace

  std::vector<ElemSet> PowerSemiring::maximal_idempotents_below(ElemSet const& t) const {
    return IdempotentSearch(*this).run(t);
  }

  ElemSet PowerSemiring::from_index(std::uint32_t i) const {
    ElemSet x(monoid_->size());
    for (std::size_t b = 0; b < monoid_->size(); ++b) {
      if ((i >> b) & 1U) {
        x.set(b);
      }
    }
    return x;
  }

  std::uint32_t PowerSemiring::to_index(ElemSet const& x) const {
    std::uint32_t i = 0;
    x.for_each([&i](std::size_t b) { i |= (std::uint32_t(1) << b); });
    return i;
  }

  IdemSemiring PowerSemiring::materialize(std::size_t max_monoid_bits) const {
    std::size_t const n = monoid_->size();
    if (n > max_monoid_bits) {
      throw ResourceError("power semiring materialization", max_monoid_bits);
    }
    std::size_t const                         size = std::size_t(1) << n;
    std::vector<std::vector<std::uint32_t>>   add(size, std::vector<std::uint32_t>(size));
    std::vector<std::vector<std::uint32_t>>   mul(size, std::vector<std::uint32_t>(size));
    for (std::uint32_t i = 0; i < size; ++i) {
      for (std::uint32_t j = 0; j < size; ++j) {
        add[i][j] = i | j;
        mul[i][j] = to_index(this->mul(from_index(i), from_index(j)));
      }
    }
    return IdemSemiring(std::move(add), std::move(mul), 0, to_index(one()));
  }

}  // namespace hiersep
