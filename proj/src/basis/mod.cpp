#include "hiersep/basis/mod.hpp"

#include <map>
#include <numeric>

namespace hiersep {

  LengthProfile length_profile(Dfa const& dfa, Budget const& budget) {
    // X_n = states reached by words of length n.
    std::map<ElemSet, std::size_t> seen;
    std::vector<bool>              member;
    ElemSet                        x(dfa.num_states());
    x.set(dfa.initial());
    for (std::size_t n = 0;; ++n) {
      auto [it, fresh] = seen.emplace(x, n);
      if (!fresh) {
        LengthProfile out;
        out.threshold = it->second;
        out.period    = n - it->second;
        out.prefix    = std::move(member);
        return out;
      }
      if (n >= budget.max_iterations) {
        throw ResourceError("iteration", budget.max_iterations);
      }
      member.push_back(x.intersects(dfa.accepting()));
      ElemSet y(dfa.num_states());
      x.for_each([&](std::size_t q) {
        for (Letter a = 0; a < dfa.num_letters(); ++a) {
          y.set(dfa.next(State(q), a));
        }
      });
      x = std::move(y);
    }
  }

  ModSeparation mod_separation(Dfa const& l1, Dfa const& l2, Budget const& budget) {
    if (l1.num_letters() != l2.num_letters()) {
      throw InputError("languages over different alphabets");
    }
    auto const  p1 = length_profile(l1, budget);
    auto const  p2 = length_profile(l2, budget);
    std::size_t t  = std::max(p1.threshold, p2.threshold);
    std::size_t p  = std::lcm(p1.period, p2.period);
    // Residues mod d, with d a multiple of p that is >= t, are those of the
    // lengths below t + d; any separating modulus yields disjoint ones here.
    std::size_t d = std::max<std::size_t>(1, (t + p - 1) / p) * p;
    if (d > budget.max_iterations) {
      throw ResourceError("iteration", budget.max_iterations);
    }
    std::vector<bool> r1(d), r2(d);
    for (std::size_t n = 0; n < t + d; ++n) {
      r1[n % d] = r1[n % d] || p1.contains(n);
      r2[n % d] = r2[n % d] || p2.contains(n);
    }
    ModSeparation out;
    for (std::size_t r = 0; r < d; ++r) {
      if (r1[r] && r2[r]) {
        return out;
      }
      if (r1[r]) {
        out.residues.push_back(r);
      }
    }
    out.separable = true;
    out.modulus   = d;
    return out;
  }

}  // namespace hiersep
