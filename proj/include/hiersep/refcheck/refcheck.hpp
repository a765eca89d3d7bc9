#pragma once

// Brute-force reference procedures, independent of the fixpoint engines.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hiersep/budget.hpp"
#include "hiersep/lang/alphabet.hpp"
#include "hiersep/lang/dfa.hpp"
#include "hiersep/rating/rating_map.hpp"
#include "hiersep/semiring/algebra.hpp"

namespace hiersep {

  // K contains l1 and misses l2.
  bool verify_separator(Dfa const& k, Dfa const& l1, Dfa const& l2);

  // The union over `markers` of (A^d)* a_1 (A^d)* ... a_n (A^d)*, a union of
  // marked products of MOD languages.
  struct SeparatorCandidate {
    std::size_t       modulus = 1;
    std::vector<Word> markers;

    friend bool operator==(SeparatorCandidate const&, SeparatorCandidate const&) = default;
  };

  Dfa         denotation(SeparatorCandidate const& c, std::size_t num_letters, Budget const& budget = {});
  std::string to_regex(SeparatorCandidate const& c, Alphabet const& alphabet);

  // Tries d = 1..dmax; for each d, takes the products whose markers are
  // words of l1 of length <= nmax and which miss l2, and succeeds when their
  // union contains l1 and greedy pruning leaves at most union_bound of them.
  // Returns the first success; none means only that the bounds were too
  // small.
  std::optional<SeparatorCandidate> pol_mod_separator_search(Dfa const&    l1,
                                                             Dfa const&    l2,
                                                             std::size_t   dmax,
                                                             std::size_t   nmax,
                                                             std::size_t   union_bound,
                                                             Budget const& budget = {});

  // index + period of rho(A): every modulus up to this bound is tried by
  // brute_iopti_mod.
  template <IdempotentSemiring SR>
  std::size_t iopti_modulus_bound(RatingMap<SR> const& rho) {
    auto shape = power_cycle(rho.semiring(), rho.alphabet_image()).shape;
    return shape.index + shape.period;
  }

  // The least of rho((A^d)*) for 1 <= d <= dmax, each evaluated by
  // saturation over the automaton of (A^d)*.
  template <IdempotentSemiring SR>
  typename SR::element_type brute_iopti_mod(RatingMap<SR> const& rho,
                                            std::size_t          dmax,
                                            Budget const&        budget = {}) {
    SR const& sr = rho.semiring();
    std::vector<typename SR::element_type> values;
    for (std::size_t d = 1; d <= dmax; ++d) {
      values.push_back(eval_regular(rho, length_residue_dfa(rho.num_letters(), d, {0}), budget));
    }
    for (auto const& v : values) {
      bool least = true;
      for (auto const& w : values) {
        least = least && sr.leq(v, w);
      }
      if (least) {
        return v;
      }
    }
    throw std::logic_error("no least value among the candidate moduli");
  }

}  // namespace hiersep
