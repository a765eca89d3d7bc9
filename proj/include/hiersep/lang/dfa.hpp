#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hiersep/budget.hpp"
#include "hiersep/elem_set.hpp"
#include "hiersep/lang/alphabet.hpp"
#include "hiersep/lang/regex.hpp"

namespace hiersep {

  using State = std::uint32_t;

  // Complete deterministic automaton over letters 0..num_letters-1.
  class Dfa {
   public:
    Dfa(std::size_t        num_letters,
        std::size_t        num_states,
        State              initial,
        std::vector<State> delta,
        ElemSet            accepting);

    std::size_t num_letters() const noexcept {
      return num_letters_;
    }
    std::size_t num_states() const noexcept {
      return num_states_;
    }
    State initial() const noexcept {
      return initial_;
    }
    State next(State q, Letter a) const {
      return delta_[q * num_letters_ + a];
    }
    bool is_accepting(State q) const {
      return accepting_.test(q);
    }
    ElemSet const& accepting() const noexcept {
      return accepting_;
    }

    State run(State q, Word const& w) const;
    bool  accepts(Word const& w) const {
      return is_accepting(run(initial_, w));
    }

    friend bool operator==(Dfa const&, Dfa const&) = default;

   private:
    std::size_t        num_letters_;
    std::size_t        num_states_;
    State              initial_;
    std::vector<State> delta_;
    ElemSet            accepting_;
  };

  // Minimal complete DFA with states numbered in breadth-first order from the
  // initial state (letters in alphabet order), so equal languages yield equal
  // objects.
  Dfa minimize(Dfa const& dfa);

  Dfa compile(Regex const&    r,
              Alphabet const& alphabet,
              Budget const&   budget = {});

  // Convenience: parse then compile.
  Dfa compile(std::string_view text,
              Alphabet const&  alphabet,
              Budget const&    budget = {});

  // Basic languages.
  Dfa empty_dfa(std::size_t num_letters);
  Dfa universal_dfa(std::size_t num_letters);
  Dfa word_dfa(std::size_t num_letters, Word const& w);
  // Words whose length is congruent mod `modulus` to a member of `residues`.
  Dfa length_residue_dfa(std::size_t               num_letters,
                         std::size_t               modulus,
                         std::vector<std::size_t> const& residues);

  // Exact Boolean operations and checks. All inputs share an alphabet.
  enum class BoolOp { intersect, unite, difference };
  Dfa  product(Dfa const& x, Dfa const& y, BoolOp op, Budget const& budget = {});
  Dfa  intersect(Dfa const& x, Dfa const& y, Budget const& budget = {});
  Dfa  unite(Dfa const& x, Dfa const& y, Budget const& budget = {});
  Dfa  complement(Dfa const& x);
  Dfa  concatenate(Dfa const& x, Dfa const& y, Budget const& budget = {});
  Dfa  kleene_star(Dfa const& x, Budget const& budget = {});
  bool is_empty(Dfa const& x);
  bool included(Dfa const& x, Dfa const& y);
  bool disjoint(Dfa const& x, Dfa const& y);
  bool equivalent(Dfa const& x, Dfa const& y);

  // Some accepted word of minimum length (shortlex first), if any.
  std::optional<Word> shortest_word(Dfa const& x);

  // All accepted words of length <= max_len, in shortlex order.
  std::vector<Word> words_up_to(Dfa const& x, std::size_t max_len);

}  // namespace hiersep
