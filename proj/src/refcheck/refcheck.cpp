#include "hiersep/refcheck/refcheck.hpp"

namespace hiersep {

  bool verify_separator(Dfa const& k, Dfa const& l1, Dfa const& l2) {
    return included(l1, k) && disjoint(k, l2);
  }

  namespace {

    Dfa marked_product(std::size_t num_letters, std::size_t d, Word const& marker, Budget const& budget) {
      Dfa const block = length_residue_dfa(num_letters, d, {0});
      Dfa       out   = block;
      for (auto a : marker) {
        out = concatenate(concatenate(out, word_dfa(num_letters, {a}), budget), block, budget);
      }
      return out;
    }

  }  // namespace

  Dfa denotation(SeparatorCandidate const& c, std::size_t num_letters, Budget const& budget) {
    Dfa out = empty_dfa(num_letters);
    for (auto const& m : c.markers) {
      out = unite(out, marked_product(num_letters, c.modulus, m, budget), budget);
    }
    return out;
  }

  std::string to_regex(SeparatorCandidate const& c, Alphabet const& alphabet) {
    if (c.markers.empty()) {
      return "0";
    }
    std::string letter;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      letter += (i ? "|" : "");
      letter += alphabet.letter(Letter(i));
    }
    if (alphabet.size() > 1) {
      letter = "(" + letter + ")";
    }
    std::string block = letter + "*";
    if (c.modulus > 1) {
      block.clear();
      for (std::size_t i = 0; i < c.modulus; ++i) {
        block += letter;
      }
      block = "(" + block + ")*";
    }
    std::string out;
    for (std::size_t i = 0; i < c.markers.size(); ++i) {
      out += (i ? "|" : "");
      out += block;
      for (auto a : c.markers[i]) {
        out += alphabet.letter(a);
        out += block;
      }
    }
    return out;
  }

  std::optional<SeparatorCandidate> pol_mod_separator_search(Dfa const&    l1,
                                                             Dfa const&    l2,
                                                             std::size_t   dmax,
                                                             std::size_t   nmax,
                                                             std::size_t   union_bound,
                                                             Budget const& budget) {
    std::size_t const k       = l1.num_letters();
    auto const        markers = words_up_to(l1, nmax);
    for (std::size_t d = 1; d <= dmax; ++d) {
      std::vector<Word> chosen;
      std::vector<Dfa>  parts;
      for (auto const& m : markers) {
        Dfa p = marked_product(k, d, m, budget);
        if (disjoint(p, l2)) {
          chosen.push_back(m);
          parts.push_back(std::move(p));
        }
      }
      auto union_except = [&](std::size_t skip, std::vector<bool> const& alive) {
        Dfa u = empty_dfa(k);
        for (std::size_t i = 0; i < parts.size(); ++i) {
          if (i != skip && alive[i]) {
            u = unite(u, parts[i], budget);
          }
        }
        return u;
      };
      std::vector<bool> alive(parts.size(), true);
      if (!included(l1, union_except(parts.size(), alive))) {
        continue;
      }
      for (std::size_t i = 0; i < parts.size(); ++i) {
        alive[i] = false;
        if (!included(l1, union_except(parts.size(), alive))) {
          alive[i] = true;
        }
      }
      SeparatorCandidate c{d, {}};
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (alive[i]) {
          c.markers.push_back(chosen[i]);
        }
      }
      if (c.markers.size() <= union_bound) {
        return c;
      }
    }
    return std::nullopt;
  }

}  // namespace hiersep
