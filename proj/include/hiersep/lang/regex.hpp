#pragma once

// Regular expressions over an Alphabet, extended with complement and
// intersection.
//
// Grammar (whitespace ignored), loosest binding first:
//   union     := inter ('|' inter)*
//   inter     := concat ('&' concat)*
//   concat    := unary+
//   unary     := '~' unary | postfix
//   postfix   := atom ('*' | '+')*
//   atom      := letter | '0' | 'e' | '(' union ')'
// '0' denotes the empty language and 'e' the empty word.

#include <string>
#include <string_view>
#include <vector>

#include "hiersep/lang/alphabet.hpp"

namespace hiersep {

  struct Regex {
    enum class Kind {
      empty,
      epsilon,
      letter,
      alt,
      concat,
      star,
      plus,
      complement,
      intersect
    };

    Kind               kind   = Kind::empty;
    Letter             letter = 0;
    std::vector<Regex> children;

    static Regex empty() {
      return Regex{Kind::empty, 0, {}};
    }
    static Regex epsilon() {
      return Regex{Kind::epsilon, 0, {}};
    }
    static Regex sym(Letter a) {
      return Regex{Kind::letter, a, {}};
    }
    static Regex alt(Regex x, Regex y) {
      return Regex{Kind::alt, 0, {std::move(x), std::move(y)}};
    }
    static Regex concat(Regex x, Regex y) {
      return Regex{Kind::concat, 0, {std::move(x), std::move(y)}};
    }
    static Regex intersect(Regex x, Regex y) {
      return Regex{Kind::intersect, 0, {std::move(x), std::move(y)}};
    }
    static Regex star(Regex x) {
      return Regex{Kind::star, 0, {std::move(x)}};
    }
    static Regex plus(Regex x) {
      return Regex{Kind::plus, 0, {std::move(x)}};
    }
    static Regex complement(Regex x) {
      return Regex{Kind::complement, 0, {std::move(x)}};
    }

    friend bool operator==(Regex const&, Regex const&) = default;
  };

  // Throws InputError with the character position on malformed input.
  Regex parse_regex(std::string_view text, Alphabet const& alphabet);

  // Fully parenthesised rendering, re-parseable by parse_regex.
  std::string to_string(Regex const& r, Alphabet const& alphabet);

}  // namespace hiersep
