#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hiersep {

  // Words are sequences of letter indices into an Alphabet.
  using Letter = std::uint32_t;
  using Word   = std::vector<Letter>;

  // An ordered finite set of single-character letters. The characters 'a'-'z'
  // are allowed except 'e', which the regex grammar reserves for the empty
  // word.
  class Alphabet {
   public:
    explicit Alphabet(std::string letters);

    std::size_t size() const noexcept {
      return letters_.size();
    }
    char letter(Letter i) const {
      return letters_.at(i);
    }
    std::string const& letters() const noexcept {
      return letters_;
    }
    std::optional<Letter> index_of(char c) const noexcept;

    // Letters of `text` mapped to indices; throws InputError on a foreign
    // character. The empty string is the empty word.
    Word word(std::string_view text) const;
    std::string spell(Word const& w) const;

    friend bool operator==(Alphabet const&, Alphabet const&) = default;

   private:
    std::string letters_;
  };

}  // namespace hiersep
