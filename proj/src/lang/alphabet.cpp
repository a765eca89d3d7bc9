#include "hiersep/lang/alphabet.hpp"

#include "hiersep/error.hpp"

namespace hiersep {

  Alphabet::Alphabet(std::string letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
      throw InputError("alphabet must be non-empty");
    }
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      char c = letters_[i];
      if (c < 'a' || c > 'z' || c == 'e') {
        throw InputError(std::string("invalid alphabet letter '") + c
                         + "' (use a-z except 'e')");
      }
      if (letters_.find(c) != i) {
        throw InputError(std::string("duplicate alphabet letter '") + c + "'");
      }
    }
  }

  std::optional<Letter> Alphabet::index_of(char c) const noexcept {
    auto pos = letters_.find(c);
    if (pos == std::string::npos) {
      return std::nullopt;
    }
    return static_cast<Letter>(pos);
  }

  Word Alphabet::word(std::string_view text) const {
    Word w;
    w.reserve(text.size());
    for (char c : text) {
      auto i = index_of(c);
      if (!i) {
        throw InputError(std::string("letter '") + c + "' is not in alphabet '"
                         + letters_ + "'");
      }
      w.push_back(*i);
    }
    return w;
  }

  std::string Alphabet::spell(Word const& w) const {
    std::string out;
    out.reserve(w.size());
    for (auto a : w) {
      out.push_back(letter(a));
    }
    return out;
  }

}  // namespace hiersep
