#include "hiersep/lang/regex.hpp"

#include "hiersep/error.hpp"

namespace hiersep {

  namespace {

    class Parser {
     public:
      Parser(std::string_view text, Alphabet const& alphabet)
          : text_(text), alphabet_(alphabet) {}

      Regex parse() {
        skip_ws();
        if (pos_ == text_.size()) {
          fail("empty regular expression");
        }
        Regex r = parse_union();
        skip_ws();
        if (pos_ != text_.size()) {
          if (text_[pos_] == ')') {
            fail("unbalanced parenthesis");
          }
          fail(std::string("unexpected '") + text_[pos_] + "'");
        }
        return r;
      }

     private:
      [[noreturn]] void fail(std::string const& msg) const {
        throw InputError("syntax error at position " + std::to_string(pos_)
                         + ": " + msg);
      }

      void skip_ws() {
        while (pos_ < text_.size()
               && (text_[pos_] == ' ' || text_[pos_] == '\t'
                   || text_[pos_] == '\n' || text_[pos_] == '\r')) {
          ++pos_;
        }
      }

      char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
      }

      Regex parse_union() {
        Regex r = parse_inter();
        while (peek() == '|') {
          ++pos_;
          r = Regex::alt(std::move(r), parse_inter());
        }
        return r;
      }

      Regex parse_inter() {
        Regex r = parse_concat();
        while (peek() == '&') {
          ++pos_;
          r = Regex::intersect(std::move(r), parse_concat());
        }
        return r;
      }

      static bool starts_unary(char c) {
        return c == '~' || c == '(' || c == '0' || (c >= 'a' && c <= 'z');
      }

      Regex parse_concat() {
        if (!starts_unary(peek())) {
          if (peek() == '\0') {
            fail_at_end();
          }
          fail(std::string("unexpected '") + peek() + "'");
        }
        Regex r = parse_unary();
        while (starts_unary(peek())) {
          r = Regex::concat(std::move(r), parse_unary());
        }
        return r;
      }

      Regex parse_unary() {
        if (peek() == '~') {
          ++pos_;
          return Regex::complement(parse_unary());
        }
        return parse_postfix();
      }

      Regex parse_postfix() {
        Regex r = parse_atom();
        for (char c = peek(); c == '*' || c == '+'; c = peek()) {
          ++pos_;
          r = c == '*' ? Regex::star(std::move(r)) : Regex::plus(std::move(r));
        }
        return r;
      }

      Regex parse_atom() {
        char c = peek();
        if (c == '(') {
          ++pos_;
          if (peek() == ')') {
            fail("empty parentheses");
          }
          ++depth_;
          Regex r = parse_union();
          if (peek() != ')') {
            fail("unbalanced parenthesis");
          }
          --depth_;
          ++pos_;
          return r;
        }
        if (c == '0') {
          ++pos_;
          return Regex::empty();
        }
        if (c == 'e') {
          ++pos_;
          return Regex::epsilon();
        }
        if (c >= 'a' && c <= 'z') {
          auto idx = alphabet_.index_of(c);
          if (!idx) {
            fail(std::string("letter '") + c + "' is not in alphabet '"
                 + alphabet_.letters() + "'");
          }
          ++pos_;
          return Regex::sym(*idx);
        }
        if (c == '\0') {
          fail_at_end();
        }
        fail(std::string("unexpected '") + c + "'");
      }

      [[noreturn]] void fail_at_end() {
        fail(depth_ ? "unbalanced parenthesis" : "unexpected end of input");
      }

      std::string_view text_;
      Alphabet const&  alphabet_;
      std::size_t      depth_ = 0;
      std::size_t      pos_ = 0;
    };

  }  // namespace

  Regex parse_regex(std::string_view text, Alphabet const& alphabet) {
    return Parser(text, alphabet).parse();
  }

  std::string to_string(Regex const& r, Alphabet const& alphabet) {
    using K = Regex::Kind;
    switch (r.kind) {
      case K::empty:
        return "0";
      case K::epsilon:
        return "e";
      case K::letter:
        return std::string(1, alphabet.letter(r.letter));
      case K::alt:
        return "(" + to_string(r.children[0], alphabet) + "|"
               + to_string(r.children[1], alphabet) + ")";
      case K::intersect:
        return "(" + to_string(r.children[0], alphabet) + "&"
               + to_string(r.children[1], alphabet) + ")";
      case K::concat:
        return "(" + to_string(r.children[0], alphabet)
               + to_string(r.children[1], alphabet) + ")";
      case K::star:
        return "(" + to_string(r.children[0], alphabet) + ")*";
      case K::plus:
        return "(" + to_string(r.children[0], alphabet) + ")+";
      case K::complement:
        return "~(" + to_string(r.children[0], alphabet) + ")";
    }
    return "";
  }

}  // namespace hiersep
