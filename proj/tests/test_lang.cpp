#include <doctest.h>

#include <functional>

#include "hiersep/error.hpp"
#include "hiersep/lang/dfa.hpp"
#include "hiersep/lang/monoid.hpp"
#include "hiersep/lang/regex.hpp"
#include "support/random_inputs.hpp"

using namespace hiersep;
using namespace hiersep::testing;

namespace {

  // Direct semantics of a regex on a word, by dynamic programming over
  // factors. Shares nothing with the automaton constructions.
  bool matches(Regex const& r, Word const& w, std::size_t i, std::size_t j) {
    switch (r.kind) {
      case Regex::Kind::empty: return false;
      case Regex::Kind::epsilon: return i == j;
      case Regex::Kind::letter: return j == i + 1 && w[i] == r.letter;
      case Regex::Kind::alt: return matches(r.children[0], w, i, j) || matches(r.children[1], w, i, j);
      case Regex::Kind::intersect:
        return matches(r.children[0], w, i, j) && matches(r.children[1], w, i, j);
      case Regex::Kind::complement: return !matches(r.children[0], w, i, j);
      case Regex::Kind::concat:
        for (std::size_t k = i; k <= j; ++k) {
          if (matches(r.children[0], w, i, k) && matches(r.children[1], w, k, j)) {
            return true;
          }
        }
        return false;
      case Regex::Kind::star:
      case Regex::Kind::plus: {
        if (i == j) {
          return r.kind == Regex::Kind::star || matches(r.children[0], w, i, j);
        }
        // Non-empty iterations suffice for non-empty factors.
        for (std::size_t k = i + 1; k <= j; ++k) {
          if (matches(r.children[0], w, i, k) && matches(Regex::star(r.children[0]), w, k, j)) {
            return true;
          }
        }
        return false;
      }
    }
    return false;
  }

}  // namespace

TEST_CASE("regex parsing") {
  Alphabet ab("ab");
  using R = Regex;
  CHECK(parse_regex("a(ab)*", ab) == R::concat(R::sym(0), R::star(R::concat(R::sym(0), R::sym(1)))));
  CHECK(parse_regex("~0", Alphabet("a")) == R::complement(R::empty()));
  CHECK(parse_regex(" a | b ", ab) == R::alt(R::sym(0), R::sym(1)));
  CHECK(parse_regex("e", ab) == R::epsilon());
  CHECK(parse_regex("ab|b&a*", ab)
        == R::alt(R::concat(R::sym(0), R::sym(1)), R::intersect(R::sym(1), R::star(R::sym(0)))));
  CHECK(parse_regex("~a*", ab) == R::complement(R::star(R::sym(0))));
  CHECK(parse_regex("a+b", ab) == R::concat(R::plus(R::sym(0)), R::sym(1)));

  try {
    parse_regex("a(", ab);
    FAIL("expected a syntax error");
  } catch (InputError const& e) {
    CHECK(std::string(e.what()).find("unbalanced parenthesis") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_regex("a)", ab), InputError);
  CHECK_THROWS_AS(parse_regex("c", ab), InputError);
  CHECK_THROWS_AS(parse_regex("", ab), InputError);
  CHECK_THROWS_AS(parse_regex("a||b", ab), InputError);
  CHECK_THROWS_AS(Alphabet("abe"), InputError);
  CHECK_THROWS_AS(Alphabet("aa"), InputError);
  CHECK_THROWS_AS(Alphabet(""), InputError);
}

TEST_CASE("regex printing round-trips") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    Alphabet ab("ab");
    auto     r = parse_regex(random_regex(rng, "ab", 3), ab);
    CHECK(parse_regex(to_string(r, ab), ab) == r);
  }
}

TEST_CASE("compile examples") {
  Alphabet a("a"), ab("ab");
  auto     parity = compile("(aa)*", a);
  CHECK(parity.num_states() == 2);
  CHECK(parity.is_accepting(parity.initial()));
  CHECK(parity.initial() == 0);
  auto none = compile("0", a);
  CHECK(none.num_states() == 1);
  CHECK(none.accepting().empty());
  CHECK(compile("a|b", ab).num_states() == 3);
}

TEST_CASE("compiled automata agree with the regex semantics") {
  Rng  rng(11);
  auto words = all_words(2, 6);
  for (int i = 0; i < 150; ++i) {
    Alphabet ab("ab");
    auto     r = parse_regex(random_regex(rng, "ab", 3), ab);
    auto     d = compile(r, ab);
    for (auto const& w : words) {
      REQUIRE(d.accepts(w) == matches(r, w, 0, w.size()));
    }
  }
}

TEST_CASE("minimization is idempotent and canonical") {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    Alphabet ab("ab");
    auto     d = compile(random_regex(rng, "ab", 3), ab);
    CHECK(minimize(d) == d);
    auto d2 = compile(to_string(parse_regex(random_regex(rng, "ab", 2), ab), ab), ab);
    CHECK(minimize(unite(d2, d2)) == d2);
  }
}

TEST_CASE("state budget") {
  Budget tight;
  tight.max_states = 3;
  CHECK_THROWS_AS(compile("(a|b)*a(a|b)(a|b)(a|b)", Alphabet("ab"), tight), ResourceError);
}

TEST_CASE("transition monoid examples") {
  Alphabet a("a"), ab("ab");
  {
    std::vector<Dfa> ds{compile("(aa)*", a)};
    auto             alpha = transition_monoid(ds);
    REQUIRE(alpha.monoid().size() == 2);
    CHECK(alpha.monoid().mul(1, 1) == 0);
    CHECK(alpha.accept_sets()[0] == ElemSet(2, {0}));
  }
  {
    std::vector<Dfa> ds{compile("(a|b)*", ab)};
    auto             alpha = transition_monoid(ds);
    CHECK(alpha.monoid().size() == 1);
    CHECK(alpha.accept_sets()[0] == ElemSet(1, {0}));
  }
  {
    std::vector<Dfa> ds{compile("(ab)*", ab)};
    auto             alpha = transition_monoid(ds);
    CHECK(alpha.monoid().size() == 6);
    auto zero = alpha.eval(ab.word("aa"));
    for (MonoidElem s = 0; s < 6; ++s) {
      CHECK(alpha.monoid().mul(zero, s) == zero);
      CHECK(alpha.monoid().mul(s, zero) == zero);
    }
    CHECK(alpha.eval(ab.word("aba")) == alpha.eval(ab.word("a")));
  }
  Budget tight;
  tight.max_monoid = 3;
  std::vector<Dfa> ds{compile("(ab)*", ab)};
  CHECK_THROWS_AS(transition_monoid(ds, tight), ResourceError);
}

TEST_CASE("transition monoid recognizes every input") {
  Rng  rng(17);
  auto suite = regex_pair_suite(19, 60);
  for (auto const& p : suite) {
    std::vector<Dfa> ds{p.dx, p.dy, complement(p.dx)};
    auto             alpha = transition_monoid(ds);
    auto const&      m     = alpha.monoid();
    // Product of the three automata bounds the number of transformations.
    std::size_t q = p.dx.num_states() * p.dy.num_states() * p.dx.num_states();
    double      bound = 1;
    for (std::size_t i = 0; i < q && bound < 1e9; ++i) {
      bound *= double(q);
    }
    CHECK(double(m.size()) <= bound);
    for (int i = 0; i < 1000; ++i) {
      Word w(pick(rng, 13));
      for (auto& c : w) {
        c = Letter(pick(rng, p.alphabet.size()));
      }
      auto s = alpha.eval(w);
      REQUIRE(p.dx.accepts(w) == alpha.accept_sets()[0].test(s));
      REQUIRE(p.dy.accepts(w) == alpha.accept_sets()[1].test(s));
      REQUIRE(!p.dx.accepts(w) == alpha.accept_sets()[2].test(s));
    }
    if (m.size() <= 200) {
      for (MonoidElem x = 0; x < m.size(); ++x) {
        REQUIRE(m.mul(m.unit(), x) == x);
        REQUIRE(m.mul(x, m.unit()) == x);
        for (MonoidElem y = 0; y < m.size(); ++y) {
          for (MonoidElem z = 0; z < m.size(); ++z) {
            REQUIRE(m.mul(m.mul(x, y), z) == m.mul(x, m.mul(y, z)));
          }
        }
      }
    }
    for (MonoidElem s = 0; s < m.size(); ++s) {
      auto w = alpha.representative(s);
      REQUIRE(w);
      CHECK(alpha.eval(*w) == s);
    }
  }
}

TEST_CASE("monoid tables are validated") {
  CHECK_THROWS_AS(FiniteMonoid::from_table({{0, 1}, {1, 1}}, 1), InputError);
  CHECK_THROWS_AS(FiniteMonoid::from_table({{0, 1}, {0, 0}}, 0), InputError);
  CHECK_NOTHROW(FiniteMonoid::from_table({{0, 1}, {1, 0}}, 0));
}

TEST_CASE("regular operations") {
  Alphabet a("a"), ab("ab");
  CHECK(disjoint(compile("(aa)*", a), compile("a(aa)*", a)));
  CHECK(included(compile("a*", ab), compile("~((a|b)*b(a|b)*)", ab)));
  CHECK(is_empty(intersect(compile("a*", ab), compile("(a|b)*b(a|b)*", ab))));
  CHECK_FALSE(included(compile("(a|b)*", ab), compile("a*", ab)));
  CHECK(equivalent(compile("(a|b)*", ab), universal_dfa(2)));
  CHECK(equivalent(compile("0", ab), empty_dfa(2)));
  CHECK(equivalent(compile("((a|b)(a|b)(a|b))*", ab), length_residue_dfa(2, 3, {0})));
  CHECK(shortest_word(compile("(a|b)*bb", ab)) == ab.word("bb"));
  CHECK(words_up_to(compile("a*", ab), 2) == std::vector<Word>{{}, {0}, {0, 0}});
}

TEST_CASE("boolean operations agree with word membership") {
  auto suite = regex_pair_suite(23, 80);
  auto words = all_words(2, 7);
  for (auto const& p : suite) {
    auto i = intersect(p.dx, p.dy), u = unite(p.dx, p.dy), c = complement(p.dx);
    auto cat = concatenate(p.dx, p.dy), st = kleene_star(p.dx);
    for (auto const& w : words) {
      if (p.alphabet.size() == 1 && std::any_of(w.begin(), w.end(), [](Letter l) { return l > 0; })) {
        continue;
      }
      REQUIRE(i.accepts(w) == (p.dx.accepts(w) && p.dy.accepts(w)));
      REQUIRE(u.accepts(w) == (p.dx.accepts(w) || p.dy.accepts(w)));
      REQUIRE(c.accepts(w) == !p.dx.accepts(w));
      bool split = false;
      for (std::size_t k = 0; k <= w.size() && !split; ++k) {
        split = p.dx.accepts(Word(w.begin(), w.begin() + k)) && p.dy.accepts(Word(w.begin() + k, w.end()));
      }
      REQUIRE(cat.accepts(w) == split);
    }
    CHECK(st.accepts({}));
    CHECK(included(p.dx, st));
    CHECK(disjoint(p.dx, p.dy) == is_empty(i));
    CHECK(included(p.dx, p.dy) == is_empty(intersect(p.dx, complement(p.dy))));
  }
}
