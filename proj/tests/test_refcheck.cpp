#include <doctest.h>

#include "hiersep/basis/mod.hpp"
#include "hiersep/decide/decide.hpp"
#include "hiersep/lang/dfa.hpp"
#include "hiersep/refcheck/refcheck.hpp"
#include "hiersep/semiring/table_semiring.hpp"
#include "support/random_inputs.hpp"

using namespace hiersep;
using namespace hiersep::testing;

namespace {

  // w in (A^d)* m_1 (A^d)* ... m_n (A^d)*: place the markers at increasing
  // positions with every gap a multiple of d.
  bool in_product(Word const& w, std::size_t d, Word const& markers) {
    // reach[i]: the first j markers can be placed inside w[0, i) ending exactly at i.
    std::vector<bool> reach(w.size() + 1);
    for (std::size_t i = 0; i <= w.size(); ++i) {
      reach[i] = i % d == 0;
    }
    for (auto m : markers) {
      std::vector<bool> next(w.size() + 1);
      for (std::size_t i = 0; i <= w.size(); ++i) {
        if (!reach[i]) {
          continue;
        }
        for (std::size_t j = i; j < w.size(); j += d) {
          if (w[j] == m) {
            next[j + 1] = true;
          }
        }
      }
      reach = std::move(next);
    }
    for (std::size_t i = 0; i <= w.size(); ++i) {
      if (reach[i] && (w.size() - i) % d == 0) {
        return true;
      }
    }
    return false;
  }

  bool in_candidate(Word const& w, SeparatorCandidate const& c) {
    for (auto const& m : c.markers) {
      if (in_product(w, c.modulus, m)) {
        return true;
      }
    }
    return false;
  }

}  // namespace

TEST_CASE("separator verification examples") {
  Alphabet a("a"), ab("ab");
  CHECK(verify_separator(compile("(aa)*", a), compile("(aa)*", a), compile("a(aa)*", a)));
  CHECK(verify_separator(compile("(a|b)*a(a|b)*", ab), compile("(a|b)*a(a|b)*", ab), compile("b*", ab)));
  CHECK_FALSE(verify_separator(compile("a*", ab), universal_dfa(2), empty_dfa(2)));
}

TEST_CASE("separator search examples") {
  Alphabet a("a"), ab("ab");
  auto even = pol_mod_separator_search(compile("(aa)*", a), compile("a(aa)*", a), 2, 3, 4);
  REQUIRE(even);
  CHECK(even->modulus == 2);
  CHECK(even->markers == std::vector<Word>{Word{}});
  auto has_a = pol_mod_separator_search(compile("(a|b)*a(a|b)*", ab), compile("b*", ab), 1, 3, 4);
  REQUIRE(has_a);
  CHECK(has_a->modulus == 1);
  CHECK(has_a->markers == std::vector<Word>{Word{0}});
  CHECK_FALSE(pol_mod_separator_search(compile("a*", ab), compile("(a|b)*b(a|b)*", ab), 4, 3, 4));
}

TEST_CASE("brute iopti examples") {
  auto z2     = std::make_shared<FiniteMonoid const>(FiniteMonoid::cyclic_group(2));
  auto parity = RatingMap<PowerSemiring>(std::make_shared<PowerSemiring const>(z2), {ElemSet(2, {1})});
  CHECK(eval_regular(parity, length_residue_dfa(1, 1, {0})) == ElemSet(2, {0, 1}));
  CHECK(eval_regular(parity, length_residue_dfa(1, 2, {0})) == ElemSet(2, {0}));
  CHECK(brute_iopti_mod(parity, iopti_modulus_bound(parity)) == ElemSet(2, {0}));
  RatingMap<IdemSemiring> trivial(std::make_shared<IdemSemiring const>(IdemSemiring::trivial()), {0});
  CHECK(brute_iopti_mod(trivial, 3) == trivial.semiring().one());
}

TEST_CASE("candidate denotation matches its definition") {
  Rng  rng(73);
  auto words = all_words(2, 7);
  for (int i = 0; i < 60; ++i) {
    SeparatorCandidate c;
    c.modulus = 1 + pick(rng, 3);
    for (std::size_t k = 1 + pick(rng, 3); k > 0; --k) {
      Word m;
      for (std::size_t n = pick(rng, 4); n > 0; --n) {
        m.push_back(Letter(pick(rng, 2)));
      }
      c.markers.push_back(m);
    }
    auto dfa = denotation(c, 2);
    for (auto const& w : words) {
      CHECK(dfa.accepts(w) == in_candidate(w, c));
    }
    CHECK(equivalent(compile(to_regex(c, Alphabet("ab")), Alphabet("ab")), dfa));
  }
}

TEST_CASE("search results are sound") {
  auto suite = regex_pair_suite(7901, 200, 5);
  int  found = 0;
  for (auto const& p : suite) {
    auto c = pol_mod_separator_search(p.dx, p.dy, 3, 2, 4);
    if (!c) {
      continue;
    }
    ++found;
    auto k = denotation(*c, p.dx.num_letters());
    CHECK(verify_separator(k, p.dx, p.dy));
    CHECK(disjoint(p.dx, p.dy));
    CHECK(c->markers.size() <= 4);
    CHECK(separable(Level::half, p.dx, p.dy, ModOracle{}).answer);
  }
  CHECK(found > 10);
}
