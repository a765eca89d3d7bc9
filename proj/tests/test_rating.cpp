#include <doctest.h>

#include "hiersep/basis/mod.hpp"
#include "hiersep/lang/dfa.hpp"
#include "hiersep/rating/aux_maps.hpp"
#include "hiersep/rating/rating_map.hpp"
#include "support/random_inputs.hpp"

using namespace hiersep;
using namespace hiersep::testing;

namespace {

  MonoidMorphism parity_alpha() {
    Alphabet         ab("a");
    std::vector<Dfa> langs{compile("(aa)*", ab)};
    return transition_monoid(langs);
  }

  RatingMap<PowerSemiring> rating_with_letters(Rng& rng, std::shared_ptr<FiniteMonoid const> m,
                                               std::size_t letters) {
    auto                 sr = std::make_shared<PowerSemiring const>(m);
    std::vector<ElemSet> images;
    for (std::size_t a = 0; a < letters; ++a) {
      images.push_back(random_subset(rng, m->size(), pick(rng, 6) != 0));
    }
    return RatingMap<PowerSemiring>(sr, std::move(images));
  }

  ElemSet enumerate_sum(RatingMap<PowerSemiring> const& rho, Dfa const& k, std::size_t max_len) {
    auto total = rho.semiring().zero();
    for (auto const& w : all_words(rho.num_letters(), max_len)) {
      if (k.accepts(w)) {
        total = rho.semiring().add(total, eval_word(rho, w));
      }
    }
    return total;
  }

}  // namespace

TEST_CASE("word and language evaluation on the parity map") {
  auto alpha = parity_alpha();
  auto rho   = canonical_covering_map(alpha);
  CHECK(eval_word(rho, {}) == ElemSet(2, {0}));
  CHECK(eval_word(rho, {0}) == ElemSet(2, {1}));
  CHECK(eval_word(rho, {0, 0, 0}) == ElemSet(2, {1}));
  Alphabet ab("a");
  CHECK(eval_regular(rho, compile("a*", ab)) == ElemSet(2, {0, 1}));
  CHECK(eval_regular(rho, compile("(aa)*", ab)) == ElemSet(2, {0}));
  CHECK(eval_regular(rho, empty_dfa(1)) == ElemSet(2));
  CHECK_THROWS_AS(eval_regular(rho, compile("a*", Alphabet("ab"))), InputError);
}

TEST_CASE("canonical map on two letters") {
  Alphabet         ab("ab");
  std::vector<Dfa> langs{compile("a*", ab), compile("(a|b)*b(a|b)*", ab)};
  auto             alpha = transition_monoid(langs);
  auto             rho   = canonical_covering_map(alpha);
  CHECK(eval_word(rho, {0, 1}) == ElemSet(2, {alpha.eval({0, 1})}));
  CHECK(eval_word(rho, {0, 1}).count() == 1);
  CHECK(eval_regular(rho, compile("a*", ab)) == ElemSet(2, {0}));
}

TEST_CASE("auxiliary bpol map examples") {
  auto        alpha = parity_alpha();
  auto        rho   = canonical_covering_map(alpha);
  auto const& sr    = rho.semiring();
  auto        full  = DownSet<PowerSemiring>::of(sr, {ElemSet(2, {0, 1})});
  auto        eta   = aux_bpol_map(rho, full);
  REQUIRE(eta.letter_image(0).size() == 1);
  CHECK(eta.letter_image(0)[0].first == ElemSet(2, {1}));
  // X·{1}·Y over all X, Y reaches every subset.
  for (std::uint32_t i = 0; i < 4; ++i) {
    CHECK(eta.letter_image(0)[0].second.contains(sr, sr.from_index(i)));
  }
  auto none = aux_bpol_map(rho, DownSet<PowerSemiring>{});
  REQUIRE(none.letter_image(0).size() == 1);
  CHECK(none.letter_image(0)[0].first == ElemSet(2, {1}));
  CHECK(none.letter_image(0)[0].second.empty());
  auto unit = eta.semiring().one();
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].first == ElemSet(2, {0}));
  CHECK(unit[0].second == DownSet<PowerSemiring>::of(sr, {ElemSet(2, {0})}));
}

TEST_CASE("auxiliary pbpol map examples") {
  auto        alpha = parity_alpha();
  auto        rho   = canonical_covering_map(alpha);
  auto const& sr    = rho.semiring();
  auto        none  = aux_pbpol_map(alpha, rho, PointedDownSet<PowerSemiring>{});
  REQUIRE(none.letter_image(0).size() == 1);
  CHECK(none.letter_image(0)[0].first == ElemSet(2, {1}));
  CHECK(none.letter_image(0)[0].second.empty());
  auto s   = PointedDownSet<PowerSemiring>::of(sr, {{0, ElemSet(2, {0})}});
  auto eta = aux_pbpol_map(alpha, rho, s);
  REQUIRE(eta.letter_image(0).size() == 1);
  CHECK(eta.letter_image(0)[0].first == ElemSet(2, {1}));
  CHECK(eta.letter_image(0)[0].second == PointedDownSet<PowerSemiring>::of(sr, {{1, ElemSet(2, {1})}}));
  auto unit = eta.semiring().one();
  REQUIRE(unit.size() == 1);
  CHECK(unit[0].first == ElemSet(2, {0}));
  CHECK(unit[0].second == PointedDownSet<PowerSemiring>::of(sr, {{0, ElemSet(2, {0})}}));
  CHECK_THROWS_AS(aux_pbpol_map(alpha, RatingMap<PowerSemiring>(rho.semiring_ptr(), {ElemSet(2), ElemSet(2)}), s),
                  InputError);
}

TEST_CASE("word evaluation is a morphism") {
  Rng rng(41);
  for (int i = 0; i < 500; ++i) {
    auto m   = random_monoid(rng, 6);
    auto rho = random_power_rating(rng, m);
    Word u, v;
    for (std::size_t k = pick(rng, 6); k > 0; --k) {
      u.push_back(Letter(pick(rng, rho.num_letters())));
    }
    for (std::size_t k = pick(rng, 6); k > 0; --k) {
      v.push_back(Letter(pick(rng, rho.num_letters())));
    }
    Word uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(eval_word(rho, uv) == rho.semiring().mul(eval_word(rho, u), eval_word(rho, v)));
  }
}

TEST_CASE("language evaluation respects union and concatenation") {
  Rng  rng(43);
  auto suite = regex_pair_suite(4301, 120, 5);
  for (auto const& p : suite) {
    auto m   = random_monoid(rng, 5);
    auto rho = rating_with_letters(rng, m, p.alphabet.size());
    auto const& sr = rho.semiring();
    auto x = eval_regular(rho, p.dx);
    auto y = eval_regular(rho, p.dy);
    CHECK(eval_regular(rho, unite(p.dx, p.dy)) == sr.add(x, y));
    CHECK(eval_regular(rho, concatenate(p.dx, p.dy)) == sr.mul(x, y));
  }
}

TEST_CASE("language evaluation agrees with word enumeration") {
  Rng  rng(47);
  auto suite   = regex_pair_suite(4701, 150, 4);
  int  checked = 0;
  for (auto const& p : suite) {
    auto m   = random_monoid(rng, 3);
    auto rho = rating_with_letters(rng, m, p.alphabet.size());
    // Every reachable (state, element) pair has a witness shorter than the
    // number of such pairs, so this length bound gives the exact sum.
    std::size_t const pairs = p.dx.num_states() * (std::size_t(1) << m->size());
    std::size_t const len   = p.alphabet.size() == 1 ? pairs : std::min<std::size_t>(pairs, 11);
    auto              enumerated = enumerate_sum(rho, p.dx, len);
    auto              value      = eval_regular(rho, p.dx);
    CHECK(enumerated.subset_of(value));
    if (len == pairs) {
      CHECK(enumerated == value);
      ++checked;
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("canonical covering map detects intersection") {
  auto suite = regex_pair_suite(5101, 150, 5);
  for (auto const& p : suite) {
    std::vector<Dfa> langs{p.dy};
    auto             alpha = transition_monoid(langs);
    auto             rho   = canonical_covering_map(alpha);
    auto             image = eval_regular(rho, p.dx);
    CHECK(image.intersects(alpha.accept_sets()[0]) == !disjoint(p.dx, p.dy));
  }
}
