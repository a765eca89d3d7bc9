#include <doctest.h>

#include "hiersep/decide/decide.hpp"
#include "hiersep/refcheck/refcheck.hpp"
#include "support/random_inputs.hpp"

using namespace hiersep;
using namespace hiersep::testing;

namespace {
  ModOracle const oracle;
  Level const     levels[] = {Level::zero, Level::half, Level::one, Level::three_halves};
}  // namespace

TEST_CASE("separation is monotone along the hierarchy") {
  auto suite = regex_pair_suite(9101, 200, 6);
  int  counts[4]{};
  for (auto const& p : suite) {
    bool previous = false;
    bool meets    = !disjoint(p.dx, p.dy);
    for (int i = 0; i < 4; ++i) {
      bool now = separable(levels[i], p.dx, p.dy, oracle).answer;
      CHECK((!previous || now));
      if (meets) {
        CHECK_FALSE(now);
      }
      counts[i] += now;
      previous = now;
    }
    CHECK(separable(Level::one, p.dx, p.dy, oracle).answer ==
          separable(Level::one, p.dy, p.dx, oracle).answer);
    CHECK(separable(Level::zero, p.dx, p.dy, oracle).answer ==
          separable(Level::zero, p.dy, p.dx, oracle).answer);
  }
  // The hierarchy is strict on this suite.
  CHECK(counts[0] < counts[1]);
  CHECK(counts[1] < counts[3]);
}

TEST_CASE("covering is monotone in both arguments") {
  auto suite = regex_pair_suite(9201, 120, 5);
  for (std::size_t i = 0; i + 2 < suite.size(); i += 3) {
    auto const& x = suite[i];
    auto const& y = suite[i + 1];
    auto const& z = suite[i + 2];
    if (x.alphabet != y.alphabet || x.alphabet != z.alphabet) {
      continue;
    }
    for (auto l : {Level::half, Level::one, Level::three_halves}) {
      bool one_constraint = coverable(l, x.dx, {x.dy}, oracle).answer;
      CHECK(one_constraint == separable(l, x.dx, x.dy, oracle).answer);
      bool two_constraints = coverable(l, x.dx, {x.dy, y.dx}, oracle).answer;
      CHECK((!one_constraint || two_constraints));
      CHECK(coverable(l, x.dx, {y.dx, x.dy}, oracle).answer == two_constraints);
      bool smaller = coverable(l, intersect(x.dx, z.dx), {x.dy, y.dx}, oracle).answer;
      CHECK((!two_constraints || smaller));
    }
  }
}

TEST_CASE("membership") {
  auto suite = regex_pair_suite(9301, 150, 6);
  for (auto const& p : suite) {
    bool previous = false;
    for (auto l : levels) {
      bool now = member(l, p.dx, oracle).answer;
      CHECK((!previous || now));
      previous = now;
    }
    CHECK(member(Level::one, p.dx, oracle).answer == member(Level::one, complement(p.dx), oracle).answer);
    CHECK(member(Level::zero, p.dx, oracle).answer == member(Level::zero, complement(p.dx), oracle).answer);
  }
}

TEST_CASE("witnesses are sound") {
  auto          suite = regex_pair_suite(9401, 150, 5);
  DecideOptions options;
  options.search_separator = true;
  int found                = 0;
  for (auto const& p : suite) {
    auto v0 = separable(Level::zero, p.dx, p.dy, oracle, options);
    if (v0.answer) {
      REQUIRE(v0.witness);
      REQUIRE(v0.witness->modulus);
      auto k = length_residue_dfa(p.dx.num_letters(), *v0.witness->modulus, v0.witness->residues);
      CHECK(verify_separator(k, p.dx, p.dy));
    }
    auto v = separable(Level::half, p.dx, p.dy, oracle, options);
    if (v.witness && v.witness->separator) {
      ++found;
      CHECK(v.answer);
      CHECK(verify_separator(denotation(*v.witness->separator, p.dx.num_letters()), p.dx, p.dy));
    }
  }
  CHECK(found > 5);
}
