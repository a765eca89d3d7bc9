#include <doctest.h>

#include "hiersep/engines/audit.hpp"
#include "hiersep/engines/bpol.hpp"
#include "hiersep/engines/pbpol.hpp"
#include "hiersep/engines/pol.hpp"
#include "hiersep/lang/dfa.hpp"
#include "hiersep/semiring/table_semiring.hpp"

using namespace hiersep;

namespace {

  struct Parity {
    Alphabet                 ab{"a"};
    std::vector<Dfa>         langs{compile("(aa)*", ab)};
    MonoidMorphism           alpha = transition_monoid(langs);
    RatingMap<PowerSemiring> rho   = canonical_covering_map(alpha);
    ModOracle                oracle;

    ElemSet set(std::initializer_list<std::size_t> xs) const {
      return ElemSet(2, xs);
    }
    PointedDownSet<PowerSemiring> pointed(
        std::vector<std::pair<MonoidElem, ElemSet>> xs) const {
      return PointedDownSet<PowerSemiring>::of(rho.semiring(), std::move(xs));
    }
    DownSet<PowerSemiring> down(std::vector<ElemSet> xs) const {
      return DownSet<PowerSemiring>::of(rho.semiring(), std::move(xs));
    }
  };

  // M = {1, z} with z absorbing; a -> 1, b -> z: recognizes a* and A*bA*.
  struct NoB {
    Alphabet                 ab{"ab"};
    std::vector<Dfa>         langs{compile("a*", ab), compile("(a|b)*b(a|b)*", ab)};
    MonoidMorphism           alpha = transition_monoid(langs);
    RatingMap<PowerSemiring> rho   = canonical_covering_map(alpha);
    ModOracle                oracle;
  };

}  // namespace

TEST_CASE("parity morphism layout") {
  Parity p;
  REQUIRE(p.alpha.monoid().size() == 2);
  CHECK(p.alpha.letter_image(0) == 1);
  CHECK(p.alpha.accept_sets()[0] == p.set({0}));
}

TEST_CASE("pol imprint of unary parity") {
  Parity p;
  auto   got = pol_imprint(p.alpha, p.rho, p.oracle);
  CHECK(got == p.pointed({{0, p.set({0})}, {1, p.set({1})}}));
  CHECK(got.contains(p.rho.semiring(), 0, p.set({})));
  CHECK(got.contains(p.rho.semiring(), 1, p.set({})));
  CHECK_FALSE(got.contains(p.rho.semiring(), 0, p.set({0, 1})));
  CHECK(audit_pol(p.alpha, p.rho, p.oracle, got).empty());
}

TEST_CASE("bpol iopti and opti of unary parity") {
  Parity p;
  auto   core = bpol_iopti(p.rho, p.oracle);
  CHECK(core == p.down({p.set({0})}));
  auto opti = bpol_opti(p.rho, core);
  CHECK(opti == p.down({p.set({0}), p.set({1})}));
  CHECK(audit_bpol_iopti(p.rho, p.oracle, core).empty());
  CHECK(audit_bpol_opti(p.rho, core, opti).empty());
}

TEST_CASE("first bpol filter round of unary parity") {
  Parity      p;
  auto const& sr  = p.rho.semiring();
  auto        all = p.down({p.set({0, 1})});
  auto        aux = mod_iopti(aux_bpol_map(p.rho, all));
  REQUIRE(aux.size() == 2);
  // {({0}, all four subsets), ({0}, ↓{0})}
  CHECK(aux[0].first == p.set({0}));
  CHECK(aux[1].first == p.set({0}));
  std::vector<DownSet<PowerSemiring>> seconds{aux[0].second, aux[1].second};
  std::sort(seconds.begin(), seconds.end(), [&](auto const& x, auto const& y) {
    return y.includes(sr, x) && !(x == y);
  });
  CHECK(seconds[0] == p.down({p.set({0})}));
  CHECK(seconds[1] == all);
}

TEST_CASE("pbpol of unary parity") {
  Parity p;
  auto   core = pbpol_iopti(p.alpha, p.rho, p.oracle);
  CHECK(core == p.pointed({{0, p.set({0})}}));
  CHECK(core.contains(p.rho.semiring(), 0, p.set({})));
  auto imprint = pbpol_pointed_imprint(p.alpha, p.rho, core);
  CHECK(imprint == p.pointed({{0, p.set({0})}, {1, p.set({1})}}));
  CHECK(audit_pbpol_iopti(p.alpha, p.rho, p.oracle, core).empty());
  CHECK(audit_pbpol_imprint(p.alpha, p.rho, core, imprint).empty());
}

TEST_CASE("a* against A*bA*") {
  NoB n;
  REQUIRE(n.alpha.monoid().size() == 2);
  auto const& sr = n.rho.semiring();
  ElemSet     one(2, {0}), z(2, {1}), both(2, {0, 1});

  auto pol = pol_imprint(n.alpha, n.rho, n.oracle);
  // The unit class a* is rated {1, z}: every Pol cover piece containing long
  // a-words also contains words with b.
  CHECK(pol.contains(sr, 0, both));

  auto core = bpol_iopti(n.rho, n.oracle);
  CHECK(core == DownSet<PowerSemiring>::of(sr, {one, z}));
  auto opti = bpol_opti(n.rho, core);
  CHECK(opti == DownSet<PowerSemiring>::of(sr, {one, z}));

  auto pcore = pbpol_iopti(n.alpha, n.rho, n.oracle);
  auto pimp  = pbpol_pointed_imprint(n.alpha, n.rho, pcore);
  CHECK_FALSE(pimp.contains(sr, 0, both));
  CHECK(audit_pbpol_iopti(n.alpha, n.rho, n.oracle, pcore).empty());
}

TEST_CASE("degenerate trivial semiring") {
  auto                   sr = std::make_shared<IdemSemiring const>(IdemSemiring::trivial());
  RatingMap<IdemSemiring> rho(sr, {0, 0});
  ModOracle               oracle;
  CHECK(mod_iopti(rho) == 0);
  auto core = bpol_iopti(rho, oracle);
  CHECK(core.maximal() == std::vector<std::uint32_t>{0});
  auto m     = std::make_shared<FiniteMonoid const>(FiniteMonoid::cyclic_group(1));
  MonoidMorphism alpha(m, {0, 0});
  auto pol = pol_imprint(alpha, rho, oracle);
  CHECK(pol.size() == 1);
  auto pb = pbpol_pointed_imprint(alpha, rho, pbpol_iopti(alpha, rho, oracle));
  CHECK(pb.size() == 1);
}
