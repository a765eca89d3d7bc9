#pragma once

// Post hoc checks that an engine output is closed under each rule of its
// fixpoint characterization. Each function lists the violated rules.

#include <string>
#include <vector>

#include "hiersep/engines/bpol.hpp"
#include "hiersep/engines/pbpol.hpp"
#include "hiersep/engines/pol.hpp"

namespace hiersep {

  template <IdempotentSemiring SR>
  bool closed_under_products(SR const& sr, DownSet<SR> const& s) {
    for (auto const& x : s.maximal()) {
      for (auto const& y : s.maximal()) {
        if (!s.contains(sr, sr.mul(x, y))) {
          return false;
        }
      }
    }
    return true;
  }

  template <IdempotentSemiring SR>
  bool closed_under_products(FiniteMonoid const& m, SR const& sr, PointedDownSet<SR> const& s) {
    for (auto const& [p, x] : s.maximal()) {
      for (auto const& [q, y] : s.maximal()) {
        if (!s.contains(sr, m.mul(p, q), sr.mul(x, y))) {
          return false;
        }
      }
    }
    return true;
  }

  namespace detail {

    template <IdempotentSemiring SR>
    bool has_trivial_elements(MonoidMorphism const&     alpha,
                              RatingMap<SR> const&      rho,
                              PointedDownSet<SR> const& s) {
      SR const& sr = rho.semiring();
      if (!s.contains(sr, alpha.monoid().unit(), sr.one())) {
        return false;
      }
      for (Letter a = 0; a < rho.num_letters(); ++a) {
        if (!s.contains(sr, alpha.letter_image(a), rho.letter_image(a))) {
          return false;
        }
      }
      return true;
    }

  }  // namespace detail

  template <IdempotentSemiring SR>
  std::vector<std::string> audit_pol(MonoidMorphism const&     alpha,
                                     RatingMap<SR> const&      rho,
                                     BasisOracle const&        oracle,
                                     PointedDownSet<SR> const& s) {
    std::vector<std::string> out;
    SR const&                sr = rho.semiring();
    if (!detail::has_trivial_elements(alpha, rho, s)) {
      out.push_back("trivial elements");
    }
    if (!closed_under_products(alpha.monoid(), sr, s)) {
      out.push_back("multiplication");
    }
    if (!s.contains(sr, alpha.monoid().unit(), iopti(oracle, rho))) {
      out.push_back("basis operation");
    }
    return out;
  }

  template <EngineSemiring SR>
  std::vector<std::string> audit_bpol_iopti(RatingMap<SR> const& rho,
                                            BasisOracle const&   oracle,
                                            DownSet<SR> const&   s,
                                            Budget const&        budget = {}) {
    std::vector<std::string> out;
    EngineStats              st;
    auto                     kept = bpol_filter(rho, oracle, s, budget, st);
    if (!kept.includes(rho.semiring(), s)) {
      out.push_back("completeness condition");
    }
    return out;
  }

  template <IdempotentSemiring SR>
  std::vector<std::string> audit_bpol_opti(RatingMap<SR> const& rho,
                                           DownSet<SR> const&   iopti_set,
                                           DownSet<SR> const&   s) {
    std::vector<std::string> out;
    SR const&                sr = rho.semiring();
    if (!s.includes(sr, iopti_set)) {
      out.push_back("contains the auxiliary value");
    }
    bool letters = s.contains(sr, sr.one());
    for (auto const& r : rho.letter_images()) {
      letters = letters && s.contains(sr, r);
    }
    if (!letters) {
      out.push_back("trivial elements");
    }
    if (!closed_under_products(sr, s)) {
      out.push_back("multiplication");
    }
    return out;
  }

  template <EngineSemiring SR>
  std::vector<std::string> audit_pbpol_iopti(MonoidMorphism const&     alpha,
                                             RatingMap<SR> const&      rho,
                                             BasisOracle const&        oracle,
                                             PointedDownSet<SR> const& s) {
    std::vector<std::string> out;
    SR const&                sr = rho.semiring();
    if (!closed_under_products(alpha.monoid(), sr, s)) {
      out.push_back("multiplication");
    }
    auto                   aux = iopti(oracle, aux_pbpol_map(alpha, rho, s));
    MaximalIdempotents<SR> idempotents(sr);
    bool                   basis_op = true;
    for (auto const& [r, t] : aux) {
      basis_op = basis_op && s.includes(sr, t);
    }
    if (!basis_op) {
      out.push_back("basis operation");
    }
    bool nested_op = true;
    for (auto const& [e, q] : pbpol_demands(alpha.monoid(), sr, aux, idempotents)) {
      nested_op = nested_op && s.contains(sr, e, q);
    }
    if (!nested_op) {
      out.push_back("nested operation");
    }
    return out;
  }

  template <IdempotentSemiring SR>
  std::vector<std::string> audit_pbpol_imprint(MonoidMorphism const&     alpha,
                                               RatingMap<SR> const&      rho,
                                               PointedDownSet<SR> const& iopti_set,
                                               PointedDownSet<SR> const& s) {
    std::vector<std::string> out;
    if (!s.includes(rho.semiring(), iopti_set)) {
      out.push_back("contains the auxiliary value");
    }
    if (!detail::has_trivial_elements(alpha, rho, s)) {
      out.push_back("trivial elements");
    }
    if (!closed_under_products(alpha.monoid(), rho.semiring(), s)) {
      out.push_back("multiplication");
    }
    return out;
  }

}  // namespace hiersep
