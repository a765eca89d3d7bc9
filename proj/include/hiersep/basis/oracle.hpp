#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "hiersep/basis/mod.hpp"

namespace hiersep {

  // A basis class C given through its separation problem. iopti(oracle, rho)
  // is the value I_C[rho]: the least rho(L) over the languages L of C that
  // contain the empty word.
  class BasisOracle {
   public:
    virtual ~BasisOracle() = default;

    virtual std::string name() const = 0;
    virtual bool        separates(Dfa const& l1, Dfa const& l2) const = 0;

    // When true, I_C[rho] = rho(A)^omega + 1_R and iopti skips the
    // separation queries.
    virtual bool uses_length_formula() const {
      return false;
    }

    Budget budget;
  };

  class ModOracle final : public BasisOracle {
   public:
    std::string name() const override {
      return "mod";
    }
    bool separates(Dfa const& l1, Dfa const& l2) const override {
      return mod_separation(l1, l2, budget).separable;
    }
    bool uses_length_formula() const override {
      return true;
    }
  };

  // Computes I_C[rho] only through separation queries.
  class SeparationOracle final : public BasisOracle {
   public:
    SeparationOracle(std::string name, SeparationProcedure sep)
        : name_(std::move(name)), sep_(std::move(sep)) {}

    std::string name() const override {
      return name_;
    }
    bool separates(Dfa const& l1, Dfa const& l2) const override {
      return sep_(l1, l2);
    }

   private:
    std::string         name_;
    SeparationProcedure sep_;
  };

  // "mod"; "gr" and "amod" are reserved and raise UnsupportedError.
  std::unique_ptr<BasisOracle> make_oracle(std::string_view name);

  template <IdempotentSemiring SR>
  typename SR::element_type iopti(BasisOracle const& oracle, RatingMap<SR> const& rho) {
    if (oracle.uses_length_formula()) {
      return mod_iopti(rho, oracle.budget.max_iterations);
    }
    return generic_iopti(
        rho, [&](Dfa const& x, Dfa const& y) { return oracle.separates(x, y); }, oracle.budget);
  }

}  // namespace hiersep
