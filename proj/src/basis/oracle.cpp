#include "hiersep/basis/oracle.hpp"

namespace hiersep {

  std::unique_ptr<BasisOracle> make_oracle(std::string_view name) {
    if (name == "mod") {
      return std::make_unique<ModOracle>();
    }
    if (name == "gr" || name == "amod") {
      throw UnsupportedError("unsupported basis: " + std::string(name));
    }
    throw InputError("unknown basis: " + std::string(name));
  }

}  // namespace hiersep
