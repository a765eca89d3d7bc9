#pragma once

#include <cstddef>

namespace hiersep {

  // Resource caps shared by the front end and the fixpoint engines.
  struct Budget {
    std::size_t max_states     = 4096;
    std::size_t max_monoid     = 20000;
    std::size_t max_antichain  = 50000;
    std::size_t max_iterations = 100000;
  };

}  // namespace hiersep
