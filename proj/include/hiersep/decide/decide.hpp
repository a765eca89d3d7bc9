#pragma once

// Covering, separation and membership at levels 0, 1/2, 1 and 3/2 of the
// concatenation hierarchy over a basis given by an oracle.
//
// With alpha the transition monoid of (L_0, L_1, ..., L_n) and rho the
// rating map into 2^M sending a to {alpha(a)}, rho(K) meets F_i iff K meets
// L_i. At the lattice levels (1/2, 3/2), L_0 is coverable iff every (s, T)
// of the pointed imprint with s in F_0 has T missing some F_i. At level 1
// the same test runs on the optimal imprint of A*, restricted to the T
// meeting F_0. Maximal elements suffice, since subsets inherit avoidance.

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hiersep/basis/oracle.hpp"
#include "hiersep/engines/saturate.hpp"
#include "hiersep/lang/dfa.hpp"
#include "hiersep/lang/monoid.hpp"
#include "hiersep/refcheck/refcheck.hpp"

namespace hiersep {

  enum class Level { zero, half, one, three_halves };

  Level       parse_level(std::string_view text);
  std::string to_string(Level level);

  enum class QueryKind { separate, cover, member };

  std::string to_string(QueryKind kind);
  QueryKind   parse_query_kind(std::string_view text);

  struct Witness {
    // Level 0: the union of length classes mod `modulus` given by `residues`.
    std::optional<std::size_t> modulus;
    std::vector<std::size_t>   residues;
    // Higher levels, negative answers: the imprint element (element, set)
    // with element in F_0 and set meeting every other F_i. At level 1 the
    // element is absent. Monoid elements are given by their least word.
    std::optional<Word> element;
    std::vector<Word>   set;
    // Level 1/2, positive separation answers: an explicit separator found
    // by bounded search.
    std::optional<SeparatorCandidate> separator;

    friend bool operator==(Witness const&, Witness const&) = default;
  };

  struct VerdictStats {
    std::size_t monoid_size     = 0;
    std::size_t rounds          = 0;
    std::size_t products        = 0;
    std::size_t peak_antichain  = 0;
    std::size_t aux_iopti_calls = 0;
    double      wall_ms         = 0;

    friend bool operator==(VerdictStats const&, VerdictStats const&) = default;
  };

  struct Verdict {
    QueryKind              kind   = QueryKind::separate;
    Level                  level  = Level::zero;
    bool                   answer = false;
    std::optional<Witness> witness;
    VerdictStats           stats;

    friend bool operator==(Verdict const&, Verdict const&) = default;
  };

  // The imprint behind the covering test for the given languages: pointed
  // (M x 2^M) at levels 1/2 and 3/2, a subset of 2^M at level 1.
  struct ImprintDump {
    Level                                   level;
    MonoidMorphism                          alpha;
    std::vector<std::pair<MonoidElem, ElemSet>> pointed;
    std::vector<ElemSet>                    unpointed;
    VerdictStats                            stats;
  };

  struct DecideOptions {
    Budget budget;
    // Attach an explicit separator to positive level 1/2 separation answers
    // when a bounded search finds one.
    bool        search_separator = false;
    std::size_t search_dmax      = 4;
    std::size_t search_nmax      = 3;
    std::size_t search_union     = 4;
    // When set, receives the imprint the covering test ran on.
    std::optional<ImprintDump>* imprint_out = nullptr;
  };

  Verdict coverable(Level                   level,
                    Dfa const&              l0,
                    std::vector<Dfa> const& others,
                    BasisOracle const&      oracle,
                    DecideOptions const&    options = {});

  Verdict separable(Level                level,
                    Dfa const&           l1,
                    Dfa const&           l2,
                    BasisOracle const&   oracle,
                    DecideOptions const& options = {});

  Verdict member(Level level, Dfa const& l, BasisOracle const& oracle, DecideOptions const& options = {});

  ImprintDump compute_imprint(Level                   level,
                              std::vector<Dfa> const& languages,
                              BasisOracle const&      oracle,
                              DecideOptions const&    options = {});

  // The unpointed imprint {T : (s, T) in P} as a downset of 2^M; the
  // level 1 imprint is returned as is.
  std::vector<ElemSet> unpointed_imprint(ImprintDump const& dump);

}  // namespace hiersep
