#pragma once

// JSON form of verdicts and imprints. Words are spelled over the query
// alphabet, the empty word as "".

#include <json.hpp>

#include "hiersep/decide/decide.hpp"
#include "hiersep/lang/alphabet.hpp"

namespace hiersep {

  nlohmann::json witness_to_json(Witness const& w, Alphabet const& alphabet);
  Witness        witness_from_json(nlohmann::json const& j, Alphabet const& alphabet);

  nlohmann::json stats_to_json(VerdictStats const& s);
  VerdictStats   stats_from_json(nlohmann::json const& j);

  // Keys: command, level, basis, answer, witness (optional), stats
  // (optional).
  nlohmann::json verdict_to_json(Verdict const&  v,
                                 Alphabet const& alphabet,
                                 std::string_view basis,
                                 bool            with_stats = true);
  Verdict        verdict_from_json(nlohmann::json const& j, Alphabet const& alphabet);

  // {"monoid": [least word of each element], "maximal": [...]}, with pointed
  // elements as [s, [t...]] and unpointed ones as [t...].
  nlohmann::json imprint_to_json(ImprintDump const& dump, Alphabet const& alphabet);

}  // namespace hiersep
