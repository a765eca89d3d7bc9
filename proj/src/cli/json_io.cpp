#include "hiersep/cli/json_io.hpp"

namespace hiersep {

  using nlohmann::json;

  namespace {

    json words_to_json(std::vector<Word> const& ws, Alphabet const& alphabet) {
      json out = json::array();
      for (auto const& w : ws) {
        out.push_back(alphabet.spell(w));
      }
      return out;
    }

    std::vector<Word> words_from_json(json const& j, Alphabet const& alphabet) {
      std::vector<Word> out;
      for (auto const& s : j) {
        out.push_back(alphabet.word(s.get<std::string>()));
      }
      return out;
    }

  }  // namespace

  json witness_to_json(Witness const& w, Alphabet const& alphabet) {
    json j = json::object();
    if (w.modulus) {
      j["modulus"]  = *w.modulus;
      j["residues"] = w.residues;
    }
    if (w.element) {
      j["element"] = alphabet.spell(*w.element);
    }
    if (!w.set.empty()) {
      j["set"] = words_to_json(w.set, alphabet);
    }
    if (w.separator) {
      j["separator"] = {{"modulus", w.separator->modulus},
                        {"markers", words_to_json(w.separator->markers, alphabet)},
                        {"regex", to_regex(*w.separator, alphabet)}};
    }
    return j;
  }

  Witness witness_from_json(json const& j, Alphabet const& alphabet) {
    Witness w;
    if (j.contains("modulus")) {
      w.modulus  = j.at("modulus").get<std::size_t>();
      w.residues = j.at("residues").get<std::vector<std::size_t>>();
    }
    if (j.contains("element")) {
      w.element = alphabet.word(j.at("element").get<std::string>());
    }
    if (j.contains("set")) {
      w.set = words_from_json(j.at("set"), alphabet);
    }
    if (j.contains("separator")) {
      auto const& s = j.at("separator");
      w.separator   = SeparatorCandidate{s.at("modulus").get<std::size_t>(),
                                       words_from_json(s.at("markers"), alphabet)};
    }
    return w;
  }

  json stats_to_json(VerdictStats const& s) {
    return {{"monoid_size", s.monoid_size},       {"rounds", s.rounds},
            {"products", s.products},             {"peak_antichain", s.peak_antichain},
            {"aux_iopti_calls", s.aux_iopti_calls}, {"wall_ms", s.wall_ms}};
  }

  VerdictStats stats_from_json(json const& j) {
    VerdictStats s;
    s.monoid_size     = j.at("monoid_size").get<std::size_t>();
    s.rounds          = j.at("rounds").get<std::size_t>();
    s.products        = j.at("products").get<std::size_t>();
    s.peak_antichain  = j.at("peak_antichain").get<std::size_t>();
    s.aux_iopti_calls = j.at("aux_iopti_calls").get<std::size_t>();
    s.wall_ms         = j.at("wall_ms").get<double>();
    return s;
  }

  json verdict_to_json(Verdict const& v, Alphabet const& alphabet, std::string_view basis, bool with_stats) {
    json j = {{"command", to_string(v.kind)},
              {"level", to_string(v.level)},
              {"basis", std::string(basis)},
              {"answer", v.answer}};
    if (v.witness) {
      j["witness"] = witness_to_json(*v.witness, alphabet);
    }
    if (with_stats) {
      j["stats"] = stats_to_json(v.stats);
    }
    return j;
  }

  Verdict verdict_from_json(json const& j, Alphabet const& alphabet) {
    Verdict v;
    v.kind   = parse_query_kind(j.at("command").get<std::string>());
    v.level  = parse_level(j.at("level").get<std::string>());
    v.answer = j.at("answer").get<bool>();
    if (j.contains("witness")) {
      v.witness = witness_from_json(j.at("witness"), alphabet);
    }
    if (j.contains("stats")) {
      v.stats = stats_from_json(j.at("stats"));
    }
    return v;
  }

  json imprint_to_json(ImprintDump const& dump, Alphabet const& alphabet) {
    json monoid = json::array();
    for (MonoidElem s = 0; s < dump.alpha.monoid().size(); ++s) {
      auto w = dump.alpha.representative(s);
      monoid.push_back(w ? json(alphabet.spell(*w)) : json(nullptr));
    }
    json maximal = json::array();
    if (dump.level == Level::one) {
      for (auto const& t : dump.unpointed) {
        maximal.push_back(t.members());
      }
    } else {
      for (auto const& [s, t] : dump.pointed) {
        maximal.push_back(json::array({s, t.members()}));
      }
    }
    return {{"level", to_string(dump.level)}, {"monoid", monoid}, {"maximal", maximal}};
  }

}  // namespace hiersep
