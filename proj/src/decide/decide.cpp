#include "hiersep/decide/decide.hpp"

#include "hiersep/engines/bpol.hpp"
#include "hiersep/engines/pbpol.hpp"
#include "hiersep/engines/pol.hpp"
#include "hiersep/rating/rating_map.hpp"

namespace hiersep {

  Level parse_level(std::string_view text) {
    if (text == "0") {
      return Level::zero;
    }
    if (text == "1/2") {
      return Level::half;
    }
    if (text == "1") {
      return Level::one;
    }
    if (text == "3/2") {
      return Level::three_halves;
    }
    if (text == "5/2" || text == "2") {
      throw UnsupportedError("unsupported level: " + std::string(text));
    }
    throw InputError("unknown level: " + std::string(text));
  }

  std::string to_string(Level level) {
    switch (level) {
      case Level::zero: return "0";
      case Level::half: return "1/2";
      case Level::one: return "1";
      case Level::three_halves: return "3/2";
    }
    return "?";
  }

  std::string to_string(QueryKind kind) {
    switch (kind) {
      case QueryKind::separate: return "separate";
      case QueryKind::cover: return "cover";
      case QueryKind::member: return "member";
    }
    return "?";
  }

  QueryKind parse_query_kind(std::string_view text) {
    if (text == "separate") {
      return QueryKind::separate;
    }
    if (text == "cover") {
      return QueryKind::cover;
    }
    if (text == "member") {
      return QueryKind::member;
    }
    throw InputError("unknown query kind: " + std::string(text));
  }

  namespace {

    using Clock = std::chrono::steady_clock;

    void absorb(VerdictStats& out, EngineStats const& st) {
      out.rounds += st.rounds;
      out.products += st.products;
      out.peak_antichain = std::max(out.peak_antichain, st.peak_antichain);
      out.aux_iopti_calls += st.aux_iopti_calls;
    }

    double millis_since(Clock::time_point start) {
      return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }

    bool meets_all_others(ElemSet const& t, std::vector<ElemSet> const& f) {
      for (std::size_t i = 1; i < f.size(); ++i) {
        if (!t.intersects(f[i])) {
          return false;
        }
      }
      return true;
    }

    std::vector<Word> words_of(MonoidMorphism const& alpha, ElemSet const& t) {
      std::vector<Word> out;
      t.for_each([&](std::size_t s) { out.push_back(alpha.representative(MonoidElem(s)).value()); });
      return out;
    }

    void check_alphabets(Dfa const& l0, std::vector<Dfa> const& others) {
      for (auto const& d : others) {
        if (d.num_letters() != l0.num_letters()) {
          throw InputError("languages over different alphabets");
        }
      }
    }

    ImprintDump imprint_for(Level level, std::vector<Dfa> const& languages, BasisOracle const& oracle,
                            DecideOptions const& options) {
      if (level == Level::zero) {
        throw UnsupportedError("imprints are computed at levels 1/2, 1 and 3/2 only");
      }
      auto        start = Clock::now();
      auto        alpha = transition_monoid(languages, options.budget);
      auto        rho   = canonical_covering_map(alpha);
      EngineStats st;
      ImprintDump dump{level, alpha, {}, {}, {}};
      if (level == Level::half) {
        dump.pointed = pol_imprint(alpha, rho, oracle, options.budget, &st).maximal();
      } else if (level == Level::three_halves) {
        auto core    = pbpol_iopti(alpha, rho, oracle, options.budget, &st);
        dump.pointed = pbpol_pointed_imprint(alpha, rho, std::move(core), options.budget, &st).maximal();
      } else {
        auto core      = bpol_iopti(rho, oracle, options.budget, &st);
        dump.unpointed = bpol_opti(rho, std::move(core), options.budget, &st).maximal();
      }
      absorb(dump.stats, st);
      dump.stats.monoid_size = alpha.monoid().size();
      dump.stats.wall_ms     = millis_since(start);
      return dump;
    }

  }  // namespace

  ImprintDump compute_imprint(Level                   level,
                              std::vector<Dfa> const& languages,
                              BasisOracle const&      oracle,
                              DecideOptions const&    options) {
    if (languages.empty()) {
      throw InputError("at least one language is needed");
    }
    check_alphabets(languages.front(), languages);
    return imprint_for(level, languages, oracle, options);
  }

  std::vector<ElemSet> unpointed_imprint(ImprintDump const& dump) {
    if (dump.level == Level::one) {
      return dump.unpointed;
    }
    std::vector<ElemSet> xs;
    for (auto const& p : dump.pointed) {
      xs.push_back(p.second);
    }
    PowerSemiring sr(dump.alpha.monoid_ptr());
    return maximal_elements(sr, std::move(xs));
  }

  Verdict coverable(Level                   level,
                    Dfa const&              l0,
                    std::vector<Dfa> const& others,
                    BasisOracle const&      oracle,
                    DecideOptions const&    options) {
    if (level == Level::zero) {
      throw UnsupportedError("covering is not supported at level 0");
    }
    if (others.empty()) {
      throw InputError("covering needs at least one constraint language");
    }
    check_alphabets(l0, others);
    std::vector<Dfa> all{l0};
    all.insert(all.end(), others.begin(), others.end());
    auto    dump = imprint_for(level, all, oracle, options);
    auto    f    = dump.alpha.accept_sets();
    Verdict v;
    v.kind   = QueryKind::cover;
    v.level  = level;
    v.answer = true;
    v.stats  = dump.stats;
    if (options.imprint_out) {
      *options.imprint_out = dump;
    }
    if (level == Level::one) {
      for (auto const& t : dump.unpointed) {
        if (t.intersects(f[0]) && meets_all_others(t, f)) {
          v.answer  = false;
          v.witness = Witness{};
          v.witness->set = words_of(dump.alpha, t);
          break;
        }
      }
    } else {
      for (auto const& [s, t] : dump.pointed) {
        if (f[0].test(s) && meets_all_others(t, f)) {
          v.answer  = false;
          v.witness = Witness{};
          v.witness->element = dump.alpha.representative(s).value();
          v.witness->set     = words_of(dump.alpha, t);
          break;
        }
      }
    }
    return v;
  }

  Verdict separable(Level                level,
                    Dfa const&           l1,
                    Dfa const&           l2,
                    BasisOracle const&   oracle,
                    DecideOptions const& options) {
    if (l1.num_letters() != l2.num_letters()) {
      throw InputError("languages over different alphabets");
    }
    Verdict v;
    if (level == Level::zero) {
      auto start = Clock::now();
      v.level    = level;
      v.answer   = oracle.separates(l1, l2);
      if (v.answer && oracle.uses_length_formula()) {
        auto sep  = mod_separation(l1, l2, options.budget);
        v.witness = Witness{};
        v.witness->modulus  = sep.modulus;
        v.witness->residues = sep.residues;
      }
      v.stats.wall_ms = millis_since(start);
    } else {
      v = coverable(level, l1, {l2}, oracle, options);
      if (v.answer && level == Level::half && options.search_separator) {
        auto found = pol_mod_separator_search(l1, l2, options.search_dmax, options.search_nmax,
                                              options.search_union, options.budget);
        if (found) {
          v.witness            = Witness{};
          v.witness->separator = std::move(found);
        }
      }
    }
    v.kind = QueryKind::separate;
    return v;
  }

  Verdict member(Level level, Dfa const& l, BasisOracle const& oracle, DecideOptions const& options) {
    auto v = separable(level, l, complement(l), oracle, options);
    v.kind = QueryKind::member;
    return v;
  }

}  // namespace hiersep
