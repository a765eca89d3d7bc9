#include "hiersep/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "hiersep/basis/oracle.hpp"
#include "hiersep/cli/json_io.hpp"
#include "hiersep/decide/decide.hpp"
#include "hiersep/error.hpp"

namespace hiersep::cli {

  namespace {

    struct Query {
      std::string              command;
      std::string              level;
      std::string              alphabet;
      std::string              basis = "mod";
      std::vector<std::string> regexes;
      bool                     json          = false;
      bool                     witness       = false;
      bool                     emit_imprint  = false;
      bool                     no_stats      = false;
      std::size_t              max_states    = Budget{}.max_states;
      std::size_t              max_antichain = Budget{}.max_antichain;
    };

    void bind(CLI::App* sub, Query& q) {
      sub->add_option("--level", q.level, "Hierarchy level: 0, 1/2, 1 or 3/2")->required();
      sub->add_option("--alphabet", q.alphabet, "Letters, e.g. ab")->required();
      sub->add_option("--basis", q.basis, "Basis class (mod)")->capture_default_str();
      sub->add_flag("--json", q.json, "Print a JSON object");
      sub->add_flag("--witness", q.witness, "Report a witness when one is available");
      sub->add_flag("--emit-imprint", q.emit_imprint, "Print the imprint behind the answer");
      sub->add_flag("--no-stats", q.no_stats, "Omit statistics");
      sub->add_option("--max-states", q.max_states, "DFA state budget")->capture_default_str();
      sub->add_option("--max-antichain", q.max_antichain, "Antichain budget")->capture_default_str();
      sub->add_option("regex", q.regexes, "Regular expressions")->required();
    }

    std::string spell(Alphabet const& alphabet, Word const& w) {
      return w.empty() ? "e" : alphabet.spell(w);
    }

    std::string format_set(ElemSet const& t) {
      std::string out = "{";
      bool        first = true;
      t.for_each([&](std::size_t s) {
        out += (first ? "" : ",") + std::to_string(s);
        first = false;
      });
      return out + "}";
    }

    std::string format_words(Alphabet const& alphabet, std::vector<Word> const& ws) {
      std::string out = "{";
      for (std::size_t i = 0; i < ws.size(); ++i) {
        out += (i ? "," : "") + spell(alphabet, ws[i]);
      }
      return out + "}";
    }

    void print_witness(std::ostream& out, Witness const& w, Alphabet const& alphabet) {
      if (w.modulus) {
        out << "WITNESS: d=" << *w.modulus << " residues=";
        for (std::size_t i = 0; i < w.residues.size(); ++i) {
          out << (i ? "," : "") << w.residues[i];
        }
        out << '\n';
      }
      if (!w.set.empty()) {
        out << "WITNESS: blocking ";
        if (w.element) {
          out << "(" << spell(alphabet, *w.element) << "," << format_words(alphabet, w.set) << ")";
        } else {
          out << format_words(alphabet, w.set);
        }
        out << '\n';
      }
      if (w.separator) {
        out << "WITNESS: separator " << to_regex(*w.separator, alphabet) << '\n';
      }
    }

    void print_imprint(std::ostream& out, ImprintDump const& dump, Alphabet const& alphabet) {
      out << "MONOID:";
      for (MonoidElem s = 0; s < dump.alpha.monoid().size(); ++s) {
        auto w = dump.alpha.representative(s);
        out << ' ' << s << '=' << (w ? spell(alphabet, *w) : "?");
      }
      out << "\nIMPRINT:";
      if (dump.level == Level::one) {
        for (auto const& t : dump.unpointed) {
          out << ' ' << format_set(t);
        }
      } else {
        for (auto const& [s, t] : dump.pointed) {
          out << " (" << s << ',' << format_set(t) << ')';
        }
      }
      out << '\n';
    }

    void print_stats(std::ostream& out, VerdictStats const& s) {
      out << "STATS: monoid=" << s.monoid_size << " rounds=" << s.rounds << " products=" << s.products
          << " peak_antichain=" << s.peak_antichain << " aux_iopti_calls=" << s.aux_iopti_calls
          << " wall_ms=" << std::fixed << std::setprecision(3) << s.wall_ms << '\n';
    }

    std::string result_word(Verdict const& v) {
      switch (v.kind) {
        case QueryKind::separate: return v.answer ? "separable" : "not-separable";
        case QueryKind::cover: return v.answer ? "coverable" : "not-coverable";
        case QueryKind::member: return v.answer ? "member" : "not-member";
      }
      return "?";
    }

    void answer(Query const& q, std::ostream& out) {
      Alphabet const alphabet(q.alphabet);
      Level const    level  = parse_level(q.level);
      auto           oracle = make_oracle(q.basis);
      DecideOptions  options;
      options.budget.max_states    = q.max_states;
      options.budget.max_antichain = q.max_antichain;
      oracle->budget               = options.budget;
      options.search_separator     = q.witness;

      std::size_t const arity = q.regexes.size();
      bool const        arity_ok = (q.command == "member" && arity == 1)
                            || (q.command == "separate" && arity == 2)
                            || (q.command == "cover" && arity >= 2)
                            || (q.command == "imprint" && arity >= 1);
      if (!arity_ok) {
        throw InputError(q.command + ": wrong number of regular expressions (" + std::to_string(arity) + ")");
      }
      std::vector<Dfa> langs;
      for (auto const& r : q.regexes) {
        langs.push_back(compile(r, alphabet, options.budget));
      }

      if (q.command == "imprint") {
        auto dump = compute_imprint(level, langs, *oracle, options);
        if (q.json) {
          nlohmann::json j = {{"command", "imprint"},
                              {"level", to_string(level)},
                              {"basis", q.basis},
                              {"imprint", imprint_to_json(dump, alphabet)}};
          if (!q.no_stats) {
            j["stats"] = stats_to_json(dump.stats);
          }
          out << j.dump() << '\n';
        } else {
          print_imprint(out, dump, alphabet);
          if (!q.no_stats) {
            print_stats(out, dump.stats);
          }
        }
        return;
      }

      std::optional<ImprintDump> dump;
      if (q.emit_imprint) {
        options.imprint_out = &dump;
      }
      Verdict v;
      if (q.command == "member") {
        v = member(level, langs[0], *oracle, options);
      } else if (q.command == "separate") {
        v = separable(level, langs[0], langs[1], *oracle, options);
      } else {
        v = coverable(level, langs[0], {langs.begin() + 1, langs.end()}, *oracle, options);
      }
      if (!q.witness) {
        v.witness.reset();
      }
      if (q.json) {
        auto j = verdict_to_json(v, alphabet, q.basis, !q.no_stats);
        if (dump) {
          j["imprint"] = imprint_to_json(*dump, alphabet);
        }
        out << j.dump() << '\n';
        return;
      }
      out << "RESULT: " << result_word(v) << '\n';
      if (v.witness) {
        print_witness(out, *v.witness, alphabet);
      }
      if (dump) {
        print_imprint(out, *dump, alphabet);
      }
      if (!q.no_stats) {
        print_stats(out, v.stats);
      }
    }

    int guarded(std::ostream& err, auto&& body) {
      try {
        body();
        return exit_ok;
      } catch (InputError const& e) {
        err << "input error: " << e.what() << '\n';
        return exit_input;
      } catch (ResourceError const& e) {
        err << "resource error: " << e.what() << '\n';
        return exit_resource;
      } catch (UnsupportedError const& e) {
        err << "unsupported: " << e.what() << '\n';
        return exit_unsupported;
      } catch (std::exception const& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
      }
    }

    int run_batch(std::string const& path, std::size_t jobs, std::ostream& out, std::ostream& err) {
      std::ifstream in(path);
      if (!in) {
        err << "input error: cannot open " << path << '\n';
        return exit_input;
      }
      std::vector<std::vector<std::string>> queries;
      std::string                           line;
      while (std::getline(in, line)) {
        auto args = split_line(line);
        if (args.empty() || args[0].starts_with("#")) {
          continue;
        }
        queries.push_back(std::move(args));
      }
      std::vector<std::string> outs(queries.size()), errs(queries.size());
      std::vector<int>         codes(queries.size(), exit_ok);
      std::atomic<std::size_t> next{0};
      auto                     worker = [&] {
        for (std::size_t i; (i = next++) < queries.size();) {
          std::ostringstream o, e;
          if (!queries[i].empty() && queries[i][0] == "batch") {
            e << "input error: nested batch\n";
            codes[i] = exit_input;
          } else {
            codes[i] = run(queries[i], o, e);
          }
          outs[i] = o.str();
          errs[i] = e.str();
        }
      };
      std::vector<std::thread> pool;
      for (std::size_t t = 1; t < std::max<std::size_t>(jobs, 1); ++t) {
        pool.emplace_back(worker);
      }
      worker();
      for (auto& t : pool) {
        t.join();
      }
      int code = exit_ok;
      for (std::size_t i = 0; i < queries.size(); ++i) {
        out << outs[i];
        err << errs[i];
        code = std::max(code, codes[i]);
      }
      return code;
    }

  }  // namespace

  std::vector<std::string> split_line(std::string const& line) {
    std::vector<std::string> out;
    std::string              cur;
    bool                     in_quotes = false, have = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      char c = line[i];
      if (in_quotes) {
        if (c == '\\' && i + 1 < line.size()) {
          cur += line[++i];
        } else if (c == '"') {
          in_quotes = false;
        } else {
          cur += c;
        }
      } else if (c == '"') {
        in_quotes = have = true;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (have) {
          out.push_back(std::move(cur));
          cur.clear();
          have = false;
        }
      } else {
        cur += c;
        have = true;
      }
    }
    if (in_quotes) {
      throw InputError("unterminated quote in batch line");
    }
    if (have) {
      out.push_back(std::move(cur));
    }
    return out;
  }

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Separation, covering and membership for concatenation hierarchies over MOD",
                 "hiersep"};
    app.require_subcommand(1);
    Query q;
    for (auto const& [name, help] :
         {std::pair{"member", "Is L in the level?"},
          std::pair{"separate", "Is L1 separable from L2 at the level?"},
          std::pair{"cover", "Is L0 coverable with respect to L1, ..., Ln at the level?"},
          std::pair{"imprint", "Print the imprint of the languages at the level"}}) {
      bind(app.add_subcommand(name, help), q);
    }
    std::string batch_file;
    std::size_t jobs  = 1;
    auto*       batch = app.add_subcommand("batch", "Run one query per line of a file");
    batch->add_option("file", batch_file, "Query file")->required()->check(CLI::ExistingFile);
    batch->add_option("--jobs", jobs, "Worker threads")->capture_default_str();

    std::vector<char const*> argv{"hiersep"};
    for (auto const& a : args) {
      argv.push_back(a.c_str());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_input;
    }
    if (batch->parsed()) {
      return run_batch(batch_file, jobs, out, err);
    }
    q.command = app.get_subcommands().front()->get_name();
    return guarded(err, [&] { answer(q, out); });
  }

}  // namespace hiersep::cli
