#include "hiersep/lang/dfa.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "hiersep/error.hpp"

namespace hiersep {

  Dfa::Dfa(std::size_t        num_letters,
           std::size_t        num_states,
           State              initial,
           std::vector<State> delta,
           ElemSet            accepting)
      : num_letters_(num_letters),
        num_states_(num_states),
        initial_(initial),
        delta_(std::move(delta)),
        accepting_(std::move(accepting)) {
    if (num_letters_ == 0 || num_states_ == 0) {
      throw InputError("DFA needs at least one letter and one state");
    }
    if (delta_.size() != num_states_ * num_letters_) {
      throw InputError("DFA transition table has wrong size");
    }
    if (initial_ >= num_states_ || accepting_.universe() != num_states_) {
      throw InputError("DFA initial state or accepting set out of range");
    }
    for (auto q : delta_) {
      if (q >= num_states_) {
        throw InputError("DFA transition target out of range");
      }
    }
  }

  State Dfa::run(State q, Word const& w) const {
    for (auto a : w) {
      q = next(q, a);
    }
    return q;
  }

  namespace {

    // Breadth-first renumbering of the states reachable from the initial one.
    Dfa reachable_part(Dfa const& d) {
      std::size_t const  k = d.num_letters();
      std::vector<State> order;
      std::vector<State> index(d.num_states(), State(-1));
      index[d.initial()] = 0;
      order.push_back(d.initial());
      for (std::size_t i = 0; i < order.size(); ++i) {
        for (Letter a = 0; a < k; ++a) {
          State t = d.next(order[i], a);
          if (index[t] == State(-1)) {
            index[t] = static_cast<State>(order.size());
            order.push_back(t);
          }
        }
      }
      std::vector<State> delta(order.size() * k);
      ElemSet            acc(order.size());
      for (std::size_t i = 0; i < order.size(); ++i) {
        for (Letter a = 0; a < k; ++a) {
          delta[i * k + a] = index[d.next(order[i], a)];
        }
        if (d.is_accepting(order[i])) {
          acc.set(i);
        }
      }
      return Dfa(k, order.size(), 0, std::move(delta), std::move(acc));
    }

    // Hopcroft partition refinement on a DFA whose states are all reachable.
    std::vector<std::uint32_t> hopcroft_blocks(Dfa const& d) {
      std::size_t const n = d.num_states();
      std::size_t const k = d.num_letters();

      // inverse[a][q] = predecessors of q under a
      std::vector<std::vector<std::vector<State>>> inverse(
          k, std::vector<std::vector<State>>(n));
      for (State q = 0; q < n; ++q) {
        for (Letter a = 0; a < k; ++a) {
          inverse[a][d.next(q, a)].push_back(q);
        }
      }

      std::vector<std::uint32_t>      block(n);
      std::vector<std::vector<State>> blocks;
      {
        std::vector<State> acc, rej;
        for (State q = 0; q < n; ++q) {
          (d.is_accepting(q) ? acc : rej).push_back(q);
        }
        for (auto* b : {&acc, &rej}) {
          if (!b->empty()) {
            for (auto q : *b) {
              block[q] = static_cast<std::uint32_t>(blocks.size());
            }
            blocks.push_back(std::move(*b));
          }
        }
      }

      std::deque<std::pair<std::uint32_t, Letter>> work;
      std::vector<std::vector<bool>>               in_work;
      auto push = [&](std::uint32_t b, Letter a) {
        if (in_work.size() <= b) {
          in_work.resize(b + 1, std::vector<bool>(k, false));
        }
        if (!in_work[b][a]) {
          in_work[b][a] = true;
          work.emplace_back(b, a);
        }
      };
      {
        std::uint32_t smallest = 0;
        if (blocks.size() == 2 && blocks[1].size() < blocks[0].size()) {
          smallest = 1;
        }
        for (Letter a = 0; a < k; ++a) {
          push(smallest, a);
        }
      }

      std::vector<std::uint32_t> hits(n, 0);
      std::vector<bool>          marked(n, false);
      while (!work.empty()) {
        auto [splitter, a] = work.front();
        work.pop_front();
        in_work[splitter][a] = false;

        std::vector<State> pre;
        for (auto q : blocks[splitter]) {
          for (auto p : inverse[a][q]) {
            if (!marked[p]) {
              marked[p] = true;
              pre.push_back(p);
            }
          }
        }
        std::vector<std::uint32_t> touched;
        for (auto p : pre) {
          if (hits[block[p]]++ == 0) {
            touched.push_back(block[p]);
          }
        }
        for (auto b : touched) {
          if (hits[b] < blocks[b].size()) {
            std::vector<State> in, out;
            for (auto q : blocks[b]) {
              (marked[q] ? in : out).push_back(q);
            }
            auto nb = static_cast<std::uint32_t>(blocks.size());
            bool in_smaller = in.size() <= out.size();
            blocks[b]       = std::move(in_smaller ? out : in);
            blocks.push_back(std::move(in_smaller ? in : out));
            for (auto q : blocks[nb]) {
              block[q] = nb;
            }
            // nb holds the smaller half, which is the right splitter whether
            // or not (b, c) is still pending.
            for (Letter c = 0; c < k; ++c) {
              push(nb, c);
            }
          }
          hits[b] = 0;
        }
        for (auto p : pre) {
          marked[p] = false;
        }
      }
      return block;
    }

    struct Nfa {
      std::size_t                                   num_letters;
      std::vector<std::vector<std::vector<State>>>  delta;    // [q][a]
      std::vector<std::vector<State>>               epsilon;  // [q]
      std::vector<bool>                             accepting;
      State                                         initial = 0;

      State add_state() {
        delta.emplace_back(num_letters);
        epsilon.emplace_back();
        accepting.push_back(false);
        return static_cast<State>(delta.size() - 1);
      }

      // Embeds a DFA, returning the offset of its state 0.
      State embed(Dfa const& d) {
        auto base = static_cast<State>(delta.size());
        for (State q = 0; q < d.num_states(); ++q) {
          add_state();
        }
        for (State q = 0; q < d.num_states(); ++q) {
          for (Letter a = 0; a < num_letters; ++a) {
            delta[base + q][a].push_back(base + d.next(q, a));
          }
        }
        return base;
      }

      void close(ElemSet& s) const {
        std::vector<State> stack;
        s.for_each([&](std::size_t q) { stack.push_back(State(q)); });
        while (!stack.empty()) {
          State q = stack.back();
          stack.pop_back();
          for (auto t : epsilon[q]) {
            if (!s.test(t)) {
              s.set(t);
              stack.push_back(t);
            }
          }
        }
      }

      Dfa determinize(Budget const& budget) const {
        std::size_t const                    n = delta.size();
        std::unordered_map<ElemSet, State>   index;
        std::vector<ElemSet>                 sets;
        std::vector<State>                   out;
        ElemSet                              start(n);
        start.set(initial);
        close(start);
        index.emplace(start, 0);
        sets.push_back(start);
        for (std::size_t i = 0; i < sets.size(); ++i) {
          for (Letter a = 0; a < num_letters; ++a) {
            ElemSet t(n);
            sets[i].for_each([&](std::size_t q) {
              for (auto r : delta[q][a]) {
                t.set(r);
              }
            });
            close(t);
            auto it = index.find(t);
            if (it == index.end()) {
              if (sets.size() >= budget.max_states) {
                throw ResourceError("DFA state", budget.max_states);
              }
              it = index.emplace(t, static_cast<State>(sets.size())).first;
              sets.push_back(t);
            }
            out.push_back(it->second);
          }
        }
        ElemSet acc(sets.size());
        for (std::size_t i = 0; i < sets.size(); ++i) {
          bool any = false;
          sets[i].for_each([&](std::size_t q) { any = any || accepting[q]; });
          if (any) {
            acc.set(i);
          }
        }
        return Dfa(num_letters, sets.size(), 0, std::move(out), std::move(acc));
      }
    };

    void check_compatible(Dfa const& x, Dfa const& y) {
      if (x.num_letters() != y.num_letters()) {
        throw InputError("automata over different alphabets");
      }
    }

  }  // namespace

  Dfa minimize(Dfa const& dfa) {
    Dfa         d     = reachable_part(dfa);
    auto        block = hopcroft_blocks(d);
    std::size_t k     = d.num_letters();
    std::size_t nb    = *std::max_element(block.begin(), block.end()) + 1;
    std::vector<State> delta(nb * k);
    ElemSet            acc(nb);
    for (State q = 0; q < d.num_states(); ++q) {
      for (Letter a = 0; a < k; ++a) {
        delta[block[q] * k + a] = block[d.next(q, a)];
      }
      if (d.is_accepting(q)) {
        acc.set(block[q]);
      }
    }
    return reachable_part(
        Dfa(k, nb, block[d.initial()], std::move(delta), std::move(acc)));
  }

  Dfa empty_dfa(std::size_t num_letters) {
    return Dfa(num_letters, 1, 0, std::vector<State>(num_letters, 0), ElemSet(1));
  }

  Dfa universal_dfa(std::size_t num_letters) {
    return Dfa(num_letters, 1, 0, std::vector<State>(num_letters, 0),
               ElemSet(1, {0}));
  }

  Dfa word_dfa(std::size_t num_letters, Word const& w) {
    std::size_t const  n    = w.size() + 2;
    State const        sink = static_cast<State>(w.size() + 1);
    std::vector<State> delta(n * num_letters, sink);
    for (std::size_t i = 0; i < w.size(); ++i) {
      delta[i * num_letters + w[i]] = static_cast<State>(i + 1);
    }
    ElemSet acc(n);
    acc.set(w.size());
    return minimize(Dfa(num_letters, n, 0, std::move(delta), std::move(acc)));
  }

  Dfa length_residue_dfa(std::size_t                     num_letters,
                         std::size_t                     modulus,
                         std::vector<std::size_t> const& residues) {
    if (modulus == 0) {
      throw InputError("modulus must be positive");
    }
    std::vector<State> delta(modulus * num_letters);
    for (std::size_t q = 0; q < modulus; ++q) {
      for (std::size_t a = 0; a < num_letters; ++a) {
        delta[q * num_letters + a] = static_cast<State>((q + 1) % modulus);
      }
    }
    ElemSet acc(modulus);
    for (auto r : residues) {
      acc.set(r % modulus);
    }
    return minimize(Dfa(num_letters, modulus, 0, std::move(delta), std::move(acc)));
  }

  Dfa product(Dfa const& x, Dfa const& y, BoolOp op, Budget const& budget) {
    check_compatible(x, y);
    std::size_t const k = x.num_letters();
    std::unordered_map<std::uint64_t, State>   index;
    std::vector<std::pair<State, State>>       states;
    std::vector<State>                         delta;
    auto key = [](State p, State q) {
      return (std::uint64_t(p) << 32) | q;
    };
    index.emplace(key(x.initial(), y.initial()), 0);
    states.emplace_back(x.initial(), y.initial());
    for (std::size_t i = 0; i < states.size(); ++i) {
      for (Letter a = 0; a < k; ++a) {
        State p  = x.next(states[i].first, a);
        State q  = y.next(states[i].second, a);
        auto  it = index.find(key(p, q));
        if (it == index.end()) {
          if (states.size() >= budget.max_states) {
            throw ResourceError("DFA state", budget.max_states);
          }
          it = index.emplace(key(p, q), static_cast<State>(states.size())).first;
          states.emplace_back(p, q);
        }
        delta.push_back(it->second);
      }
    }
    ElemSet acc(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
      bool in_x = x.is_accepting(states[i].first);
      bool in_y = y.is_accepting(states[i].second);
      bool in   = false;
      switch (op) {
        case BoolOp::intersect:
          in = in_x && in_y;
          break;
        case BoolOp::unite:
          in = in_x || in_y;
          break;
        case BoolOp::difference:
          in = in_x && !in_y;
          break;
      }
      if (in) {
        acc.set(i);
      }
    }
    return minimize(Dfa(k, states.size(), 0, std::move(delta), std::move(acc)));
  }

  Dfa intersect(Dfa const& x, Dfa const& y, Budget const& budget) {
    return product(x, y, BoolOp::intersect, budget);
  }

  Dfa unite(Dfa const& x, Dfa const& y, Budget const& budget) {
    return product(x, y, BoolOp::unite, budget);
  }

  Dfa complement(Dfa const& x) {
    ElemSet acc(x.num_states());
    for (State q = 0; q < x.num_states(); ++q) {
      if (!x.is_accepting(q)) {
        acc.set(q);
      }
    }
    std::vector<State> delta;
    delta.reserve(x.num_states() * x.num_letters());
    for (State q = 0; q < x.num_states(); ++q) {
      for (Letter a = 0; a < x.num_letters(); ++a) {
        delta.push_back(x.next(q, a));
      }
    }
    return minimize(
        Dfa(x.num_letters(), x.num_states(), x.initial(), std::move(delta), std::move(acc)));
  }

  Dfa concatenate(Dfa const& x, Dfa const& y, Budget const& budget) {
    check_compatible(x, y);
    Nfa   nfa{x.num_letters(), {}, {}, {}, 0};
    State bx = nfa.embed(x);
    State by = nfa.embed(y);
    nfa.initial = bx + x.initial();
    for (State q = 0; q < x.num_states(); ++q) {
      if (x.is_accepting(q)) {
        nfa.epsilon[bx + q].push_back(by + y.initial());
      }
    }
    for (State q = 0; q < y.num_states(); ++q) {
      nfa.accepting[by + q] = y.is_accepting(q);
    }
    return minimize(nfa.determinize(budget));
  }

  Dfa kleene_star(Dfa const& x, Budget const& budget) {
    Nfa   nfa{x.num_letters(), {}, {}, {}, 0};
    State start = nfa.add_state();
    State bx    = nfa.embed(x);
    nfa.initial = start;
    nfa.accepting[start] = true;
    nfa.epsilon[start].push_back(bx + x.initial());
    for (State q = 0; q < x.num_states(); ++q) {
      if (x.is_accepting(q)) {
        nfa.accepting[bx + q] = true;
        nfa.epsilon[bx + q].push_back(bx + x.initial());
      }
    }
    return minimize(nfa.determinize(budget));
  }

  bool is_empty(Dfa const& x) {
    std::vector<bool>  seen(x.num_states(), false);
    std::vector<State> stack{x.initial()};
    seen[x.initial()] = true;
    while (!stack.empty()) {
      State q = stack.back();
      stack.pop_back();
      if (x.is_accepting(q)) {
        return false;
      }
      for (Letter a = 0; a < x.num_letters(); ++a) {
        State t = x.next(q, a);
        if (!seen[t]) {
          seen[t] = true;
          stack.push_back(t);
        }
      }
    }
    return true;
  }

  bool included(Dfa const& x, Dfa const& y) {
    Budget unbounded;
    unbounded.max_states = std::size_t(-1);
    return is_empty(product(x, y, BoolOp::difference, unbounded));
  }

  bool disjoint(Dfa const& x, Dfa const& y) {
    Budget unbounded;
    unbounded.max_states = std::size_t(-1);
    return is_empty(product(x, y, BoolOp::intersect, unbounded));
  }

  bool equivalent(Dfa const& x, Dfa const& y) {
    return included(x, y) && included(y, x);
  }

  std::optional<Word> shortest_word(Dfa const& x) {
    std::vector<State>  parent(x.num_states(), State(-1));
    std::vector<Letter> via(x.num_states(), 0);
    std::vector<bool>   seen(x.num_states(), false);
    std::vector<State>  queue{x.initial()};
    seen[x.initial()] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      State q = queue[i];
      if (x.is_accepting(q)) {
        Word w;
        for (State c = q; c != x.initial(); c = parent[c]) {
          w.push_back(via[c]);
        }
        std::reverse(w.begin(), w.end());
        return w;
      }
      for (Letter a = 0; a < x.num_letters(); ++a) {
        State t = x.next(q, a);
        if (!seen[t]) {
          seen[t]   = true;
          parent[t] = q;
          via[t]    = a;
          queue.push_back(t);
        }
      }
    }
    return std::nullopt;
  }

  std::vector<Word> words_up_to(Dfa const& x, std::size_t max_len) {
    std::vector<Word>                    out;
    std::vector<std::pair<Word, State>>  layer{{Word{}, x.initial()}};
    for (std::size_t len = 0; len <= max_len; ++len) {
      std::vector<std::pair<Word, State>> next_layer;
      for (auto& [w, q] : layer) {
        if (x.is_accepting(q)) {
          out.push_back(w);
        }
        if (len < max_len) {
          for (Letter a = 0; a < x.num_letters(); ++a) {
            Word v = w;
            v.push_back(a);
            next_layer.emplace_back(std::move(v), x.next(q, a));
          }
        }
      }
      layer = std::move(next_layer);
    }
    return out;
  }

  Dfa compile(Regex const& r, Alphabet const& alphabet, Budget const& budget) {
    using K             = Regex::Kind;
    std::size_t const k = alphabet.size();
    switch (r.kind) {
      case K::empty:
        return empty_dfa(k);
      case K::epsilon:
        return word_dfa(k, {});
      case K::letter:
        if (r.letter >= k) {
          throw InputError("regex letter outside the alphabet");
        }
        return word_dfa(k, {r.letter});
      case K::alt:
        return unite(compile(r.children[0], alphabet, budget),
                     compile(r.children[1], alphabet, budget), budget);
      case K::intersect:
        return intersect(compile(r.children[0], alphabet, budget),
                         compile(r.children[1], alphabet, budget), budget);
      case K::concat:
        return concatenate(compile(r.children[0], alphabet, budget),
                           compile(r.children[1], alphabet, budget), budget);
      case K::star:
        return kleene_star(compile(r.children[0], alphabet, budget), budget);
      case K::plus: {
        Dfa x = compile(r.children[0], alphabet, budget);
        return concatenate(x, kleene_star(x, budget), budget);
      }
      case K::complement:
        return complement(compile(r.children[0], alphabet, budget));
    }
    throw InputError("unknown regex node");
  }

  Dfa compile(std::string_view text, Alphabet const& alphabet, Budget const& budget) {
    return compile(parse_regex(text, alphabet), alphabet, budget);
  }

}  // namespace hiersep
