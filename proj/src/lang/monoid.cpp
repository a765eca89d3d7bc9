#include "hiersep/lang/monoid.hpp"

#include <map>
#include <unordered_map>

#include "hiersep/error.hpp"

namespace hiersep {

  FiniteMonoid FiniteMonoid::from_table(std::vector<std::vector<MonoidElem>> table,
                                        MonoidElem                           unit) {
    std::size_t const n = table.size();
    if (n == 0 || unit >= n) {
      throw InputError("monoid table must be non-empty with a valid unit");
    }
    FiniteMonoid m;
    m.size_ = n;
    m.unit_ = unit;
    m.table_.reserve(n * n);
    for (auto const& row : table) {
      if (row.size() != n) {
        throw InputError("monoid table must be square");
      }
      for (auto x : row) {
        if (x >= n) {
          throw InputError("monoid table entry out of range");
        }
        m.table_.push_back(x);
      }
    }
    for (MonoidElem x = 0; x < n; ++x) {
      if (m.mul(unit, x) != x || m.mul(x, unit) != x) {
        throw InputError("monoid unit is not a two-sided identity");
      }
      for (MonoidElem y = 0; y < n; ++y) {
        for (MonoidElem z = 0; z < n; ++z) {
          if (m.mul(m.mul(x, y), z) != m.mul(x, m.mul(y, z))) {
            throw InputError("monoid multiplication is not associative");
          }
        }
      }
    }
    return m;
  }

  FiniteMonoid FiniteMonoid::cyclic_group(std::size_t n) {
    std::vector<std::vector<MonoidElem>> t(n, std::vector<MonoidElem>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        t[i][j] = static_cast<MonoidElem>((i + j) % n);
      }
    }
    return from_table(std::move(t), 0);
  }

  FiniteMonoid FiniteMonoid::from_cayley(std::vector<std::vector<MonoidElem>> right,
                                         std::vector<Word> representatives) {
    FiniteMonoid m;
    m.size_  = right.size();
    m.unit_  = 0;
    m.right_ = std::move(right);
    m.reps_  = std::move(representatives);
    if (m.size_ <= full_table_limit) {
      // Elements are closed under right multiplication by generators, so
      // s * t = (s * t') * g whenever rep(t) = rep(t') g.
      std::size_t const n = m.size_;
      std::vector<MonoidElem> table(n * n);
      std::vector<MonoidElem> order(n);
      std::vector<MonoidElem> parent(n, 0);
      std::vector<Letter>     via(n, 0);
      for (MonoidElem t = 0; t < n; ++t) {
        order[t] = t;
      }
      std::stable_sort(order.begin(), order.end(), [&m](auto x, auto y) {
        return m.reps_[x].size() < m.reps_[y].size();
      });
      for (MonoidElem s = 0; s < n; ++s) {
        for (auto t : order) {
          Word const& w = m.reps_[t];
          if (w.empty()) {
            table[s * n + t] = s;
          } else {
            // the prefix of a shortlex-least representative is itself an
            // element processed earlier; fold its last letter
            MonoidElem prefix = 0;
            for (std::size_t i = 0; i + 1 < w.size(); ++i) {
              prefix = m.right_[prefix][w[i]];
            }
            table[s * n + t] = m.right_[table[s * n + prefix]][w.back()];
          }
        }
      }
      m.table_ = std::move(table);
    }
    return m;
  }

  MonoidElem FiniteMonoid::mul(MonoidElem s, MonoidElem t) const {
    if (!table_.empty()) {
      return table_[s * size_ + t];
    }
    for (auto g : reps_[t]) {
      s = right_[s][g];
    }
    return s;
  }

  MonoidMorphism::MonoidMorphism(std::shared_ptr<FiniteMonoid const> monoid,
                                 std::vector<MonoidElem>             letter_image,
                                 std::vector<ElemSet>                accept_sets)
      : monoid_(std::move(monoid)),
        letter_image_(std::move(letter_image)),
        accept_sets_(std::move(accept_sets)) {
    for (auto x : letter_image_) {
      if (x >= monoid_->size()) {
        throw InputError("letter image outside the monoid");
      }
    }
    for (auto const& f : accept_sets_) {
      if (f.universe() != monoid_->size()) {
        throw InputError("accepting set over the wrong monoid");
      }
    }
    reps_.assign(monoid_->size(), std::nullopt);
    reps_[monoid_->unit()] = Word{};
    std::vector<MonoidElem> queue{monoid_->unit()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Letter a = 0; a < letter_image_.size(); ++a) {
        MonoidElem t = monoid_->mul(queue[i], letter_image_[a]);
        if (!reps_[t]) {
          Word w = *reps_[queue[i]];
          w.push_back(a);
          reps_[t] = std::move(w);
          queue.push_back(t);
        }
      }
    }
  }

  MonoidElem MonoidMorphism::eval(Word const& w) const {
    MonoidElem s = monoid_->unit();
    for (auto a : w) {
      s = monoid_->mul(s, letter_image_.at(a));
    }
    return s;
  }

  std::optional<Word> MonoidMorphism::representative(MonoidElem s) const {
    return reps_.at(s);
  }

  namespace {

    struct VectorHash {
      std::size_t operator()(std::vector<State> const& v) const noexcept {
        std::size_t h = v.size();
        for (auto x : v) {
          h = h * 1000003u ^ x;
        }
        return h;
      }
    };

  }  // namespace

  MonoidMorphism transition_monoid(std::span<Dfa const> dfas, Budget const& budget) {
    if (dfas.empty()) {
      throw InputError("transition_monoid needs at least one DFA");
    }
    std::size_t const k = dfas.front().num_letters();
    for (auto const& d : dfas) {
      if (d.num_letters() != k) {
        throw InputError("automata over different alphabets");
      }
    }

    // Reachable product states.
    std::unordered_map<std::vector<State>, State, VectorHash> index;
    std::vector<std::vector<State>>                           tuples;
    std::vector<State>                                        delta;
    {
      std::vector<State> init;
      for (auto const& d : dfas) {
        init.push_back(d.initial());
      }
      index.emplace(init, 0);
      tuples.push_back(init);
      for (std::size_t i = 0; i < tuples.size(); ++i) {
        for (Letter a = 0; a < k; ++a) {
          std::vector<State> t(dfas.size());
          for (std::size_t j = 0; j < dfas.size(); ++j) {
            t[j] = dfas[j].next(tuples[i][j], a);
          }
          auto it = index.find(t);
          if (it == index.end()) {
            if (tuples.size() >= budget.max_states) {
              throw ResourceError("DFA state", budget.max_states);
            }
            it = index.emplace(t, static_cast<State>(tuples.size())).first;
            tuples.push_back(std::move(t));
          }
          delta.push_back(it->second);
        }
      }
    }
    std::size_t const q = tuples.size();

    // Joint minimization: refine by the acceptance signature until stable.
    std::vector<std::uint32_t> cls(q);
    {
      std::map<std::vector<bool>, std::uint32_t> sig;
      for (std::size_t i = 0; i < q; ++i) {
        std::vector<bool> s(dfas.size());
        for (std::size_t j = 0; j < dfas.size(); ++j) {
          s[j] = dfas[j].is_accepting(tuples[i][j]);
        }
        cls[i] = sig.emplace(s, static_cast<std::uint32_t>(sig.size())).first->second;
      }
      std::size_t num = sig.size();
      while (true) {
        std::map<std::vector<std::uint32_t>, std::uint32_t> refined;
        std::vector<std::uint32_t>                          next(q);
        for (std::size_t i = 0; i < q; ++i) {
          std::vector<std::uint32_t> s{cls[i]};
          for (Letter a = 0; a < k; ++a) {
            s.push_back(cls[delta[i * k + a]]);
          }
          next[i] = refined.emplace(s, static_cast<std::uint32_t>(refined.size()))
                        .first->second;
        }
        cls = std::move(next);
        if (refined.size() == num) {
          break;
        }
        num = refined.size();
      }
    }
    std::size_t const nc = *std::max_element(cls.begin(), cls.end()) + 1;
    std::vector<State> qdelta(nc * k);
    for (std::size_t i = 0; i < q; ++i) {
      for (Letter a = 0; a < k; ++a) {
        qdelta[cls[i] * k + a] = cls[delta[i * k + a]];
      }
    }
    State const init = cls[0];
    std::vector<std::vector<bool>> acc(dfas.size(), std::vector<bool>(nc, false));
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t j = 0; j < dfas.size(); ++j) {
        acc[j][cls[i]] = dfas[j].is_accepting(tuples[i][j]);
      }
    }

    // Breadth-first closure of the letter transformations.
    using Transformation = std::vector<State>;
    std::unordered_map<Transformation, MonoidElem, VectorHash> elem_of;
    std::vector<Transformation>                                elems;
    std::vector<Word>                                          reps;
    std::vector<std::vector<MonoidElem>>                       right;
    Transformation identity(nc);
    for (State i = 0; i < nc; ++i) {
      identity[i] = i;
    }
    elem_of.emplace(identity, 0);
    elems.push_back(identity);
    reps.emplace_back();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      right.emplace_back(k);
      for (Letter a = 0; a < k; ++a) {
        Transformation t(nc);
        for (State s = 0; s < nc; ++s) {
          t[s] = qdelta[elems[i][s] * k + a];
        }
        auto it = elem_of.find(t);
        if (it == elem_of.end()) {
          if (elems.size() >= budget.max_monoid) {
            throw ResourceError("monoid size", budget.max_monoid);
          }
          it = elem_of.emplace(t, static_cast<MonoidElem>(elems.size())).first;
          Word w = reps[i];
          w.push_back(a);
          elems.push_back(std::move(t));
          reps.push_back(std::move(w));
        }
        right[i][a] = it->second;
      }
    }

    std::size_t const    n = elems.size();
    std::vector<ElemSet> accept(dfas.size(), ElemSet(n));
    for (MonoidElem s = 0; s < n; ++s) {
      for (std::size_t j = 0; j < dfas.size(); ++j) {
        if (acc[j][elems[s][init]]) {
          accept[j].set(s);
        }
      }
    }
    std::vector<MonoidElem> letters(k);
    for (Letter a = 0; a < k; ++a) {
      letters[a] = right[0][a];
    }
    auto monoid = std::make_shared<FiniteMonoid const>(
        FiniteMonoid::from_cayley(std::move(right), std::move(reps)));
    return MonoidMorphism(std::move(monoid), std::move(letters), std::move(accept));
  }

}  // namespace hiersep
