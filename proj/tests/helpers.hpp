// helpers.hpp -- shared test fixtures and independent reference oracles
// (deliberately naive so they cannot share bugs with the library).

#ifndef HDVASS_TESTS_HELPERS_HPP
#define HDVASS_TESTS_HELPERS_HPP

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "hdvass/core.hpp"
#include "hdvass/textio.hpp"

namespace hdvass::testing {

inline Word w(std::initializer_list<const char*> ls) {
  Word out;
  for (const char* l : ls) out.emplace_back(l);
  return out;
}

// Splits a string of single-char letters, e.g. "aab" -> {"a","a","b"}.
inline Word chars(const std::string& s) {
  Word out;
  for (char c : s) out.emplace_back(1, c);
  return out;
}

// Reference membership for epsilon-free automata: depth-first over every
// transition sequence spelling exactly the word.
inline bool naive_member(const Vass& v, const Word& word) {
  std::function<bool(const Configuration&, size_t)> go =
      [&](const Configuration& c, size_t pos) {
        if (pos == word.size()) return is_accepting(v, c);
        for (int ti : enabled(v, c, word[pos]))
          if (go(apply(v, c, ti), pos + 1)) return true;
        return false;
      };
  return go(initial_configuration(v), 0);
}

// Reference coverability: breadth-first over concrete configurations with
// every counter capped. Complete only for small instances, which is the point.
inline bool brute_coverable(const Vass& v, const std::string& target_state,
                            const std::vector<long long>& target_vec,
                            long long cap = 50) {
  std::set<Configuration> seen;
  std::vector<Configuration> frontier{initial_configuration(v)};
  seen.insert(frontier[0]);
  auto covers = [&](const Configuration& c) {
    if (c.state != target_state) return false;
    for (size_t d = 0; d < c.counters.size(); ++d)
      if (c.counters[d] < target_vec[d]) return false;
    return true;
  };
  while (!frontier.empty()) {
    std::vector<Configuration> next;
    for (const auto& c : frontier) {
      if (covers(c)) return true;
      for (size_t ti = 0; ti < v.transitions.size(); ++ti) {
        const Transition& t = v.transitions[ti];
        if (t.source != c.state) continue;
        bool ok = true;
        Configuration nc{t.target, c.counters};
        for (int d = 0; d < v.dimension; ++d) {
          nc.counters[d] += t.effect[d];
          if (nc.counters[d] < 0 || nc.counters[d] > cap) { ok = false; break; }
        }
        if (ok && seen.insert(nc).second) next.push_back(nc);
      }
    }
    frontier = std::move(next);
  }
  return false;
}

inline Vass from_text(const std::string& text) { return parse_vass(text); }

// Structurally random but always valid automaton; parameters small enough to
// exercise every serializer branch.
template <class Rng>
inline Vass fuzz_vass(Rng& rng, int tag) {
  auto pick = [&](int n) { return (int)(rng() % (unsigned)n); };
  const std::vector<Letter> pool{"a", "b", "c", "x", "#"};
  Vass v;
  v.name = "fz" + std::to_string(tag);
  v.dimension = 1 + pick(3);
  int nl = 1 + pick(3);
  for (int i = 0; i < nl; ++i) v.alphabet.push_back(pool[i + pick(2)]);
  {
    std::vector<Letter> uniq;
    for (auto& l : v.alphabet)
      if (std::find(uniq.begin(), uniq.end(), l) == uniq.end()) uniq.push_back(l);
    v.alphabet = uniq;
  }
  int ns = 1 + pick(4);
  for (int i = 0; i < ns; ++i) v.states.push_back("q" + std::to_string(i));
  v.initial = "q0";
  for (const auto& q : v.states)
    if (pick(10) < 4) v.accepting.push_back(q);
  v.semantics = pick(2) ? Semantics::Reachability : Semantics::Coverability;
  int nt = pick(9);
  for (int i = 0; i < nt; ++i) {
    Transition t;
    t.source = v.states[pick(ns)];
    t.target = v.states[pick(ns)];
    t.label = pick(10) < 2 ? kEpsilon : v.alphabet[pick((int)v.alphabet.size())];
    for (int d = 0; d < v.dimension; ++d) t.effect.push_back(pick(7) - 3);
    t.index = i;
    v.transitions.push_back(t);
  }
  return v;
}

// 1-dim coverability core for a^n b^{<=n}; endmarking it yields the
// barrier language a^n b^{<=n} #.
inline Vass anblen_cover() {
  return from_text(
      "vass anblen_cover\n"
      "dim 1\n"
      "semantics cover\n"
      "alphabet a b\n"
      "state s initial accepting\n"
      "state t accepting\n"
      "trans s a +1 s\n"
      "trans s b -1 t\n"
      "trans t b -1 t\n");
}

}  // namespace hdvass::testing

#endif
