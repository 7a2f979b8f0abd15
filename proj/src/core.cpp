#include "hdvass/core.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hdvass {

bool Vass::has_state(const std::string& q) const {
  return std::find(states.begin(), states.end(), q) != states.end();
}

bool Vass::has_letter(const Letter& l) const {
  return std::find(alphabet.begin(), alphabet.end(), l) != alphabet.end();
}

bool Vass::is_accepting_state(const std::string& q) const {
  return std::find(accepting.begin(), accepting.end(), q) != accepting.end();
}

bool Vass::has_epsilon() const {
  return std::any_of(transitions.begin(), transitions.end(),
                     [](const Transition& t) { return t.silent(); });
}

ValidationReport validate(const Vass& v) {
  ValidationReport report;
  auto fail = [&](const std::string& msg) { report.violations.push_back(msg); };

  if (v.dimension < 0) fail("dimension is negative");
  {
    std::set<std::string> seen;
    for (const auto& q : v.states)
      if (!seen.insert(q).second) fail("duplicate state id '" + q + "'");
  }
  {
    std::set<Letter> seen;
    for (const auto& l : v.alphabet) {
      if (l == kEpsilon) fail("epsilon is not allowed in the alphabet");
      if (l.empty()) fail("empty letter in alphabet");
      if (!seen.insert(l).second) fail("duplicate letter '" + l + "'");
    }
  }
  if (!v.has_state(v.initial))
    fail("initial state '" + v.initial + "' is not declared");
  for (const auto& q : v.accepting)
    if (!v.has_state(q)) fail("accepting state '" + q + "' is not declared");

  std::set<int> indices;
  for (const Transition& t : v.transitions) {
    std::ostringstream at;
    at << "transition #" << t.index << " (" << t.source << " --" << t.label
       << "--> " << t.target << "): ";
    if (!v.has_state(t.source)) fail(at.str() + "undeclared source '" + t.source + "'");
    if (!v.has_state(t.target)) fail(at.str() + "undeclared target '" + t.target + "'");
    if (!t.silent() && !v.has_letter(t.label))
      fail(at.str() + "label '" + t.label + "' is not in the alphabet");
    if ((int)t.effect.size() != v.dimension) {
      std::ostringstream msg;
      msg << at.str() << "effect has " << t.effect.size()
          << " entries, expected " << v.dimension;
      fail(msg.str());
    }
    if (!indices.insert(t.index).second) {
      std::ostringstream msg;
      msg << at.str() << "duplicate declaration index " << t.index;
      fail(msg.str());
    }
  }
  return report;
}

std::vector<int> enabled(const Vass& v, const Configuration& c, const Letter& label) {
  if (!v.has_state(c.state))
    throw std::invalid_argument("enabled: unknown state '" + c.state + "'");
  std::vector<int> out;
  for (size_t i = 0; i < v.transitions.size(); ++i) {
    const Transition& t = v.transitions[i];
    if (t.source != c.state || t.label != label) continue;
    bool ok = true;
    for (int d = 0; d < v.dimension; ++d)
      if (c.counters[d] + t.effect[d] < 0) { ok = false; break; }
    if (ok) out.push_back((int)i);
  }
  return out;
}

Configuration apply(const Vass& v, const Configuration& c, int t) {
  const Transition& tr = v.transitions.at(t);
  Configuration next{tr.target, c.counters};
  for (int d = 0; d < v.dimension; ++d) {
    next.counters[d] += tr.effect[d];
    if (next.counters[d] < 0) {
      std::ostringstream msg;
      msg << "transition #" << tr.index << " disabled: counter " << d
          << " would drop below zero";
      throw DisabledError(d, msg.str());
    }
  }
  return next;
}

Run replay(const Vass& v, const std::vector<int>& transition_seq) {
  Run run;
  run.start = initial_configuration(v);
  Configuration cur = run.start;
  for (size_t i = 0; i < transition_seq.size(); ++i) {
    int ti = transition_seq[i];
    if (ti < 0 || ti >= (int)v.transitions.size())
      throw ReplayError(i, "replay: transition index out of range");
    const Transition& t = v.transitions[ti];
    if (t.source != cur.state)
      throw ReplayError(i, "replay: transition #" + std::to_string(ti) +
                               " does not start at state '" + cur.state + "'");
    try {
      cur = apply(v, cur, ti);
    } catch (const DisabledError& e) {
      throw ReplayError(i, std::string("replay: ") + e.what());
    }
    run.steps.emplace_back(ti, cur);
    if (!t.silent()) run.word.push_back(t.label);
  }
  return run;
}

bool is_accepting(const Vass& v, const Configuration& c) {
  if (!v.is_accepting_state(c.state)) return false;
  if (v.semantics == Semantics::Reachability) return all_zero(c.counters);
  return true;
}

std::string word_to_string(const Word& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i];
  }
  return out;
}

}  // namespace hdvass
