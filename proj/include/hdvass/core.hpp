// core.hpp -- the VASS data model: configurations, transition enabledness,
// stepping, run replay and acceptance under coverability/reachability.

#ifndef HDVASS_CORE_HPP
#define HDVASS_CORE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hdvass {

using Letter = std::string;
using Word = std::vector<Letter>;

// Reserved token for the silent label; never a member of a declared alphabet.
inline const Letter kEpsilon = "@eps";

inline bool is_epsilon(const Letter& l) { return l == kEpsilon; }

enum class Semantics { Coverability, Reachability };

struct Transition {
  std::string source;
  Letter label;  // kEpsilon for silent transitions
  std::vector<long long> effect;
  std::string target;
  int index = 0;  // declaration position, the universal tie-breaker

  bool silent() const { return is_epsilon(label); }
};

struct Vass {
  std::string name;
  int dimension = 0;
  std::vector<Letter> alphabet;      // declaration order fixes length-lex order
  std::vector<std::string> states;   // declaration order
  std::string initial;
  std::vector<std::string> accepting;
  std::vector<Transition> transitions;
  Semantics semantics = Semantics::Coverability;

  bool has_state(const std::string& q) const;
  bool has_letter(const Letter& l) const;
  bool is_accepting_state(const std::string& q) const;
  bool has_epsilon() const;
};

struct Configuration {
  std::string state;
  std::vector<long long> counters;

  auto operator<=>(const Configuration&) const = default;
};

inline Configuration initial_configuration(const Vass& v) {
  return Configuration{v.initial, std::vector<long long>(v.dimension, 0)};
}

// A validated alternating sequence of configurations and transitions.
// steps hold indices into vass.transitions.
struct Run {
  Configuration start;
  std::vector<std::pair<int, Configuration>> steps;
  Word word;  // projection of step labels with epsilon removed

  const Configuration& final_config() const {
    return steps.empty() ? start : steps.back().second;
  }
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const Vass& v);

// Transitions with matching source and label whose effect keeps counters >= 0,
// in declaration order. Throws std::invalid_argument on an unknown state.
std::vector<int> enabled(const Vass& v, const Configuration& c, const Letter& label);

struct DisabledError : std::runtime_error {
  int counter_index;
  DisabledError(int idx, const std::string& what)
      : std::runtime_error(what), counter_index(idx) {}
};

// Applies transition t (by index); throws DisabledError if some counter would
// drop below zero, carrying the offending counter index.
Configuration apply(const Vass& v, const Configuration& c, int t);

struct ReplayError : std::runtime_error {
  size_t position;
  ReplayError(size_t pos, const std::string& what)
      : std::runtime_error(what), position(pos) {}
};

// Builds the Run from (initial, 0) along the given transition indices;
// throws ReplayError at the first disabled step.
Run replay(const Vass& v, const std::vector<int>& transition_seq);

bool is_accepting(const Vass& v, const Configuration& c);

inline bool all_zero(const std::vector<long long>& cs) {
  for (long long x : cs)
    if (x != 0) return false;
  return true;
}

std::string word_to_string(const Word& w);

}  // namespace hdvass

#endif
