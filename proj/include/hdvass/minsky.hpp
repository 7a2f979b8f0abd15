// minsky.hpp -- deterministic two-counter Minsky machines, their unique
// faithful run, and the compilers for the undecidability gadgets.

#ifndef HDVASS_MINSKY_HPP
#define HDVASS_MINSKY_HPP

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hdvass/core.hpp"

namespace hdvass {

enum class CmOp { Inc1, Inc2, Dec1, Dec2, Ztest1, Ztest2 };

const char* cm_op_name(CmOp op);
// Which counter (0 or 1) the op touches.
int cm_op_counter(CmOp op);

struct CmTransition {
  std::string source;
  CmOp op;
  std::string target;
};

struct TwoCounterMachine {
  std::string name;
  std::vector<std::string> states;
  std::string initial;
  std::string halting;
  std::vector<CmTransition> transitions;
};

// Determinism rule: at most one outgoing transition per state, except the
// pair {ztest_i, dec_i} on the same counter. Violations as messages.
std::vector<std::string> check_2cm(const TwoCounterMachine& m);

enum class CmStatus { Halted, RunningAtBound, Stuck };

struct FaithfulRun {
  std::vector<CmOp> ops;
  // configs[i] is the configuration before ops[i]; configs.back() is final.
  std::vector<std::tuple<std::string, long long, long long>> configs;
  CmStatus status = CmStatus::Halted;

  // x_k = 1 + c1 + c2 after the length-k prefix.
  long long x(size_t k) const;
  // correct_k = the first k ops as letters.
  Word correct(size_t k) const;
  // incorrect_k = correct_{k-1} ztest_i, defined when op k is a dec_i.
  std::optional<Word> incorrect(size_t k) const;
};

FaithfulRun run_2cm(const TwoCounterMachine& m, size_t max_steps);

// The shared weak-simulation core: a 2-dim coverability VASS over the six
// op letters, with cheat transitions into a universal accepting sink.
Vass weak_simulate(const TwoCounterMachine& m);

// Lang(A) \subseteq Lang(B) iff the faithful run of m never halts.
std::pair<Vass, Vass> compile_inclusion_gadget(const TwoCounterMachine& m);

// Fresh initial state branching on @go into the A and B halves; non-HD
// exactly when m halts.
Vass compile_hdness_gadget(const TwoCounterMachine& m);

struct RegularityGadget {
  Vass vass;
  std::vector<std::string> warnings;
};

RegularityGadget compile_regularity_gadget(const TwoCounterMachine& m,
                                           Semantics semantics,
                                           size_t probe_steps = 256);

}  // namespace hdvass

#endif
