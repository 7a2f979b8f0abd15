#include "hdvass/minsky.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hdvass {

const char* cm_op_name(CmOp op) {
  switch (op) {
    case CmOp::Inc1: return "inc1";
    case CmOp::Inc2: return "inc2";
    case CmOp::Dec1: return "dec1";
    case CmOp::Dec2: return "dec2";
    case CmOp::Ztest1: return "ztest1";
    case CmOp::Ztest2: return "ztest2";
  }
  return "";
}

int cm_op_counter(CmOp op) {
  switch (op) {
    case CmOp::Inc1:
    case CmOp::Dec1:
    case CmOp::Ztest1:
      return 0;
    default:
      return 1;
  }
}

std::vector<std::string> check_2cm(const TwoCounterMachine& m) {
  std::vector<std::string> out;
  auto declared = [&](const std::string& s) {
    return std::find(m.states.begin(), m.states.end(), s) != m.states.end();
  };
  if (!m.initial.empty() && !declared(m.initial))
    out.push_back("initial state " + m.initial + " not declared");
  if (!m.halting.empty() && !declared(m.halting))
    out.push_back("halting state " + m.halting + " not declared");
  std::map<std::string, std::vector<CmOp>> outgoing;
  for (const auto& t : m.transitions) {
    if (!declared(t.source)) out.push_back("transition source " + t.source + " not declared");
    if (!declared(t.target)) out.push_back("transition target " + t.target + " not declared");
    outgoing[t.source].push_back(t.op);
  }
  for (const auto& [state, ops] : outgoing) {
    if (ops.size() == 1) continue;
    bool zd_pair =
        ops.size() == 2 &&
        ((ops[0] == CmOp::Ztest1 && ops[1] == CmOp::Dec1) ||
         (ops[0] == CmOp::Dec1 && ops[1] == CmOp::Ztest1) ||
         (ops[0] == CmOp::Ztest2 && ops[1] == CmOp::Dec2) ||
         (ops[0] == CmOp::Dec2 && ops[1] == CmOp::Ztest2));
    if (!zd_pair)
      out.push_back("state " + state +
                    " is nondeterministic: only a {ztest_i, dec_i} pair may share a state");
  }
  return out;
}

long long FaithfulRun::x(size_t k) const {
  const auto& [state, c1, c2] = configs.at(k);
  (void)state;
  return 1 + c1 + c2;
}

Word FaithfulRun::correct(size_t k) const {
  Word out;
  for (size_t i = 0; i < k; ++i) out.push_back(cm_op_name(ops.at(i)));
  return out;
}

std::optional<Word> FaithfulRun::incorrect(size_t k) const {
  if (k == 0 || k > ops.size()) return std::nullopt;
  CmOp op = ops[k - 1];
  if (op != CmOp::Dec1 && op != CmOp::Dec2) return std::nullopt;
  Word out = correct(k - 1);
  out.push_back(op == CmOp::Dec1 ? "ztest1" : "ztest2");
  return out;
}

FaithfulRun run_2cm(const TwoCounterMachine& m, size_t max_steps) {
  FaithfulRun run;
  std::string state = m.initial;
  long long c[2] = {0, 0};
  run.configs.emplace_back(state, c[0], c[1]);
  while (true) {
    if (state == m.halting) {
      run.status = CmStatus::Halted;
      return run;
    }
    if (run.ops.size() >= max_steps) {
      run.status = CmStatus::RunningAtBound;
      return run;
    }
    const CmTransition* chosen = nullptr;
    for (const auto& t : m.transitions) {
      if (t.source != state) continue;
      int i = cm_op_counter(t.op);
      bool enabled = true;
      if (t.op == CmOp::Dec1 || t.op == CmOp::Dec2) enabled = c[i] >= 1;
      if (t.op == CmOp::Ztest1 || t.op == CmOp::Ztest2) enabled = c[i] == 0;
      if (enabled) {
        chosen = &t;
        break;
      }
    }
    if (!chosen) {
      run.status = CmStatus::Stuck;
      return run;
    }
    switch (chosen->op) {
      case CmOp::Inc1: c[0]++; break;
      case CmOp::Inc2: c[1]++; break;
      case CmOp::Dec1: c[0]--; break;
      case CmOp::Dec2: c[1]--; break;
      default: break;
    }
    state = chosen->target;
    run.ops.push_back(chosen->op);
    run.configs.emplace_back(state, c[0], c[1]);
  }
}

namespace {

const std::vector<Letter> kOps = {"inc1", "inc2", "dec1",
                                  "dec2", "ztest1", "ztest2"};

std::vector<long long> op_effect(CmOp op) {
  std::vector<long long> e(2, 0);
  switch (op) {
    case CmOp::Inc1: e[0] = 1; break;
    case CmOp::Inc2: e[1] = 1; break;
    case CmOp::Dec1: e[0] = -1; break;
    case CmOp::Dec2: e[1] = -1; break;
    default: break;
  }
  return e;
}

std::string sink_name(const TwoCounterMachine& m) {
  std::string name = "u";
  while (std::find(m.states.begin(), m.states.end(), name) != m.states.end())
    name += "_";
  return name;
}

void reindex(Vass& v) {
  for (size_t i = 0; i < v.transitions.size(); ++i)
    v.transitions[i].index = static_cast<int>(i);
}

void add_prefixed(Vass& out, const Vass& half, const std::string& prefix) {
  for (const auto& q : half.states) out.states.push_back(prefix + q);
  for (const auto& q : half.accepting) out.accepting.push_back(prefix + q);
  for (const auto& t : half.transitions)
    out.transitions.push_back(
        Transition{prefix + t.source, t.label, t.effect, prefix + t.target, 0});
}

}  // namespace

Vass weak_simulate(const TwoCounterMachine& m) {
  const auto violations = check_2cm(m);
  if (!violations.empty())
    throw std::invalid_argument("weak_simulate: " + violations.front());
  Vass v;
  v.name = m.name + "-weak";
  v.dimension = 2;
  v.alphabet = kOps;
  v.semantics = Semantics::Coverability;
  v.states = m.states;
  std::string sink = sink_name(m);
  v.states.push_back(sink);
  v.initial = m.initial;
  v.accepting = {m.halting, sink};
  for (const auto& t : m.transitions)
    v.transitions.push_back(
        Transition{t.source, cm_op_name(t.op), op_effect(t.op), t.target, 0});
  for (const auto& t : m.transitions) {
    if (t.op != CmOp::Ztest1 && t.op != CmOp::Ztest2) continue;
    std::vector<long long> cheat(2, 0);
    cheat[cm_op_counter(t.op)] = -1;
    v.transitions.push_back(
        Transition{t.source, cm_op_name(t.op), std::move(cheat), sink, 0});
  }
  for (const auto& l : kOps)
    v.transitions.push_back(Transition{sink, l, {0, 0}, sink, 0});
  reindex(v);
  return v;
}

std::pair<Vass, Vass> compile_inclusion_gadget(const TwoCounterMachine& m) {
  Vass core = weak_simulate(m);
  std::string sink = sink_name(m);

  Vass a = core;
  a.name = m.name + "-inclA";
  a.alphabet.push_back("b");
  a.alphabet.push_back("h");
  a.transitions.push_back(Transition{m.halting, "h", {0, 0}, m.halting, 0});
  a.transitions.push_back(Transition{sink, "h", {0, 0}, sink, 0});
  reindex(a);

  Vass b = core;
  b.name = m.name + "-inclB";
  b.alphabet.push_back("b");
  b.alphabet.push_back("h");
  for (const auto& q : core.states)
    if (q != sink) b.transitions.push_back(Transition{q, "b", {0, 0}, sink, 0});
  b.transitions.push_back(Transition{sink, "b", {0, 0}, sink, 0});
  b.transitions.push_back(Transition{sink, "h", {0, 0}, sink, 0});
  reindex(b);
  return {std::move(a), std::move(b)};
}

Vass compile_hdness_gadget(const TwoCounterMachine& m) {
  auto [a, b] = compile_inclusion_gadget(m);
  Vass v;
  v.name = m.name + "-hdness";
  v.dimension = 2;
  v.alphabet = a.alphabet;
  v.alphabet.push_back("@go");
  v.semantics = Semantics::Coverability;
  std::string init = "s";
  while (std::find(a.states.begin(), a.states.end(), init) != a.states.end())
    init += "_";
  v.initial = init;
  v.states.push_back(init);
  add_prefixed(v, a, "A.");
  add_prefixed(v, b, "B.");
  v.transitions.push_back(Transition{init, "@go", {0, 0}, "A." + a.initial, 0});
  v.transitions.push_back(Transition{init, "@go", {0, 0}, "B." + b.initial, 0});
  reindex(v);
  return v;
}

RegularityGadget compile_regularity_gadget(const TwoCounterMachine& m,
                                           Semantics semantics,
                                           size_t probe_steps) {
  RegularityGadget out;
  Vass v = weak_simulate(m);
  v.name = m.name + "-reg";
  v.semantics = semantics;
  v.alphabet.push_back("a");
  std::string sink = sink_name(m);
  std::string countdown = "c";
  while (v.has_state(countdown)) countdown += "_";
  v.states.push_back(countdown);
  for (const auto& q : m.states)
    v.transitions.push_back(Transition{q, "a", {0, 0}, countdown, 0});
  v.transitions.push_back(Transition{countdown, "a", {-1, 0}, countdown, 0});
  v.transitions.push_back(Transition{countdown, "a", {0, -1}, countdown, 0});
  if (semantics == Semantics::Coverability) {
    // The sink swallows anything; padding words per the incorrect-prefix part.
    v.transitions.push_back(Transition{sink, "a", {0, 0}, sink, 0});
    v.accepting = m.states;
    v.accepting.push_back(sink);
    v.accepting.push_back(countdown);
  } else {
    // Reachability: the suffix after a cheat must also drain the counters.
    for (const auto& l : v.alphabet) {
      v.transitions.push_back(Transition{sink, l, {-1, 0}, sink, 0});
      v.transitions.push_back(Transition{sink, l, {0, -1}, sink, 0});
    }
    v.accepting = {sink, countdown};
    FaithfulRun probe = run_2cm(m, probe_steps);
    if (probe.status == CmStatus::Halted) {
      const auto& [state, c1, c2] = probe.configs.back();
      (void)state;
      if (c1 != 0 || c2 != 0)
        out.warnings.push_back(
            "machine halts with counters (" + std::to_string(c1) + "," +
            std::to_string(c2) +
            "); reachability semantics assumes halting with counters 0");
    }
  }
  reindex(v);
  out.vass = std::move(v);
  return out;
}

}  // namespace hdvass
