#include "hdvass/constructions.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hdvass {

namespace {

std::string fresh_state_name(const Vass& v, std::string base) {
  while (v.has_state(base)) base += "_";
  return base;
}

void reindex(Vass& v) {
  for (size_t i = 0; i < v.transitions.size(); ++i)
    v.transitions[i].index = static_cast<int>(i);
}

std::string delay_name(const std::string& state, const std::vector<long long>& v) {
  std::string out = state + "~";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += "_";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

Vass complete(const Vass& v) {
  Vass out = v;
  std::string sink = fresh_state_name(v, "__sink");
  out.states.push_back(sink);
  for (const auto& q : v.states)
    for (const auto& a : v.alphabet) {
      bool always_enabled = false;
      for (const auto& t : v.transitions)
        if (t.source == q && t.label == a &&
            std::all_of(t.effect.begin(), t.effect.end(),
                        [](long long e) { return e >= 0; })) {
          always_enabled = true;
          break;
        }
      if (!always_enabled)
        out.transitions.push_back(Transition{
            q, a, std::vector<long long>(v.dimension, 0), sink, 0});
    }
  for (const auto& a : v.alphabet)
    out.transitions.push_back(
        Transition{sink, a, std::vector<long long>(v.dimension, 0), sink, 0});
  reindex(out);
  return out;
}

namespace {

Vass product(const Vass& a, const Vass& b, bool accept_either,
             const std::string& tag) {
  if (a.has_epsilon() || b.has_epsilon())
    throw std::invalid_argument("product: inputs must be epsilon-free");
  if (a.alphabet != b.alphabet)
    throw std::invalid_argument("product: alphabets differ");
  if (a.semantics != b.semantics)
    throw std::invalid_argument("product: semantics differ");
  Vass A = complete(a);
  Vass B = complete(b);
  Vass out;
  out.name = tag + "(" + a.name + "," + b.name + ")";
  out.dimension = a.dimension + b.dimension;
  out.alphabet = a.alphabet;
  out.semantics = a.semantics;
  auto pair_name = [](const std::string& qa, const std::string& qb) {
    return qa + "|" + qb;
  };
  for (const auto& qa : A.states)
    for (const auto& qb : B.states) {
      std::string name = pair_name(qa, qb);
      out.states.push_back(name);
      bool fa = A.is_accepting_state(qa);
      bool fb = B.is_accepting_state(qb);
      if (accept_either ? (fa || fb) : (fa && fb)) out.accepting.push_back(name);
    }
  out.initial = pair_name(A.initial, B.initial);
  for (const auto& ta : A.transitions)
    for (const auto& tb : B.transitions) {
      if (ta.label != tb.label) continue;
      std::vector<long long> effect = ta.effect;
      effect.insert(effect.end(), tb.effect.begin(), tb.effect.end());
      out.transitions.push_back(Transition{pair_name(ta.source, tb.source),
                                           ta.label, std::move(effect),
                                           pair_name(ta.target, tb.target), 0});
    }
  reindex(out);
  return out;
}

}  // namespace

Vass product_union(const Vass& a, const Vass& b) {
  return product(a, b, true, "union");
}

Vass product_intersection(const Vass& a, const Vass& b) {
  return product(a, b, false, "inter");
}

Homomorphism parse_homomorphism(const std::string& text) {
  Homomorphism h;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens.size() < 3 || tokens[1] != "->")
      throw std::invalid_argument("homomorphism line must read `letter -> word`: " +
                                  line);
    const Letter& src = tokens[0];
    if (h.map.contains(src))
      throw std::invalid_argument("duplicate homomorphism entry for " + src);
    Word image;
    if (!(tokens.size() == 3 && tokens[2] == kEpsilon))
      image.assign(tokens.begin() + 2, tokens.end());
    h.source_alphabet.push_back(src);
    h.map.emplace(src, std::move(image));
  }
  return h;
}

std::string serialize_homomorphism(const Homomorphism& h) {
  std::string out;
  for (const auto& src : h.source_alphabet) {
    out += src + " ->";
    const Word& image = h.map.at(src);
    if (image.empty()) {
      out += std::string(" ") + kEpsilon;
    } else {
      for (const auto& l : image) out += " " + l;
    }
    out += "\n";
  }
  return out;
}

namespace {

// All transition-index sequences from `q` spelling `image` (epsilon-free
// input, so path length equals |image|).
void spell_paths(const Vass& v, const std::string& q, const Word& image,
                 size_t pos, std::vector<int>& path,
                 std::vector<std::vector<int>>& out) {
  if (pos == image.size()) {
    out.push_back(path);
    return;
  }
  for (const auto& t : v.transitions) {
    if (t.source != q || t.label != image[pos]) continue;
    path.push_back(t.index);
    spell_paths(v, t.target, image, pos + 1, path, out);
    path.pop_back();
  }
}

}  // namespace

Vass inverse_hom(const Vass& a, const Homomorphism& h) {
  if (a.has_epsilon())
    throw std::invalid_argument("inverse_hom: input must be epsilon-free");
  for (const auto& src : h.source_alphabet)
    for (const auto& l : h.map.at(src))
      if (!a.has_letter(l))
        throw std::invalid_argument("inverse_hom: image letter " + l +
                                    " outside the automaton alphabet");
  Vass out;
  out.name = "invhom(" + a.name + ")";
  out.dimension = a.dimension;
  out.alphabet = h.source_alphabet;
  out.semantics = a.semantics;

  using DState = std::pair<std::string, std::vector<long long>>;
  std::vector<DState> order;
  std::set<DState> seen;
  std::set<std::tuple<std::string, Letter, std::vector<long long>, std::string>>
      emitted;
  std::deque<DState> queue;
  DState start{a.initial, std::vector<long long>(a.dimension, 0)};
  queue.push_back(start);
  seen.insert(start);
  out.initial = delay_name(start.first, start.second);
  while (!queue.empty()) {
    DState cur = queue.front();
    queue.pop_front();
    order.push_back(cur);
    for (const auto& x : h.source_alphabet) {
      const Word& image = h.map.at(x);
      std::vector<std::vector<int>> paths;
      std::vector<int> scratch;
      spell_paths(a, cur.first, image, 0, scratch, paths);
      for (const auto& path : paths) {
        std::vector<long long> prefix(a.dimension, 0);
        std::vector<long long> dip(a.dimension, 0);  // e_i = min(prefix minima, 0)
        std::string dest = cur.first;
        for (int ti : path) {
          const Transition& t = a.transitions[ti];
          for (int i = 0; i < a.dimension; ++i) {
            prefix[i] += t.effect[i];
            dip[i] = std::min(dip[i], prefix[i]);
          }
          dest = t.target;
        }
        std::vector<long long> effect(a.dimension), delayed(a.dimension);
        for (int i = 0; i < a.dimension; ++i) {
          effect[i] = dip[i] + cur.second[i];
          delayed[i] = prefix[i] - dip[i];
        }
        DState next{dest, delayed};
        std::string src_name = delay_name(cur.first, cur.second);
        std::string dst_name = delay_name(next.first, next.second);
        if (emitted.emplace(src_name, x, effect, dst_name).second)
          out.transitions.push_back(
              Transition{src_name, x, std::move(effect), dst_name, 0});
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
  }
  for (const auto& [state, delay] : order) {
    out.states.push_back(delay_name(state, delay));
    bool acc = a.is_accepting_state(state);
    if (a.semantics == Semantics::Reachability)
      acc = acc && std::all_of(delay.begin(), delay.end(),
                               [](long long d) { return d == 0; });
    if (acc) out.accepting.push_back(delay_name(state, delay));
  }
  reindex(out);
  return out;
}

namespace {

struct PathInfo {
  long long dip;     // min over prefix effects and 0; <= 0
  long long effect;  // total effect
};

struct SilentAnalysis {
  // Pareto-optimal (dip, effect) pairs per destination (larger is better in
  // both coordinates); includes the empty path to the source itself.
  std::map<std::string, std::vector<PathInfo>> dests;
  // Positive-cycle states reachable by silent moves; value is the best
  // (largest) dip over paths that traverse the cycle once.
  std::map<std::string, long long> pumps;
};

void silent_dfs(const Vass& v, const std::string& state, long long effect,
                long long dip, std::vector<std::pair<std::string, long long>>& stack,
                SilentAnalysis& out) {
  out.dests[state].push_back(PathInfo{dip, effect});
  stack.emplace_back(state, effect);
  for (const auto& t : v.transitions) {
    if (t.source != state || !t.silent()) continue;
    long long ne = effect + t.effect[0];
    long long nd = std::min(dip, ne);
    auto on_stack = std::find_if(stack.begin(), stack.end(),
                                 [&](const auto& p) { return p.first == t.target; });
    if (on_stack != stack.end()) {
      long long cycle = ne - on_stack->second;
      if (cycle > 0) {
        auto [it, fresh] = out.pumps.emplace(t.target, nd);
        if (!fresh) it->second = std::max(it->second, nd);
      }
      continue;  // simple paths only; longer unrollings are never better
    }
    silent_dfs(v, t.target, ne, nd, stack, out);
  }
  stack.pop_back();
}

SilentAnalysis analyze_silent(const Vass& v, const std::string& from) {
  SilentAnalysis out;
  std::vector<std::pair<std::string, long long>> stack;
  silent_dfs(v, from, 0, 0, stack, out);
  for (auto& [dest, infos] : out.dests) {
    std::sort(infos.begin(), infos.end(), [](const PathInfo& a, const PathInfo& b) {
      if (a.dip != b.dip) return a.dip > b.dip;
      return a.effect > b.effect;
    });
    std::vector<PathInfo> pareto;
    long long best_effect = 0;
    for (const auto& p : infos)
      if (pareto.empty() || p.effect > best_effect) {
        pareto.push_back(p);
        best_effect = p.effect;
      }
    infos = std::move(pareto);
  }
  return out;
}

// Graph-level silent closure, ignoring counter values.
std::vector<std::string> unguarded_closure(const Vass& v, const std::string& from) {
  std::vector<std::string> order{from};
  std::set<std::string> seen{from};
  for (size_t i = 0; i < order.size(); ++i)
    for (const auto& t : v.transitions)
      if (t.source == order[i] && t.silent() && seen.insert(t.target).second)
        order.push_back(t.target);
  return order;
}

}  // namespace

Vass eliminate_epsilon_1hd(const Vass& a) {
  if (a.dimension != 1)
    throw std::invalid_argument("eliminate_epsilon_1hd: dimension must be 1");
  if (a.semantics != Semantics::Coverability)
    throw std::invalid_argument("eliminate_epsilon_1hd: coverability semantics only");
  if (!a.has_epsilon()) return a;

  std::map<std::string, SilentAnalysis> analysis;
  for (const auto& q : a.states) analysis.emplace(q, analyze_silent(a, q));
  std::map<std::string, std::vector<std::string>> closure;
  for (const auto& q : a.states) closure.emplace(q, unguarded_closure(a, q));
  auto sm_accepting = [&](const std::string& q) {
    for (const auto& r : closure.at(q))
      if (a.is_accepting_state(r)) return true;
    return false;
  };

  Vass out;
  out.name = a.name + "-noeps";
  out.dimension = 1;
  out.alphabet = a.alphabet;
  out.semantics = Semantics::Coverability;
  const std::string init = "^init";
  out.initial = init;
  out.states.push_back(init);
  bool init_accepting = false;
  bool sm_used = false;
  auto sm_name = [](const std::string& q) { return q + "@sm"; };
  auto pair_name = [](const std::string& q, long long s) {
    return q + "~" + std::to_string(s);
  };

  using PairState = std::pair<std::string, long long>;
  std::vector<PairState> order;
  std::set<PairState> seen;
  std::deque<PairState> queue;
  auto reach_pair = [&](const PairState& p) {
    if (seen.insert(p).second) queue.push_back(p);
  };
  std::set<std::tuple<std::string, Letter, long long, std::string>> emitted;
  auto emit = [&](const std::string& src, const Letter& l, long long eff,
                  const std::string& dst) {
    if (emitted.emplace(src, l, eff, dst).second)
      out.transitions.push_back(Transition{src, l, {eff}, dst, 0});
  };

  // Folds every letter transition from `p` together with a trailing silent
  // path; the path's dip is paid by the transition, the rest rides along as
  // banked surplus in the target state.
  auto fold_from = [&](const std::string& src, const std::string& p, long long s) {
    for (const auto& t : a.transitions) {
      if (t.source != p || t.silent()) continue;
      const SilentAnalysis& post = analysis.at(t.target);
      for (const auto& [dest, infos] : post.dests)
        for (const auto& info : infos) {
          emit(src, t.label, s + t.effect[0] + info.dip,
               pair_name(dest, info.effect - info.dip));
          reach_pair({dest, info.effect - info.dip});
        }
      for (const auto& [cycle_state, dip] : post.pumps) {
        emit(src, t.label, s + t.effect[0] + dip, sm_name(cycle_state));
        sm_used = true;
      }
    }
  };

  // Silent moves before the first letter: only dip-free paths are feasible
  // from counter value 0.
  const SilentAnalysis& pre = analysis.at(a.initial);
  for (const auto& [p, infos] : pre.dests)
    for (const auto& info : infos) {
      if (info.dip < 0) continue;
      fold_from(init, p, info.effect);
      if (a.is_accepting_state(p)) init_accepting = true;
    }
  for (const auto& [cycle_state, dip] : pre.pumps) {
    if (dip < 0) continue;
    sm_used = true;
    if (sm_accepting(cycle_state)) init_accepting = true;
    for (const auto& r : closure.at(cycle_state))
      for (const auto& t : a.transitions)
        if (t.source == r && !t.silent()) {
          emit(init, t.label, 0, sm_name(t.target));
        }
  }

  while (!queue.empty()) {
    PairState cur = queue.front();
    queue.pop_front();
    order.push_back(cur);
    fold_from(pair_name(cur.first, cur.second), cur.first, cur.second);
  }

  if (init_accepting) out.accepting.push_back(init);
  for (const auto& [q, s] : order) {
    out.states.push_back(pair_name(q, s));
    if (a.is_accepting_state(q)) out.accepting.push_back(pair_name(q, s));
  }
  if (sm_used)
    for (const auto& q : a.states) {
      out.states.push_back(sm_name(q));
      if (sm_accepting(q)) out.accepting.push_back(sm_name(q));
      for (const auto& r : closure.at(q))
        for (const auto& t : a.transitions)
          if (t.source == r && !t.silent()) emit(sm_name(q), t.label, 0, sm_name(t.target));
    }
  reindex(out);
  return out;
}

Vass endmarker_cover_to_reach(const Vass& a, const Letter& marker) {
  if (a.semantics != Semantics::Coverability)
    throw std::invalid_argument("endmarker transform expects coverability input");
  if (a.has_letter(marker) || marker == kEpsilon)
    throw std::invalid_argument("end marker collides with the alphabet");
  Vass out = a;
  out.name = a.name + "-endmark";
  out.semantics = Semantics::Reachability;
  out.alphabet.push_back(marker);
  std::string drain = fresh_state_name(a, "__drain");
  out.states.push_back(drain);
  for (const auto& q : a.accepting)
    out.transitions.push_back(
        Transition{q, marker, std::vector<long long>(a.dimension, 0), drain, 0});
  for (int i = 0; i < a.dimension; ++i) {
    std::vector<long long> effect(a.dimension, 0);
    effect[i] = -1;
    out.transitions.push_back(Transition{drain, kEpsilon, std::move(effect), drain, 0});
  }
  out.accepting = {drain};
  reindex(out);
  return out;
}

bool check_deterministic(const Vass& v) {
  if (v.has_epsilon()) return false;
  std::set<std::pair<std::string, Letter>> seen;
  for (const auto& t : v.transitions)
    if (!seen.emplace(t.source, t.label).second) return false;
  return true;
}

FsVass union_of_dvass(const std::vector<Vass>& members) {
  for (const auto& m : members) {
    if (!check_deterministic(m))
      throw std::invalid_argument("union_of_dvass: member " + m.name +
                                  " is not deterministic");
    if (m.alphabet != members.front().alphabet)
      throw std::invalid_argument("union_of_dvass: alphabets differ");
    if (m.semantics != members.front().semantics)
      throw std::invalid_argument("union_of_dvass: semantics differ");
  }
  return FsVass{members};
}

MembershipResult fs_member(const FsVass& u, const Word& word, SearchOptions opts) {
  MembershipResult out;
  out.verdict = Verdict::Rejected;
  for (const auto& m : u.members) {
    MembershipResult r = member(m, word, opts);
    if (r.verdict == Verdict::Accepted) return r;
    if (r.verdict == Verdict::Unknown) out.verdict = Verdict::Unknown;
  }
  return out;
}

LanguageSample fs_language_up_to(const FsVass& u, size_t n, SearchOptions opts) {
  LanguageSample out;
  if (u.members.empty()) return out;
  const std::vector<Letter>& alphabet = u.members.front().alphabet;
  auto index_of = [&](const Letter& l) {
    return std::find(alphabet.begin(), alphabet.end(), l) - alphabet.begin();
  };
  auto lexless = [&](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return index_of(a[i]) < index_of(b[i]);
    return false;
  };
  std::set<Word, decltype(lexless)> accepted(lexless), unknown(lexless);
  for (const auto& m : u.members) {
    LanguageSample s = language_up_to(m, n, opts);
    accepted.insert(s.accepted.begin(), s.accepted.end());
    unknown.insert(s.unknown.begin(), s.unknown.end());
  }
  for (const auto& w : unknown)
    if (!accepted.contains(w)) out.unknown.push_back(w);
  out.accepted.assign(accepted.begin(), accepted.end());
  return out;
}

}  // namespace hdvass
