#include "hdvass/semantics.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

namespace hdvass {

namespace {

void sort_unique(std::vector<Configuration>& cs) {
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
}

// Budgeted epsilon closure; second element reports a budget cutoff.
std::pair<std::vector<Configuration>, bool> exact_eps_closure(
    const Vass& v, std::vector<Configuration> configs, long long budget) {
  if (!v.has_epsilon()) {
    sort_unique(configs);
    return {std::move(configs), false};
  }
  std::set<Configuration> seen(configs.begin(), configs.end());
  std::vector<Configuration> frontier(seen.begin(), seen.end());
  for (long long depth = 0; depth < budget && !frontier.empty(); ++depth) {
    std::vector<Configuration> next;
    for (const auto& c : frontier)
      for (int ti : enabled(v, c, kEpsilon)) {
        Configuration succ = apply(v, c, ti);
        if (seen.insert(succ).second) next.push_back(succ);
      }
    frontier = std::move(next);
  }
  bool saturated = false;
  for (const auto& c : frontier) {
    for (int ti : enabled(v, c, kEpsilon)) {
      if (!seen.count(apply(v, c, ti))) { saturated = true; break; }
    }
    if (saturated) break;
  }
  return {std::vector<Configuration>(seen.begin(), seen.end()), saturated};
}

}  // namespace

Oracle::Oracle(const Vass& v, SearchOptions opts)
    : v_(&v), opts_(opts),
      omega_mode_(v.semantics == Semantics::Coverability && v.has_epsilon()) {}

std::vector<OmegaConfig> Oracle::omega_closure(
    const std::vector<OmegaConfig>& roots) const {
  std::set<OmegaConfig> pool;
  for (const auto& r : roots) {
    auto it = closure_cache_.find(r);
    if (it == closure_cache_.end())
      it = closure_cache_.emplace(r, eps_cover_closure(*v_, {r})).first;
    pool.insert(it->second.begin(), it->second.end());
  }
  std::map<std::string, std::vector<OmegaVector>> by_state;
  for (const auto& c : pool) by_state[c.state].push_back(c.vec);
  auto key = [](const Omega& o) {
    return o.inf ? std::numeric_limits<long long>::max() : o.val;
  };
  std::vector<OmegaConfig> maximal;
  for (auto& [state, vecs] : by_state) {
    int dim = (int)vecs.front().size();
    std::vector<OmegaVector> keep;
    if (dim <= 2) {
      // Pareto sweep: descending on the first coord, keep rising seconds.
      std::sort(vecs.begin(), vecs.end(),
                [&](const OmegaVector& a, const OmegaVector& b) {
                  if (key(a[0]) != key(b[0])) return key(a[0]) > key(b[0]);
                  return dim == 2 && key(a[1]) > key(b[1]);
                });
      long long best = std::numeric_limits<long long>::min();
      for (const auto& v : vecs) {
        long long second = dim == 2 ? key(v[1]) : 0;
        if (!keep.empty() && second <= best) continue;
        keep.push_back(v);
        best = std::max(best, second);
      }
    } else {
      for (const auto& v : vecs) {
        bool dominated = false;
        for (const auto& m : keep)
          if (leq(v, m)) { dominated = true; break; }
        if (dominated) continue;
        keep.erase(std::remove_if(keep.begin(), keep.end(),
                                  [&](const OmegaVector& m) { return leq(m, v); }),
                   keep.end());
        keep.push_back(v);
      }
    }
    for (auto& v : keep) maximal.push_back(OmegaConfig{state, std::move(v)});
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

Oracle::State Oracle::from_configs(const std::vector<Configuration>& start) const {
  State s;
  if (omega_mode_) {
    std::vector<OmegaConfig> roots;
    roots.reserve(start.size());
    for (const auto& c : start)
      roots.push_back(OmegaConfig{c.state, lift(c.counters)});
    s.omega = omega_closure(roots);
  } else {
    auto [cs, sat] = exact_eps_closure(*v_, start, opts_.eps_budget);
    s.exact = std::move(cs);
    s.saturated = sat;
  }
  return s;
}

Oracle::State Oracle::initial() const {
  return from_configs({initial_configuration(*v_)});
}

Oracle::State Oracle::step(const State& s, const Letter& letter) const {
  if (!v_->has_letter(letter))
    throw std::invalid_argument("step: letter '" + letter + "' not in alphabet");
  State out;
  if (omega_mode_) {
    std::vector<OmegaConfig> after;
    for (const auto& oc : s.omega) {
      for (size_t ti = 0; ti < v_->transitions.size(); ++ti) {
        const Transition& t = v_->transitions[ti];
        if (t.source != oc.state || t.label != letter) continue;
        bool ok = true;
        for (int d = 0; d < v_->dimension; ++d)
          if (!oc.vec[d].ge(-t.effect[d])) { ok = false; break; }
        if (!ok) continue;
        OmegaVector nv(v_->dimension);
        for (int d = 0; d < v_->dimension; ++d) nv[d] = oc.vec[d].plus(t.effect[d]);
        after.push_back(OmegaConfig{t.target, std::move(nv)});
      }
    }
    out.omega = omega_closure(after);
  } else {
    std::vector<Configuration> after;
    for (const auto& c : s.exact)
      for (int ti : enabled(*v_, c, letter)) after.push_back(apply(*v_, c, ti));
    auto [cs, sat] = exact_eps_closure(*v_, after, opts_.eps_budget);
    out.exact = std::move(cs);
    out.saturated = s.saturated || sat;
  }
  return out;
}

bool Oracle::accepted(const State& s) const {
  if (omega_mode_) {
    for (const auto& oc : s.omega)
      if (v_->is_accepting_state(oc.state)) return true;
    return false;
  }
  for (const auto& c : s.exact)
    if (is_accepting(*v_, c)) return true;
  return false;
}

Verdict Oracle::verdict(const State& s) const {
  if (accepted(s)) return Verdict::Accepted;
  if (!omega_mode_ && s.saturated) return Verdict::Unknown;
  return Verdict::Rejected;
}

bool Oracle::dead(const State& s) const {
  return omega_mode_ ? s.omega.empty() : (s.exact.empty() && !s.saturated);
}

ReachSetResult reach_set(const Vass& v, const Word& word, SearchOptions opts) {
  for (const auto& l : word)
    if (!v.has_letter(l))
      throw std::invalid_argument("reach_set: letter '" + l + "' not in alphabet");
  ReachSetResult out;
  auto [cs, sat] = exact_eps_closure(v, {initial_configuration(v)}, opts.eps_budget);
  out.saturated = sat;
  for (const auto& l : word) {
    std::vector<Configuration> after;
    for (const auto& c : cs)
      for (int ti : enabled(v, c, l)) after.push_back(apply(v, c, ti));
    auto [ncs, nsat] = exact_eps_closure(v, after, opts.eps_budget);
    cs = std::move(ncs);
    out.saturated = out.saturated || nsat;
  }
  out.configs = std::move(cs);
  return out;
}

namespace {

// Breadth-first search for an accepting run on `word` with at most `budget`
// silent steps per letter gap. Returns the run if found.
std::optional<Run> witness_search(const Vass& v, const Word& word, long long budget) {
  struct Node {
    size_t pos;
    Configuration config;
    long long gap_used;
    int parent;      // index into nodes
    int via;         // transition index
  };
  std::vector<Node> nodes;
  std::map<std::pair<size_t, Configuration>, long long> best;
  std::deque<int> queue;
  Configuration init = initial_configuration(v);
  nodes.push_back(Node{0, init, 0, -1, -1});
  best[{0, init}] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    int cur = queue.front();
    queue.pop_front();
    Node n = nodes[cur];
    if (n.pos == word.size() && is_accepting(v, n.config)) {
      std::vector<int> seq;
      for (int i = cur; nodes[i].via != -1; i = nodes[i].parent)
        seq.push_back(nodes[i].via);
      std::reverse(seq.begin(), seq.end());
      return replay(v, seq);
    }
    auto push = [&](size_t pos, Configuration c, long long gap, int via) {
      auto key = std::make_pair(pos, c);
      auto it = best.find(key);
      if (it != best.end() && it->second <= gap) return;
      best[key] = gap;
      nodes.push_back(Node{pos, std::move(c), gap, cur, via});
      queue.push_back((int)nodes.size() - 1);
    };
    if (n.gap_used < budget)
      for (int ti : enabled(v, n.config, kEpsilon))
        push(n.pos, apply(v, n.config, ti), n.gap_used + 1, ti);
    if (n.pos < word.size())
      for (int ti : enabled(v, n.config, word[n.pos]))
        push(n.pos + 1, apply(v, n.config, ti), 0, ti);
  }
  return std::nullopt;
}

}  // namespace

MembershipResult member(const Vass& v, const Word& word, SearchOptions opts) {
  for (const auto& l : word)
    if (!v.has_letter(l))
      throw std::invalid_argument("member: letter '" + l + "' not in alphabet");
  Oracle oracle(v, opts);
  Oracle::State s = oracle.initial();
  for (const auto& l : word) s = oracle.step(s, l);
  MembershipResult res;
  res.verdict = oracle.verdict(s);
  if (res.verdict == Verdict::Accepted) {
    // The omega verdict is budget-independent, so widen until the concrete
    // witness shows up.
    long long budget = opts.eps_budget;
    std::optional<Run> run;
    for (int rounds = 0; rounds < 24 && !run; ++rounds, budget = budget * 2 + 1)
      run = witness_search(v, word, budget);
    if (!run)
      throw std::logic_error("member: accepted but no witness found (bug)");
    for (const auto& [ti, _] : run->steps)
      if (v.transitions[ti].silent()) ++res.budget_used;
    res.witness = std::move(run);
  }
  return res;
}

std::vector<Word> all_words_up_to(const std::vector<Letter>& alphabet, size_t n) {
  std::vector<Word> out{{}};
  size_t start = 0;
  for (size_t len = 1; len <= n; ++len) {
    size_t end = out.size();
    for (size_t i = start; i < end; ++i)
      for (const auto& l : alphabet) {
        Word w = out[i];
        w.push_back(l);
        out.push_back(std::move(w));
      }
    start = end;
  }
  return out;
}

LanguageSample language_from(const Vass& v, const std::vector<Configuration>& start,
                             size_t n, SearchOptions opts) {
  Oracle oracle(v, opts);
  LanguageSample sample;
  struct Item {
    Word word;
    Oracle::State state;
  };
  std::deque<Item> queue;
  queue.push_back(Item{{}, oracle.from_configs(start)});
  while (!queue.empty()) {
    Item it = std::move(queue.front());
    queue.pop_front();
    switch (oracle.verdict(it.state)) {
      case Verdict::Accepted: sample.accepted.push_back(it.word); break;
      case Verdict::Unknown: sample.unknown.push_back(it.word); break;
      case Verdict::Rejected: break;
    }
    if (it.word.size() >= n) continue;
    for (const auto& l : v.alphabet) {
      Item next;
      next.word = it.word;
      next.word.push_back(l);
      next.state = oracle.step(it.state, l);
      if (oracle.dead(next.state)) continue;
      queue.push_back(std::move(next));
    }
  }
  return sample;
}

LanguageSample language_up_to(const Vass& v, size_t n, SearchOptions opts) {
  return language_from(v, {initial_configuration(v)}, n, opts);
}

namespace {

BoundedCheck bounded_compare(const Vass& a, const Vass& b, size_t n,
                             SearchOptions opts, bool inclusion) {
  if (a.alphabet != b.alphabet)
    throw std::invalid_argument("bounded comparison requires equal alphabets");
  Oracle oa(a, opts), ob(b, opts);
  struct Item {
    Word word;
    Oracle::State sa, sb;
  };
  std::deque<Item> queue;
  queue.push_back(Item{{}, oa.initial(), ob.initial()});
  while (!queue.empty()) {
    Item it = std::move(queue.front());
    queue.pop_front();
    Verdict va = oa.verdict(it.sa), vb = ob.verdict(it.sb);
    if (va == Verdict::Unknown || vb == Verdict::Unknown)
      throw InconclusiveError(it.word, "membership Unknown on word '" +
                                           word_to_string(it.word) + "'");
    bool ina = va == Verdict::Accepted, inb = vb == Verdict::Accepted;
    bool mismatch = inclusion ? (ina && !inb) : (ina != inb);
    if (mismatch) return BoundedCheck{false, it.word};
    if (it.word.size() >= n) continue;
    for (const auto& l : a.alphabet) {
      Item next;
      next.word = it.word;
      next.word.push_back(l);
      next.sa = oa.step(it.sa, l);
      next.sb = ob.step(it.sb, l);
      bool da = oa.dead(next.sa), db = ob.dead(next.sb);
      if (da && db) continue;
      if (inclusion && da) continue;
      queue.push_back(std::move(next));
    }
  }
  return BoundedCheck{};
}

}  // namespace

BoundedCheck bounded_equiv(const Vass& a, const Vass& b, size_t n,
                           SearchOptions opts) {
  return bounded_compare(a, b, n, opts, false);
}

BoundedCheck bounded_inclusion(const Vass& a, const Vass& b, size_t n,
                               SearchOptions opts) {
  return bounded_compare(a, b, n, opts, true);
}

BoundedCheck bounded_equiv_predicate(const Vass& a, const WordPredicate& pred,
                                     size_t n, SearchOptions opts) {
  Oracle oracle(a, opts);
  struct Item {
    Word word;
    Oracle::State state;
  };
  std::deque<Item> queue;
  queue.push_back(Item{{}, oracle.initial()});
  // Dead oracle states still need predicate checks on their extensions,
  // so the subtree is never pruned here.
  while (!queue.empty()) {
    Item it = std::move(queue.front());
    queue.pop_front();
    Verdict vd = oracle.verdict(it.state);
    if (vd == Verdict::Unknown)
      throw InconclusiveError(it.word, "membership Unknown on word '" +
                                           word_to_string(it.word) + "'");
    bool ina = vd == Verdict::Accepted;
    if (ina != pred(it.word)) return BoundedCheck{false, it.word};
    if (it.word.size() >= n) continue;
    for (const auto& l : a.alphabet) {
      Item next;
      next.word = it.word;
      next.word.push_back(l);
      next.state = oracle.step(it.state, l);
      queue.push_back(std::move(next));
    }
  }
  return BoundedCheck{};
}

}  // namespace hdvass
