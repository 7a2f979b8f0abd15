#include "hdvass/hdgame.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <tuple>

namespace hdvass {

namespace {

std::string counters_to_string(const std::vector<long long>& c) {
  std::string out = "[";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  return out + "]";
}

// Distinct configurations Eve can reach from `from` via a silent prelude
// (length <= budget) followed by a `letter` transition, sorted.
std::vector<Configuration> eve_options(const Vass& v, const Configuration& from,
                                       const Letter& letter, long long budget) {
  std::set<Configuration> result;
  std::set<Configuration> seen{from};
  std::deque<std::pair<Configuration, long long>> queue{{from, 0}};
  while (!queue.empty()) {
    auto [cfg, depth] = queue.front();
    queue.pop_front();
    for (int ti : enabled(v, cfg, letter)) result.insert(apply(v, cfg, ti));
    if (depth >= budget) continue;
    for (int ti : enabled(v, cfg, kEpsilon)) {
      Configuration succ = apply(v, cfg, ti);
      if (seen.insert(succ).second) queue.emplace_back(std::move(succ), depth + 1);
    }
  }
  return std::vector<Configuration>(result.begin(), result.end());
}

// Whether Eve can complete her run to acceptance by silent moves alone.
bool eve_accepting(const Vass& v, const Configuration& from, SearchOptions opts,
                   const Word& word) {
  if (v.semantics == Semantics::Coverability && v.has_epsilon()) {
    for (const auto& oc : eps_cover_closure_configs(v, {from}))
      if (v.is_accepting_state(oc.state)) return true;
    return false;
  }
  std::set<Configuration> seen{from};
  std::deque<std::pair<Configuration, long long>> queue{{from, 0}};
  bool saturated = false;
  while (!queue.empty()) {
    auto [cfg, depth] = queue.front();
    queue.pop_front();
    if (is_accepting(v, cfg)) return true;
    for (int ti : enabled(v, cfg, kEpsilon)) {
      Configuration succ = apply(v, cfg, ti);
      if (!seen.contains(succ)) {
        if (depth >= opts.eps_budget) {
          saturated = true;
          continue;
        }
        seen.insert(succ);
        queue.emplace_back(std::move(succ), depth + 1);
      }
    }
  }
  if (saturated)
    throw InconclusiveError(word, "epsilon budget cut off Eve's acceptance check");
  return false;
}

struct Solver {
  const Vass& v;
  SearchOptions opts;
  Oracle oracle;
  size_t full_h;

  struct KNode {
    Oracle::State state;
    Word word;
    std::map<Letter, int> next;
  };
  std::vector<KNode> knodes;
  std::map<std::pair<int, size_t>, bool> residual_cache;
  std::map<std::tuple<Configuration, int, size_t>, std::optional<NonHdWitness>> memo;

  Solver(const Vass& vin, SearchOptions o, size_t h)
      : v(vin), opts(o), oracle(vin, o), full_h(h) {
    knodes.push_back(KNode{oracle.initial(), {}, {}});
  }

  int child(int kn, const Letter& l) {
    auto it = knodes[kn].next.find(l);
    if (it != knodes[kn].next.end()) return it->second;
    KNode node;
    node.state = oracle.step(knodes[kn].state, l);
    node.word = knodes[kn].word;
    node.word.push_back(l);
    knodes.push_back(std::move(node));
    int id = static_cast<int>(knodes.size()) - 1;
    knodes[kn].next.emplace(l, id);
    return id;
  }

  // Some word (possibly empty) is accepted from the knowledge set. For
  // reachability this is bounded by the residual depth left in the game.
  bool residual_nonempty(int kn, size_t remaining) {
    if (v.semantics == Semantics::Coverability) remaining = 0;  // exact, depth-free
    auto key = std::make_pair(kn, remaining);
    auto it = residual_cache.find(key);
    if (it != residual_cache.end()) return it->second;
    bool result;
    const Oracle::State& s = knodes[kn].state;
    if (v.semantics == Semantics::Coverability) {
      std::vector<OmegaConfig> roots = s.omega;
      for (const auto& c : s.exact) roots.push_back(OmegaConfig{c.state, lift(c.counters)});
      result = cover_language_nonempty_from(v, roots);
    } else {
      LanguageSample sample = language_from(v, s.exact, remaining, opts);
      if (sample.accepted.empty() && !sample.unknown.empty())
        throw InconclusiveError(knodes[kn].word, "residual check hit the epsilon budget");
      result = !sample.accepted.empty();
    }
    residual_cache.emplace(key, result);
    return result;
  }

  // Length-lex least accepted word from the knowledge set, for stuck leaves.
  Word least_accepted(int kn, size_t remaining) {
    size_t cap = remaining + v.states.size() + 8;
    std::deque<std::pair<int, size_t>> queue{{kn, 0}};
    std::vector<int> local{kn};
    while (!queue.empty()) {
      auto [node, len] = queue.front();
      queue.pop_front();
      if (oracle.verdict(knodes[node].state) == Verdict::Accepted)
        return knodes[node].word;
      if (len >= cap) continue;
      for (const auto& l : v.alphabet) {
        int c = child(node, l);
        if (oracle.dead(knodes[c].state)) continue;
        queue.emplace_back(c, len + 1);
      }
    }
    return knodes[kn].word;  // residual said nonempty but out of reach; best effort
  }

  std::optional<NonHdWitness> adam_wins(const Configuration& eve, int kn,
                                        size_t depth_left) {
    auto key = std::make_tuple(eve, kn, depth_left);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::optional<NonHdWitness> result = search(eve, kn, depth_left);
    memo.emplace(std::move(key), result);
    return result;
  }

  std::optional<NonHdWitness> search(const Configuration& eve, int kn,
                                     size_t depth_left) {
    Word word = knodes[kn].word;  // copied: child() below may grow knodes
    Verdict vd = oracle.verdict(knodes[kn].state);
    if (vd == Verdict::Unknown)
      throw InconclusiveError(word, "membership check hit the epsilon budget");
    if (vd == Verdict::Accepted && !eve_accepting(v, eve, opts, word)) {
      NonHdWitness w;
      w.word = word;
      w.leaf = NonHdWitness::Leaf::NotAccepting;
      w.losing_word = word;
      return w;
    }
    if (depth_left == 0) return std::nullopt;
    for (const auto& letter : v.alphabet) {
      int kn2 = child(kn, letter);
      if (!residual_nonempty(kn2, depth_left - 1)) continue;
      std::vector<Configuration> options = eve_options(v, eve, letter, opts.eps_budget);
      if (options.empty()) {
        NonHdWitness w;
        w.word = word;
        w.letter = letter;
        w.leaf = NonHdWitness::Leaf::Stuck;
        w.losing_word = least_accepted(kn2, depth_left - 1);
        return w;
      }
      NonHdWitness node;
      node.word = word;
      node.letter = letter;
      bool adam_beats_all = true;
      for (const auto& succ : options) {
        auto sub = adam_wins(succ, kn2, depth_left - 1);
        if (!sub) {
          adam_beats_all = false;
          break;
        }
        node.children.emplace_back(succ, std::move(*sub));
      }
      if (adam_beats_all) return node;
    }
    return std::nullopt;
  }
};

}  // namespace

HdCheckResult find_nonhd_witness(const Vass& v, size_t horizon, SearchOptions opts) {
  for (size_t h = 0; h <= horizon; ++h) {
    Solver solver(v, opts, h);
    auto w = solver.adam_wins(initial_configuration(v), 0, h);
    if (w) return HdCheckResult{std::move(w), h};
  }
  return HdCheckResult{std::nullopt, horizon};
}

namespace {

bool check_node(const Vass& v, const NonHdWitness& w, const Configuration& eve,
                Oracle& oracle, const Oracle::State& knowledge, SearchOptions opts) {
  switch (w.leaf) {
    case NonHdWitness::Leaf::NotAccepting:
      return oracle.verdict(knowledge) == Verdict::Accepted &&
             !eve_accepting(v, eve, opts, w.word) && w.losing_word == w.word &&
             member(v, w.losing_word, opts).verdict == Verdict::Accepted;
    case NonHdWitness::Leaf::Stuck: {
      if (!eve_options(v, eve, w.letter, opts.eps_budget).empty()) return false;
      Word prefix = w.word;
      prefix.push_back(w.letter);
      if (w.losing_word.size() < prefix.size() ||
          !std::equal(prefix.begin(), prefix.end(), w.losing_word.begin()))
        return false;
      return member(v, w.losing_word, opts).verdict == Verdict::Accepted;
    }
    case NonHdWitness::Leaf::None:
      break;
  }
  std::vector<Configuration> options = eve_options(v, eve, w.letter, opts.eps_budget);
  if (options.size() != w.children.size()) return false;
  Oracle::State next = oracle.step(knowledge, w.letter);
  for (size_t i = 0; i < options.size(); ++i) {
    if (!(w.children[i].first == options[i])) return false;
    if (!check_node(v, w.children[i].second, options[i], oracle, next, opts))
      return false;
  }
  return true;
}

void format_node(const NonHdWitness& w, size_t indent, std::ostringstream& out) {
  std::string pad(indent * 2, ' ');
  switch (w.leaf) {
    case NonHdWitness::Leaf::NotAccepting:
      out << pad << "lose: \"" << word_to_string(w.losing_word)
          << "\" is in the language, eve cannot accept\n";
      return;
    case NonHdWitness::Leaf::Stuck:
      out << pad << "adam " << w.letter << "\n"
          << pad << "  lose: eve stuck, \"" << word_to_string(w.losing_word)
          << "\" is in the language\n";
      return;
    case NonHdWitness::Leaf::None:
      break;
  }
  out << pad << "adam " << w.letter << "\n";
  for (const auto& [cfg, sub] : w.children) {
    out << pad << "  eve -> " << cfg.state << " " << counters_to_string(cfg.counters)
        << "\n";
    format_node(sub, indent + 2, out);
  }
}

}  // namespace

bool check_witness(const Vass& v, const NonHdWitness& w, SearchOptions opts) {
  Oracle oracle(v, opts);
  return check_node(v, w, initial_configuration(v), oracle, oracle.initial(), opts);
}

std::string witness_to_string(const NonHdWitness& w) {
  std::ostringstream out;
  format_node(w, 0, out);
  return out.str();
}

LetterGameTranscript play_letter_game(const Vass& v, const Word& adam_letters,
                                      const Resolver& r, SearchOptions opts) {
  LetterGameTranscript transcript;
  Oracle oracle(v, opts);
  Oracle::State knowledge = oracle.initial();
  Run run;
  run.start = initial_configuration(v);
  bool stuck = false;
  for (size_t i = 0; i < adam_letters.size(); ++i) {
    const Letter& l = adam_letters[i];
    knowledge = oracle.step(knowledge, l);
    LetterGameStep step;
    step.letter = l;
    if (!stuck) {
      step.choice = r.choose(v, run, l);
      if (step.choice) {
        for (int ti : step.choice->prelude) run.steps.emplace_back(ti, apply(v, run.final_config(), ti));
        run.steps.emplace_back(step.choice->transition,
                               apply(v, run.final_config(), step.choice->transition));
        run.word.push_back(l);
      } else {
        stuck = true;
      }
    }
    step.eve = run.final_config();
    step.word_accepted = oracle.verdict(knowledge) == Verdict::Accepted;
    step.eve_accepting =
        !stuck && eve_accepting(v, step.eve, opts, run.word);
    bool losing = (step.word_accepted && !step.eve_accepting) ||
                  (stuck && !oracle.dead(knowledge));
    transcript.steps.push_back(step);
    if (losing && !transcript.first_losing) transcript.first_losing = i;
  }
  return transcript;
}

}  // namespace hdvass
