#include "hdvass/resolvers.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace hdvass {

namespace {

void play_transition(const Vass& v, Run& run, int ti, bool expect_silent,
                     const Letter& letter) {
  const Transition& t = v.transitions.at(ti);
  if (expect_silent && !t.silent())
    throw ResolverContractError("resolver prelude contains a non-silent transition");
  if (!expect_silent && t.label != letter)
    throw ResolverContractError("resolver chose a transition with the wrong label");
  const Configuration& cur = run.final_config();
  if (t.source != cur.state)
    throw ResolverContractError("resolver chose a transition from the wrong state");
  Configuration next;
  try {
    next = apply(v, cur, ti);
  } catch (const DisabledError& e) {
    throw ResolverContractError(std::string("resolver chose a disabled transition: ") +
                                e.what());
  }
  run.steps.emplace_back(ti, next);
  if (!t.silent()) run.word.push_back(t.label);
}

void play_choice(const Vass& v, Run& run, const ResolverChoice& choice,
                 const Letter& letter) {
  for (int ti : choice.prelude) play_transition(v, run, ti, true, letter);
  play_transition(v, run, choice.transition, false, letter);
}

Run with_final_eps(const Vass& v, const Resolver& r, Run run) {
  if (r.final_eps)
    for (int ti : r.final_eps(v, run)) play_transition(v, run, ti, true, kEpsilon);
  return run;
}

}  // namespace

std::variant<Run, Stuck> resolve_run(const Vass& v, const Resolver& r,
                                     const Word& word, SearchOptions) {
  Run run;
  run.start = initial_configuration(v);
  for (size_t i = 0; i < word.size(); ++i) {
    auto choice = r.choose(v, run, word[i]);
    if (!choice) return Stuck{i};
    play_choice(v, run, *choice, word[i]);
  }
  return with_final_eps(v, r, std::move(run));
}

ResolverReport validate_resolver(const Vass& v, const Resolver& r, size_t n,
                                 SearchOptions opts) {
  Oracle oracle(v, opts);
  struct Item {
    Word word;
    Oracle::State state;
    std::optional<Run> run;  // nullopt once the resolver got stuck
    size_t stuck_position = 0;
  };
  std::deque<Item> queue;
  queue.push_back(Item{{}, oracle.initial(), Run{initial_configuration(v), {}, {}}, 0});
  while (!queue.empty()) {
    Item it = std::move(queue.front());
    queue.pop_front();
    Verdict vd = oracle.verdict(it.state);
    if (vd == Verdict::Unknown)
      return ResolverReport{ResolverReport::Kind::Inconclusive, it.word, 0};
    if (vd == Verdict::Accepted) {
      if (!it.run)
        return ResolverReport{ResolverReport::Kind::StuckFailure, it.word,
                              it.stuck_position};
      Run closed = with_final_eps(v, r, *it.run);
      if (!is_accepting(v, closed.final_config()))
        return ResolverReport{ResolverReport::Kind::NotAcceptingFailure, it.word, 0};
    }
    if (it.word.size() >= n) continue;
    for (const auto& l : v.alphabet) {
      Item next;
      next.word = it.word;
      next.word.push_back(l);
      next.state = oracle.step(it.state, l);
      if (oracle.dead(next.state)) continue;  // no accepted extensions
      if (it.run) {
        auto choice = r.choose(v, *it.run, l);
        if (choice) {
          next.run = *it.run;
          play_choice(v, *next.run, *choice, l);
        } else {
          next.stuck_position = it.word.size();
        }
      } else {
        next.stuck_position = it.stuck_position;
      }
      queue.push_back(std::move(next));
    }
  }
  return ResolverReport{};
}

namespace {

// All distinct configurations reachable by silent paths of length <= budget,
// each with its first (BFS, declaration-order) prelude; insertion order.
std::vector<std::pair<Configuration, std::vector<int>>> silent_options(
    const Vass& v, const Configuration& from, long long budget) {
  std::vector<std::pair<Configuration, std::vector<int>>> out;
  std::set<Configuration> seen{from};
  out.emplace_back(from, std::vector<int>{});
  size_t frontier_start = 0;
  for (long long depth = 0; depth < budget; ++depth) {
    size_t frontier_end = out.size();
    for (size_t i = frontier_start; i < frontier_end; ++i)
      for (int ti : enabled(v, out[i].first, kEpsilon)) {
        Configuration succ = apply(v, out[i].first, ti);
        if (!seen.insert(succ).second) continue;
        auto prelude = out[i].second;
        prelude.push_back(ti);
        out.emplace_back(std::move(succ), std::move(prelude));
      }
    if (out.size() == frontier_end) break;
    frontier_start = frontier_end;
  }
  return out;
}

std::set<Word> residual(const Vass& v, const Configuration& from, size_t n,
                        SearchOptions opts) {
  LanguageSample sample = language_from(v, {from}, n, opts);
  return std::set<Word>(sample.accepted.begin(), sample.accepted.end());
}

}  // namespace

Resolver lookahead_resolver(const Vass& v, size_t horizon, SearchOptions opts) {
  Resolver r;
  r.name = "lookahead:" + std::to_string(horizon);
  r.choose = [horizon, opts](const Vass& vass, const Run& run,
                             const Letter& letter) -> std::optional<ResolverChoice> {
    struct Option {
      ResolverChoice choice;
      Configuration successor;
    };
    std::vector<Option> options;
    for (const auto& [cfg, prelude] :
         silent_options(vass, run.final_config(), opts.eps_budget))
      for (int ti : enabled(vass, cfg, letter))
        options.push_back(Option{ResolverChoice{prelude, ti}, apply(vass, cfg, ti)});
    if (options.empty()) return std::nullopt;
    if (horizon == 0) return options.front().choice;
    size_t best = 0;
    std::set<Word> best_res = residual(vass, options[0].successor, horizon, opts);
    for (size_t i = 1; i < options.size(); ++i) {
      std::set<Word> res = residual(vass, options[i].successor, horizon, opts);
      bool super = std::includes(res.begin(), res.end(), best_res.begin(), best_res.end());
      bool sub = std::includes(best_res.begin(), best_res.end(), res.begin(), res.end());
      if ((super && !sub) || (!super && !sub && res.size() > best_res.size())) {
        best = i;
        best_res = std::move(res);
      }
    }
    return options[best].choice;
  };
  r.final_eps = [opts](const Vass& vass, const Run& run) -> std::vector<int> {
    if (is_accepting(vass, run.final_config())) return {};
    for (const auto& [cfg, prelude] :
         silent_options(vass, run.final_config(), opts.eps_budget))
      if (is_accepting(vass, cfg)) return prelude;
    return {};
  };
  (void)v;
  return r;
}

bool is_language_maximal_choice(const Vass& v, const Configuration& config,
                                const Letter& letter, int t, size_t n,
                                SearchOptions opts) {
  std::vector<int> all = enabled(v, config, letter);
  if (std::find(all.begin(), all.end(), t) == all.end())
    throw std::invalid_argument("is_language_maximal_choice: transition not enabled");
  std::set<Word> mine = residual(v, apply(v, config, t), n, opts);
  for (int alt : all) {
    if (alt == t) continue;
    std::set<Word> other = residual(v, apply(v, config, alt), n, opts);
    if (!std::includes(mine.begin(), mine.end(), other.begin(), other.end()))
      return false;
  }
  return true;
}

}  // namespace hdvass
