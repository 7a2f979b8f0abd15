// semantics.hpp -- word membership, reachable-configuration sets, bounded
// language enumeration, and bounded equivalence/inclusion.

#ifndef HDVASS_SEMANTICS_HPP
#define HDVASS_SEMANTICS_HPP

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hdvass/core.hpp"
#include "hdvass/coverability.hpp"

namespace hdvass {

struct SearchOptions {
  // Max epsilon steps between consecutive letters and after the last letter.
  long long eps_budget = 64;
};

enum class Verdict { Accepted, Rejected, Unknown };

struct MembershipResult {
  Verdict verdict = Verdict::Rejected;
  std::optional<Run> witness;   // present iff Accepted
  long long budget_used = 0;    // silent steps in the witness
};

struct ReachSetResult {
  std::vector<Configuration> configs;  // sorted
  bool saturated = false;
};

struct LanguageSample {
  std::vector<Word> accepted;  // length-lex order by alphabet declaration
  std::vector<Word> unknown;
};

struct InconclusiveError : std::runtime_error {
  Word word;
  InconclusiveError(Word w, const std::string& what)
      : std::runtime_error(what), word(std::move(w)) {}
};

struct BoundedCheck {
  bool holds = true;                       // Equal / Holds
  std::optional<Word> counterexample;      // length-lex least disagreement
};

// The per-VASS word stepper. Coverability with epsilon runs on omega-abstracted
// configuration sets (exact and budget-independent); everything else runs on
// concrete budgeted sets.
class Oracle {
 public:
  Oracle(const Vass& v, SearchOptions opts);

  struct State {
    std::vector<Configuration> exact;  // concrete mode
    std::vector<OmegaConfig> omega;    // omega mode
    bool saturated = false;            // cumulative budget cutoff
  };

  State initial() const;
  State from_configs(const std::vector<Configuration>& start) const;
  State step(const State& s, const Letter& letter) const;
  bool accepted(const State& s) const;
  Verdict verdict(const State& s) const;
  bool dead(const State& s) const;
  bool omega_mode() const { return omega_mode_; }
  const Vass& vass() const { return *v_; }

 private:
  std::vector<OmegaConfig> omega_closure(const std::vector<OmegaConfig>& roots) const;

  const Vass* v_;
  SearchOptions opts_;
  bool omega_mode_;
  // per-config closure results; the same configs recur across words sharing
  // a prefix and the Karp-Miller walk is by far the dominant cost
  mutable std::map<OmegaConfig, std::vector<OmegaConfig>> closure_cache_;
};

ReachSetResult reach_set(const Vass& v, const Word& word, SearchOptions opts = {});

MembershipResult member(const Vass& v, const Word& word, SearchOptions opts = {});

LanguageSample language_up_to(const Vass& v, size_t n, SearchOptions opts = {});
LanguageSample language_from(const Vass& v, const std::vector<Configuration>& start,
                             size_t n, SearchOptions opts = {});

BoundedCheck bounded_equiv(const Vass& a, const Vass& b, size_t n,
                           SearchOptions opts = {});
BoundedCheck bounded_inclusion(const Vass& a, const Vass& b, size_t n,
                               SearchOptions opts = {});

// Comparison against an independent word predicate (the corpus oracles).
using WordPredicate = std::function<bool(const Word&)>;
BoundedCheck bounded_equiv_predicate(const Vass& a, const WordPredicate& pred,
                                     size_t n, SearchOptions opts = {});

// All words over the alphabet with length <= n, length-lex.
std::vector<Word> all_words_up_to(const std::vector<Letter>& alphabet, size_t n);

}  // namespace hdvass

#endif
