// hdgame.hpp -- the letter game between Adam (letters) and Eve (transitions):
// a bounded AND-OR solver extracting non-history-determinism witnesses, plus
// a transcript-producing replay of a resolver against a fixed Adam word.

#ifndef HDVASS_HDGAME_HPP
#define HDVASS_HDGAME_HPP

#include <map>
#include <optional>
#include <vector>

#include "hdvass/core.hpp"
#include "hdvass/resolvers.hpp"
#include "hdvass/semantics.hpp"

namespace hdvass {

// Adam's strategy as a finite tree. Inner nodes carry Adam's next letter and
// one subtree per Eve successor configuration (every reachable successor via
// an epsilon prelude plus a letter transition is covered). Leaves carry the
// losing evidence:
//   NotAccepting: word is in the language, Eve's configuration cannot reach
//                 acceptance by silent moves.
//   Stuck: Eve has no choice on `letter` while the knowledge residual is
//          nonempty; losing_word extends word past the current node.
struct NonHdWitness {
  enum class Leaf { None, NotAccepting, Stuck };

  Word word;    // letters played from the root to this node
  Letter letter;  // Adam's move here (empty at NotAccepting leaves)
  Leaf leaf = Leaf::None;
  Word losing_word;  // set at leaves
  std::vector<std::pair<Configuration, NonHdWitness>> children;

  bool is_leaf() const { return leaf != Leaf::None; }
};

struct HdCheckResult {
  std::optional<NonHdWitness> witness;  // nullopt = NoneUpTo(horizon)
  size_t horizon = 0;                   // witness depth if found, else the bound

  bool none_up_to() const { return !witness.has_value(); }
};

// Bounded AND-OR search: Adam picks a letter (OR), Eve picks a successor
// (AND). Eve loses at a node if the current word is accepted while her
// configuration is not accepting-capable, or if she is stuck on Adam's letter
// while the knowledge set still has a nonempty residual. Iterative deepening
// yields a minimal-depth witness. Throws InconclusiveError when a residual or
// acceptance check hits an epsilon-budget cutoff.
HdCheckResult find_nonhd_witness(const Vass& v, size_t horizon,
                                 SearchOptions opts = {});

// Replays the strategy tree against every Eve behavior it covers and checks
// the losing condition at each leaf. Used to machine-check witnesses.
bool check_witness(const Vass& v, const NonHdWitness& w, SearchOptions opts = {});

std::string witness_to_string(const NonHdWitness& w);

struct LetterGameStep {
  Letter letter;
  std::optional<ResolverChoice> choice;  // nullopt once Eve is stuck
  Configuration eve;                     // Eve's configuration after the step
  bool word_accepted = false;            // word so far is in the language
  bool eve_accepting = false;            // Eve can silently reach acceptance
};

struct LetterGameTranscript {
  std::vector<LetterGameStep> steps;
  std::optional<size_t> first_losing;  // first step where Eve has lost
};

LetterGameTranscript play_letter_game(const Vass& v, const Word& adam_letters,
                                      const Resolver& r, SearchOptions opts = {});

}  // namespace hdvass

#endif
