// resolvers.hpp -- history-determinism made executable: resolver strategies,
// resolver validation against the membership oracle, and bounded
// language-maximality checks.

#ifndef HDVASS_RESOLVERS_HPP
#define HDVASS_RESOLVERS_HPP

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hdvass/core.hpp"
#include "hdvass/semantics.hpp"

namespace hdvass {

struct ResolverChoice {
  std::vector<int> prelude;  // silent transition indices played before
  int transition = -1;       // the letter-consuming transition
};

// Deterministic strategy: (run so far, next letter) -> choice, plus a
// final-epsilon hook applied after the last letter (reachability resolvers
// drain counters there). Built-in resolvers are positional: they only read
// the run's final configuration.
struct Resolver {
  std::string name;
  std::function<std::optional<ResolverChoice>(const Vass&, const Run&, const Letter&)>
      choose;
  std::function<std::vector<int>(const Vass&, const Run&)> final_eps;  // may be empty
};

struct Stuck {
  size_t position = 0;  // index of the letter with no choice
};

struct ResolverContractError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Plays the resolver letter by letter from (initial, 0). A resolver returning
// a disabled transition raises ResolverContractError (distinct from Stuck).
std::variant<Run, Stuck> resolve_run(const Vass& v, const Resolver& r,
                                     const Word& word, SearchOptions opts = {});

struct ResolverReport {
  enum class Kind { Ok, StuckFailure, NotAcceptingFailure, Inconclusive };
  Kind kind = Kind::Ok;
  Word word;            // the failing word, length-lex least
  size_t position = 0;  // for StuckFailure
  bool ok() const { return kind == Kind::Ok; }
};

// Ok iff for every word w with |w| <= n: member(v, w) accepted implies the
// resolver's run on w is accepting.
ResolverReport validate_resolver(const Vass& v, const Resolver& r, size_t n,
                                 SearchOptions opts = {});

// Generic strategy: pick the choice with the largest bounded residual
// language (set inclusion, then cardinality, then declaration order).
Resolver lookahead_resolver(const Vass& v, size_t horizon, SearchOptions opts = {});

// True iff the bounded residual of t's successor contains the union of the
// bounded residuals of all alternative enabled successors.
bool is_language_maximal_choice(const Vass& v, const Configuration& config,
                                const Letter& letter, int t, size_t n,
                                SearchOptions opts = {});

}  // namespace hdvass

#endif
