// corpus.hpp -- the catalog of named separating languages: executable word
// predicates, reconstructed automata, their resolvers, and a consistency
// suite tying the three together.

#ifndef HDVASS_CORPUS_HPP
#define HDVASS_CORPUS_HPP

#include <string>
#include <vector>

#include "hdvass/core.hpp"
#include "hdvass/resolvers.hpp"
#include "hdvass/semantics.hpp"

namespace hdvass {
namespace corpus {

struct NamedLanguage {
  std::string name;
  std::vector<Letter> alphabet;
  WordPredicate predicate;
  std::string description;  // human-readable shape, e.g. "a^n b^{<=n} + a^* b^* c"
};

std::vector<std::string> predicate_names();
NamedLanguage predicate(const std::string& name);

std::vector<std::string> automaton_names();
Vass automaton(const std::string& name);

// Resolvers exist only for the history-deterministic catalog members
// (A_notDVASS, A_anbgen, A_notFSVASS, A_mustVASSe); other names throw.
Resolver resolver(const std::string& name);

struct SeparationReport {
  struct Entry {
    std::string check;
    bool pass = false;
    std::string detail;
  };
  std::vector<Entry> entries;

  bool all_pass() const;
};

// Cross-validates every automaton against its predicate, every resolver
// against its automaton, the non-HD witness for N_union, the absence of
// witnesses for the HD members, and a few bounded inclusion sanity pairs.
SeparationReport run_separation_suite(size_t n);

}  // namespace corpus
}  // namespace hdvass

#endif
