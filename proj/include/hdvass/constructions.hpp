// constructions.hpp -- language-preserving and closure transformations:
// completion, synchronized products, inverse homomorphisms with delayed
// effects, epsilon elimination for 1-dim coverability, the end-marker
// coverability-to-reachability transform, and finite unions of deterministic
// automata.

#ifndef HDVASS_CONSTRUCTIONS_HPP
#define HDVASS_CONSTRUCTIONS_HPP

#include <map>
#include <string>
#include <vector>

#include "hdvass/core.hpp"
#include "hdvass/semantics.hpp"

namespace hdvass {

// Adds a non-accepting sink (reserved `__sink` prefix) with zero-effect
// fallbacks so every (state, letter) pair has a transition enabled at every
// counter value. Language unchanged.
Vass complete(const Vass& v);

// Synchronized product over a shared alphabet, k + k' counters, inputs
// completed first. Requires epsilon-free inputs with equal alphabets and
// semantics.
Vass product_union(const Vass& a, const Vass& b);
Vass product_intersection(const Vass& a, const Vass& b);

struct Homomorphism {
  std::vector<Letter> source_alphabet;
  std::map<Letter, Word> map;  // total on source_alphabet; empty word allowed
};

// Parses lines of the form `letter -> word` with the image as space-separated
// letters and `@eps` for the empty word.
Homomorphism parse_homomorphism(const std::string& text);
std::string serialize_homomorphism(const Homomorphism& h);

// Delayed-effect inverse homomorphism: accepts w iff a accepts h(w). States
// are (state, pending positive effect) pairs; each transition pays the
// deepest prefix dip of some path spelling h(letter) immediately and banks
// the rest. Requires an epsilon-free input.
Vass inverse_hom(const Vass& a, const Homomorphism& h);

// Epsilon elimination for 1-dim coverability automata. Acyclic and
// zero-cycle silent paths fold into the preceding letter transition, with
// any positive tail carried as banked surplus in the state; positive silent
// cycles jump into a zero-effect "state machine" copy where the counter no
// longer matters. Bounded-language-equivalent, epsilon-free output.
Vass eliminate_epsilon_1hd(const Vass& a);

// L(result) = L(a) . marker under reachability: accepting states gain a
// marker transition to a drain state with per-counter decrementing silent
// self-loops.
Vass endmarker_cover_to_reach(const Vass& a, const Letter& marker);

// No epsilon transitions and at most one transition per (state, letter).
bool check_deterministic(const Vass& v);

// Finite union of deterministic automata; membership is the disjunction of
// the members' verdicts.
struct FsVass {
  std::vector<Vass> members;
};

FsVass union_of_dvass(const std::vector<Vass>& members);
MembershipResult fs_member(const FsVass& u, const Word& word, SearchOptions opts = {});
LanguageSample fs_language_up_to(const FsVass& u, size_t n, SearchOptions opts = {});

}  // namespace hdvass

#endif
