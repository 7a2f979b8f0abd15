// coverability.hpp -- Karp-Miller omega-acceleration: coverability sets,
// language non-emptiness under coverability, and exact epsilon-closure.

#ifndef HDVASS_COVERABILITY_HPP
#define HDVASS_COVERABILITY_HPP

#include <string>
#include <vector>

#include "hdvass/core.hpp"

namespace hdvass {

// A natural number or omega; omega absorbs addition and is top for <=.
struct Omega {
  bool inf = false;
  long long val = 0;

  static Omega omega() { return Omega{true, 0}; }
  static Omega of(long long v) { return Omega{false, v}; }

  Omega plus(long long delta) const {
    return inf ? *this : Omega{false, val + delta};
  }
  bool ge(long long v) const { return inf || val >= v; }

  friend bool operator==(const Omega& a, const Omega& b) {
    return a.inf == b.inf && (a.inf || a.val == b.val);
  }
  friend bool operator<(const Omega& a, const Omega& b) {  // total, for sorting
    if (a.inf != b.inf) return !a.inf;
    return !a.inf && a.val < b.val;
  }
};

using OmegaVector = std::vector<Omega>;

bool leq(const OmegaVector& a, const OmegaVector& b);  // component-wise

struct OmegaConfig {
  std::string state;
  OmegaVector vec;

  friend bool operator==(const OmegaConfig& a, const OmegaConfig& b) {
    return a.state == b.state && a.vec == b.vec;
  }
  friend bool operator<(const OmegaConfig& a, const OmegaConfig& b) {
    if (a.state != b.state) return a.state < b.state;
    return std::lexicographical_compare(a.vec.begin(), a.vec.end(),
                                        b.vec.begin(), b.vec.end());
  }
};

OmegaVector lift(const std::vector<long long>& counters);
std::string omega_vector_to_string(const OmegaVector& v);

struct KMNode {
  std::string state;
  OmegaVector vec;
  int parent = -1;  // index into KMTree::nodes, -1 for roots
  int via = -1;     // transition index, -1 for roots
};

struct KMTree {
  std::vector<KMNode> nodes;

  bool contains_accepting(const Vass& v) const;
};

// Classical Karp-Miller tree from (initial, 0); labels are ignored.
KMTree karp_miller(const Vass& v);

// Generalized form: arbitrary roots, optionally restricted to
// epsilon-labelled transitions.
KMTree karp_miller_from(const Vass& v, const std::vector<OmegaConfig>& roots,
                        bool eps_only);

bool coverable(const Vass& v, const std::string& target_state,
               const std::vector<long long>& target_vector);

// Requires coverability semantics; true iff some accepting state shows up
// in the Karp-Miller tree.
bool cover_language_nonempty(const Vass& v);
bool cover_language_nonempty_from(const Vass& v,
                                  const std::vector<OmegaConfig>& start);

// Karp-Miller saturation restricted to epsilon transitions, starting from the
// given set. Sound and complete for subsequent coverability queries. The
// result is the antichain of maximal elements, sorted.
std::vector<OmegaConfig> eps_cover_closure(const Vass& v,
                                           const std::vector<OmegaConfig>& start);
std::vector<OmegaConfig> eps_cover_closure_configs(
    const Vass& v, const std::vector<Configuration>& start);

std::string dump_km_tree(const KMTree& tree);

}  // namespace hdvass

#endif
