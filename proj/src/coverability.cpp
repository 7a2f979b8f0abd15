#include "hdvass/coverability.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace hdvass {

bool leq(const OmegaVector& a, const OmegaVector& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (b[i].inf) continue;
    if (a[i].inf || a[i].val > b[i].val) return false;
  }
  return true;
}

OmegaVector lift(const std::vector<long long>& counters) {
  OmegaVector v;
  v.reserve(counters.size());
  for (long long c : counters) v.push_back(Omega::of(c));
  return v;
}

std::string omega_vector_to_string(const OmegaVector& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].inf ? "w" : std::to_string(v[i].val);
  }
  out += "]";
  return out;
}

bool KMTree::contains_accepting(const Vass& v) const {
  for (const auto& n : nodes)
    if (v.is_accepting_state(n.state)) return true;
  return false;
}

KMTree karp_miller_from(const Vass& v, const std::vector<OmegaConfig>& roots,
                        bool eps_only) {
  KMTree tree;
  std::deque<int> worklist;
  for (const auto& r : roots) {
    // Roots subsumed by an earlier root are dropped for reproducibility.
    bool subsumed = false;
    for (const auto& n : tree.nodes)
      if (n.state == r.state && leq(r.vec, n.vec)) { subsumed = true; break; }
    if (subsumed) continue;
    tree.nodes.push_back(KMNode{r.state, r.vec, -1, -1});
    worklist.push_back((int)tree.nodes.size() - 1);
  }
  while (!worklist.empty()) {
    int cur = worklist.front();
    worklist.pop_front();
    for (size_t ti = 0; ti < v.transitions.size(); ++ti) {
      const Transition& t = v.transitions[ti];
      if (eps_only && !t.silent()) continue;
      if (t.source != tree.nodes[cur].state) continue;
      bool ok = true;
      for (int d = 0; d < v.dimension; ++d)
        if (!tree.nodes[cur].vec[d].ge(-t.effect[d])) { ok = false; break; }
      if (!ok) continue;
      OmegaVector child(v.dimension);
      for (int d = 0; d < v.dimension; ++d)
        child[d] = tree.nodes[cur].vec[d].plus(t.effect[d]);
      // Accelerate against all ancestors on the tree path.
      for (int anc = cur; anc != -1; anc = tree.nodes[anc].parent) {
        if (tree.nodes[anc].state != t.target) continue;
        const OmegaVector& av = tree.nodes[anc].vec;
        if (leq(av, child) && !(av == child)) {
          for (int d = 0; d < v.dimension; ++d)
            if (!child[d].inf && (av[d].inf ? false : child[d].val > av[d].val))
              child[d] = Omega::omega();
        }
      }
      // Subsumption pruning against the whole tree.
      bool subsumed = false;
      for (const auto& n : tree.nodes)
        if (n.state == t.target && leq(child, n.vec)) { subsumed = true; break; }
      if (subsumed) continue;
      tree.nodes.push_back(KMNode{t.target, child, cur, (int)ti});
      worklist.push_back((int)tree.nodes.size() - 1);
    }
  }
  return tree;
}

KMTree karp_miller(const Vass& v) {
  return karp_miller_from(
      v, {OmegaConfig{v.initial, OmegaVector(v.dimension, Omega::of(0))}}, false);
}

bool coverable(const Vass& v, const std::string& target_state,
               const std::vector<long long>& target_vector) {
  if ((int)target_vector.size() != v.dimension)
    throw std::invalid_argument("coverable: target vector has wrong length");
  KMTree tree = karp_miller(v);
  for (const auto& n : tree.nodes) {
    if (n.state != target_state) continue;
    bool ge = true;
    for (int d = 0; d < v.dimension; ++d)
      if (!n.vec[d].ge(target_vector[d])) { ge = false; break; }
    if (ge) return true;
  }
  return false;
}

bool cover_language_nonempty(const Vass& v) {
  if (v.semantics != Semantics::Coverability)
    throw std::invalid_argument(
        "cover_language_nonempty requires coverability semantics");
  return karp_miller(v).contains_accepting(v);
}

bool cover_language_nonempty_from(const Vass& v,
                                  const std::vector<OmegaConfig>& start) {
  if (v.semantics != Semantics::Coverability)
    throw std::invalid_argument(
        "cover_language_nonempty_from requires coverability semantics");
  return karp_miller_from(v, start, false).contains_accepting(v);
}

std::vector<OmegaConfig> eps_cover_closure(const Vass& v,
                                           const std::vector<OmegaConfig>& start) {
  KMTree tree = karp_miller_from(v, start, true);
  std::vector<OmegaConfig> out;
  // The tree prunes subsumed children but a later node may dominate an earlier
  // one; reduce to the maximal antichain.
  for (const auto& n : tree.nodes) out.push_back(OmegaConfig{n.state, n.vec});
  std::vector<OmegaConfig> maximal;
  for (size_t i = 0; i < out.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < out.size(); ++j) {
      if (i == j || out[i].state != out[j].state) continue;
      if (leq(out[i].vec, out[j].vec) &&
          (!(out[j].vec == out[i].vec) || j < i))
        { dominated = true; break; }
    }
    if (!dominated) maximal.push_back(out[i]);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

std::vector<OmegaConfig> eps_cover_closure_configs(
    const Vass& v, const std::vector<Configuration>& start) {
  std::vector<OmegaConfig> roots;
  roots.reserve(start.size());
  for (const auto& c : start) roots.push_back(OmegaConfig{c.state, lift(c.counters)});
  return eps_cover_closure(v, roots);
}

std::string dump_km_tree(const KMTree& tree) {
  std::ostringstream out;
  for (size_t i = 0; i < tree.nodes.size(); ++i) {
    const auto& n = tree.nodes[i];
    out << n.state << " " << omega_vector_to_string(n.vec) << " " << n.parent
        << " " << n.via << "\n";
  }
  return out.str();
}

}  // namespace hdvass
