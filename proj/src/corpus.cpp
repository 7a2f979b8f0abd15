#include "hdvass/corpus.hpp"

#include <algorithm>
#include <stdexcept>

#include "hdvass/constructions.hpp"
#include "hdvass/hdgame.hpp"

namespace hdvass {
namespace corpus {

namespace {

bool over(const Word& w, const std::vector<Letter>& alphabet) {
  for (const auto& l : w)
    if (std::find(alphabet.begin(), alphabet.end(), l) == alphabet.end())
      return false;
  return true;
}

size_t run_of(const Word& w, size_t i, const Letter& l) {
  size_t n = 0;
  while (i + n < w.size() && w[i + n] == l) ++n;
  return n;
}

// w = a^i b^j (c^k) with nothing else; false in the first slot otherwise.
struct Runs {
  bool ok = false;
  size_t a = 0, b = 0, c = 0;
};

Runs abc_runs(const Word& w) {
  Runs r;
  size_t i = 0;
  r.a = run_of(w, i, "a");
  i += r.a;
  r.b = run_of(w, i, "b");
  i += r.b;
  r.c = run_of(w, i, "c");
  i += r.c;
  r.ok = i == w.size();
  return r;
}

bool anblen_shape(const Word& w) {  // a^n b^{<=n}
  Runs r = abc_runs(w);
  return r.ok && r.c == 0 && r.b <= r.a;
}

bool notfsvass_match(const Word& w, size_t i) {
  size_t a = run_of(w, i, "a");
  if (a == 0) return false;
  if (a >= 2) return true;  // a^1 b^0 then the escape 'a'; the rest is free
  size_t b = run_of(w, i + 1, "b");
  return b >= 1 && notfsvass_match(w, i + 2);
}

bool mustvasse_match(const Word& w) {
  size_t first = w.size(), second = w.size();
  for (size_t i = 0; i < w.size(); ++i)
    if (w[i] == "#") {
      if (first == w.size())
        first = i;
      else if (second == w.size())
        second = i;
      else
        return false;
    }
  if (second != w.size() - 1 || first == w.size() || second == w.size())
    return false;
  if (first == 0 || w[0] != "1") return false;
  unsigned long long value = 0;
  for (size_t i = 0; i < first; ++i) {
    if (w[i] != "0" && w[i] != "1") return false;
    if (first <= 62) value = value * 2 + (w[i] == "1" ? 1 : 0);
  }
  if (first > 62) value = ~0ull;  // longer than any zero block we could see
  size_t zeros = second - first - 1;
  for (size_t i = first + 1; i < second; ++i)
    if (w[i] != "0") return false;
  return zeros <= value;
}

Transition tr(std::string s, Letter l, std::vector<long long> e, std::string t) {
  return Transition{std::move(s), std::move(l), std::move(e), std::move(t), 0};
}

void reindex(Vass& v) {
  for (size_t i = 0; i < v.transitions.size(); ++i)
    v.transitions[i].index = static_cast<int>(i);
}

Vass anblen_cover_core() {
  Vass v;
  v.name = "A_anblen_cover";
  v.dimension = 1;
  v.alphabet = {"a", "b"};
  v.semantics = Semantics::Coverability;
  v.states = {"c0", "c1"};
  v.initial = "c0";
  v.accepting = {"c0", "c1"};
  v.transitions = {tr("c0", "a", {1}, "c0"), tr("c0", "b", {-1}, "c1"),
                   tr("c1", "b", {-1}, "c1")};
  reindex(v);
  return v;
}

struct LangDef {
  std::vector<Letter> alphabet;
  std::string description;
  bool (*fn)(const Word&);
};

const std::vector<std::pair<std::string, LangDef>>& language_table() {
  static const std::vector<std::pair<std::string, LangDef>> table = {
      {"L_notDVASS",
       {{"a", "b", "c"},
        "a^n b^{<=n} + a^* b^* c",
        [](const Word& w) {
          if (anblen_shape(w)) return true;
          if (w.empty() || w.back() != "c") return false;
          Runs r = abc_runs(Word(w.begin(), w.end() - 1));
          return r.ok && r.c == 0;
        }}},
      {"L_anbgen",
       {{"a", "b"},
        "a^n b^{>=n}",
        [](const Word& w) {
          Runs r = abc_runs(w);
          return r.ok && r.c == 0 && r.b >= r.a;
        }}},
      {"L_anbgen_hash",
       {{"a", "b", "#"},
        "a^n b^{>=n} #",
        [](const Word& w) {
          if (w.empty() || w.back() != "#") return false;
          Runs r = abc_runs(Word(w.begin(), w.end() - 1));
          return r.ok && r.c == 0 && r.b >= r.a;
        }}},
      {"L_notHDVASS",
       {{"a", "b"},
        "trailing b-run no longer than the a-run just before it",
        [](const Word& w) {
          if (!over(w, {"a", "b"})) return false;
          size_t t = 0;
          while (t < w.size() && w[w.size() - 1 - t] == "b") ++t;
          if (t == 0) return true;
          size_t p = 0;
          while (t + p < w.size() && w[w.size() - 1 - t - p] == "a") ++p;
          return t <= p;
        }}},
      {"L_anblen",
       {{"a", "b"}, "a^n b^{<=n}", [](const Word& w) { return anblen_shape(w); }}},
      {"L_anbn",
       {{"a", "b"},
        "a^n b^n",
        [](const Word& w) {
          Runs r = abc_runs(w);
          return r.ok && r.c == 0 && r.a == r.b;
        }}},
      {"L_mustVASSe",
       {{"0", "1", "#"},
        "bin(n) # 0^{<=n} #",
        [](const Word& w) { return mustvasse_match(w); }}},
      {"L_anblenbarrier",
       {{"a", "b", "#"},
        "a^n b^{<=n} #",
        [](const Word& w) {
          if (w.empty() || w.back() != "#") return false;
          return anblen_shape(Word(w.begin(), w.end() - 1));
        }}},
      {"L_notFSVASS",
       {{"a", "b"},
        "(a^n b^n)* a^n b^{<n} a anything",
        [](const Word& w) {
          if (!over(w, {"a", "b"})) return false;
          return notfsvass_match(w, 0);
        }}},
      {"L_anbnastar",
       {{"a", "b"},
        "a^n b^n a^*",
        [](const Word& w) {
          size_t a1 = run_of(w, 0, "a");
          size_t b = run_of(w, a1, "b");
          size_t a2 = run_of(w, a1 + b, "a");
          if (a1 + b + a2 != w.size()) return false;
          return b == 0 || a1 == b;
        }}},
      {"L_notrunion",
       {{"a", "b"},
        "a^n b^n + a^n b^{2n}",
        [](const Word& w) {
          Runs r = abc_runs(w);
          return r.ok && r.c == 0 && (r.b == r.a || r.b == 2 * r.a);
        }}},
      {"L_notcunion",
       {{"a", "b", "c"},
        "a^n b^{<=n} c^* + a^n b^* c^{<=n}",
        [](const Word& w) {
          Runs r = abc_runs(w);
          return r.ok && (r.b <= r.a || r.c <= r.a);
        }}},
      {"L_notcint",
       {{"a", "b", "c"},
        "a^n b^{<=n} c^{<=n}",
        [](const Word& w) {
          Runs r = abc_runs(w);
          return r.ok && r.b <= r.a && r.c <= r.a;
        }}},
      {"L_notrint",
       {{"a", "b", "c"},
        "a^n b^n c^n",
        [](const Word& w) {
          Runs r = abc_runs(w);
          return r.ok && r.a == r.b && r.b == r.c;
        }}},
  };
  return table;
}

}  // namespace

std::vector<std::string> predicate_names() {
  std::vector<std::string> out;
  for (const auto& [name, def] : language_table()) out.push_back(name);
  return out;
}

NamedLanguage predicate(const std::string& name) {
  for (const auto& [n, def] : language_table())
    if (n == name) {
      NamedLanguage lang;
      lang.name = n;
      lang.alphabet = def.alphabet;
      lang.description = def.description;
      auto fn = def.fn;
      auto alphabet = def.alphabet;
      lang.predicate = [fn, alphabet](const Word& w) {
        return over(w, alphabet) && fn(w);
      };
      return lang;
    }
  throw std::invalid_argument("unknown language: " + name);
}

std::vector<std::string> automaton_names() {
  return {"A_notDVASS", "A_anbgen", "A_notHDVASS",
          "A_anblen",  "A_anbn",  "A_mustVASSe",
          "A_anblenbarrier", "A_notFSVASS", "N_union"};
}

Vass automaton(const std::string& name) {
  Vass v;
  v.name = name;
  if (name == "A_notDVASS") {
    v.dimension = 1;
    v.alphabet = {"a", "b", "c"};
    v.semantics = Semantics::Coverability;
    v.states = {"q1", "q2", "q3", "q4"};
    v.initial = "q1";
    v.accepting = {"q1", "q2", "q4"};
    v.transitions = {tr("q1", "a", {1}, "q1"),  tr("q1", "b", {-1}, "q2"),
                     tr("q1", "b", {0}, "q3"),  tr("q2", "b", {-1}, "q2"),
                     tr("q2", "b", {0}, "q3"),  tr("q3", "b", {0}, "q3"),
                     tr("q1", "c", {0}, "q4"),  tr("q2", "c", {0}, "q4"),
                     tr("q3", "c", {0}, "q4")};
  } else if (name == "A_anbgen") {
    v.dimension = 1;
    v.alphabet = {"a", "b"};
    v.semantics = Semantics::Reachability;
    v.states = {"qa", "qb"};
    v.initial = "qa";
    v.accepting = {"qa", "qb"};
    v.transitions = {tr("qa", "a", {1}, "qa"),  tr("qa", "b", {-1}, "qb"),
                     tr("qa", "b", {0}, "qb"),  tr("qb", "b", {-1}, "qb"),
                     tr("qb", "b", {0}, "qb")};
  } else if (name == "A_notHDVASS") {
    v.dimension = 1;
    v.alphabet = {"a", "b"};
    v.semantics = Semantics::Coverability;
    v.states = {"i", "g", "p", "q"};
    v.initial = "i";
    v.accepting = {"i", "p", "q"};
    v.transitions = {tr("i", "a", {1}, "p"), tr("i", "a", {0}, "g"),
                     tr("i", "b", {0}, "g"), tr("g", "a", {0}, "g"),
                     tr("g", "b", {0}, "g"), tr("g", "a", {1}, "p"),
                     tr("p", "a", {1}, "p"), tr("p", "b", {-1}, "q"),
                     tr("q", "b", {-1}, "q")};
  } else if (name == "A_anblen") {
    v.dimension = 1;
    v.alphabet = {"a", "b"};
    v.semantics = Semantics::Reachability;
    v.states = {"s", "t"};
    v.initial = "s";
    v.accepting = {"s", "t"};
    v.transitions = {tr("s", "a", {1}, "s"), tr("s", "a", {0}, "s"),
                     tr("s", "b", {-1}, "t"), tr("t", "b", {-1}, "t")};
  } else if (name == "A_anbn") {
    v.dimension = 1;
    v.alphabet = {"a", "b"};
    v.semantics = Semantics::Reachability;
    v.states = {"q0", "q1"};
    v.initial = "q0";
    v.accepting = {"q0", "q1"};
    v.transitions = {tr("q0", "a", {1}, "q0"), tr("q0", "b", {-1}, "q1"),
                     tr("q1", "b", {-1}, "q1")};
  } else if (name == "A_mustVASSe") {
    v.dimension = 2;
    v.alphabet = {"0", "1", "#"};
    v.semantics = Semantics::Coverability;
    v.states = {"s0", "pA", "pB", "zA", "zB", "f"};
    v.initial = "s0";
    v.accepting = {"f"};
    v.transitions = {tr("s0", "1", {1, 0}, "pA"),
                     tr("pA", kEpsilon, {-1, 2}, "pA"),
                     tr("pA", "0", {0, 0}, "pB"),
                     tr("pA", "1", {0, 1}, "pB"),
                     tr("pB", kEpsilon, {2, -1}, "pB"),
                     tr("pB", "0", {0, 0}, "pA"),
                     tr("pB", "1", {1, 0}, "pA"),
                     tr("pA", "#", {0, 0}, "zA"),
                     tr("zA", "0", {-1, 0}, "zA"),
                     tr("zA", "#", {0, 0}, "f"),
                     tr("pB", "#", {0, 0}, "zB"),
                     tr("zB", "0", {0, -1}, "zB"),
                     tr("zB", "#", {0, 0}, "f")};
  } else if (name == "A_anblenbarrier") {
    Vass out = endmarker_cover_to_reach(anblen_cover_core(), "#");
    out.name = name;
    return out;
  } else if (name == "A_notFSVASS") {
    v.dimension = 1;
    v.alphabet = {"a", "b"};
    v.semantics = Semantics::Coverability;
    v.states = {"q1", "q2", "q_s"};
    v.initial = "q1";
    v.accepting = {"q_s"};
    v.transitions = {tr("q1", "a", {1}, "q1"),   tr("q1", "a", {-1}, "q_s"),
                     tr("q1", "b", {-1}, "q2"),  tr("q2", "b", {-1}, "q2"),
                     tr("q2", "a", {1}, "q1"),   tr("q2", "a", {-1}, "q_s"),
                     tr("q_s", "a", {0}, "q_s"), tr("q_s", "b", {0}, "q_s")};
  } else if (name == "N_union") {
    v.dimension = 1;
    v.alphabet = {"a", "b"};
    v.semantics = Semantics::Reachability;
    v.states = {"s", "p", "p2", "q", "q2"};
    v.initial = "s";
    v.accepting = {"s", "p2", "q2"};
    v.transitions = {tr("s", "a", {1}, "p"),   tr("s", "a", {2}, "q"),
                     tr("p", "a", {1}, "p"),   tr("p", "b", {-1}, "p2"),
                     tr("p2", "b", {-1}, "p2"), tr("q", "a", {2}, "q"),
                     tr("q", "b", {-1}, "q2"), tr("q2", "b", {-1}, "q2")};
  } else {
    throw std::invalid_argument("unknown automaton: " + name);
  }
  reindex(v);
  return v;
}

namespace {

// Picks the first enabled transition, preferring the given predicate.
template <typename Pref>
std::optional<ResolverChoice> prefer(const Vass& v, const Configuration& c,
                                     const Letter& l, Pref pref) {
  std::vector<int> ts = enabled(v, c, l);
  if (ts.empty()) return std::nullopt;
  for (int ti : ts)
    if (pref(v.transitions[ti])) return ResolverChoice{{}, ti};
  return ResolverChoice{{}, ts.front()};
}

}  // namespace

Resolver resolver(const std::string& name) {
  Resolver r;
  if (name == "A_notDVASS") {
    r.name = "R_notDVASS";
    r.choose = [](const Vass& v, const Run& run, const Letter& l) {
      return prefer(v, run.final_config(), l,
                    [](const Transition& t) { return t.target == "q2"; });
    };
  } else if (name == "A_anbgen") {
    r.name = "R_anbgen";
    r.choose = [](const Vass& v, const Run& run, const Letter& l) {
      return prefer(v, run.final_config(), l,
                    [](const Transition& t) { return t.effect[0] < 0; });
    };
  } else if (name == "A_notFSVASS") {
    r.name = "R_notFSVASS";
    r.choose = [](const Vass& v, const Run& run, const Letter& l) {
      return prefer(v, run.final_config(), l,
                    [](const Transition& t) { return t.target == "q_s"; });
    };
  } else if (name == "A_mustVASSe") {
    r.name = "R_mustVASSe";
    // Transfer everything across before reading a digit, so the carried
    // value is always maximal.
    r.choose = [](const Vass& v, const Run& run,
                  const Letter& l) -> std::optional<ResolverChoice> {
      Configuration c = run.final_config();
      std::vector<int> prelude;
      if (l == "0" || l == "1") {
        while (true) {
          std::vector<int> es = enabled(v, c, kEpsilon);
          if (es.empty()) break;
          prelude.push_back(es.front());
          c = apply(v, c, es.front());
        }
      }
      std::vector<int> ts = enabled(v, c, l);
      if (ts.empty()) return std::nullopt;
      return ResolverChoice{std::move(prelude), ts.front()};
    };
  } else {
    throw std::invalid_argument("no resolver exists in catalog for " + name);
  }
  return r;
}

namespace {

Vass universal_ab() {
  Vass v;
  v.name = "universal_ab";
  v.dimension = 1;
  v.alphabet = {"a", "b"};
  v.semantics = Semantics::Reachability;
  v.states = {"u0"};
  v.initial = "u0";
  v.accepting = {"u0"};
  v.transitions = {tr("u0", "a", {0}, "u0"), tr("u0", "b", {0}, "u0")};
  reindex(v);
  return v;
}

std::string automaton_language(const std::string& automaton_name) {
  if (automaton_name == "N_union") return "L_notrunion";
  return "L_" + automaton_name.substr(2);
}

}  // namespace

bool SeparationReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const Entry& e) { return e.pass; });
}

SeparationReport run_separation_suite(size_t n) {
  SeparationReport report;
  auto add = [&](std::string check, bool pass, std::string detail) {
    report.entries.push_back(
        SeparationReport::Entry{std::move(check), pass, std::move(detail)});
  };
  auto depth_for = [&](const std::string& name) {
    // The 2-dim and epsilon-bearing members get a shorter word bound.
    if (name == "A_mustVASSe" || name == "A_anblenbarrier")
      return std::min<size_t>(n, 8);
    return n;
  };
  for (const auto& name : automaton_names()) {
    Vass a = automaton(name);
    NamedLanguage lang = predicate(automaton_language(name));
    BoundedCheck check = bounded_equiv_predicate(a, lang.predicate, depth_for(name));
    add(name + " vs " + lang.name, check.holds,
        check.holds ? "" : "mismatch on \"" + word_to_string(*check.counterexample) + "\"");
  }
  for (const auto& name :
       {"A_notDVASS", "A_anbgen", "A_notFSVASS", "A_mustVASSe"}) {
    Vass a = automaton(name);
    Resolver r = resolver(name);
    ResolverReport rr = validate_resolver(a, r, depth_for(name));
    add(r.name + " on " + name, rr.ok(),
        rr.ok() ? "" : "fails on \"" + word_to_string(rr.word) + "\"");
  }
  {
    Vass nu = automaton("N_union");
    HdCheckResult hd = find_nonhd_witness(nu, 3);
    bool pass = !hd.none_up_to() && check_witness(nu, *hd.witness);
    add("N_union non-HD witness at horizon 3", pass,
        pass ? "witness depth " + std::to_string(hd.horizon) : "no checked witness");
  }
  for (const auto& name :
       {"A_notDVASS", "A_anbgen", "A_notFSVASS", "A_mustVASSe"}) {
    HdCheckResult hd = find_nonhd_witness(automaton(name), 6);
    add(std::string(name) + " has no witness up to horizon 6", hd.none_up_to(),
        hd.none_up_to() ? "" : "unexpected witness");
  }
  {
    BoundedCheck inc = bounded_inclusion(automaton("A_anbn"), automaton("A_anbgen"),
                                         std::min<size_t>(n, 10));
    add("L_anbn within L_anbgen", inc.holds,
        inc.holds ? "" : "violated by \"" + word_to_string(*inc.counterexample) + "\"");
    BoundedCheck top = bounded_inclusion(automaton("A_anbgen"), universal_ab(),
                                         std::min<size_t>(n, 10));
    add("L_anbgen within Sigma*", top.holds,
        top.holds ? "" : "violated by \"" + word_to_string(*top.counterexample) + "\"");
  }
  return report;
}

}  // namespace corpus
}  // namespace hdvass
