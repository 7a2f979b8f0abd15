#include "doctest.h"
#include "helpers.hpp"
#include "hdvass/corpus.hpp"
#include "hdvass/semantics.hpp"

using namespace hdvass;
using hdvass::testing::chars;
using hdvass::testing::from_text;

TEST_CASE("membership matches the naive enumerator on epsilon-free catalog members") {
  for (const auto& name : corpus::automaton_names()) {
    Vass v = corpus::automaton(name);
    if (v.has_epsilon()) continue;
    size_t n = v.alphabet.size() > 2 ? 6 : 8;
    for (const auto& word : all_words_up_to(v.alphabet, n)) {
      MembershipResult got = member(v, word);
      REQUIRE(got.verdict != Verdict::Unknown);
      INFO(name, " ", word_to_string(word));
      REQUIRE((got.verdict == Verdict::Accepted) == testing::naive_member(v, word));
      if (got.verdict == Verdict::Accepted) {
        REQUIRE(got.witness.has_value());
        CHECK(got.witness->word == word);
        CHECK(is_accepting(v, got.witness->final_config()));
      }
    }
  }
}

TEST_CASE("omega engine decides epsilon coverability exactly") {
  Vass v = corpus::automaton("A_mustVASSe");
  CHECK(member(v, chars("11#000#")).verdict == Verdict::Accepted);
  CHECK(member(v, chars("11#0000#")).verdict == Verdict::Rejected);
  CHECK(member(v, chars("0#")).verdict == Verdict::Rejected);  // must start with 1
  CHECK(member(v, chars("1##")).verdict == Verdict::Accepted);
  CHECK(member(v, chars("1#0#")).verdict == Verdict::Accepted);
  CHECK(member(v, chars("1#00#")).verdict == Verdict::Rejected);
}

TEST_CASE("budgeted engine reports Unknown at saturation") {
  // Reaching zero requires first pumping past any finite budget horizon;
  // the concrete engine must admit it cannot tell.
  Vass v = from_text(
      "vass churn\n"
      "dim 1\n"
      "semantics reach\n"
      "alphabet a\n"
      "state p initial\n"
      "state f accepting\n"
      "trans p @eps +1 p\n"
      "trans p a -1 f\n");
  SearchOptions tight;
  tight.eps_budget = 4;
  CHECK(member(v, chars("a"), tight).verdict == Verdict::Accepted);
  // An accepting run exists within budget; an unreachable target saturates.
  Vass dead = v;
  dead.accepting = {};
  CHECK(member(dead, chars("a"), tight).verdict == Verdict::Unknown);
}

TEST_CASE("language enumeration is length-lex in declaration order") {
  Vass v = corpus::automaton("A_anbn");
  LanguageSample s = language_up_to(v, 4);
  std::vector<Word> expect{{}, chars("ab"), chars("aabb")};
  CHECK(s.accepted == expect);
  CHECK(s.unknown.empty());
}

TEST_CASE("bounded equivalence finds the least disagreement") {
  Vass a = corpus::automaton("A_anbn");
  Vass b = corpus::automaton("A_anbgen");
  BoundedCheck eq = bounded_equiv(a, b, 6);
  CHECK_FALSE(eq.holds);
  CHECK(eq.counterexample == chars("b"));  // a^0 b^1 is in b only
  CHECK(bounded_inclusion(a, b, 8).holds);
  BoundedCheck inc = bounded_inclusion(b, a, 8);
  CHECK_FALSE(inc.holds);
  CHECK(inc.counterexample == chars("b"));
}

TEST_CASE("predicate comparison mirrors automaton comparison") {
  Vass v = corpus::automaton("A_anblen");
  auto pred = corpus::predicate("L_anblen").predicate;
  CHECK(bounded_equiv_predicate(v, pred, 8).holds);
  auto wrong = [&](const Word& w) { return pred(w) && w.size() != 3; };
  BoundedCheck bc = bounded_equiv_predicate(v, wrong, 8);
  CHECK_FALSE(bc.holds);
  CHECK(bc.counterexample == chars("aaa"));
}

TEST_CASE("all_words_up_to counts and orders") {
  auto ws = all_words_up_to({"a", "b"}, 3);
  CHECK(ws.size() == 1 + 2 + 4 + 8);
  CHECK(ws[0].empty());
  CHECK(ws[1] == chars("a"));
  CHECK(ws.back() == chars("bbb"));
}

TEST_CASE("reach_set lists configurations after a word") {
  Vass v = corpus::automaton("N_union");
  ReachSetResult r = reach_set(v, chars("a"));
  REQUIRE(r.configs.size() == 2);
  CHECK(r.configs[0] == Configuration{"p", {1}});
  CHECK(r.configs[1] == Configuration{"q", {2}});
}
