#include "doctest.h"
#include "helpers.hpp"
#include "hdvass/constructions.hpp"
#include "hdvass/corpus.hpp"

using namespace hdvass;
using hdvass::testing::chars;
using hdvass::testing::from_text;

namespace {

Vass anb2n_dvass() {
  return from_text(
      "vass anb2n\n"
      "dim 1\n"
      "semantics reach\n"
      "alphabet a b\n"
      "state q0 initial accepting\n"
      "state q1 accepting\n"
      "trans q0 a +2 q0\n"
      "trans q0 b -1 q1\n"
      "trans q1 b -1 q1\n");
}

}  // namespace

TEST_CASE("completion preserves the bounded language") {
  for (const auto* name : {"A_anbn", "A_notDVASS"}) {
    Vass v = corpus::automaton(name);
    Vass c = complete(v);
    INFO(name);
    CHECK(bounded_equiv(v, c, 6).holds);
    // Every letter is consumable forever afterwards.
    for (const auto& q : c.states)
      for (const auto& l : c.alphabet)
        CHECK_FALSE(enabled(c, Configuration{q, std::vector<long long>(c.dimension, 0)}, l)
                        .empty());
  }
}

TEST_CASE("union product matches the spec examples") {
  Vass p = product_union(corpus::automaton("A_anbn"), corpus::automaton("A_anbgen"));
  CHECK(member(p, chars("abb")).verdict == Verdict::Accepted);
  CHECK(member(p, chars("aab")).verdict == Verdict::Rejected);
  Vass self = product_union(corpus::automaton("A_anbn"), corpus::automaton("A_anbn"));
  CHECK(bounded_equiv(self, corpus::automaton("A_anbn"), 6).holds);
}

TEST_CASE("intersection of the pair is the smaller language") {
  Vass p = product_intersection(corpus::automaton("A_anbn"),
                                corpus::automaton("A_anbgen"));
  CHECK(bounded_equiv(p, corpus::automaton("A_anbn"), 8).holds);
}

TEST_CASE("products refuse mismatched inputs") {
  CHECK_THROWS_AS(product_union(corpus::automaton("A_anbn"),
                                corpus::automaton("A_notDVASS")),
                  std::invalid_argument);  // different alphabets
  CHECK_THROWS_AS(product_union(corpus::automaton("A_anbn"),
                                corpus::automaton("A_notFSVASS")),
                  std::invalid_argument);  // different semantics
}

TEST_CASE("homomorphism text form round trips") {
  Homomorphism h = parse_homomorphism("x -> a b\ny -> @eps\nz -> b\n");
  CHECK(h.source_alphabet == std::vector<Letter>{"x", "y", "z"});
  CHECK(h.map.at("x") == chars("ab"));
  CHECK(h.map.at("y").empty());
  CHECK(parse_homomorphism(serialize_homomorphism(h)).map == h.map);
}

TEST_CASE("inverse homomorphism agrees with apply-then-check") {
  Vass a = corpus::automaton("A_anbgen");
  Homomorphism h = parse_homomorphism("x -> a\ny -> a b b\nz -> @eps\n");
  Vass inv = inverse_hom(a, h);
  for (const auto& w : all_words_up_to(h.source_alphabet, 5)) {
    Word image;
    for (const auto& l : w)
      for (const auto& il : h.map.at(l)) image.push_back(il);
    INFO(word_to_string(w));
    REQUIRE((member(inv, w).verdict == Verdict::Accepted) ==
            (member(a, image).verdict == Verdict::Accepted));
  }
}

TEST_CASE("epsilon elimination handles pumps, dips and zero cycles") {
  // A positive silent self-loop: the counter stops mattering.
  Vass pump = from_text(
      "vass pump\ndim 1\nsemantics cover\nalphabet a\n"
      "state q0 initial\nstate q1 accepting\n"
      "trans q0 @eps +1 q0\n"
      "trans q0 a -1 q1\n");
  // A lossy silent cycle guarding the exit letter.
  Vass dip = from_text(
      "vass dip\ndim 1\nsemantics cover\nalphabet a b\n"
      "state q0 initial\nstate q1\nstate q2 accepting\n"
      "trans q0 a +1 q0\n"
      "trans q0 @eps -1 q1\n"
      "trans q1 @eps +0 q0\n"
      "trans q1 b +0 q2\n");
  // A zero-effect silent cycle with a guarded exit.
  Vass zero = from_text(
      "vass zero\ndim 1\nsemantics cover\nalphabet b\n"
      "state q0 initial\nstate q1\nstate q2 accepting\n"
      "trans q0 @eps +2 q1\n"
      "trans q1 @eps -2 q0\n"
      "trans q1 b -1 q2\n");
  for (const Vass& v : {pump, dip, zero}) {
    Vass out = eliminate_epsilon_1hd(v);
    INFO(v.name);
    CHECK_FALSE(out.has_epsilon());
    CHECK(bounded_equiv(v, out, 8).holds);
  }
  // Spot shapes: pump accepts exactly "a", zero exactly "b".
  CHECK(member(eliminate_epsilon_1hd(pump), chars("a")).verdict == Verdict::Accepted);
  CHECK(member(eliminate_epsilon_1hd(zero), chars("bb")).verdict == Verdict::Rejected);
}

TEST_CASE("end marker turns coverability into reachability") {
  Vass barrier = endmarker_cover_to_reach(testing::anblen_cover(), "#");
  CHECK(barrier.semantics == Semantics::Reachability);
  auto pred = corpus::predicate("L_anblenbarrier").predicate;
  CHECK(bounded_equiv_predicate(barrier, pred, 8).holds);
  CHECK_THROWS_AS(endmarker_cover_to_reach(corpus::automaton("A_anbn"), "#"),
                  std::invalid_argument);
}

TEST_CASE("determinism check") {
  CHECK(check_deterministic(corpus::automaton("A_anbn")));
  CHECK(check_deterministic(anb2n_dvass()));
  CHECK_FALSE(check_deterministic(corpus::automaton("A_anbgen")));
  CHECK_FALSE(check_deterministic(corpus::automaton("A_mustVASSe")));
}

TEST_CASE("finite unions of deterministic automata") {
  FsVass u = union_of_dvass({corpus::automaton("A_anbn"), anb2n_dvass()});
  CHECK(fs_member(u, chars("ab")).verdict == Verdict::Accepted);
  CHECK(fs_member(u, chars("abb")).verdict == Verdict::Accepted);
  CHECK(fs_member(u, chars("abbb")).verdict == Verdict::Rejected);
  auto pred = corpus::predicate("L_notrunion").predicate;
  for (const auto& w : all_words_up_to({"a", "b"}, 8))
    REQUIRE((fs_member(u, w).verdict == Verdict::Accepted) == pred(w));

  FsVass single = union_of_dvass({corpus::automaton("A_anbn")});
  CHECK(fs_language_up_to(single, 8).accepted ==
        language_up_to(corpus::automaton("A_anbn"), 8).accepted);
  FsVass none = union_of_dvass({});
  CHECK(fs_language_up_to(none, 4).accepted.empty());

  CHECK_THROWS_AS(union_of_dvass({corpus::automaton("A_anbgen")}),
                  std::invalid_argument);  // not deterministic
}
