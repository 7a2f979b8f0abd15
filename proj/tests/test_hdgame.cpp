#include "doctest.h"
#include "helpers.hpp"
#include "hdvass/corpus.hpp"
#include "hdvass/hdgame.hpp"

using namespace hdvass;
using hdvass::testing::chars;

TEST_CASE("the union gadget falls to a depth-3 strategy") {
  Vass v = corpus::automaton("N_union");
  HdCheckResult res = find_nonhd_witness(v, 3);
  REQUIRE(res.witness.has_value());
  CHECK(res.horizon == 3);
  const NonHdWitness& w = res.witness.value();
  CHECK(w.letter == "a");
  CHECK(w.children.size() == 2);  // the +1 and +2 branches
  CHECK(check_witness(v, w));
  CHECK_FALSE(find_nonhd_witness(v, 2).witness.has_value());
}

TEST_CASE("a tampered strategy tree fails the replay check") {
  Vass v = corpus::automaton("N_union");
  NonHdWitness w = find_nonhd_witness(v, 3).witness.value();
  NonHdWitness pruned = w;
  REQUIRE_FALSE(pruned.children.empty());
  pruned.children.pop_back();  // no longer covers every Eve reply
  CHECK_FALSE(check_witness(v, pruned));
  NonHdWitness relabeled = w;
  relabeled.letter = "b";
  CHECK_FALSE(check_witness(v, relabeled));
}

TEST_CASE("history-deterministic catalog members survive horizon 4") {
  for (const auto* name : {"A_notDVASS", "A_anbgen", "A_notFSVASS", "A_mustVASSe"}) {
    Vass v = corpus::automaton(name);
    INFO(name);
    CHECK(find_nonhd_witness(v, 4).none_up_to());
  }
}

TEST_CASE("the trailing-block automaton falls to a depth-3 strategy") {
  // Adam: play a (a state-machine copy cannot accept "a"); against the
  // counting branch play b, forcing q with an empty counter, then a.
  Vass v = corpus::automaton("A_notHDVASS");
  HdCheckResult res = find_nonhd_witness(v, 6);
  REQUIRE(res.witness.has_value());
  CHECK(res.horizon == 3);
  CHECK(check_witness(v, res.witness.value()));
}

TEST_CASE("witness rendering is stable") {
  Vass v = corpus::automaton("N_union");
  NonHdWitness w = find_nonhd_witness(v, 3).witness.value();
  std::string s1 = witness_to_string(w);
  CHECK(s1 == witness_to_string(find_nonhd_witness(v, 3).witness.value()));
  CHECK(s1.find("adam a") != std::string::npos);
}

TEST_CASE("letter game transcript flags the losing step") {
  Vass v = corpus::automaton("N_union");
  Resolver first;
  first.name = "first-choice";
  first.choose = [](const Vass& vv, const Run& run, const Letter& l)
      -> std::optional<ResolverChoice> {
    auto opts = enabled(vv, run.final_config(), l);
    if (opts.empty()) return std::nullopt;
    return ResolverChoice{{}, opts[0]};
  };
  LetterGameTranscript t = play_letter_game(v, chars("abb"), first);
  REQUIRE(t.steps.size() == 3);
  CHECK(t.steps[0].eve == Configuration{"p", {1}});
  REQUIRE(t.first_losing.has_value());
  CHECK(*t.first_losing == 2);  // stuck on the second b while "abb" is in L
}
