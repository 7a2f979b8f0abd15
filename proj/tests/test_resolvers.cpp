#include "doctest.h"
#include "helpers.hpp"
#include "hdvass/corpus.hpp"
#include "hdvass/resolvers.hpp"

using namespace hdvass;
using hdvass::testing::chars;

namespace {

// The weakest strategy: always take the first enabled transition.
Resolver first_choice() {
  Resolver r;
  r.name = "first-choice";
  r.choose = [](const Vass& v, const Run& run, const Letter& l)
      -> std::optional<ResolverChoice> {
    auto opts = enabled(v, run.final_config(), l);
    if (opts.empty()) return std::nullopt;
    return ResolverChoice{{}, opts[0]};
  };
  return r;
}

}  // namespace

TEST_CASE("resolve_run replays a strategy letter by letter") {
  Vass v = corpus::automaton("A_anbgen");
  Resolver r = corpus::resolver("A_anbgen");
  auto out = resolve_run(v, r, chars("aabb"));
  REQUIRE(std::holds_alternative<Run>(out));
  const Run& run = std::get<Run>(out);
  CHECK(run.word == chars("aabb"));
  CHECK(is_accepting(v, run.final_config()));
}

TEST_CASE("resolvers can get stuck") {
  Vass v = corpus::automaton("A_anbn");
  auto out = resolve_run(v, first_choice(), chars("abb"));
  REQUIRE(std::holds_alternative<Stuck>(out));
  CHECK(std::get<Stuck>(out).position == 2);  // counter empty, no second b
}

TEST_CASE("a resolver returning a disabled move breaks the contract") {
  Vass v = corpus::automaton("A_anbn");
  Resolver bad;
  bad.name = "bad";
  bad.choose = [](const Vass&, const Run&, const Letter&)
      -> std::optional<ResolverChoice> {
    return ResolverChoice{{}, 1};  // the b decrement, even from counter 0
  };
  CHECK_THROWS_AS(resolve_run(v, bad, chars("b")), ResolverContractError);
}

TEST_CASE("validation accepts the catalog strategies at small bounds") {
  for (const auto* name : {"A_notDVASS", "A_anbgen", "A_notFSVASS"}) {
    Vass v = corpus::automaton(name);
    ResolverReport rep = validate_resolver(v, corpus::resolver(name), 7);
    INFO(name);
    CHECK(rep.ok());
  }
}

TEST_CASE("validation pins the least word a strategy loses") {
  Vass v = corpus::automaton("N_union");
  ResolverReport rep = validate_resolver(v, first_choice(), 4);
  REQUIRE_FALSE(rep.ok());
  // First-choice commits to the +1 branch; a b^2 suffix then needs the +2 one.
  CHECK(rep.word == chars("abb"));
  CHECK(rep.kind == ResolverReport::Kind::StuckFailure);
}

TEST_CASE("lookahead strategy resolves what the catalog resolves") {
  Vass v = corpus::automaton("A_notDVASS");
  Resolver r = lookahead_resolver(v, 4);
  CHECK(validate_resolver(v, r, 6).ok());
}

TEST_CASE("language-maximal choice separates the two b-moves") {
  Vass v = corpus::automaton("A_notDVASS");
  Configuration c{"q1", {2}};
  // From q1 with 2 on the counter, the decrementing b keeps b-capacity;
  // the zero-effect b discards it.
  int dec = enabled(v, c, "b")[0];
  int zero = enabled(v, c, "b")[1];
  CHECK(is_language_maximal_choice(v, c, "b", dec, 5));
  CHECK_FALSE(is_language_maximal_choice(v, c, "b", zero, 5));
}
