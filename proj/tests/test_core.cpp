#include "doctest.h"
#include "helpers.hpp"
#include "hdvass/core.hpp"

using namespace hdvass;
using hdvass::testing::from_text;

namespace {

Vass two_counter_toy() {
  return from_text(
      "vass toy\n"
      "dim 2\n"
      "semantics reach\n"
      "alphabet a b\n"
      "state p initial accepting\n"
      "state q\n"
      "trans p a +1 +0 p\n"
      "trans p a +0 +2 q\n"
      "trans q b -1 -1 p\n");
}

}  // namespace

TEST_CASE("enabled filters by source, label and non-negativity, in declaration order") {
  Vass v = two_counter_toy();
  Configuration c0 = initial_configuration(v);
  CHECK(enabled(v, c0, "a") == std::vector<int>{0, 1});
  CHECK(enabled(v, c0, "b").empty());
  Configuration q1{"q", {0, 2}};
  CHECK(enabled(v, q1, "b").empty());  // first counter would go negative
  Configuration q2{"q", {1, 2}};
  CHECK(enabled(v, q2, "b") == std::vector<int>{2});
  CHECK_THROWS_AS(enabled(v, Configuration{"zz", {0, 0}}, "a"), std::invalid_argument);
}

TEST_CASE("apply reports the offending counter") {
  Vass v = two_counter_toy();
  Configuration q{"q", {0, 5}};
  try {
    apply(v, q, 2);
    FAIL("expected DisabledError");
  } catch (const DisabledError& e) {
    CHECK(e.counter_index == 0);
  }
}

TEST_CASE("replay builds runs and pins the failing position") {
  Vass v = two_counter_toy();
  Run r = replay(v, {0, 1, 2});
  CHECK(r.word == testing::w({"a", "a", "b"}));
  CHECK(r.final_config() == Configuration{"p", {0, 1}});
  try {
    replay(v, {1, 2, 2});
    FAIL("expected ReplayError");
  } catch (const ReplayError& e) {
    CHECK(e.position == 1);  // b needs a token on the first counter
  }
}

TEST_CASE("acceptance depends on semantics") {
  Vass v = two_counter_toy();
  Configuration zero{"p", {0, 0}}, pos{"p", {1, 0}};
  CHECK(is_accepting(v, zero));
  CHECK_FALSE(is_accepting(v, pos));  // reach needs all-zero counters
  v.semantics = Semantics::Coverability;
  CHECK(is_accepting(v, pos));
  CHECK_FALSE(is_accepting(v, Configuration{"q", {0, 0}}));
}

TEST_CASE("validate flags structural breakage") {
  Vass v = two_counter_toy();
  CHECK(validate(v).ok());
  v.transitions.push_back(Transition{"p", "z", {0, 0}, "q", 3});
  v.transitions.push_back(Transition{"p", "a", {1}, "nowhere", 4});
  v.initial = "ghost";
  ValidationReport rep = validate(v);
  CHECK(rep.violations.size() >= 3);
}

TEST_CASE("epsilon label is reserved and detected") {
  Vass v = two_counter_toy();
  CHECK_FALSE(v.has_epsilon());
  v.transitions.push_back(Transition{"p", kEpsilon, {0, 0}, "q", 3});
  CHECK(v.has_epsilon());
  CHECK_FALSE(v.has_letter(kEpsilon));
}
