#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "hdvass/textio.hpp"

using namespace hdvass;

TEST_CASE("parse accepts comments and blank lines, '#' is a letter elsewhere") {
  Vass v = parse_vass(
      "# leading comment\n"
      "vass ex\n"
      "\n"
      "dim 1\n"
      "semantics cover\n"
      "alphabet a #\n"
      "state q0 initial accepting\n"
      "trans q0 # +0 q0\n"
      "# trailing comment\n");
  CHECK(v.alphabet == std::vector<Letter>{"a", "#"});
  CHECK(v.transitions.size() == 1);
  CHECK(v.transitions[0].label == "#");
}

TEST_CASE("parse errors carry line and column") {
  auto expect_error = [](const std::string& text, size_t line) {
    try {
      parse_vass(text);
      FAIL("expected ParseError in:\n" << text);
    } catch (const ParseError& e) {
      CHECK(e.span.line == line);
    }
  };
  expect_error("vass x\ndim oops\n", 2);
  expect_error("vass x\ndim 1\nsemantics maybe\n", 3);
  expect_error("vass x\ndim 1\nsemantics cover\nalphabet a\nstate q initial\n"
               "trans q a +1 +1 q\n", 6);  // effect arity
  expect_error("vass x\ndim 1\nsemantics cover\nalphabet a\nstate q initial\n"
               "trans q b +1 q\n", 6);     // unknown letter
  expect_error("vass x\ndim 1\nsemantics cover\nalphabet a\n"
               "state q\ntrans q a +1 q\n", 1);  // no initial state declared
}

TEST_CASE("serialize then parse is the identity on the serialized form") {
  Vass v = testing::anblen_cover();
  std::string s1 = serialize_vass(v);
  Vass back = parse_vass(s1);
  CHECK(serialize_vass(back) == s1);
  CHECK(back.initial == v.initial);
  CHECK(back.transitions.size() == v.transitions.size());
}

TEST_CASE("round trip on fuzzed automata") {
  std::mt19937 rng(20240917);
  for (int iter = 0; iter < 200; ++iter) {
    Vass v = testing::fuzz_vass(rng, iter);
    REQUIRE(validate(v).ok());
    std::string s1 = serialize_vass(v);
    std::string s2 = serialize_vass(parse_vass(s1));
    REQUIRE(s1 == s2);
  }
}

TEST_CASE("2cm round trip and errors") {
  const std::string text =
      "2cm m\n"
      "state s initial\n"
      "state t\n"
      "state h halting\n"
      "trans s inc1 t\n"
      "trans t ztest2 h\n";
  TwoCounterMachine m = parse_2cm(text);
  CHECK(m.initial == "s");
  CHECK(m.halting == "h");
  CHECK(m.transitions.size() == 2);
  CHECK(serialize_2cm(parse_2cm(serialize_2cm(m))) == serialize_2cm(m));
  CHECK_THROWS_AS(parse_2cm("2cm m\nstate s initial halting\ntrans s wiggle s\n"),
                  ParseError);
}
