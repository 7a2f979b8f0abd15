// textio.hpp -- line-based text format for VASS and 2CM descriptions.

#ifndef HDVASS_TEXTIO_HPP
#define HDVASS_TEXTIO_HPP

#include <stdexcept>
#include <string>

#include "hdvass/core.hpp"
#include "hdvass/minsky.hpp"

namespace hdvass {

struct SourceSpan {
  size_t line = 1;    // 1-based
  size_t column = 1;  // 1-based
};

struct ParseError : std::runtime_error {
  SourceSpan span;
  ParseError(SourceSpan s, const std::string& what)
      : std::runtime_error(what), span(s) {}
};

// Grammar, one directive per line; a line whose first token starts with '#'
// is a comment (elsewhere '#' is an ordinary letter):
//   vass <name>
//   dim <k>
//   semantics cover|reach
//   alphabet <l1> <l2> ...
//   state <id> [initial] [accepting]
//   trans <src> <letter|@eps> <d1> ... <dk> <dst>
Vass parse_vass(const std::string& text);
std::string serialize_vass(const Vass& v);

// 2CM grammar:
//   2cm <name>
//   state <id> [initial] [halting]
//   trans <src> inc1|inc2|dec1|dec2|ztest1|ztest2 <dst>
TwoCounterMachine parse_2cm(const std::string& text);
std::string serialize_2cm(const TwoCounterMachine& m);

}  // namespace hdvass

#endif
