#include "hdvass/textio.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hdvass {

namespace {

struct Tok {
  std::string text;
  size_t column;  // 1-based
};

// Whitespace-separated tokens. '#' comments out a line only when it is the
// first non-blank character; '#' elsewhere is an ordinary token, since it is
// a common marker letter in alphabets.
std::vector<Tok> tokenize(const std::string& line) {
  std::vector<Tok> toks;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    if (toks.empty() && line[i] == '#') return {};
    size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    toks.push_back(Tok{line.substr(start, i - start), start + 1});
  }
  return toks;
}

bool parse_int(const std::string& s, long long& out) {
  const char* b = s.data();
  const char* e = s.data() + s.size();
  if (b != e && *b == '+') ++b;
  auto [p, ec] = std::from_chars(b, e, out);
  return ec == std::errc{} && p == e;
}

[[noreturn]] void err(size_t line, size_t col, const std::string& msg) {
  std::ostringstream full;
  full << "line " << line << ", column " << col << ": " << msg;
  throw ParseError(SourceSpan{line, col}, full.str());
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

}  // namespace

Vass parse_vass(const std::string& text) {
  Vass v;
  bool saw_header = false, saw_dim = false, saw_initial = false;
  auto lines = split_lines(text);
  for (size_t ln = 0; ln < lines.size(); ++ln) {
    size_t lineno = ln + 1;
    auto toks = tokenize(lines[ln]);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    if (!saw_header) {
      if (kw != "vass") err(lineno, toks[0].column, "missing vass header");
      if (toks.size() != 2) err(lineno, toks[0].column, "expected: vass <name>");
      v.name = toks[1].text;
      saw_header = true;
      continue;
    }
    if (kw == "dim") {
      if (toks.size() != 2) err(lineno, toks[0].column, "expected: dim <k>");
      long long k;
      if (!parse_int(toks[1].text, k) || k < 0)
        err(lineno, toks[1].column, "dimension must be a natural number");
      v.dimension = (int)k;
      saw_dim = true;
    } else if (kw == "semantics") {
      if (toks.size() != 2) err(lineno, toks[0].column, "expected: semantics cover|reach");
      if (toks[1].text == "cover")
        v.semantics = Semantics::Coverability;
      else if (toks[1].text == "reach")
        v.semantics = Semantics::Reachability;
      else
        err(lineno, toks[1].column, "semantics must be 'cover' or 'reach'");
    } else if (kw == "alphabet") {
      for (size_t i = 1; i < toks.size(); ++i) {
        if (toks[i].text == kEpsilon)
          err(lineno, toks[i].column, "epsilon cannot be declared in the alphabet");
        if (v.has_letter(toks[i].text))
          err(lineno, toks[i].column, "duplicate letter '" + toks[i].text + "'");
        v.alphabet.push_back(toks[i].text);
      }
    } else if (kw == "state") {
      if (toks.size() < 2) err(lineno, toks[0].column, "expected: state <id> [initial] [accepting]");
      const std::string& id = toks[1].text;
      if (v.has_state(id)) err(lineno, toks[1].column, "duplicate state id '" + id + "'");
      v.states.push_back(id);
      for (size_t i = 2; i < toks.size(); ++i) {
        if (toks[i].text == "initial") {
          if (saw_initial) err(lineno, toks[i].column, "two initial states");
          v.initial = id;
          saw_initial = true;
        } else if (toks[i].text == "accepting") {
          v.accepting.push_back(id);
        } else {
          err(lineno, toks[i].column, "unknown state flag '" + toks[i].text + "'");
        }
      }
    } else if (kw == "trans") {
      if (!saw_dim) err(lineno, toks[0].column, "trans before dim");
      size_t need = 3 + (size_t)v.dimension;
      if (toks.size() != 1 + need) {
        std::ostringstream msg;
        msg << "expected: trans <src> <letter> <" << v.dimension
            << " effect entries> <dst>";
        err(lineno, toks[0].column, msg.str());
      }
      Transition t;
      t.source = toks[1].text;
      t.label = toks[2].text;
      if (!v.has_state(t.source))
        err(lineno, toks[1].column, "unknown state '" + t.source + "'");
      if (!t.silent() && !v.has_letter(t.label))
        err(lineno, toks[2].column, "letter '" + t.label + "' is not in the alphabet");
      for (int d = 0; d < v.dimension; ++d) {
        long long e;
        if (!parse_int(toks[3 + d].text, e))
          err(lineno, toks[3 + d].column, "bad effect entry '" + toks[3 + d].text + "'");
        t.effect.push_back(e);
      }
      t.target = toks[2 + v.dimension + 1].text;
      if (!v.has_state(t.target))
        err(lineno, toks[2 + v.dimension + 1].column, "unknown state '" + t.target + "'");
      t.index = (int)v.transitions.size();
      v.transitions.push_back(t);
    } else {
      err(lineno, toks[0].column, "unknown directive '" + kw + "'");
    }
  }
  if (!saw_header) err(1, 1, "missing vass header");
  if (!saw_initial) err(1, 1, "no initial state declared");
  return v;
}

std::string serialize_vass(const Vass& v) {
  std::ostringstream out;
  out << "vass " << v.name << "\n";
  out << "dim " << v.dimension << "\n";
  out << "semantics " << (v.semantics == Semantics::Coverability ? "cover" : "reach")
      << "\n";
  out << "alphabet";
  for (const auto& l : v.alphabet) out << " " << l;
  out << "\n";
  for (const auto& q : v.states) {
    out << "state " << q;
    if (q == v.initial) out << " initial";
    if (v.is_accepting_state(q)) out << " accepting";
    out << "\n";
  }
  for (const auto& t : v.transitions) {
    out << "trans " << t.source << " " << t.label;
    for (long long e : t.effect) out << " " << (e >= 0 ? "+" : "") << e;
    out << " " << t.target << "\n";
  }
  return out.str();
}

TwoCounterMachine parse_2cm(const std::string& text) {
  TwoCounterMachine m;
  bool saw_header = false, saw_initial = false, saw_halting = false;
  auto lines = split_lines(text);
  auto has_state = [&](const std::string& q) {
    return std::find(m.states.begin(), m.states.end(), q) != m.states.end();
  };
  for (size_t ln = 0; ln < lines.size(); ++ln) {
    size_t lineno = ln + 1;
    auto toks = tokenize(lines[ln]);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;
    if (!saw_header) {
      if (kw != "2cm") err(lineno, toks[0].column, "missing 2cm header");
      if (toks.size() != 2) err(lineno, toks[0].column, "expected: 2cm <name>");
      m.name = toks[1].text;
      saw_header = true;
      continue;
    }
    if (kw == "state") {
      if (toks.size() < 2) err(lineno, toks[0].column, "expected: state <id> [initial] [halting]");
      const std::string& id = toks[1].text;
      if (has_state(id)) err(lineno, toks[1].column, "duplicate state id '" + id + "'");
      m.states.push_back(id);
      for (size_t i = 2; i < toks.size(); ++i) {
        if (toks[i].text == "initial") {
          if (saw_initial) err(lineno, toks[i].column, "two initial states");
          m.initial = id;
          saw_initial = true;
        } else if (toks[i].text == "halting") {
          if (saw_halting) err(lineno, toks[i].column, "two halting states");
          m.halting = id;
          saw_halting = true;
        } else {
          err(lineno, toks[i].column, "unknown state flag '" + toks[i].text + "'");
        }
      }
    } else if (kw == "trans") {
      if (toks.size() != 4) err(lineno, toks[0].column, "expected: trans <src> <op> <dst>");
      CmTransition t;
      t.source = toks[1].text;
      if (!has_state(t.source)) err(lineno, toks[1].column, "unknown state '" + t.source + "'");
      const std::string& opname = toks[2].text;
      bool found = false;
      for (CmOp op : {CmOp::Inc1, CmOp::Inc2, CmOp::Dec1, CmOp::Dec2, CmOp::Ztest1, CmOp::Ztest2}) {
        if (opname == cm_op_name(op)) { t.op = op; found = true; break; }
      }
      if (!found) err(lineno, toks[2].column, "unknown op '" + opname + "'");
      t.target = toks[3].text;
      if (!has_state(t.target)) err(lineno, toks[3].column, "unknown state '" + t.target + "'");
      m.transitions.push_back(t);
      // determinism is rechecked span-free by check_2cm; here we attach spans
      auto viol = check_2cm(m);
      if (!viol.empty()) err(lineno, toks[0].column, viol.front());
    } else {
      err(lineno, toks[0].column, "unknown directive '" + kw + "'");
    }
  }
  if (!saw_header) err(1, 1, "missing 2cm header");
  if (!saw_initial) err(1, 1, "no initial state declared");
  if (!saw_halting) err(1, 1, "no halting state declared");
  return m;
}

std::string serialize_2cm(const TwoCounterMachine& m) {
  std::ostringstream out;
  out << "2cm " << m.name << "\n";
  for (const auto& q : m.states) {
    out << "state " << q;
    if (q == m.initial) out << " initial";
    if (q == m.halting) out << " halting";
    out << "\n";
  }
  for (const auto& t : m.transitions)
    out << "trans " << t.source << " " << cm_op_name(t.op) << " " << t.target << "\n";
  return out.str();
}

}  // namespace hdvass
