#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hdvass/constructions.hpp"
#include "hdvass/corpus.hpp"
#include "hdvass/coverability.hpp"
#include "hdvass/hdgame.hpp"
#include "hdvass/minsky.hpp"
#include "hdvass/resolvers.hpp"
#include "hdvass/semantics.hpp"
#include "hdvass/textio.hpp"

using namespace hdvass;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

Word split_word(const std::string& text) {
  Word out;
  std::istringstream in(text);
  std::string letter;
  while (in >> letter) out.push_back(letter);
  return out;
}

std::string counters_str(const std::vector<long long>& c) {
  std::string out = "[";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  return out + "]";
}

void print_run(const Vass& v, const Run& run) {
  std::cout << "- | - | " << run.start.state << " | "
            << counters_str(run.start.counters) << "\n";
  for (const auto& [ti, cfg] : run.steps)
    std::cout << v.transitions[ti].label << " | " << ti << " | " << cfg.state
              << " | " << counters_str(cfg.counters) << "\n";
}

struct Bounds {
  size_t max_len = 8;
  long long eps_budget = 64;
  size_t horizon = 4;
  std::string semantics_override;

  SearchOptions opts() const { return SearchOptions{eps_budget}; }
  void header() const {
    std::cout << "# max-len=" << max_len << " eps-budget=" << eps_budget
              << " horizon=" << horizon << "\n";
  }
};

Vass load_vass(const std::string& path, const Bounds& b) {
  Vass v = parse_vass(slurp(path));
  if (!b.semantics_override.empty()) {
    Semantics s = b.semantics_override == "cover" ? Semantics::Coverability
                                                  : Semantics::Reachability;
    if (v.semantics != s) {
      v.semantics = s;
      std::cout << "# semantics re-tagged to " << b.semantics_override << "\n";
    }
  }
  return v;
}

Resolver make_resolver(const Vass& v, const std::string& spec, const Bounds& b) {
  if (spec.rfind("corpus:", 0) == 0) return corpus::resolver(spec.substr(7));
  if (spec.rfind("lookahead:", 0) == 0)
    return lookahead_resolver(v, std::stoul(spec.substr(10)), b.opts());
  throw std::invalid_argument("resolver spec must be corpus:<name> or lookahead:<h>");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"history-deterministic VASS toolkit"};
  app.require_subcommand(1);
  Bounds bounds;
  app.add_option("--max-len", bounds.max_len, "word length bound");
  app.add_option("--eps-budget", bounds.eps_budget, "silent-step budget");
  app.add_option("--horizon", bounds.horizon, "game/lookahead depth");
  app.add_option("--semantics-override", bounds.semantics_override,
                 "re-tag input semantics (cover|reach)")
      ->check(CLI::IsMember({"cover", "reach"}));

  std::string file, file_b, word_text, resolver_spec = "lookahead:4";
  std::string marker = "#", op = "union", map_file, gadget = "inclusion";
  std::string gadget_semantics = "cover", corpus_cmd, corpus_name;

  auto* member_cmd = app.add_subcommand("member", "word membership");
  member_cmd->add_option("file", file)->required();
  member_cmd->add_option("-w,--word", word_text)->required();

  auto* run_cmd = app.add_subcommand("run", "replay a transition sequence");
  run_cmd->add_option("file", file)->required();
  std::string trans_text;
  run_cmd->add_option("-t,--transitions", trans_text, "space-separated indices")
      ->required();

  auto* lang_cmd = app.add_subcommand("lang", "bounded language listing");
  lang_cmd->add_option("file", file)->required();

  auto* equiv_cmd = app.add_subcommand("equiv", "bounded equivalence");
  equiv_cmd->add_option("file", file)->required();
  equiv_cmd->add_option("file_b", file_b)->required();

  auto* include_cmd = app.add_subcommand("include", "bounded inclusion");
  include_cmd->add_option("file", file)->required();
  include_cmd->add_option("file_b", file_b)->required();

  auto* hd_cmd = app.add_subcommand("hd-check", "non-HD witness search");
  hd_cmd->add_option("file", file)->required();

  auto* resolve_cmd = app.add_subcommand("resolve", "play a resolver on a word");
  resolve_cmd->add_option("file", file)->required();
  resolve_cmd->add_option("-w,--word", word_text)->required();
  resolve_cmd->add_option("--resolver", resolver_spec);

  auto* vres_cmd = app.add_subcommand("validate-resolver", "resolver validation");
  vres_cmd->add_option("file", file)->required();
  vres_cmd->add_option("--resolver", resolver_spec);

  auto* product_cmd = app.add_subcommand("product", "synchronized product");
  product_cmd->add_option("file", file)->required();
  product_cmd->add_option("file_b", file_b)->required();
  product_cmd->add_option("--op", op)->check(CLI::IsMember({"union", "inter"}));

  auto* invhom_cmd = app.add_subcommand("invhom", "inverse homomorphism");
  invhom_cmd->add_option("file", file)->required();
  invhom_cmd->add_option("--map", map_file)->required();

  auto* rmeps_cmd = app.add_subcommand("rm-eps", "epsilon elimination (1-dim cover)");
  rmeps_cmd->add_option("file", file)->required();

  auto* endmark_cmd = app.add_subcommand("endmark", "cover-to-reach end marker");
  endmark_cmd->add_option("file", file)->required();
  endmark_cmd->add_option("--marker", marker);

  auto* km_cmd = app.add_subcommand("karp-miller", "dump the Karp-Miller tree");
  km_cmd->add_option("file", file)->required();

  auto* cm_cmd = app.add_subcommand("compile-2cm", "compile a 2CM gadget");
  cm_cmd->add_option("file", file)->required();
  cm_cmd->add_option("--gadget", gadget)
      ->check(CLI::IsMember({"inclusion", "hdness", "regularity"}));
  cm_cmd->add_option("--semantics", gadget_semantics)
      ->check(CLI::IsMember({"cover", "reach"}));

  auto* corpus_cmd_app = app.add_subcommand("corpus", "catalog operations");
  corpus_cmd_app->add_option("command", corpus_cmd)
      ->required()
      ->check(CLI::IsMember({"list", "dump", "verify"}));
  corpus_cmd_app->add_option("name", corpus_name);

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream dump;
    int code = app.exit(e, dump, dump);
    std::cerr << dump.str();
    return code == 0 ? 0 : 3;
  }

  try {
    SearchOptions opts = bounds.opts();
    if (*member_cmd) {
      Vass v = load_vass(file, bounds);
      MembershipResult r = member(v, split_word(word_text), opts);
      if (r.verdict == Verdict::Accepted) {
        std::cout << "ACCEPTED (silent steps: " << r.budget_used << ")\n";
        print_run(v, *r.witness);
        return 0;
      }
      std::cout << (r.verdict == Verdict::Rejected ? "REJECTED" : "UNKNOWN") << "\n";
      return r.verdict == Verdict::Rejected ? 1 : 2;
    }
    if (*run_cmd) {
      Vass v = load_vass(file, bounds);
      std::vector<int> seq;
      std::istringstream in(trans_text);
      int ti;
      while (in >> ti) seq.push_back(ti);
      Run r = replay(v, seq);
      print_run(v, r);
      std::cout << (is_accepting(v, r.final_config()) ? "ACCEPTING" : "NOT-ACCEPTING")
                << "\n";
      return 0;
    }
    if (*lang_cmd) {
      Vass v = load_vass(file, bounds);
      bounds.header();
      LanguageSample s = language_up_to(v, bounds.max_len, opts);
      for (const auto& w : s.accepted) std::cout << "\"" << word_to_string(w) << "\"\n";
      for (const auto& w : s.unknown)
        std::cout << "? \"" << word_to_string(w) << "\"\n";
      return 0;
    }
    if (*equiv_cmd || *include_cmd) {
      Vass a = load_vass(file, bounds);
      Vass b = load_vass(file_b, bounds);
      bounds.header();
      BoundedCheck check = *equiv_cmd ? bounded_equiv(a, b, bounds.max_len, opts)
                                      : bounded_inclusion(a, b, bounds.max_len, opts);
      if (check.holds) {
        std::cout << (*equiv_cmd ? "EQUAL" : "HOLDS") << " up to " << bounds.max_len
                  << "\n";
        return 0;
      }
      std::cout << (*equiv_cmd ? "DIFFER on " : "COUNTEREXAMPLE ")
                << word_to_string(*check.counterexample) << "\n";
      return 1;
    }
    if (*hd_cmd) {
      Vass v = load_vass(file, bounds);
      bounds.header();
      HdCheckResult r = find_nonhd_witness(v, bounds.horizon, opts);
      if (r.none_up_to()) {
        std::cout << "NO-WITNESS-UP-TO " << bounds.horizon << "\n";
        return 0;
      }
      std::cout << "WITNESS at depth " << r.horizon << "\n"
                << witness_to_string(*r.witness);
      return 1;
    }
    if (*resolve_cmd) {
      Vass v = load_vass(file, bounds);
      Resolver r = make_resolver(v, resolver_spec, bounds);
      auto result = resolve_run(v, r, split_word(word_text), opts);
      if (std::holds_alternative<Stuck>(result)) {
        std::cout << "STUCK at position " << std::get<Stuck>(result).position << "\n";
        return 1;
      }
      const Run& run = std::get<Run>(result);
      print_run(v, run);
      bool acc = is_accepting(v, run.final_config());
      std::cout << (acc ? "ACCEPTING" : "NOT-ACCEPTING") << "\n";
      return acc ? 0 : 1;
    }
    if (*vres_cmd) {
      Vass v = load_vass(file, bounds);
      Resolver r = make_resolver(v, resolver_spec, bounds);
      bounds.header();
      ResolverReport report = validate_resolver(v, r, bounds.max_len, opts);
      switch (report.kind) {
        case ResolverReport::Kind::Ok:
          std::cout << "OK up to " << bounds.max_len << "\n";
          return 0;
        case ResolverReport::Kind::StuckFailure:
          std::cout << "STUCK-FAILURE on \"" << word_to_string(report.word)
                    << "\" at position " << report.position << "\n";
          return 1;
        case ResolverReport::Kind::NotAcceptingFailure:
          std::cout << "NOT-ACCEPTING-FAILURE on \"" << word_to_string(report.word)
                    << "\"\n";
          return 1;
        case ResolverReport::Kind::Inconclusive:
          std::cout << "INCONCLUSIVE on \"" << word_to_string(report.word) << "\"\n";
          return 2;
      }
    }
    if (*product_cmd) {
      Vass a = load_vass(file, bounds);
      Vass b = load_vass(file_b, bounds);
      std::cout << serialize_vass(op == "union" ? product_union(a, b)
                                                : product_intersection(a, b));
      return 0;
    }
    if (*invhom_cmd) {
      Vass a = load_vass(file, bounds);
      Homomorphism h = parse_homomorphism(slurp(map_file));
      std::cout << serialize_vass(inverse_hom(a, h));
      return 0;
    }
    if (*rmeps_cmd) {
      std::cout << serialize_vass(eliminate_epsilon_1hd(load_vass(file, bounds)));
      return 0;
    }
    if (*endmark_cmd) {
      std::cout << serialize_vass(endmarker_cover_to_reach(load_vass(file, bounds), marker));
      return 0;
    }
    if (*km_cmd) {
      std::cout << dump_km_tree(karp_miller(load_vass(file, bounds)));
      return 0;
    }
    if (*cm_cmd) {
      TwoCounterMachine m = parse_2cm(slurp(file));
      if (gadget == "inclusion") {
        auto [a, b] = compile_inclusion_gadget(m);
        std::cout << "# gadget A\n" << serialize_vass(a) << "# gadget B\n"
                  << serialize_vass(b);
      } else if (gadget == "hdness") {
        std::cout << serialize_vass(compile_hdness_gadget(m));
      } else {
        RegularityGadget g = compile_regularity_gadget(
            m, gadget_semantics == "cover" ? Semantics::Coverability
                                           : Semantics::Reachability);
        for (const auto& w : g.warnings) std::cout << "# warning: " << w << "\n";
        std::cout << serialize_vass(g.vass);
      }
      return 0;
    }
    if (*corpus_cmd_app) {
      if (corpus_cmd == "list") {
        for (const auto& n : corpus::automaton_names()) {
          Vass v = corpus::automaton(n);
          std::cout << n << " (" << (v.semantics == Semantics::Coverability
                                          ? "cover" : "reach")
                    << ", dim " << v.dimension << ")\n";
        }
        for (const auto& n : corpus::predicate_names())
          std::cout << n << " = " << corpus::predicate(n).description << "\n";
        return 0;
      }
      if (corpus_cmd == "dump") {
        if (corpus_name.empty())
          throw std::invalid_argument("corpus dump needs a name");
        std::cout << serialize_vass(corpus::automaton(corpus_name));
        return 0;
      }
      corpus::SeparationReport report =
          corpus::run_separation_suite(bounds.max_len);
      for (const auto& e : report.entries)
        std::cout << (e.pass ? "PASS " : "FAIL ") << e.check
                  << (e.detail.empty() ? "" : ": " + e.detail) << "\n";
      return report.all_pass() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.span.line << ":" << e.span.column << ": "
              << e.what() << "\n";
    return 3;
  } catch (const InconclusiveError& e) {
    std::cerr << "inconclusive on \"" << word_to_string(e.word) << "\": " << e.what()
              << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
