#include "doctest.h"
#include "helpers.hpp"
#include "hdvass/hdgame.hpp"
#include "hdvass/minsky.hpp"
#include "hdvass/semantics.hpp"
#include "hdvass/textio.hpp"

using namespace hdvass;
using hdvass::testing::chars;
using hdvass::testing::w;

namespace {

TwoCounterMachine m_halt() {
  return parse_2cm(
      "2cm M_halt\n"
      "state s initial\nstate t\nstate h halting\n"
      "trans s inc1 t\ntrans t ztest2 h\n");
}

TwoCounterMachine m_loop() {
  return parse_2cm(
      "2cm M_loop\n"
      "state s initial\nstate h halting\n"
      "trans s inc1 s\n");
}

// Four faithful steps, halts with the second counter nonzero.
TwoCounterMachine m_four() {
  return parse_2cm(
      "2cm M_four\n"
      "state s initial\nstate t1\nstate t2\nstate t3\nstate h halting\n"
      "trans s inc1 t1\ntrans t1 inc2 t2\ntrans t2 dec1 t3\ntrans t3 ztest1 h\n");
}

}  // namespace

TEST_CASE("determinism rule: only ztest/dec on the same counter may share a state") {
  CHECK(check_2cm(m_halt()).empty());
  TwoCounterMachine bad = m_halt();
  bad.transitions.push_back(CmTransition{"s", CmOp::Inc2, "t"});
  CHECK_FALSE(check_2cm(bad).empty());
  TwoCounterMachine branch = m_halt();
  branch.transitions.push_back(CmTransition{"t", CmOp::Dec2, "s"});
  CHECK(check_2cm(branch).empty());  // the sanctioned zero-test pair
}

TEST_CASE("the faithful run is unique and bookkeeps counters") {
  FaithfulRun r = run_2cm(m_halt(), 100);
  CHECK(r.status == CmStatus::Halted);
  CHECK(r.ops == std::vector<CmOp>{CmOp::Inc1, CmOp::Ztest2});
  CHECK(r.correct(2) == w({"inc1", "ztest2"}));
  CHECK(r.x(0) == 1);
  CHECK(r.x(1) == 2);  // 1 + c1 after the increment
  CHECK_FALSE(r.incorrect(1).has_value());  // op 1 is not a decrement

  CHECK(run_2cm(m_loop(), 50).status == CmStatus::RunningAtBound);

  FaithfulRun r4 = run_2cm(m_four(), 100);
  CHECK(r4.status == CmStatus::Halted);
  CHECK(r4.ops.size() == 4);
  CHECK(r4.x(4) == 2);  // halts at (0, 1)
  REQUIRE(r4.incorrect(3).has_value());
  CHECK(*r4.incorrect(3) == w({"inc1", "inc2", "ztest1"}));
}

TEST_CASE("weak simulation accepts halting runs and cheats, not wishful zero tests") {
  Vass v = weak_simulate(m_halt());
  CHECK(v.semantics == Semantics::Coverability);
  CHECK(member(v, w({"inc1"})).verdict == Verdict::Rejected);  // not at halt yet
  CHECK(member(v, w({"inc1", "ztest2"})).verdict == Verdict::Accepted);
  // A decrement without tokens has no faithful or cheating reading.
  CHECK(member(v, w({"dec1"})).verdict == Verdict::Rejected);

  // Zero tests are weak: the honest edge fires even on a nonzero counter,
  // and the cheat edge spends a token to reach the universal sink.
  TwoCounterMachine cheat = parse_2cm(
      "2cm M_cheat\nstate s initial\nstate t\nstate h halting\n"
      "trans s inc2 t\ntrans t ztest2 h\n");
  Vass vc = weak_simulate(cheat);
  CHECK(member(vc, w({"inc2", "ztest2"})).verdict == Verdict::Accepted);
  // Nothing continues past the halting state, so this word needs the sink.
  CHECK(member(vc, w({"inc2", "ztest2", "inc1"})).verdict == Verdict::Accepted);
  CHECK(member(vc, w({"ztest2", "inc1"})).verdict == Verdict::Rejected);
}

TEST_CASE("inclusion gadget separates halting from looping") {
  auto [a1, b1] = compile_inclusion_gadget(m_halt());
  BoundedCheck inc = bounded_inclusion(a1, b1, 4);
  REQUIRE_FALSE(inc.holds);
  CHECK(inc.counterexample == w({"inc1", "ztest2", "h"}));

  auto [a2, b2] = compile_inclusion_gadget(m_loop());
  CHECK(bounded_inclusion(a2, b2, 6).holds);
}

TEST_CASE("hd gadget yields a witness exactly when the machine halts") {
  Vass g = compile_hdness_gadget(m_halt());
  HdCheckResult res = find_nonhd_witness(g, 5);
  REQUIRE(res.witness.has_value());
  CHECK(res.horizon == 4);
  CHECK(check_witness(g, res.witness.value()));

  CHECK(find_nonhd_witness(compile_hdness_gadget(m_loop()), 5).none_up_to());
}

TEST_CASE("removing the halting loop from the A half hides the witness") {
  Vass g = compile_hdness_gadget(m_halt());
  Vass crippled = g;
  std::erase_if(crippled.transitions, [](const Transition& t) {
    return t.source == "A.h" && t.target == "A.h";
  });
  CHECK(find_nonhd_witness(crippled, 5).none_up_to());
}

TEST_CASE("regularity gadget counts down 1 + c1 + c2 a's after any faithful prefix") {
  TwoCounterMachine m = m_four();
  FaithfulRun r = run_2cm(m, 100);
  RegularityGadget g = compile_regularity_gadget(m, Semantics::Coverability);
  for (size_t k = 0; k <= 4; ++k) {
    Word in = r.correct(k);
    for (long long i = 0; i < r.x(k); ++i) in.push_back("a");
    Word out = in;
    out.push_back("a");
    INFO(k);
    CHECK(member(g.vass, in).verdict == Verdict::Accepted);
    CHECK(member(g.vass, out).verdict == Verdict::Rejected);
  }
  CHECK(g.warnings.empty());

  // The reachability variant cannot express "counter happens to be nonzero
  // at halt" silently; it warns when the machine halts off zero.
  RegularityGadget gr = compile_regularity_gadget(m, Semantics::Reachability);
  CHECK_FALSE(gr.warnings.empty());
  TwoCounterMachine clean = parse_2cm(
      "2cm M_clean\n"
      "state s initial\nstate t\nstate u\nstate h halting\n"
      "trans s inc1 t\ntrans t dec1 u\ntrans u ztest1 h\n");
  RegularityGadget gh = compile_regularity_gadget(clean, Semantics::Reachability);
  CHECK(gh.warnings.empty());
}
