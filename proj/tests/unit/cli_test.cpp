#include <sstream>

#include <gtest/gtest.h>

#include "k3lat/cli/calc.hpp"
#include "k3lat/cli/replay.hpp"
#include "k3lat/cli/scenario.hpp"
#include "k3lat/cli/session.hpp"
#include "k3lat/named_lattices.hpp"

namespace k3lat::cli {
namespace {

const char* kOmega = "lattice O = omega(g=11, d=[3, 3, 3, 3, 3, 3, 3, 1])\ncontext C = ample(O, L)\n";

RunOptions untimed() {
  RunOptions o;
  o.timing = false;
  return o;
}

SourcePos error_position(const std::string& text) {
  try {
    run_scenario(text, "test", untimed());
  } catch (const ScenarioError& e) {
    return e.pos();
  }
  ADD_FAILURE() << "no scenario error";
  return {};
}

TEST(Parser, StatementsAndValues) {
  const Scenario s = parse_scenario(
      "# comment\nlattice O = gram(rows=[[2, 1],\n  [1, -2]], labels=[a, b])\n"
      "assert pairing(O, a, b) == 1  # trailing\n"
      "assert square(O, a + b) == 2 flag \"note\"\n"
      "assert reflect(O, a, b) raises NotARoot\n");
  ASSERT_EQ(s.statements.size(), 4u);
  const auto& d = std::get<Declaration>(s.statements[0]);
  EXPECT_EQ(d.call.name, "gram");
  EXPECT_EQ(d.call.args[0].key, "rows");
  const auto& a = std::get<Assertion>(s.statements[2]);
  EXPECT_EQ(a.pos.line, 5);
  ASSERT_TRUE(a.flag_note);
  EXPECT_EQ(*a.flag_note, "note");
  EXPECT_EQ(a.call.args[1].value.text, "a + b");
  EXPECT_EQ(*std::get<Assertion>(s.statements[3]).error_kind, "NotARoot");
}

TEST(Parser, ErrorsCarryLineAndColumn) {
  try {
    parse_scenario("lattice O = P(17, 11)\nassert pairing(O, M M) == \n");
    FAIL();
  } catch (const ScenarioError& e) {
    EXPECT_EQ(e.pos().line, 2);
    EXPECT_GT(e.pos().column, 1);
    EXPECT_NE(std::string(e.what()).find("2:"), std::string::npos);
  }
  try {
    parse_scenario("frobnicate X = 1\n");
    FAIL();
  } catch (const ScenarioError& e) {
    EXPECT_EQ(e.pos().line, 1);
    EXPECT_EQ(e.pos().column, 1);
  }
  EXPECT_THROW(parse_scenario("assert f(\"open) == 1\n"), ScenarioError);
}

TEST(Session, UnresolvedNamesAndUnknownOperations) {
  EXPECT_EQ(error_position("assert is_nef(C, E) == true\n").line, 1);
  const SourcePos p = error_position(std::string(kOmega) + "assert frob(C, E) == true\n");
  EXPECT_EQ(p.line, 3);
  EXPECT_EQ(error_position(std::string(kOmega) + "\nassert is_nef(C, Q) == true\n").line, 4);
  EXPECT_EQ(error_position("lattice O = omega(g=11, d=[1])\n").line, 1);
  EXPECT_EQ(error_position(std::string(kOmega) + "assert is_nef(C) == true\n").line, 3);
}

TEST(Session, EmptyScenario) {
  const Report r = run_scenario("", "empty", untimed());
  EXPECT_TRUE(r.outcomes.empty());
  EXPECT_TRUE(r.all_pass());
  const auto j = to_json(r);
  EXPECT_TRUE(j["assertions"].empty());
  EXPECT_EQ(j["summary"]["total"], 0);
  EXPECT_EQ(j["summary"]["pass"], 0);
}

TEST(Session, PassFailFlagAndRaises) {
  const Report r = run_scenario(std::string(kOmega) +
                                    "assert clifford_index(C, L) == 4\n"
                                    "assert is_effective(C, -E) == true\n"
                                    "assert is_effective(C, -E) == true flag \"known\"\n"
                                    "assert reflect(O, L, L) raises NotARoot\n"
                                    "assert reflect(O, L, L) raises NotPositiveClass\n"
                                    "assert square(O, 0) == 0\n"
                                    "assert nef_reduce(O, L + 3G1, L) == L\n",
                                "s", untimed());
  ASSERT_EQ(r.outcomes.size(), 7u);
  EXPECT_EQ(r.outcomes[0].status, Status::Pass);
  EXPECT_EQ(r.outcomes[1].status, Status::Fail);
  EXPECT_EQ(r.outcomes[2].status, Status::Flagged);
  EXPECT_EQ(r.outcomes[3].status, Status::Pass);
  EXPECT_EQ(r.outcomes[4].status, Status::Fail);
  EXPECT_EQ(r.outcomes[5].status, Status::Pass);
  EXPECT_EQ(r.outcomes[6].status, Status::Pass);
  EXPECT_FALSE(r.all_pass());
}

TEST(Session, FailingNefCheckReportsTheWitnessRoot) {
  const Report r = run_scenario(std::string(kOmega) + "assert is_nef(C, L + 2G1) == true\n", "s", untimed());
  ASSERT_EQ(r.outcomes.size(), 1u);
  EXPECT_EQ(r.outcomes[0].status, Status::Fail);
  const auto& cert = r.outcomes[0].certificate;
  EXPECT_EQ(cert["kind"], "witness");
  const auto coords = cert["witness"]["coords"];
  ASSERT_EQ(coords.size(), 10u);
  EXPECT_EQ(coords[2], "1");
}

TEST(Session, ClassExpressions) {
  OmegaParams p;
  p.g = 11;
  p.d = {3, 3, 3, 3, 3, 3, 3, 1};
  const auto lat = build_omega(p);
  const auto L = DivisorClass::basis(lat, "L");
  const auto E = DivisorClass::basis(lat, "E");
  EXPECT_EQ(parse_class_expression(lat, "L - 2E"), L - Integer(2) * E);
  EXPECT_EQ(parse_class_expression(lat, "-E + 3*L"), Integer(3) * L - E);
  EXPECT_EQ(parse_class_expression(lat, "X + E", {{"X", L}}), L + E);
  EXPECT_TRUE(parse_class_expression(lat, "0").is_zero());
  EXPECT_THROW(parse_class_expression(lat, "L E"), std::invalid_argument);
  EXPECT_THROW(parse_class_expression(lat, "Q"), std::invalid_argument);
  EXPECT_THROW(parse_class_expression(lat, ""), std::invalid_argument);
}

TEST(Report, JsonRoundTrip) {
  const Report r = run_scenario(std::string(kOmega) +
                                    "assert clifford_index(C, L) == 4\n"
                                    "assert is_effective(C, -E) == true flag \"x\"\n"
                                    "assert is_irreducible(C, 2E) == false\n",
                                "s", RunOptions{});
  const auto j = to_json(r);
  EXPECT_EQ(j["schema"], kReportSchema);
  const Report back = report_from_json(j);
  EXPECT_EQ(to_json(back), j);
  auto broken = j;
  broken["summary"]["pass"] = 7;
  EXPECT_THROW(report_from_json(broken), std::runtime_error);
}

TEST(Report, UntimedOutputIsDeterministic) {
  const std::string text = std::string(kOmega) + "assert very_ample(C, L - E) == true\n";
  std::ostringstream a, b;
  emit_json(run_scenario(text, "s", untimed()), a);
  emit_json(run_scenario(text, "s", untimed()), b);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().find("wall_time_ms"), std::string::npos);
}

TEST(Report, MaxDegreeIsRecorded) {
  RunOptions o = untimed();
  o.max_degree = Integer(50);
  const Report r = run_scenario(kOmega, "s", o);
  EXPECT_EQ(to_json(r)["bounds"]["max_degree"], "50");
}

TEST(Replay, SelectorsAndAliases) {
  EXPECT_EQ(resolve_selector("gon-omega"), "clifford-index");
  EXPECT_EQ(resolve_selector("little-lem2"), "ineffective");
  EXPECT_EQ(resolve_selector("thm-nonprim-genus"), "nonprim-genus");
  EXPECT_EQ(resolve_selector("all"), "all");
  EXPECT_FALSE(resolve_selector("nope"));
  EXPECT_THROW(replay("nope"), std::invalid_argument);
}

TEST(Replay, CliffordIndexPassesForEveryGenus) {
  ReplayOptions o;
  o.vectors_per_genus = 1;
  const Report r = replay("gon-omega", o);
  std::size_t clifford = 0;
  for (const auto& x : r.outcomes) {
    EXPECT_EQ(x.status, Status::Pass) << x.id;
    clifford += x.id.rfind("clifford-index/", 0) == 0 ? 1 : 0;
  }
  EXPECT_EQ(clifford, 4u);
}

TEST(Replay, NonPrimitiveLowCaseIsFlaggedWithBothNumbers) {
  const Report r = replay("thm-nonprim-genus");
  bool seen = false;
  for (const auto& x : r.outcomes) {
    if (x.id != "nonprim-genus/8,2") continue;
    seen = true;
    EXPECT_EQ(x.status, Status::Flagged);
    EXPECT_EQ(x.actual, "14");
    EXPECT_EQ(x.expected, "15");
  }
  EXPECT_TRUE(seen);
}

TEST(Calc, Operations) {
  EXPECT_EQ(run_calc("p_arith", {"8", "2"}), "29");
  EXPECT_EQ(run_calc("euler_budget", {"10", "24"}), "4 6");
  EXPECT_EQ(run_calc("wahl_genus", {"0"}), "d = 24, h = 223");
  EXPECT_EQ(run_calc("hirschowitz", {"3", "2"}), "true");
  EXPECT_THROW(run_calc("p_arith", {"8"}), std::invalid_argument);
  EXPECT_THROW(run_calc("nope", {}), std::invalid_argument);
  EXPECT_THROW(run_calc("rho", {"1", "x", "2"}), std::invalid_argument);
  EXPECT_FALSE(calc_operations().empty());
}

}  // namespace
}  // namespace k3lat::cli
