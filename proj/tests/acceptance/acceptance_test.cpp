// Acceptance suite: one line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "k3lat/cli/replay.hpp"
#include "k3lat/cone.hpp"
#include "k3lat/enumeration.hpp"
#include "k3lat/numerology.hpp"
#include "oracles.hpp"
#include "tables.hpp"

namespace k3lat::acceptance {
namespace {

using cli::Report;
using cli::Status;

struct Verdict {
  bool ok = true;
  std::vector<std::string> problems;
  std::vector<std::string> remarks;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (problems.size() < 5) problems.push_back(what);
    }
  }
};

struct Tally {
  std::size_t checks = 0;
  std::size_t flagged = 0;
};

// Runs replay selectors; every outcome must pass unless `allow_flag` accepts its id.
Tally replay_into(Verdict& v, const std::vector<std::string>& selectors,
                  const std::function<bool(const cli::Outcome&)>& allow_flag = {}) {
  Tally t;
  cli::ReplayOptions opts;
  opts.timing = false;
  for (const auto& s : selectors) {
    const Report r = cli::replay(s, opts);
    for (const auto& o : r.outcomes) {
      ++t.checks;
      if (o.status == Status::Flagged) {
        ++t.flagged;
        v.require(allow_flag && allow_flag(o), o.id + " flagged unexpectedly");
        continue;
      }
      v.require(o.status == Status::Pass, o.id + ": expected " + o.expected + ", got " + o.actual);
    }
  }
  return t;
}

Verdict omega_replay() {
  Verdict v;
  const Tally t = replay_into(
      v, {"omega-basis", "very-ample", "ineffective", "clifford-index", "unique-pencil", "quadric-hull"});
  v.require(t.checks > 0, "no checks ran");
  v.remarks.push_back(std::to_string(t.checks) + " checks over g in {11,13,15,17}");
  return v;
}

Verdict trivial_lattice() {
  Verdict v;
  const Tally t = replay_into(v, {"trivial-lattice"});
  const FibreBudget b = euler_fibre_budget(10, 24);
  v.require(b.two_node_fibres == 4 && b.one_node_fibres == 6, "Euler budget (10,24) is not (4,6)");
  v.remarks.push_back(std::to_string(t.checks) + " checks");
  return v;
}

Verdict embeddings() {
  Verdict v;
  const Tally t = replay_into(v, {"p-lattices", "lambda-lattices", "k-lattices", "kummer"});
  v.remarks.push_back(std::to_string(t.checks) + " checks");
  return v;
}

Verdict configurations() {
  Verdict v;
  bool low_case_seen = false;
  // Flags record discrepancies between a configuration as written and the genus table; the low
  // non-primitive case must be among them with both numbers.
  const Tally t = replay_into(v, {"prim-genus", "nonprim-genus", "decomposition"}, [&](const cli::Outcome& o) {
    if (o.id == "nonprim-genus/8,2") {
      low_case_seen = true;
      return o.actual == "14" && o.expected == "15";
    }
    return true;
  });
  v.require(low_case_seen, "(g,k) = (8,2) was not reported as flagged");
  v.remarks.push_back(std::to_string(t.checks) + " checks, " + std::to_string(t.flagged) + " flagged");
  return v;
}

Verdict numerology() {
  Verdict v;
  const Tally t = replay_into(v, {"numerology", "wahl-table", "rho-table"});
  for (int g = 11; g <= 60; ++g)
    v.require(l_threshold_prim(g).l_g == testing::prim_table(g), "l_threshold_prim(" + std::to_string(g) + ")");
  for (int g = 8; g <= 40; ++g)
    for (int k = 2; k <= 5; ++k)
      v.require(l_threshold_nonprim(g, k).l_g == testing::nonprim_table(g, k),
                "l_threshold_nonprim(" + std::to_string(g) + "," + std::to_string(k) + ")");
  const std::vector<std::pair<std::pair<int, int>, int>> spots{{{8, 2}, 15}, {{8, 3}, 16}, {{10, 2}, 17}};
  for (const auto& [gk, want] : spots) v.require(l_threshold_nonprim(gk.first, gk.second).l_g == want, "spot row");
  v.require(l_threshold_prim(11).l_g == 12 && l_threshold_prim(12).l_g == 13 && l_threshold_prim(16).l_g == 15,
            "primitive spot rows");

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> gd(0, 200), dd(-50, 200);
  for (int i = 0; i < 100; ++i) {
    const int g = gd(rng), d = dd(rng);
    v.require(brill_noether_rho(g, 0, d) == d, "rho(g,0,d) != d");
  }
  const PlaneCurveData w = marked_wahl_genus(0);
  v.require(w.d == 24 && w.h == 223, "marked_wahl_genus(0) != (24, 223)");
  std::uniform_int_distribution<int> g2(2, 40), k2(1, 4), n2(0, 30);
  for (int i = 0; i < 50; ++i) {
    const int g = g2(rng), k = k2(rng), n = n2(rng);
    v.require(wahl_bound_check(g, k, n) == testing::wahl_gate(g, k, n), "wahl gate mismatch");
  }
  v.remarks.push_back(std::to_string(t.checks) + " replay checks");
  return v;
}

struct RandomLattice {
  LatticePtr lattice;
  DivisorClass ample;
};

std::vector<RandomLattice> random_lattices(std::mt19937_64& rng, int count) {
  std::vector<RandomLattice> out;
  for (int i = 0; i < count; ++i) {
    const LatticePtr lat = testing::random_hyperbolic_rank3(rng, 10);
    out.push_back({lat, testing::find_ample(rng, lat)});
  }
  return out;
}

Verdict oracle_equivalence() {
  Verdict v;
  std::mt19937_64 rng(20240611);
  const auto lattices = random_lattices(rng, 50);
  std::size_t sets = 0, classes = 0;
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    const auto& [lat, h] = lattices[i];
    for (int s : {-2, 0}) {
      const EnumResult res = enumerate_by_square_and_degree({h, s, -12, 12});
      const auto brute = testing::brute_force_window(h, s, s, -12, 12);
      v.require(testing::coords_of(res.classes) == brute,
                "lattice " + std::to_string(i) + " square " + std::to_string(s) + ": enumeration differs");
      classes += brute.size();
      ++sets;
    }
  }
  // Effectivity on 200 random classes of degree at most 8, four per lattice.
  std::size_t effective = 0;
  for (std::size_t i = 0; i < lattices.size(); ++i) {
    const auto& [lat, h] = lattices[i];
    const testing::EffectivityOracle oracle(h, 8);
    const auto ctx = PolarizedContext::make(h, PolarizationStatus::Ample);
    int drawn = 0;
    const auto box = testing::oracle_box(h, -20, 8);
    std::vector<testing::Coords> known;
    for (int k = 1; k <= 8; ++k) known.insert(known.end(), oracle.level(k).begin(), oracle.level(k).end());
    while (drawn < 4) {
      testing::Coords c(lat->rank());
      if (drawn < 2 && !known.empty()) {
        // Half of the draws come from the effective table so both answers are exercised.
        c = known[std::uniform_int_distribution<std::size_t>(0, known.size() - 1)(rng)];
      } else {
        for (std::size_t j = 0; j < c.size(); ++j) {
          std::uniform_int_distribution<long> pick(-static_cast<long>(box[j]), static_cast<long>(box[j]));
          c[j] = pick(rng);
        }
      }
      const DivisorClass d(lat, c);
      const Integer deg = pairing(d, h);
      if (deg < 0 || deg > 8) continue;
      ++drawn;
      const bool want = oracle.is_effective(d);
      effective += want ? 1 : 0;
      v.require(is_effective(ctx, d).verdict == want, "is_effective disagrees on " + d.to_string());
    }
  }
  v.remarks.push_back(std::to_string(sets) + " sets, " + std::to_string(classes) + " classes, " +
                      std::to_string(effective) + "/200 effective");
  return v;
}

Verdict algebraic_properties() {
  Verdict v;
  std::mt19937_64 rng(7);
  const auto lattices = random_lattices(rng, 20);

  int reflections = 0;
  while (reflections < 1000) {
    for (const auto& [lat, h] : lattices) {
      const auto roots = enumerate_by_square_and_degree({h, -2, -10, 10}).classes;
      if (roots.empty()) continue;
      std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
      for (int i = 0; i < 10 && reflections < 1000; ++i, ++reflections) {
        const DivisorClass& r = roots[pick(rng)];
        const DivisorClass d = testing::random_class(rng, lat, 20);
        const DivisorClass e = testing::random_class(rng, lat, 20);
        const DivisorClass rd = reflect(d, r);
        v.require(reflect(rd, r) == d, "reflection is not an involution");
        v.require(pairing(rd, reflect(e, r)) == pairing(d, e), "reflection does not preserve the pairing");
      }
    }
  }

  // Effective pairs drawn from low degrees; their sums must be effective as well.
  int pairs = 0;
  for (std::size_t i = 0; pairs < 200; i = (i + 1) % lattices.size()) {
    const auto& [lat, h] = lattices[i];
    const auto ctx = PolarizedContext::make(h, PolarizationStatus::Ample);
    const auto pool = enumerate_window(h, -2, 4, 1, 6).classes;
    std::vector<DivisorClass> eff;
    for (const auto& c : pool)
      if (is_effective(ctx, c).verdict) eff.push_back(c);
    if (eff.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, eff.size() - 1);
    for (int j = 0; j < 10 && pairs < 200; ++j, ++pairs) {
      const DivisorClass& a = eff[pick(rng)];
      const DivisorClass& b = eff[pick(rng)];
      v.require(is_effective(ctx, a + b).verdict, "sum of effective classes is not effective");
    }
  }

  int reduced = 0;
  for (std::size_t i = 0; reduced < 200; i = (i + 1) % lattices.size()) {
    const auto& [lat, h] = lattices[i];
    const auto ctx = PolarizedContext::make(h, PolarizationStatus::Ample);
    const DivisorClass d = testing::random_class(rng, lat, 6);
    if (d.square() <= 0) continue;
    ++reduced;
    const NefReduction red = nef_reduce(d, h);
    v.require(red.result.square() == d.square(), "nef_reduce changed the square");
    v.require(is_nef(ctx, red.result).verdict, "nef_reduce output is not nef: " + red.result.to_string());
  }
  v.remarks.push_back("1000 reflections, 200 pairs, 200 reductions");
  return v;
}

struct Criterion {
  int number;
  std::string name;
  double budget_s;
  std::function<Verdict()> run;
};

}  // namespace
}  // namespace k3lat::acceptance

int main() {
  using namespace k3lat::acceptance;
  const std::vector<Criterion> criteria{
      {1, "omega replay", 10, omega_replay},
      {2, "trivial lattice and Euler budget", 5, trivial_lattice},
      {3, "embedding suite", 5, embeddings},
      {4, "configuration suite", 5, configurations},
      {5, "numerology tables", 2, numerology},
      {6, "oracle equivalence", 120, oracle_equivalence},
      {7, "algebraic properties", 30, algebraic_properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.ok = false;
      v.problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) {
      v.ok = false;
      std::ostringstream msg;
      msg << "took longer than " << c.budget_s << " s";
      v.problems.push_back(msg.str());
    }
    std::ostringstream detail;
    for (const auto& r : v.remarks) detail << "; " << r;
    for (const auto& p : v.problems) detail << "; " << p;
    std::printf("[%s] criterion %d: %s (%.2f s%s)\n", v.ok ? "PASS" : "FAIL", c.number, c.name.c_str(), secs,
                detail.str().c_str());
    std::fflush(stdout);
    failures += v.ok ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
