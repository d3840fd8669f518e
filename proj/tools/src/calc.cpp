#include "k3lat/cli/calc.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "k3lat/errors.hpp"
#include "k3lat/numerology.hpp"

namespace k3lat::cli {

namespace {

using Ints = std::vector<Integer>;

struct Entry {
  CalcOp op;
  std::size_t arity;  // fixed arity; hirschowitz takes d followed by any number of multiplicities
  std::function<std::string(const Ints&)> run;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string thresholds(const Thresholds& t) {
  return "l_g = " + to_string(t.l_g) + " (m = " + to_string(t.m) + ", r = " + to_string(t.r) + ", p = " +
         to_string(t.p) + ", largest n = " + to_string(t.n_max) + ", case " + t.case_tag + ")";
}

const std::map<std::string, Entry>& table() {
  static const std::map<std::string, Entry> t = [] {
    std::map<std::string, Entry> m;
    auto add = [&](std::string name, std::string usage, std::string description, std::size_t arity,
                   std::function<std::string(const Ints&)> fn) {
      m.emplace(name, Entry{{name, std::move(usage), std::move(description)}, arity, std::move(fn)});
    };
    add("p_arith", "g k", "k^2 (g-1) + 1", 2, [](const Ints& a) { return to_string(p_arith(a[0], a[1])); });
    add("stack_dim", "g k n", "p_arith(g,k) - n + 19", 3,
        [](const Ints& a) { return to_string(stack_dim(a[0], a[1], a[2])); });
    add("rho", "g r d", "Brill-Noether number g - (r+1)(g-d+r)", 3,
        [](const Ints& a) { return to_string(brill_noether_rho(a[0], a[1], a[2])); });
    add("rho_empty", "g r d", "true when rho < 0", 3,
        [](const Ints& a) { return yes_no(brill_noether_expected_empty(a[0], a[1], a[2])); });
    add("l_prim", "g", "genus threshold for primitive classes", 1,
        [](const Ints& a) { return thresholds(l_threshold_prim(a[0])); });
    add("l_nonprim", "g k", "genus threshold for k-divisible classes", 2,
        [](const Ints& a) { return thresholds(l_threshold_nonprim(a[0], a[1])); });
    add("greuel", "d n m", "existence inequality for n nodes and m ordinary triple points", 3,
        [](const Ints& a) { return yes_no(greuel_bound(a[0], a[1], a[2])); });
    add("hirschowitz", "d m1 [m2 ...]", "vanishing criterion for fat points", 0, [](const Ints& a) {
      return yes_no(hirschowitz_vanishing(a[0], Ints(a.begin() + 1, a.end())));
    });
    add("blowup_very_ample", "d points", "very ampleness of dH - E on the blow-up", 2,
        [](const Ints& a) { return yes_no(blowup_very_ample(a[0], a[1])); });
    add("marked_wahl", "d n m", "marked Wahl map conditions", 3, [](const Ints& a) {
      const WahlConditions w = marked_wahl_conditions(a[0], a[1], a[2]);
      return yes_no(w.overall) + " (cond1 " + yes_no(w.cond1) + ", cond2 " + yes_no(w.cond2) + ")";
    });
    add("plane_genus", "d n m", "(d-1)(d-2)/2 - n - 3m", 3,
        [](const Ints& a) { return to_string(plane_genus(a[0], a[1], a[2])); });
    add("wahl_genus", "l", "minimal degree and genus for n = l, m = 10", 1, [](const Ints& a) {
      const PlaneCurveData d = marked_wahl_genus(a[0]);
      return "d = " + to_string(d.d) + ", h = " + to_string(d.h);
    });
    add("wahl_bound", "g k n", "5n <= p - 2 with the genus gates", 3,
        [](const Ints& a) { return yes_no(wahl_bound_check(a[0], a[1], a[2])); });
    add("euler_budget", "a1 total", "largest number of two-node fibres and the remaining one-node fibres", 2,
        [](const Ints& a) {
          const FibreBudget b = euler_fibre_budget(a[0], a[1]);
          return to_string(b.two_node_fibres) + " " + to_string(b.one_node_fibres);
        });
    return m;
  }();
  return t;
}

}  // namespace

const std::vector<CalcOp>& calc_operations() {
  static const std::vector<CalcOp> ops = [] {
    std::vector<CalcOp> out;
    for (const auto& [name, e] : table()) out.push_back(e.op);
    return out;
  }();
  return ops;
}

std::string run_calc(const std::string& op, const std::vector<std::string>& args) {
  auto it = table().find(op);
  if (it == table().end()) throw std::invalid_argument("unknown calc operation '" + op + "'");
  const Entry& e = it->second;
  const bool ok = e.arity == 0 ? args.size() >= 2 : args.size() == e.arity;
  if (!ok) throw std::invalid_argument("usage: k3lat calc " + op + " " + e.op.usage);
  Ints values;
  for (const auto& a : args) {
    try {
      values.push_back(parse_integer(a));
    } catch (const Error&) {
      throw std::invalid_argument("'" + a + "' is not an integer");
    }
  }
  return e.run(values);
}

}  // namespace k3lat::cli
