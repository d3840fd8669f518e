#include "k3lat/cli/session.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <functional>
#include <memory>
#include <stdexcept>
#include <variant>

#include "k3lat/cone.hpp"
#include "k3lat/curve_config.hpp"
#include "k3lat/enumeration.hpp"
#include "k3lat/errors.hpp"
#include "k3lat/named_lattices.hpp"
#include "k3lat/numerology.hpp"

namespace k3lat::cli {

DivisorClass parse_class_expression(const LatticePtr& lattice, std::string_view text,
                                    const std::map<std::string, DivisorClass>& named) {
  DivisorClass sum = DivisorClass::zero(lattice);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool first = true;
  bool any = false;
  while (true) {
    skip();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' in '" + std::string(text) + "'");
    }
    first = false;
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
    skip();
    if (i < text.size() && text[i] == '*') {
      if (digits.empty()) throw std::invalid_argument("'*' without a coefficient");
      ++i;
      skip();
    }
    std::string name;
    while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) name += text[i++];
    const Integer coeff = Integer(sign) * (digits.empty() ? Integer(1) : parse_integer(digits));
    if (name.empty()) {
      if (digits.empty()) throw std::invalid_argument("expected a term in '" + std::string(text) + "'");
      if (coeff != 0) throw std::invalid_argument("a bare integer term must be 0");
      any = true;
      continue;
    }
    DivisorClass term;
    if (auto idx = lattice->index_of(name)) {
      term = DivisorClass::basis(lattice, *idx);
    } else if (auto it = named.find(name); it != named.end()) {
      if (!it->second.lattice()->same_as(*lattice))
        throw std::invalid_argument("class '" + name + "' lives on another lattice");
      term = DivisorClass(lattice, it->second.coords());
    } else {
      throw std::invalid_argument("unknown label or class '" + name + "'");
    }
    sum += coeff * term;
    any = true;
  }
  if (!any) throw std::invalid_argument("empty class expression");
  return sum;
}

namespace {

using ContextPtr = std::shared_ptr<const PolarizedContext>;
using ConfigPtr = std::shared_ptr<const TheoremConfig>;
using Entity = std::variant<LatticePtr, DivisorClass, ContextPtr, ConfigPtr>;

// Result of an operation, before comparison with the expected literal.
struct Actual {
  enum class Kind { Null, Bool, Int, Class, List };
  Kind kind = Kind::Null;
  bool boolean = false;
  Integer integer;
  DivisorClass cls;
  std::vector<Actual> items;
  std::optional<Certificate> certificate;
  std::string reason;
  std::vector<std::string> notes;

  static Actual of(bool b) {
    Actual a;
    a.kind = Kind::Bool;
    a.boolean = b;
    return a;
  }
  static Actual of(Integer i) {
    Actual a;
    a.kind = Kind::Int;
    a.integer = std::move(i);
    return a;
  }
  static Actual of(DivisorClass c) {
    Actual a;
    a.kind = Kind::Class;
    a.cls = std::move(c);
    return a;
  }
  static Actual list(std::vector<Actual> items) {
    Actual a;
    a.kind = Kind::List;
    a.items = std::move(items);
    return a;
  }
  static Actual of(const Decision& d) {
    Actual a = of(d.verdict);
    a.certificate = d.certificate;
    a.reason = d.reason;
    return a;
  }
};

std::string render(const Actual& a) {
  switch (a.kind) {
    case Actual::Kind::Null: return "null";
    case Actual::Kind::Bool: return a.boolean ? "true" : "false";
    case Actual::Kind::Int: return to_string(a.integer);
    case Actual::Kind::Class: return a.cls.to_string();
    case Actual::Kind::List: {
      std::string out = "[";
      for (std::size_t i = 0; i < a.items.size(); ++i) out += (i ? ", " : "") + render(a.items[i]);
      return out + "]";
    }
  }
  return "";
}

bool matches(const Actual& a, const Value& expected, const std::map<std::string, DivisorClass>& named) {
  switch (expected.kind) {
    case Value::Kind::Null: return a.kind == Actual::Kind::Null;
    case Value::Kind::Bool: return a.kind == Actual::Kind::Bool && a.boolean == expected.boolean;
    case Value::Kind::Integer:
      if (a.kind == Actual::Kind::Int) return a.integer == expected.integer;
      if (a.kind == Actual::Kind::Class) return expected.integer == 0 && a.cls.is_zero();
      return false;
    case Value::Kind::String:
    case Value::Kind::Bare:
      if (a.kind != Actual::Kind::Class) return false;
      try {
        return parse_class_expression(a.cls.lattice(), expected.text, named) == a.cls;
      } catch (const std::exception&) {
        return false;
      }
    case Value::Kind::List:
      if (a.kind != Actual::Kind::List || a.items.size() != expected.items.size()) return false;
      for (std::size_t i = 0; i < a.items.size(); ++i)
        if (!matches(a.items[i], expected.items[i], named)) return false;
      return true;
  }
  return false;
}

enum class P { Context, Lattice, Class, Int, IntList, Matrix, Config, Word };

using Arg = std::variant<ContextPtr, LatticePtr, DivisorClass, Integer, std::vector<Integer>, IntMatrix, ConfigPtr,
                         std::string>;
using Args = std::vector<Arg>;

struct OpSpec {
  std::vector<P> params;
  std::size_t required = 0;  // trailing parameters beyond this count are optional
  std::function<Actual(const Args&)> run;
};

const ContextPtr& ctx_arg(const Args& a, std::size_t i) { return std::get<ContextPtr>(a[i]); }
const LatticePtr& lat_arg(const Args& a, std::size_t i) { return std::get<LatticePtr>(a[i]); }
const DivisorClass& cls_arg(const Args& a, std::size_t i) { return std::get<DivisorClass>(a[i]); }
const Integer& int_arg(const Args& a, std::size_t i) { return std::get<Integer>(a[i]); }
const ConfigPtr& cfg_arg(const Args& a, std::size_t i) { return std::get<ConfigPtr>(a[i]); }

Actual classes(const std::vector<DivisorClass>& cs) {
  std::vector<Actual> items;
  for (const auto& c : cs) items.push_back(Actual::of(c));
  return Actual::list(std::move(items));
}

Actual ints(std::initializer_list<Integer> values) {
  std::vector<Actual> items;
  for (const auto& v : values) items.push_back(Actual::of(v));
  return Actual::list(std::move(items));
}

Actual obstruction(const TheoremConfig& cfg, const DivisorClass& h, const Integer& k, PartConnectivity mode) {
  const ObstructionResult r = decomposition_obstruction(cfg.config, h, k, mode);
  Actual a = Actual::of(r.holds);
  a.notes.push_back(std::to_string(r.subsets_checked) + " splits checked");
  if (!r.holds) {
    std::string labels;
    for (const auto& l : r.violating) labels += (labels.empty() ? "" : ", ") + l;
    a.notes.push_back("splitting part: {" + labels + "}");
  }
  return a;
}

const std::map<std::string, OpSpec>& operations() {
  static const std::map<std::string, OpSpec> table = [] {
    std::map<std::string, OpSpec> t;
    auto add = [&](const std::string& name, std::vector<P> params, std::function<Actual(const Args&)> fn,
                   std::size_t required = static_cast<std::size_t>(-1)) {
      OpSpec s;
      s.required = required == static_cast<std::size_t>(-1) ? params.size() : required;
      s.params = std::move(params);
      s.run = std::move(fn);
      t.emplace(name, std::move(s));
    };
    // lattice-core
    add("pairing", {P::Lattice, P::Class, P::Class}, [](const Args& a) { return Actual::of(pairing(cls_arg(a, 1), cls_arg(a, 2))); });
    add("square", {P::Lattice, P::Class}, [](const Args& a) { return Actual::of(cls_arg(a, 1).square()); });
    add("signature", {P::Lattice}, [](const Args& a) {
      const auto& s = lat_arg(a, 0)->profile().signature;
      return ints({s.positive, s.negative});
    });
    add("discriminant", {P::Lattice}, [](const Args& a) { return Actual::of(lat_arg(a, 0)->profile().discriminant); });
    add("is_even", {P::Lattice}, [](const Args& a) { return Actual::of(lat_arg(a, 0)->profile().even); });
    add("reflect", {P::Lattice, P::Class, P::Class}, [](const Args& a) { return Actual::of(reflect(cls_arg(a, 1), cls_arg(a, 2))); });
    add("is_primitive", {P::Lattice, P::Class}, [](const Args& a) { return Actual::of(cls_arg(a, 1).is_primitive()); });
    add("is_isometric_embedding", {P::Lattice, P::Lattice, P::Matrix}, [](const Args& a) {
      return Actual::of(verify_embedding(*lat_arg(a, 0), *lat_arg(a, 1), std::get<IntMatrix>(a[2])).is_isometric);
    });
    add("is_primitive_embedding", {P::Lattice, P::Lattice, P::Matrix}, [](const Args& a) {
      const auto r = verify_embedding(*lat_arg(a, 0), *lat_arg(a, 1), std::get<IntMatrix>(a[2]));
      return Actual::of(r.is_isometric && r.is_primitive);
    });
    // enum-engine
    add("enumerate", {P::Context, P::Int, P::Int, P::Int}, [](const Args& a) {
      EnumQuery q{ctx_arg(a, 0)->h(), int_arg(a, 1), int_arg(a, 2), int_arg(a, 3)};
      return classes(enumerate_by_square_and_degree(q).classes);
    });
    add("enumerate_count", {P::Context, P::Int, P::Int, P::Int}, [](const Args& a) {
      EnumQuery q{ctx_arg(a, 0)->h(), int_arg(a, 1), int_arg(a, 2), int_arg(a, 3)};
      return Actual::of(Integer(enumerate_by_square_and_degree(q).classes.size()));
    });
    add("roots_orthogonal_to", {P::Lattice, P::Class}, [](const Args& a) { return classes(roots_orthogonal_to(cls_arg(a, 1))); });
    // cone-oracle
    add("is_effective", {P::Context, P::Class}, [](const Args& a) { return Actual::of(is_effective(*ctx_arg(a, 0), cls_arg(a, 1))); });
    add("is_irreducible", {P::Context, P::Class}, [](const Args& a) { return Actual::of(is_irreducible_class(*ctx_arg(a, 0), cls_arg(a, 1))); });
    add("is_nef", {P::Context, P::Class}, [](const Args& a) { return Actual::of(is_nef(*ctx_arg(a, 0), cls_arg(a, 1))); });
    add("is_big_nef", {P::Context, P::Class}, [](const Args& a) { return Actual::of(is_big_nef(*ctx_arg(a, 0), cls_arg(a, 1))); });
    add("is_ample", {P::Context, P::Class}, [](const Args& a) { return Actual::of(is_ample(*ctx_arg(a, 0), cls_arg(a, 1))); });
    add("very_ample", {P::Context, P::Class}, [](const Args& a) { return Actual::of(very_ample_knutsen(*ctx_arg(a, 0), cls_arg(a, 1))); });
    add("quadric_hull", {P::Context, P::Class, P::Class},
        [](const Args& a) { return Actual::of(quadric_hull_hypotheses(*ctx_arg(a, 0), cls_arg(a, 1), cls_arg(a, 2))); });
    add("clifford_index", {P::Context, P::Class}, [](const Args& a) {
      const CliffordResult r = clifford_index(*ctx_arg(a, 0), cls_arg(a, 1));
      Actual out = Actual::of(r.value);
      if (r.witness) out.certificate = WitnessClass{*r.witness, "minimizing class"};
      out.notes.push_back(std::to_string(r.candidates) + " candidates");
      return out;
    });
    add("clifford_witness", {P::Context, P::Class}, [](const Args& a) {
      const CliffordResult r = clifford_index(*ctx_arg(a, 0), cls_arg(a, 1));
      return r.witness ? Actual::of(*r.witness) : Actual();
    });
    add("special_pencils", {P::Context, P::Class}, [](const Args& a) { return classes(special_pencil_classes(*ctx_arg(a, 0), cls_arg(a, 1))); });
    add("nef_reduce", {P::Lattice, P::Class, P::Class}, [](const Args& a) {
      const NefReduction r = nef_reduce(cls_arg(a, 1), cls_arg(a, 2));
      Actual out = Actual::of(r.result);
      out.certificate = ReflectionChain{r.chain, r.result};
      return out;
    });
    // curve-config
    add("genus", {P::Config}, [](const Args& a) { return Actual::of(arithmetic_genus(cfg_arg(a, 0)->config)); });
    add("genus_pieces", {P::Config}, [](const Args& a) {
      std::vector<Actual> items;
      for (const auto& p : arithmetic_genus_per_piece(cfg_arg(a, 0)->config)) items.push_back(Actual::of(p.genus));
      return Actual::list(std::move(items));
    });
    add("expected_genus", {P::Config}, [](const Args& a) { return Actual::of(cfg_arg(a, 0)->expected_genus); });
    add("total_class", {P::Config}, [](const Args& a) { return Actual::of(total_class(cfg_arg(a, 0)->config)); });
    add("polarization", {P::Config}, [](const Args& a) { return Actual::of(cfg_arg(a, 0)->polarization); });
    add("transversal", {P::Config}, [](const Args& a) {
      const auto v = transversality_violations(cfg_arg(a, 0)->config);
      Actual out = Actual::of(v.empty());
      out.notes = v;
      return out;
    });
    add("obstruction", {P::Config, P::Class, P::Int}, [](const Args& a) {
      return obstruction(*cfg_arg(a, 0), cls_arg(a, 1), int_arg(a, 2), PartConnectivity::Any);
    });
    add("obstruction_connected", {P::Config, P::Class, P::Int}, [](const Args& a) {
      return obstruction(*cfg_arg(a, 0), cls_arg(a, 1), int_arg(a, 2), PartConnectivity::Connected);
    });
    // numerology
    add("p_arith", {P::Int, P::Int}, [](const Args& a) { return Actual::of(p_arith(int_arg(a, 0), int_arg(a, 1))); });
    add("stack_dim", {P::Int, P::Int, P::Int}, [](const Args& a) { return Actual::of(stack_dim(int_arg(a, 0), int_arg(a, 1), int_arg(a, 2))); });
    add("rho", {P::Int, P::Int, P::Int}, [](const Args& a) { return Actual::of(brill_noether_rho(int_arg(a, 0), int_arg(a, 1), int_arg(a, 2))); });
    add("rho_empty", {P::Int, P::Int, P::Int},
        [](const Args& a) { return Actual::of(brill_noether_expected_empty(int_arg(a, 0), int_arg(a, 1), int_arg(a, 2))); });
    add("l_prim", {P::Int}, [](const Args& a) { return Actual::of(l_threshold_prim(int_arg(a, 0)).l_g); });
    add("l_nonprim", {P::Int, P::Int}, [](const Args& a) { return Actual::of(l_threshold_nonprim(int_arg(a, 0), int_arg(a, 1)).l_g); });
    add("greuel", {P::Int, P::Int, P::Int}, [](const Args& a) { return Actual::of(greuel_bound(int_arg(a, 0), int_arg(a, 1), int_arg(a, 2))); });
    add("hirschowitz", {P::Int, P::IntList},
        [](const Args& a) { return Actual::of(hirschowitz_vanishing(int_arg(a, 0), std::get<std::vector<Integer>>(a[1]))); });
    add("blowup_very_ample", {P::Int, P::Int}, [](const Args& a) { return Actual::of(blowup_very_ample(int_arg(a, 0), int_arg(a, 1))); });
    add("marked_wahl", {P::Int, P::Int, P::Int},
        [](const Args& a) { return Actual::of(marked_wahl_conditions(int_arg(a, 0), int_arg(a, 1), int_arg(a, 2)).overall); });
    add("plane_genus", {P::Int, P::Int, P::Int}, [](const Args& a) { return Actual::of(plane_genus(int_arg(a, 0), int_arg(a, 1), int_arg(a, 2))); });
    add("wahl_genus", {P::Int}, [](const Args& a) {
      const PlaneCurveData d = marked_wahl_genus(int_arg(a, 0));
      return ints({d.d, d.h});
    });
    add("wahl_bound", {P::Int, P::Int, P::Int}, [](const Args& a) { return Actual::of(wahl_bound_check(int_arg(a, 0), int_arg(a, 1), int_arg(a, 2))); });
    add("euler_budget", {P::Int, P::Int}, [](const Args& a) {
      const FibreBudget b = euler_fibre_budget(int_arg(a, 0), int_arg(a, 1));
      return ints({b.two_node_fibres, b.one_node_fibres});
    });
    return t;
  }();
  return table;
}

ErrorKind error_kind_from_string(const std::string& s, SourcePos pos) {
  for (int k = 0; k <= static_cast<int>(ErrorKind::InvalidContext); ++k)
    if (s == to_string(static_cast<ErrorKind>(k))) return static_cast<ErrorKind>(k);
  throw ScenarioError(pos, "unknown error kind '" + s + "'");
}

struct Prepared {
  const Assertion* assertion = nullptr;
  const OpSpec* op = nullptr;
  Args args;
  std::optional<ErrorKind> raises;
};

class Session {
 public:
  explicit Session(RunOptions options) : options_(std::move(options)) {}

  void declare(const Declaration& d) {
    if (names_.count(d.name)) throw ScenarioError(d.pos, "name '" + d.name + "' is already declared");
    try {
      switch (d.kind) {
        case Declaration::Kind::Lattice: names_.emplace(d.name, build_lattice(d.call)); break;
        case Declaration::Kind::Class: {
          const LatticePtr lat = lattice_named(d.lattice_name, d.pos);
          DivisorClass c = expression(lat, d.expression, d.expression_pos);
          named_classes_[d.name] = c;
          names_.emplace(d.name, std::move(c));
          break;
        }
        case Declaration::Kind::Context: names_.emplace(d.name, build_context(d.call)); break;
        case Declaration::Kind::Config: names_.emplace(d.name, build_config(d.call)); break;
      }
    } catch (const Error& e) {
      throw ScenarioError(d.pos, std::string("declaration '") + d.name + "' failed: " + to_string(e.kind()) + ": " + e.what());
    }
  }

  Prepared prepare(const Assertion& a) {
    Prepared p;
    p.assertion = &a;
    const auto& ops = operations();
    auto it = ops.find(a.call.name);
    if (it == ops.end()) throw ScenarioError(a.call.pos, "unknown operation '" + a.call.name + "'");
    p.op = &it->second;
    const auto& params = p.op->params;
    if (a.call.args.size() < p.op->required || a.call.args.size() > params.size())
      throw ScenarioError(a.call.pos, "operation '" + a.call.name + "' takes " + std::to_string(params.size()) +
                                          " arguments, got " + std::to_string(a.call.args.size()));
    LatticePtr anchor;
    for (std::size_t i = 0; i < a.call.args.size(); ++i) {
      const Value& v = a.call.args[i].value;
      if (!a.call.args[i].key.empty()) throw ScenarioError(v.pos, "assertion arguments are positional");
      p.args.push_back(resolve(params[i], v, anchor));
      if (!anchor) {
        if (auto c = std::get_if<ContextPtr>(&p.args.back())) anchor = (*c)->lattice();
        else if (auto l = std::get_if<LatticePtr>(&p.args.back())) anchor = *l;
        else if (auto g = std::get_if<ConfigPtr>(&p.args.back())) anchor = (*g)->lattice;
      }
    }
    if (a.error_kind) p.raises = error_kind_from_string(*a.error_kind, a.pos);
    return p;
  }

  Outcome run(const Prepared& p) {
    const Assertion& a = *p.assertion;
    Outcome o;
    o.id = "line " + std::to_string(a.pos.line);
    o.text = a.text;
    o.expected = a.expected ? cli::render(*a.expected) : "raises " + *a.error_kind;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      const Actual actual = p.op->run(p.args);
      o.actual = render(actual);
      ok = a.expected && matches(actual, *a.expected, named_classes_);
      if (actual.certificate) {
        o.certificate = certificate_to_json(*actual.certificate);
        o.certificate_summary = describe(*actual.certificate);
      }
      if (!actual.reason.empty())
        o.certificate_summary = actual.reason + (o.certificate_summary.empty() ? "" : "; " + o.certificate_summary);
      o.notes = actual.notes;
    } catch (const Error& e) {
      o.actual = std::string("raises ") + to_string(e.kind()) + " (" + e.what() + ")";
      ok = p.raises && *p.raises == e.kind();
    }
    o.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (ok) {
      o.status = Status::Pass;
    } else if (a.flag_note) {
      o.status = Status::Flagged;
      o.notes.push_back("known discrepancy: " + *a.flag_note);
    } else {
      o.status = Status::Fail;
    }
    return o;
  }

 private:
  RunOptions options_;
  std::map<std::string, Entity> names_;
  std::map<std::string, DivisorClass> named_classes_;

  EngineOptions engine_options() const { return EngineOptions{options_.max_degree}; }

  LatticePtr lattice_named(const std::string& name, SourcePos pos) const {
    auto it = names_.find(name);
    if (it == names_.end()) throw ScenarioError(pos, "unresolved name '" + name + "'");
    if (auto l = std::get_if<LatticePtr>(&it->second)) return *l;
    throw ScenarioError(pos, "'" + name + "' is not a lattice");
  }

  DivisorClass expression(const LatticePtr& lat, const std::string& text, SourcePos pos) const {
    try {
      return parse_class_expression(lat, text, named_classes_);
    } catch (const std::invalid_argument& e) {
      throw ScenarioError(pos, e.what());
    }
  }

  Arg resolve(P kind, const Value& v, const LatticePtr& anchor) const {
    auto entity = [&]() -> const Entity& {
      if (v.kind != Value::Kind::Bare) throw ScenarioError(v.pos, "expected a name, found " + cli::render(v));
      auto it = names_.find(v.text);
      if (it == names_.end()) throw ScenarioError(v.pos, "unresolved name '" + v.text + "'");
      return it->second;
    };
    switch (kind) {
      case P::Context: {
        if (auto c = std::get_if<ContextPtr>(&entity())) return *c;
        throw ScenarioError(v.pos, "'" + v.text + "' is not a context");
      }
      case P::Lattice: {
        const Entity& e = entity();
        if (auto l = std::get_if<LatticePtr>(&e)) return *l;
        throw ScenarioError(v.pos, "'" + v.text + "' is not a lattice");
      }
      case P::Config: {
        if (auto c = std::get_if<ConfigPtr>(&entity())) return *c;
        throw ScenarioError(v.pos, "'" + v.text + "' is not a configuration");
      }
      case P::Class: {
        if (!anchor) throw ScenarioError(v.pos, "class argument needs a lattice, context or configuration before it");
        if (v.kind == Value::Kind::Integer && v.integer == 0) return DivisorClass::zero(anchor);
        if (v.kind != Value::Kind::Bare && v.kind != Value::Kind::String)
          throw ScenarioError(v.pos, "expected a class expression");
        return expression(anchor, v.text, v.pos);
      }
      case P::Int:
        if (v.kind != Value::Kind::Integer) throw ScenarioError(v.pos, "expected an integer");
        return v.integer;
      case P::IntList: return int_list(v);
      case P::Matrix: return matrix(v);
      case P::Word:
        if (v.kind != Value::Kind::Bare && v.kind != Value::Kind::String) throw ScenarioError(v.pos, "expected a word");
        return v.text;
    }
    throw ScenarioError(v.pos, "unsupported argument");
  }

  static std::vector<Integer> int_list(const Value& v) {
    if (v.kind != Value::Kind::List) throw ScenarioError(v.pos, "expected a list of integers");
    std::vector<Integer> out;
    for (const auto& item : v.items) {
      if (item.kind != Value::Kind::Integer) throw ScenarioError(item.pos, "expected an integer");
      out.push_back(item.integer);
    }
    return out;
  }

  static IntMatrix matrix(const Value& v) {
    if (v.kind != Value::Kind::List || v.items.empty()) throw ScenarioError(v.pos, "expected a list of rows");
    std::vector<std::vector<Integer>> rows;
    for (const auto& r : v.items) rows.push_back(int_list(r));
    for (const auto& r : rows)
      if (r.size() != rows.front().size()) throw ScenarioError(v.pos, "rows of different lengths");
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
  }

  // Keyword or positional lookup for builder arguments.
  class BuilderArgs {
   public:
    BuilderArgs(const Call& call, std::vector<std::string> names) : call_(call), names_(std::move(names)) {
      for (std::size_t i = 0; i < call.args.size(); ++i) {
        const auto& a = call.args[i];
        std::string key = a.key;
        if (key.empty()) {
          if (i >= names_.size()) throw ScenarioError(a.value.pos, "too many arguments to '" + call.name + "'");
          key = names_[i];
        }
        if (std::find(names_.begin(), names_.end(), key) == names_.end())
          throw ScenarioError(a.value.pos, "'" + call.name + "' has no parameter '" + key + "'");
        if (!values_.emplace(key, &a.value).second) throw ScenarioError(a.value.pos, "parameter '" + key + "' given twice");
      }
    }
    const Value* find(const std::string& key) const {
      auto it = values_.find(key);
      return it == values_.end() ? nullptr : it->second;
    }
    const Value& get(const std::string& key) const {
      if (auto v = find(key)) return *v;
      throw ScenarioError(call_.pos, "'" + call_.name + "' needs parameter '" + key + "'");
    }
    int integer(const std::string& key) const {
      const Value& v = get(key);
      if (v.kind != Value::Kind::Integer || !fits_int64(v.integer) || abs(v.integer) > 1000000)
        throw ScenarioError(v.pos, "expected a small integer for '" + key + "'");
      return static_cast<int>(v.integer);
    }
    std::string word(const std::string& key) const {
      const Value& v = get(key);
      if (v.kind != Value::Kind::Bare && v.kind != Value::Kind::String) throw ScenarioError(v.pos, "expected a word for '" + key + "'");
      return v.text;
    }

   private:
    const Call& call_;
    std::vector<std::string> names_;
    std::map<std::string, const Value*> values_;
  };

  LatticePtr build_lattice(const Call& c) const {
    if (c.name == "omega") {
      BuilderArgs a(c, {"g", "d"});
      OmegaParams params;
      params.g = a.integer("g");
      const auto d = int_list(a.get("d"));
      if (d.size() != 8) throw ScenarioError(a.get("d").pos, "omega needs 8 values of d");
      for (int i = 0; i < 8; ++i) params.d[i] = static_cast<int>(d[i]);
      return build_omega(params);
    }
    if (c.name == "P") {
      BuilderArgs a(c, {"p", "h"});
      return build_P(a.integer("p"), a.integer("h"));
    }
    if (c.name == "Lambda") return build_Lambda(BuilderArgs(c, {"a"}).integer("a"));
    if (c.name == "Lambda_bar") return build_Lambda_bar(BuilderArgs(c, {"a"}).integer("a"));
    if (c.name == "K") return build_K(BuilderArgs(c, {"d"}).integer("d"));
    if (c.name == "section_fibre") return build_section_fibre_lattice(BuilderArgs(c, {"roots"}).integer("roots"));
    if (c.name == "hyperbolic") return build_hyperbolic_plus_roots(BuilderArgs(c, {"roots"}).integer("roots"));
    if (c.name == "gram") {
      BuilderArgs a(c, {"rows", "labels"});
      std::vector<std::string> labels;
      if (const Value* l = a.find("labels")) {
        if (l->kind != Value::Kind::List) throw ScenarioError(l->pos, "labels must be a list");
        for (const auto& item : l->items) {
          if (item.kind != Value::Kind::Bare && item.kind != Value::Kind::String)
            throw ScenarioError(item.pos, "labels must be names");
          labels.push_back(item.text);
        }
      }
      return GramLattice::make(matrix(a.get("rows")), std::move(labels));
    }
    throw ScenarioError(c.pos, "unknown lattice builder '" + c.name + "'");
  }

  ContextPtr build_context(const Call& c) const {
    PolarizationStatus status;
    if (c.name == "ample") status = PolarizationStatus::Ample;
    else if (c.name == "bignef") status = PolarizationStatus::BigNef;
    else throw ScenarioError(c.pos, "unknown context builder '" + c.name + "' (expected ample or bignef)");
    BuilderArgs a(c, {"lattice", "h"});
    const Value& lv = a.get("lattice");
    if (lv.kind != Value::Kind::Bare) throw ScenarioError(lv.pos, "expected a lattice name");
    const LatticePtr lat = lattice_named(lv.text, lv.pos);
    const Value& hv = a.get("h");
    if (hv.kind != Value::Kind::Bare && hv.kind != Value::Kind::String) throw ScenarioError(hv.pos, "expected a class expression");
    const DivisorClass h = expression(lat, hv.text, hv.pos);
    return std::make_shared<const PolarizedContext>(PolarizedContext::make(h, status, engine_options()));
  }

  static std::vector<EdgeSpec> edge_specs(const Value& v) {
    if (v.kind != Value::Kind::List) throw ScenarioError(v.pos, "edges must be a list of [a, b, multiplicity]");
    std::vector<EdgeSpec> out;
    for (const auto& e : v.items) {
      if (e.kind != Value::Kind::List || e.items.size() < 2 || e.items.size() > 3)
        throw ScenarioError(e.pos, "edge must be [a, b] or [a, b, multiplicity]");
      for (std::size_t i = 0; i < 2; ++i)
        if (e.items[i].kind != Value::Kind::Bare && e.items[i].kind != Value::Kind::String)
          throw ScenarioError(e.items[i].pos, "edge endpoint must be a component label");
      Integer mult = 1;
      if (e.items.size() == 3) {
        if (e.items[2].kind != Value::Kind::Integer) throw ScenarioError(e.items[2].pos, "multiplicity must be an integer");
        mult = e.items[2].integer;
      }
      out.push_back({e.items[0].text, e.items[1].text, mult});
    }
    return out;
  }

  ConfigPtr build_config(const Call& c) const {
    if (c.name == "theorem") {
      BuilderArgs a(c, {"kind", "g", "k", "rule", "edges"});
      const std::string kind = a.word("kind");
      const int g = a.integer("g");
      TheoremKind tk;
      if (kind == "prim_r0") tk = TheoremKind::PrimR0;
      else if (kind == "prim_general") tk = TheoremKind::PrimGeneral;
      else if (kind == "nonprim") tk = TheoremKind::NonPrim;
      else throw ScenarioError(a.get("kind").pos, "kind must be prim_r0, prim_general or nonprim");
      const int k = a.find("k") ? a.integer("k") : (tk == TheoremKind::NonPrim ? 2 : 1);
      if (const Value* e = a.find("edges"))
        return std::make_shared<const TheoremConfig>(build_theorem_config(tk, g, k, edge_specs(*e)));
      if (a.find("rule")) {
        const std::string rule = a.word("rule");
        if (tk != TheoremKind::PrimR0) throw ScenarioError(a.get("rule").pos, "rule applies to prim_r0 only");
        if (rule != "as_written" && rule != "chain") throw ScenarioError(a.get("rule").pos, "rule must be as_written or chain");
        if (g < 17 || (g - 11) % 6 != 0) raise(ErrorKind::RangeError, "prim_r0 needs g >= 17 with g = 11 mod 6");
        const int m = (g - 11) / 6;
        return std::make_shared<const TheoremConfig>(build_theorem_config(
            tk, g, k, prim_r0_edges(m, rule == "chain" ? R0EdgeRule::Chain : R0EdgeRule::AsWritten)));
      }
      return std::make_shared<const TheoremConfig>(build_theorem_config(tk, g, k));
    }
    if (c.name == "curve") {
      BuilderArgs a(c, {"lattice", "components", "edges", "polarization", "k"});
      const Value& lv = a.get("lattice");
      if (lv.kind != Value::Kind::Bare) throw ScenarioError(lv.pos, "expected a lattice name");
      auto cfg = std::make_shared<TheoremConfig>();
      cfg->lattice = lattice_named(lv.text, lv.pos);
      const Value& comps = a.get("components");
      if (comps.kind != Value::Kind::List) throw ScenarioError(comps.pos, "components must be a list of [label, genus, class]");
      std::vector<Component> components;
      for (const auto& item : comps.items) {
        if (item.kind != Value::Kind::List || item.items.size() != 3 || item.items[1].kind != Value::Kind::Integer ||
            (item.items[0].kind != Value::Kind::Bare && item.items[0].kind != Value::Kind::String))
          throw ScenarioError(item.pos, "component must be [label, genus, class]");
        const Value& cv = item.items[2];
        DivisorClass cls = cv.kind == Value::Kind::Integer && cv.integer == 0
                               ? DivisorClass::zero(cfg->lattice)
                               : expression(cfg->lattice, cv.text, cv.pos);
        components.push_back({item.items[0].text, item.items[1].integer, std::move(cls)});
      }
      std::vector<Edge> edges;
      if (const Value* ev = a.find("edges")) {
        for (const auto& spec : edge_specs(*ev)) {
          auto index = [&](const std::string& label) {
            for (std::size_t i = 0; i < components.size(); ++i)
              if (components[i].label == label) return i;
            throw ScenarioError(ev->pos, "edge names unknown component '" + label + "'");
          };
          edges.push_back({index(spec.a), index(spec.b), spec.multiplicity});
        }
      }
      cfg->config = CurveConfiguration::make(std::move(components), std::move(edges));
      if (const Value* pv = a.find("polarization")) cfg->polarization = expression(cfg->lattice, pv->text, pv->pos);
      cfg->k = a.find("k") ? a.integer("k") : 1;
      return cfg;
    }
    throw ScenarioError(c.pos, "unknown configuration builder '" + c.name + "' (expected theorem or curve)");
  }
};

}  // namespace

std::vector<std::string> operation_names() {
  std::vector<std::string> out;
  for (const auto& [name, spec] : operations()) out.push_back(name);
  return out;
}

Report run_scenario(std::string_view text, const std::string& source, const RunOptions& options) {
  const Scenario scenario = parse_scenario(text);
  Session session(options);
  std::vector<Prepared> prepared;
  for (const auto& st : scenario.statements) {
    if (auto d = std::get_if<Declaration>(&st)) session.declare(*d);
    else prepared.push_back(session.prepare(std::get<Assertion>(st)));
  }
  Report report;
  report.source = source;
  report.max_degree = options.max_degree;
  report.timing = options.timing;
  for (const auto& p : prepared) report.outcomes.push_back(session.run(p));
  return report;
}

}  // namespace k3lat::cli
