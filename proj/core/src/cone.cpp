#include "k3lat/cone.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "k3lat/errors.hpp"

namespace k3lat {

using detail::IVec;

const char* to_string(PolarizationStatus status) {
  return status == PolarizationStatus::Ample ? "ample" : "bignef";
}

PolarizedContext::PolarizedContext(DivisorClass h, PolarizationStatus status, EngineOptions options,
                                   std::shared_ptr<const detail::SliceEnumerator> enumerator)
    : h_(std::move(h)), status_(status), options_(std::move(options)), enumerator_(std::move(enumerator)) {}

PolarizedContext PolarizedContext::make(const DivisorClass& h, PolarizationStatus status, EngineOptions options) {
  if (h.square() <= 0) raise(ErrorKind::NotPositiveClass, "polarization " + h.to_string() + " has non-positive square");
  auto en = std::make_shared<const detail::SliceEnumerator>(h.lattice(), detail::to_ivec(h));
  if (status == PolarizationStatus::Ample) {
    std::vector<IVec> roots;
    en->slice(0, -2, -2, roots);
    if (!roots.empty())
      raise(ErrorKind::InvalidContext, "class " + h.to_string() + " is orthogonal to the root " +
                                           detail::to_class(h.lattice(), roots.front()).to_string());
  }
  return PolarizedContext(h, status, std::move(options), std::move(en));
}

namespace {

void check_cap(const EngineOptions& options, const Integer& degree, const std::string& what) {
  if (options.max_degree && degree > *options.max_degree)
    raise(ErrorKind::DegreeCapExceeded,
          what + " needs degree window " + degree.str() + " beyond the cap " + options.max_degree->str());
}

void require_context_lattice(const PolarizedContext& ctx, const DivisorClass& d) {
  if (!d.lattice() || !d.lattice()->same_as(*ctx.lattice()))
    raise(ErrorKind::LatticeMismatch, "class does not live on the context lattice");
}

// Roots of positive degree, grouped by degree and lexicographic within a degree.
class RootCache {
 public:
  RootCache(const detail::SliceEnumerator& en, const EngineOptions& options) : en_(en), options_(options) {}

  const std::vector<IVec>& of_degree(std::int64_t t) {
    ensure(t);
    return by_degree_[static_cast<std::size_t>(t)];
  }

  void ensure(std::int64_t t) {
    if (t < static_cast<std::int64_t>(by_degree_.size())) return;
    check_cap(options_, t, "root search");
    while (static_cast<std::int64_t>(by_degree_.size()) <= t) {
      const auto k = static_cast<std::int64_t>(by_degree_.size());
      std::vector<IVec> roots;
      if (k > 0) nodes_ += en_.slice(k, -2, -2, roots);
      by_degree_.push_back(std::move(roots));
    }
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  const detail::SliceEnumerator& en_;
  const EngineOptions& options_;
  std::vector<std::vector<IVec>> by_degree_;
  std::uint64_t nodes_ = 0;
};

class EffectivityOracle {
 public:
  explicit EffectivityOracle(const PolarizedContext& ctx)
      : ctx_(ctx), en_(ctx.enumerator()), roots_(en_, ctx.options()) {
    if (ctx.status() != PolarizationStatus::Ample)
      raise(ErrorKind::NeedsAmpleContext, "effectivity needs an ample polarization");
  }

  bool effective(const IVec& d) {
    if (detail::is_zero(d)) return true;
    const std::int64_t k = en_.degree(d);
    if (k <= 0) return false;
    if (en_.gram().square(d) >= -2) return true;
    auto it = memo_.find(d);
    if (it != memo_.end()) return it->second.has_value();
    memo_[d] = std::nullopt;
    for (std::int64_t t = 1; t < k; ++t) {
      for (const IVec& r : roots_.of_degree(t)) {
        ++examined_;
        if (en_.gram().pair(r, d) >= 0) continue;
        if (effective(detail::sub(d, r))) {
          memo_[d] = r;
          return true;
        }
      }
    }
    return false;
  }

  // Decomposition into the recorded roots plus a final class of square >= -2.
  Decomposition witness(IVec d) {
    std::map<IVec, Integer> counts;
    std::vector<IVec> order;
    while (!detail::is_zero(d) && en_.gram().square(d) < -2) {
      const IVec& r = *memo_.at(d);
      if (counts[r]++ == 0) order.push_back(r);
      d = detail::sub(d, r);
    }
    Decomposition out;
    for (const auto& r : order) out.terms.push_back({detail::to_class(ctx_.lattice(), r), counts[r]});
    if (!detail::is_zero(d)) out.terms.push_back({detail::to_class(ctx_.lattice(), d), 1});
    return out;
  }

  std::uint64_t examined() const { return examined_; }
  RootCache& roots() { return roots_; }
  const detail::SliceEnumerator& enumerator() const { return en_; }

 private:
  const PolarizedContext& ctx_;
  const detail::SliceEnumerator& en_;
  RootCache roots_;
  std::map<IVec, std::optional<IVec>> memo_;
  std::uint64_t examined_ = 0;
};

Decision effective_decision(EffectivityOracle& oracle, const PolarizedContext& ctx, const DivisorClass& d) {
  const IVec v = detail::to_ivec(d);
  const auto& en = oracle.enumerator();
  Decision out;
  if (detail::is_zero(v)) {
    out.verdict = true;
    out.certificate = Decomposition{};
    out.reason = "zero class";
    return out;
  }
  const std::int64_t k = en.degree(v);
  if (k <= 0) {
    out.verdict = false;
    out.certificate = WitnessClass{ctx.h(), "ample class pairs non-positively"};
    out.reason = "degree " + std::to_string(k) + " <= 0";
    return out;
  }
  if (oracle.effective(v)) {
    out.verdict = true;
    out.certificate = oracle.witness(v);
    out.reason = "decomposes into effective roots and a class of square >= -2";
  } else {
    out.verdict = false;
    out.certificate = Exhausted{"roots R with 1 <= R.H <= D.H-1 and R.D < 0, recursively", Integer(k - 1),
                                oracle.examined()};
    out.reason = "no root subtraction reaches a class of square >= -2";
  }
  return out;
}

// First root (degree ascending, lexicographic) with negative pairing against d, searched
// up to the degree bound; BigNef contexts also consider roots orthogonal to H.
std::optional<IVec> negative_root(const detail::SliceEnumerator& en, const EngineOptions& options, const IVec& d,
                                  std::int64_t bound, bool include_degree_zero, std::uint64_t& examined) {
  check_cap(options, bound, "nef test");
  std::vector<IVec> roots;
  for (std::int64_t t = include_degree_zero ? 0 : 1; t <= bound; ++t) {
    roots.clear();
    en.slice(t, -2, -2, roots);
    for (const IVec& r : roots) {
      ++examined;
      const std::int64_t p = en.gram().pair(r, d);
      if (p < 0 || (t == 0 && p != 0)) return p < 0 ? r : detail::negate(r);
    }
  }
  return std::nullopt;
}

Decision nef_decision(const PolarizedContext& ctx, const DivisorClass& d) {
  Decision out;
  const Integer s = d.square();
  if (d.is_zero()) {
    out.verdict = true;
    out.certificate = Exhausted{"zero class", 0, 0};
    out.reason = "zero class";
    return out;
  }
  if (s < 0) {
    out.verdict = false;
    out.certificate = WitnessClass{d, "negative self-intersection"};
    out.reason = "D^2 = " + s.str() + " < 0";
    return out;
  }
  const Integer k = pairing(d, ctx.h());
  if (k <= 0) {
    out.verdict = false;
    out.certificate = WitnessClass{ctx.h(), "polarization pairs non-positively"};
    out.reason = "D.H = " + k.str() + " <= 0";
    return out;
  }
  const Integer bound = nef_root_degree_bound(s, k);
  std::uint64_t examined = 0;
  auto root = negative_root(ctx.enumerator(), ctx.options(), detail::to_ivec(d), to_int64(bound),
                            ctx.status() == PolarizationStatus::BigNef, examined);
  if (root) {
    out.verdict = false;
    DivisorClass r = detail::to_class(ctx.lattice(), *root);
    out.reason = "root " + r.to_string() + " pairs to " + pairing(r, d).str();
    out.certificate = WitnessClass{std::move(r), "effective root with negative pairing"};
  } else {
    out.verdict = true;
    out.certificate = Exhausted{"roots R with 1 <= R.H <= bound and R.D < 0", bound, examined};
    out.reason = "no root with negative pairing up to degree " + bound.str();
  }
  return out;
}

SubCheck sub(std::string name, Decision d) { return SubCheck{std::move(name), std::move(d)}; }

Decision plain(bool verdict, std::string reason) {
  Decision d;
  d.verdict = verdict;
  d.certificate = Exhausted{"direct computation", 0, 0};
  d.reason = std::move(reason);
  return d;
}

Decision composite(std::vector<SubCheck> checks) {
  Decision out;
  out.verdict = std::all_of(checks.begin(), checks.end(), [](const SubCheck& c) { return c.decision.verdict; });
  for (const auto& c : checks)
    if (!c.decision.verdict) {
      out.reason = "fails: " + c.name;
      break;
    }
  if (out.verdict) out.reason = "all hypotheses hold";
  out.certificate = Composite{std::move(checks)};
  return out;
}

// Isotropic classes F with F.ref in [lo, hi] and F.H > 0.
std::vector<DivisorClass> effective_isotropic(const PolarizedContext& ctx, const DivisorClass& ref, const Integer& lo,
                                              const Integer& hi) {
  check_cap(ctx.options(), hi, "isotropic search");
  std::vector<DivisorClass> out;
  for (auto& f : enumerate_window(ref, 0, 0, lo, hi).classes)
    if (pairing(f, ctx.h()) > 0) out.push_back(std::move(f));
  return out;
}

// A splitting D = x + (D - x) with x of square >= -2 and both parts effective, searched by
// degree of x. Such an x exists whenever D is a sum of two non-zero effective classes, since
// the effective monoid is generated by classes of square >= -2 and positive degree.
std::optional<Decomposition> find_splitting(EffectivityOracle& oracle, const PolarizedContext& ctx,
                                            const IVec& d, std::uint64_t& examined) {
  const auto& en = oracle.enumerator();
  const std::int64_t k = en.degree(d);
  const std::int64_t n = en.reference_square();
  if (k > 1) check_cap(ctx.options(), k - 1, "splitting search");
  for (std::int64_t t = 1; t < k; ++t) {
    std::vector<IVec> candidates;
    en.slice(t, -2, (t * t) / n, candidates);
    for (const IVec& x : candidates) {
      ++examined;
      const IVec rest = detail::sub(d, x);
      if (oracle.effective(rest)) {
        Decomposition out;
        out.terms.push_back({detail::to_class(ctx.lattice(), x), 1});
        out.terms.push_back({detail::to_class(ctx.lattice(), rest), 1});
        return out;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Integer nef_root_degree_bound(const Integer& square, const Integer& degree) {
  if (degree <= 0) return 0;
  if (square <= 0) return degree;
  // Largest t with s t^2 + 2 k t - 2 k^2 <= 0.
  Integer t = (isqrt(degree * degree + 2 * square * degree * degree) - degree) / square;
  auto fits = [&](const Integer& x) { return square * x * x + 2 * degree * x <= 2 * degree * degree; };
  while (t > 0 && !fits(t)) --t;
  while (fits(t + 1)) ++t;
  return t;
}

Decision is_effective(const PolarizedContext& ctx, const DivisorClass& d) {
  require_context_lattice(ctx, d);
  EffectivityOracle oracle(ctx);
  return effective_decision(oracle, ctx, d);
}

Decision is_nef(const PolarizedContext& ctx, const DivisorClass& d) {
  require_context_lattice(ctx, d);
  return nef_decision(ctx, d);
}

Decision is_big_nef(const PolarizedContext& ctx, const DivisorClass& d) {
  require_context_lattice(ctx, d);
  const Integer s = d.square();
  if (s <= 0) {
    Decision out = plain(false, "D^2 = " + s.str() + " is not positive");
    out.certificate = WitnessClass{d, "non-positive self-intersection"};
    return out;
  }
  return nef_decision(ctx, d);
}

Decision is_irreducible_class(const PolarizedContext& ctx, const DivisorClass& d) {
  require_context_lattice(ctx, d);
  EffectivityOracle oracle(ctx);
  const IVec v = detail::to_ivec(d);
  if (detail::is_zero(v) || !oracle.effective(v))
    raise(ErrorKind::NotEffective, "class " + d.to_string() + " is not effective");
  const Integer s = d.square();
  Decision out;
  std::uint64_t examined = 0;

  auto split_or = [&](const char* why) {
    auto split = find_splitting(oracle, ctx, v, examined);
    if (!split) raise(ErrorKind::NotEffective, std::string("no splitting found although ") + why);
    out.verdict = false;
    out.certificate = std::move(*split);
    out.reason = why;
    return out;
  };

  if (s < -2) {
    out.verdict = false;
    out.certificate = oracle.witness(v);
    out.reason = "D^2 < -2 forces a fixed root component";
    return out;
  }
  if (s == -2) {
    auto split = find_splitting(oracle, ctx, v, examined);
    if (split) {
      out.verdict = false;
      out.certificate = std::move(*split);
      out.reason = "splits into two non-zero effective classes";
    } else {
      out.verdict = true;
      out.certificate = Exhausted{"splittings x + (D-x) with -2 <= x^2 <= (x.H)^2/H^2, 1 <= x.H <= D.H-1",
                                  Integer(ctx.enumerator().degree(v) - 1), examined};
      out.reason = "indecomposable root";
    }
    return out;
  }
  // s >= 0
  const Integer c = d.content();
  if (c > 1) {
    DivisorClass p = d;
    std::vector<Integer> coords = d.coords();
    for (auto& x : coords) x /= c;
    p = DivisorClass(d.lattice(), coords);
    out.verdict = false;
    out.certificate = Decomposition{{{p, 1}, {DivisorClass((c - 1) * p), 1}}};
    out.reason = "divisible by " + c.str();
    return out;
  }
  Decision nef = nef_decision(ctx, d);
  if (!nef.verdict) {
    const auto* w = std::get_if<WitnessClass>(&nef.certificate);
    if (w) {
      const IVec r = detail::to_ivec(w->cls);
      const IVec rest = detail::sub(v, r);
      if (oracle.effective(rest)) {
        out.verdict = false;
        out.certificate = Decomposition{{{w->cls, 1}, {d - w->cls, 1}}};
        out.reason = "not nef: fixed root component";
        return out;
      }
    }
    return split_or("not nef");
  }
  if (s > 0) {
    auto fs = effective_isotropic(ctx, d, 1, 1);
    if (!fs.empty()) {
      const DivisorClass& f = fs.front();
      if (oracle.effective(detail::to_ivec(d - f))) {
        out.verdict = false;
        out.certificate = Decomposition{{{f, 1}, {d - f, 1}}};
        out.reason = "elliptic class F with F.D = 1 gives a fixed component";
        return out;
      }
      return split_or("elliptic class F with F.D = 1");
    }
  }
  std::vector<SubCheck> checks;
  checks.push_back(sub("nef", std::move(nef)));
  if (s == 0) checks.push_back(sub("primitive isotropic", plain(true, "content 1")));
  else checks.push_back(sub("no isotropic F with F.D = 1", plain(true, "none found")));
  return composite(std::move(checks));
}

NefReduction nef_reduce(const DivisorClass& d, const DivisorClass& seed, EngineOptions options) {
  if (d.is_zero() || d.square() < 0)
    raise(ErrorKind::NotPositiveClass, "nef_reduce needs a non-zero class of non-negative square");
  if (seed.square() <= 0) raise(ErrorKind::NotPositiveClass, "seed must have positive square");
  PolarizedContext ctx = PolarizedContext::make(seed, PolarizationStatus::Ample, options);
  const auto& en = ctx.enumerator();
  IVec v = detail::to_ivec(d);
  if (en.degree(v) < 0) v = detail::negate(v);
  const std::int64_t s = en.gram().square(v);
  const Integer bound0 = nef_root_degree_bound(s, en.degree(v));
  check_cap(options, bound0, "nef reduction");
  RootCache roots(en, ctx.options());
  NefReduction out;
  while (true) {
    const std::int64_t bound = to_int64(nef_root_degree_bound(s, en.degree(v)));
    std::optional<IVec> hit;
    for (std::int64_t t = 1; t <= bound && !hit; ++t)
      for (const IVec& r : roots.of_degree(t))
        if (en.gram().pair(r, v) < 0) {
          hit = r;
          break;
        }
    if (!hit) break;
    const std::int64_t p = en.gram().pair(*hit, v);
    v = detail::sub(v, detail::scale(-p, *hit));
    out.chain.push_back(detail::to_class(d.lattice(), *hit));
  }
  out.result = detail::to_class(d.lattice(), v);
  return out;
}

Decision very_ample_knutsen(const PolarizedContext& ctx, const DivisorClass& d) {
  require_context_lattice(ctx, d);
  if (!d.is_primitive()) raise(ErrorKind::NotPrimitive, "class " + d.to_string() + " is not primitive");
  std::vector<SubCheck> checks;
  Decision bn = is_big_nef(ctx, d);
  const bool big_nef = bn.verdict;
  checks.push_back(sub("big and nef", std::move(bn)));
  if (!big_nef) return composite(std::move(checks));

  auto roots = roots_orthogonal_to(d);
  if (roots.empty()) {
    checks.push_back(sub("no effective root orthogonal to D", plain(true, "no root orthogonal to D")));
  } else {
    DivisorClass r = roots.front();
    if (pairing(r, ctx.h()) < 0) r = -r;
    Decision bad = plain(false, "root " + r.to_string() + " is orthogonal to D");
    bad.certificate = WitnessClass{r, "effective root orthogonal to D"};
    checks.push_back(sub("no effective root orthogonal to D", std::move(bad)));
  }
  auto fs = effective_isotropic(ctx, d, 1, 2);
  if (fs.empty()) {
    Decision ok = plain(true, "no effective isotropic class of D-degree 1 or 2");
    ok.certificate = Exhausted{"isotropic F with 1 <= F.D <= 2", 2, 0};
    checks.push_back(sub("no effective isotropic F with F.D in {1,2}", std::move(ok)));
  } else {
    Decision bad = plain(false, "isotropic " + fs.front().to_string() + " has F.D = " + pairing(fs.front(), d).str());
    bad.certificate = WitnessClass{fs.front(), "effective isotropic class of low degree"};
    checks.push_back(sub("no effective isotropic F with F.D in {1,2}", std::move(bad)));
  }
  return composite(std::move(checks));
}

Decision quadric_hull_hypotheses(const PolarizedContext& ctx, const DivisorClass& l, const DivisorClass& m) {
  require_context_lattice(ctx, l);
  require_context_lattice(ctx, m);
  const Integer l2 = l.square();
  const Integer g = l2 / 2 + 1;
  if (g % 2 == 0) raise(ErrorKind::ParityError, "genus " + g.str() + " is even; (g+1)/2 is not integral");
  const Integer half = (g + 1) / 2;
  std::vector<SubCheck> checks;
  auto done = [&]() { return composite(std::move(checks)); };
  auto last_ok = [&]() { return checks.back().decision.verdict; };

  checks.push_back(sub("M^2 = 0", plain(m.square() == 0, "M^2 = " + m.square().str())));
  if (!last_ok()) return done();
  const Integer lm = pairing(l, m);
  checks.push_back(sub("L.M = (g+1)/2", plain(lm == half, "L.M = " + lm.str() + ", (g+1)/2 = " + half.str())));
  if (!last_ok()) return done();
  const DivisorClass lm_diff = l - m;
  if (!lm_diff.is_primitive()) {
    checks.push_back(sub("L-M very ample", plain(false, "L-M is not primitive")));
    return done();
  }
  checks.push_back(sub("L-M very ample", very_ample_knutsen(ctx, lm_diff)));
  if (!last_ok()) return done();
  const Integer q = lm_diff.square();
  checks.push_back(sub("(L-M)^2 >= 8", plain(q >= 8, "(L-M)^2 = " + q.str())));
  if (!last_ok()) return done();
  Decision e = is_effective(ctx, l - Integer(2) * m);
  e.verdict = !e.verdict;
  e.reason = (e.verdict ? "not effective: " : "effective: ") + e.reason;
  checks.push_back(sub("L-2M not effective", std::move(e)));
  if (!last_ok()) return done();
  checks.push_back(sub("M irreducible", is_irreducible_class(ctx, m)));
  if (!last_ok()) return done();
  auto fs = effective_isotropic(ctx, lm_diff, 3, 3);
  if (fs.empty()) {
    Decision ok = plain(true, "none");
    ok.certificate = Exhausted{"isotropic F with F.(L-M) = 3", 3, 0};
    checks.push_back(sub("no effective isotropic F with F.(L-M) = 3", std::move(ok)));
  } else {
    Decision bad = plain(false, "isotropic " + fs.front().to_string());
    bad.certificate = WitnessClass{fs.front(), "effective isotropic class with F.(L-M) = 3"};
    checks.push_back(sub("no effective isotropic F with F.(L-M) = 3", std::move(bad)));
  }
  return done();
}

CliffordResult clifford_index(const PolarizedContext& ctx, const DivisorClass& l) {
  require_context_lattice(ctx, l);
  const Integer l2 = l.square();
  if (l2 <= 0) raise(ErrorKind::NotPositiveClass, "clifford_index needs L^2 > 0");
  const Integer g = l2 / 2 + 1;
  CliffordResult out;
  out.generic_value = (g - 1) / 2;
  out.value = out.generic_value;
  if (g - 1 >= 1) check_cap(ctx.options(), g - 1, "Clifford search");
  detail::SliceEnumerator en(l.lattice(), detail::to_ivec(l));
  const std::int64_t n = en.reference_square();
  const std::int64_t top = to_int64(g - 1);
  for (std::int64_t t = 1; t <= top; ++t) {
    const std::int64_t smax = std::min((t * t) / n, (t - 1) / 2);
    for (std::int64_t s = 0; s <= smax; s += 2) {
      std::vector<IVec> found;
      en.slice(t, s, s, found);
      for (const IVec& v : found) {
        ++out.candidates;
        DivisorClass d = detail::to_class(l.lattice(), v);
        if (pairing(d, ctx.h()) <= 0) continue;
        const Integer value = Integer(t - s - 2);
        if (value < out.value) {
          out.value = value;
          out.witness = d;
        }
      }
    }
  }
  return out;
}

std::vector<DivisorClass> special_pencil_classes(const PolarizedContext& ctx, const DivisorClass& l) {
  require_context_lattice(ctx, l);
  const Integer l2 = l.square();
  if (l2 <= 0) raise(ErrorKind::NotPositiveClass, "special_pencil_classes needs L^2 > 0");
  const Integer g = l2 / 2 + 1;
  if (g % 2 == 0) raise(ErrorKind::ParityError, "genus " + g.str() + " is even");
  const std::int64_t half = to_int64((g + 1) / 2);
  check_cap(ctx.options(), Integer(2 * half), "special pencil search");
  detail::SliceEnumerator en(l.lattice(), detail::to_ivec(l));
  const std::int64_t n = en.reference_square();
  std::vector<DivisorClass> out;
  for (std::int64_t s = 0; s < half; s += 2) {
    const std::int64_t t = half + s;
    if (2 * s >= t || s * n > t * t) continue;
    std::vector<IVec> found;
    en.slice(t, s, s, found);
    for (const IVec& v : found) {
      DivisorClass d = detail::to_class(l.lattice(), v);
      if (pairing(d, ctx.h()) > 0) out.push_back(std::move(d));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Decision is_ample(const DivisorClass& h) {
  const Integer s = h.square();
  if (s <= 0) {
    Decision out = plain(false, "H^2 = " + s.str() + " is not positive");
    out.certificate = WitnessClass{h, "non-positive self-intersection"};
    return out;
  }
  auto roots = roots_orthogonal_to(h);
  if (!roots.empty()) {
    Decision out = plain(false, "orthogonal to the root " + roots.front().to_string());
    out.certificate = WitnessClass{roots.front(), "root orthogonal to H"};
    return out;
  }
  Decision out = plain(true, "positive square and no orthogonal root");
  out.certificate = Exhausted{"roots orthogonal to H", 0, 0};
  return out;
}

Decision is_ample(const PolarizedContext& reference, const DivisorClass& h) {
  require_context_lattice(reference, h);
  std::vector<SubCheck> checks;
  checks.push_back(sub("nef", is_nef(reference, h)));
  checks.push_back(sub("positive square, no orthogonal root", is_ample(h)));
  return composite(std::move(checks));
}

std::string describe(const Certificate& certificate) {
  std::ostringstream os;
  std::visit(
      [&os](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Decomposition>) {
          os << "decomposition:";
          if (c.terms.empty()) os << " (empty)";
          for (const auto& t : c.terms) os << " " << (t.multiplicity == 1 ? "" : t.multiplicity.str() + "*") << t.cls;
        } else if constexpr (std::is_same_v<T, WitnessClass>) {
          os << "witness " << c.cls << " (" << c.role << ")";
        } else if constexpr (std::is_same_v<T, Exhausted>) {
          os << "exhausted: " << c.search << ", degree bound " << c.degree_bound << ", " << c.candidates
             << " candidates";
        } else if constexpr (std::is_same_v<T, ReflectionChain>) {
          os << "reflections:";
          for (const auto& r : c.roots) os << " " << r;
          os << " -> " << c.result;
        } else {
          os << "checks:";
          for (const auto& s : c.checks) os << " [" << s.name << ": " << (s.decision.verdict ? "yes" : "no") << "]";
        }
      },
      certificate);
  return os.str();
}

}  // namespace k3lat
