#include "k3lat/curve_config.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "k3lat/detail/small.hpp"
#include "k3lat/errors.hpp"
#include "k3lat/named_lattices.hpp"
#include "k3lat/numerology.hpp"

namespace k3lat {

CurveConfiguration CurveConfiguration::make(std::vector<Component> components, std::vector<Edge> edges) {
  std::set<std::string> seen;
  for (const auto& c : components) {
    if (!seen.insert(c.label).second) raise(ErrorKind::ShapeError, "duplicate component label '" + c.label + "'");
    if (c.genus < 0) raise(ErrorKind::ShapeError, "negative genus on '" + c.label + "'");
    if (!c.cls.lattice()) raise(ErrorKind::ShapeError, "component '" + c.label + "' has no class");
    if (!components.front().cls.lattice()->same_as(*c.cls.lattice()))
      raise(ErrorKind::ShapeError, "component '" + c.label + "' lives on a different lattice");
  }
  std::map<std::pair<std::size_t, std::size_t>, Integer> merged;
  for (const auto& e : edges) {
    if (e.a >= components.size() || e.b >= components.size()) raise(ErrorKind::ShapeError, "edge endpoint out of range");
    if (e.a == e.b) raise(ErrorKind::ShapeError, "self-edge on '" + components[e.a].label + "'");
    if (e.multiplicity < 1) raise(ErrorKind::ShapeError, "edge multiplicity must be positive");
    merged[std::minmax(e.a, e.b)] += e.multiplicity;
  }
  CurveConfiguration out;
  out.components_ = std::move(components);
  for (auto& [key, mult] : merged) out.edges_.push_back({key.first, key.second, mult});
  return out;
}

std::size_t CurveConfiguration::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].label == label) return i;
  raise(ErrorKind::ShapeError, "unknown component '" + label + "'");
}

Integer CurveConfiguration::multiplicity(std::size_t a, std::size_t b) const {
  const auto key = std::minmax(a, b);
  for (const auto& e : edges_)
    if (e.a == key.first && e.b == key.second) return e.multiplicity;
  return 0;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Component index -> piece index, pieces ordered by their smallest member.
std::vector<std::size_t> piece_ids(const CurveConfiguration& c, std::size_t& count) {
  const std::size_t n = c.components().size();
  UnionFind uf(n);
  for (const auto& e : c.edges()) uf.unite(e.a, e.b);
  std::map<std::size_t, std::size_t> root_to_piece;
  std::vector<std::size_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = root_to_piece.emplace(uf.find(i), root_to_piece.size());
    ids[i] = it->second;
  }
  count = root_to_piece.size();
  return ids;
}

}  // namespace

std::vector<Piece> arithmetic_genus_per_piece(const CurveConfiguration& c) {
  std::size_t count = 0;
  const auto ids = piece_ids(c, count);
  std::vector<Piece> pieces(count);
  for (auto& p : pieces) p.genus = 1;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    pieces[ids[i]].labels.push_back(c.components()[i].label);
    pieces[ids[i]].genus += c.components()[i].genus - 1;
  }
  for (const auto& e : c.edges()) pieces[ids[e.a]].genus += e.multiplicity;
  return pieces;
}

Integer arithmetic_genus(const CurveConfiguration& c) {
  if (c.components().empty()) raise(ErrorKind::Disconnected, "empty configuration");
  const auto pieces = arithmetic_genus_per_piece(c);
  if (pieces.size() != 1)
    raise(ErrorKind::Disconnected, "configuration has " + std::to_string(pieces.size()) + " connected pieces");
  return pieces.front().genus;
}

DivisorClass total_class(const CurveConfiguration& c) {
  if (c.components().empty()) return DivisorClass();
  DivisorClass sum = DivisorClass::zero(c.components().front().cls.lattice());
  for (const auto& comp : c.components()) sum += comp.cls;
  return sum;
}

std::vector<std::string> transversality_violations(const CurveConfiguration& c) {
  std::vector<std::string> out;
  for (const auto& e : c.edges()) {
    const auto& x = c.components()[e.a];
    const auto& y = c.components()[e.b];
    if (x.cls.is_zero() || y.cls.is_zero() || x.cls == y.cls) continue;
    const Integer ip = pairing(x.cls, y.cls);
    if (e.multiplicity > ip)
      out.push_back(x.label + "-" + y.label + ": " + to_string(e.multiplicity) + " nodes > intersection " +
                    to_string(ip));
  }
  return out;
}

namespace {

bool subset_connected(std::uint32_t mask, const std::vector<std::uint32_t>& adjacency) {
  if (mask == 0) return false;
  std::uint32_t reached = mask & (~mask + 1);
  std::uint32_t frontier = reached;
  while (frontier) {
    const int i = __builtin_ctz(frontier);
    frontier &= frontier - 1;
    const std::uint32_t fresh = adjacency[static_cast<std::size_t>(i)] & mask & ~reached;
    reached |= fresh;
    frontier |= fresh;
  }
  return reached == mask;
}

// Returns n when v = n h with n >= 1, else 0.
std::int64_t positive_multiple(const detail::IVec& v, const detail::IVec& h) {
  std::optional<std::int64_t> n;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (h[i] == 0) {
      if (v[i] != 0) return 0;
      continue;
    }
    if (v[i] % h[i] != 0) return 0;
    const std::int64_t q = v[i] / h[i];
    if (n && *n != q) return 0;
    n = q;
  }
  return n && *n >= 1 ? *n : 0;
}

}  // namespace

ObstructionResult decomposition_obstruction(const CurveConfiguration& c, const DivisorClass& h, const Integer& k,
                                            PartConnectivity connectivity) {
  const auto& comps = c.components();
  if (comps.empty()) raise(ErrorKind::ClassMismatch, "empty configuration");
  if (h.is_zero()) raise(ErrorKind::ClassMismatch, "zero polarization");
  if (!(total_class(c) == k * h))
    raise(ErrorKind::ClassMismatch, "total class " + total_class(c).to_string() + " differs from " + to_string(k) +
                                        "(" + h.to_string() + ")");
  if (comps.size() > 24) raise(ErrorKind::TooLarge, std::to_string(comps.size()) + " components exceed 24");

  const std::size_t n = comps.size();
  std::vector<detail::IVec> cls;
  for (const auto& comp : comps) cls.push_back(detail::to_ivec(comp.cls));
  const detail::IVec hv = detail::to_ivec(h);
  const detail::IVec total = detail::to_ivec(total_class(c));
  std::vector<std::uint32_t> adjacency(n, 0);
  for (const auto& e : c.edges()) {
    adjacency[e.a] |= 1u << e.b;
    adjacency[e.b] |= 1u << e.a;
  }

  ObstructionResult out;
  out.holds = true;
  const std::uint32_t full = (1u << n) - 1;
  // Component 0 always sits in the part S; every proper split is visited once.
  for (std::uint32_t rest = 0; rest < (1u << (n - 1)); ++rest) {
    const std::uint32_t mask = 1u | (rest << 1);
    if (mask == full) continue;
    ++out.subsets_checked;
    detail::IVec part(hv.size(), 0);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) part = detail::add(part, cls[i]);
    if (positive_multiple(part, hv) == 0) continue;
    if (positive_multiple(detail::sub(total, part), hv) == 0) continue;
    if (connectivity == PartConnectivity::Connected &&
        !(subset_connected(mask, adjacency) && subset_connected(full & ~mask, adjacency)))
      continue;
    out.holds = false;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) out.violating.push_back(comps[i].label);
    break;
  }
  return out;
}

const char* to_string(TheoremKind kind) {
  switch (kind) {
    case TheoremKind::PrimR0: return "prim_r0";
    case TheoremKind::PrimGeneral: return "prim_general";
    case TheoremKind::NonPrim: return "nonprim";
  }
  return "?";
}

namespace {

std::string r_label(int i, int j) { return "R" + std::to_string(i) + "_" + std::to_string(j); }

}  // namespace

std::vector<EdgeSpec> prim_r0_edges(int m, R0EdgeRule rule) {
  if (m < 1) raise(ErrorKind::RangeError, "need m >= 1");
  std::vector<EdgeSpec> out{{"C", r_label(1, 1), 1}};
  if (m == 1) {
    out.push_back({r_label(1, 1), r_label(1, 2), 2});
    return out;
  }
  if (rule == R0EdgeRule::Chain) {
    std::vector<std::string> cycle;
    for (int i = 1; i <= m; ++i)
      for (int j = 1; j <= 2; ++j) cycle.push_back(r_label(i, j));
    for (std::size_t i = 0; i < cycle.size(); ++i) out.push_back({cycle[i], cycle[(i + 1) % cycle.size()], 1});
    return out;
  }
  // Each pair meets at most once, so the three rules are combined as a set.
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> pairs;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= m; ++k)
        for (int l = 1; l <= 2; ++l) {
          const bool hit = (i == k && l == j + 1) || (k == i + 1 && l != j) || (i == 1 && j == 1 && k == m && l == 2);
          if (hit) pairs.insert(std::minmax(std::pair{i, j}, std::pair{k, l}));
        }
  for (const auto& [x, y] : pairs) out.push_back({r_label(x.first, x.second), r_label(y.first, y.second), 1});
  return out;
}

std::vector<EdgeSpec> prim_general_edges(int eps) {
  std::vector<EdgeSpec> out{{"D", "R1", 3}};
  if (eps == 1) out.push_back({"D", "R2", 3});
  return out;
}

namespace {

std::vector<std::string> nonprim_fibre_labels(int l) {
  std::vector<std::string> out;
  if (l % 2 == 0) {
    for (int i = 1; i <= l / 2; ++i)
      for (int j = 1; j <= 2; ++j) out.push_back("F" + std::to_string(i) + "_" + std::to_string(j));
  } else {
    for (int i = 1; i <= l; ++i) out.push_back("F" + std::to_string(i));
  }
  return out;
}

}  // namespace

std::vector<EdgeSpec> nonprim_edges(int k, int l) {
  if (k < 2 || l < 0) raise(ErrorKind::RangeError, "need k >= 2 and l >= 0");
  std::vector<EdgeSpec> out{{"B", "G1", 1}, {"G1", "R1", 2}};
  for (int i = 1; i + 1 <= k - 1; ++i) {
    out.push_back({"R" + std::to_string(i), "G" + std::to_string(i + 1), 1});
    out.push_back({"G" + std::to_string(i + 1), "R" + std::to_string(i + 1), 1});
  }
  const auto fibres = nonprim_fibre_labels(l);
  if (fibres.empty()) return out;
  if (l % 2 == 0) {
    out.push_back({"B", fibres.front(), 1});
    // The two preimages of the fibre node glue consecutive copies into a cycle.
    for (std::size_t i = 0; i < fibres.size(); ++i) out.push_back({fibres[i], fibres[(i + 1) % fibres.size()], 1});
  } else {
    out.push_back({"B", fibres.front(), 3});
    for (std::size_t i = 0; i + 1 < fibres.size(); ++i) out.push_back({fibres[i], fibres[i + 1], 1});
  }
  return out;
}

namespace {

CurveConfiguration assemble(std::vector<Component> comps, const std::vector<EdgeSpec>& specs) {
  auto find = [&](const std::string& label) {
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (comps[i].label == label) return i;
    raise(ErrorKind::ShapeError, "edge names unknown component '" + label + "'");
  };
  std::vector<Edge> edges;
  for (const auto& s : specs) edges.push_back({find(s.a), find(s.b), s.multiplicity});
  return CurveConfiguration::make(std::move(comps), std::move(edges));
}

struct Layout {
  TheoremConfig cfg;
  std::vector<Component> comps;
};

Layout layout_prim_r0(int g) {
  if (g < 17 || (g - 11) % 6 != 0) raise(ErrorKind::RangeError, "prim_r0 needs g >= 17 with g = 11 mod 6");
  Layout out;
  auto& cfg = out.cfg;
  cfg.kind = TheoremKind::PrimR0;
  cfg.g = g;
  cfg.m = (g - 11) / 6;
  cfg.r = 0;
  OmegaParams params{11, {3, 3, 3, 3, 3, 3, 3, 3}};
  cfg.lattice = build_omega(params);
  const auto L = DivisorClass::basis(cfg.lattice, "L");
  const auto E = DivisorClass::basis(cfg.lattice, "E");
  const auto G1 = DivisorClass::basis(cfg.lattice, "G1");
  cfg.polarization = L + Integer(cfg.m) * E;
  cfg.expected_genus = 12;
  out.comps.push_back({"C", 11, L});
  for (int i = 1; i <= cfg.m; ++i) {
    out.comps.push_back({r_label(i, 1), 0, G1});
    out.comps.push_back({r_label(i, 2), 0, E - G1});
  }
  return out;
}

Layout layout_prim_general(int g) {
  if (g < 12) raise(ErrorKind::RangeError, "prim_general needs g >= 12");
  Layout out;
  auto& cfg = out.cfg;
  cfg.kind = TheoremKind::PrimGeneral;
  cfg.g = g;
  const Thresholds t = l_threshold_prim(g);
  cfg.m = static_cast<int>(t.m);
  cfg.r = static_cast<int>(t.r);
  cfg.eps = (cfg.r == 0 || cfg.r == 5) ? 1 : 0;
  cfg.lattice = build_P(g, 11);
  const auto M = DivisorClass::basis(cfg.lattice, "M");
  const auto R1 = DivisorClass::basis(cfg.lattice, "R1");
  const auto R2 = DivisorClass::basis(cfg.lattice, "R2");
  cfg.polarization = M + R1 + Integer(cfg.eps) * R2;
  cfg.expected_genus = cfg.r == 0 ? l_threshold_prim_first_stage(g) : t.l_g;
  out.comps.push_back({"D", 11, M});
  out.comps.push_back({"R1", 0, R1});
  if (cfg.eps == 1) out.comps.push_back({"R2", 0, R2});
  const int s1 = p_data(g, 11).s1;
  if (s1 < 3)
    cfg.note = "D.R1 = " + std::to_string(s1) + " is below the 3 nodes kept on D u R1; not transversally realizable";
  return out;
}

Layout layout_nonprim(int g, int k) {
  if (g < 8 || k < 2) raise(ErrorKind::RangeError, "nonprim needs g >= 8 and k >= 2");
  Layout out;
  auto& cfg = out.cfg;
  cfg.kind = TheoremKind::NonPrim;
  cfg.g = g;
  cfg.k = k;
  const Thresholds t = l_threshold_nonprim(g, k);
  cfg.m = static_cast<int>(t.m);
  cfg.r = static_cast<int>(t.r);
  cfg.m_prime = cfg.r >= 3 ? cfg.m - 1 : cfg.m - 2;
  cfg.a = cfg.r >= 3 ? 11 + cfg.r : 17 + cfg.r;
  cfg.l = k * cfg.m_prime + 2 * (k - 1);
  cfg.lattice = build_Lambda(cfg.a);
  const auto D = DivisorClass::basis(cfg.lattice, "D");
  const auto F = DivisorClass::basis(cfg.lattice, "F");
  const auto G = DivisorClass::basis(cfg.lattice, "G");
  cfg.polarization = D + Integer(cfg.m_prime) * F;
  cfg.expected_genus = t.l_g;
  out.comps.push_back({"B", cfg.a <= 15 ? 13 : 15, D});
  for (int i = 1; i <= k - 1; ++i) {
    out.comps.push_back({"G" + std::to_string(i), 0, G});
    out.comps.push_back({"R" + std::to_string(i), 0, D - Integer(2) * F - G});
  }
  for (const auto& label : nonprim_fibre_labels(cfg.l)) out.comps.push_back({label, 0, F});
  if (cfg.l == 0) cfg.note = "no fibre copies (l = 0)";
  return out;
}

Layout layout(TheoremKind kind, int g, int k) {
  switch (kind) {
    case TheoremKind::PrimR0: return layout_prim_r0(g);
    case TheoremKind::PrimGeneral: return layout_prim_general(g);
    case TheoremKind::NonPrim: return layout_nonprim(g, k);
  }
  raise(ErrorKind::RangeError, "unknown construction");
}

}  // namespace

TheoremConfig build_theorem_config(TheoremKind kind, int g, int k, const std::vector<EdgeSpec>& edges) {
  Layout lay = layout(kind, g, k);
  lay.cfg.config = assemble(std::move(lay.comps), edges);
  return std::move(lay.cfg);
}

TheoremConfig build_theorem_config(TheoremKind kind, int g, int k) {
  Layout lay = layout(kind, g, k);
  std::vector<EdgeSpec> edges;
  switch (kind) {
    case TheoremKind::PrimR0: edges = prim_r0_edges(lay.cfg.m, R0EdgeRule::AsWritten); break;
    case TheoremKind::PrimGeneral: edges = prim_general_edges(lay.cfg.eps); break;
    case TheoremKind::NonPrim: edges = nonprim_edges(k, lay.cfg.l); break;
  }
  lay.cfg.config = assemble(std::move(lay.comps), edges);
  return std::move(lay.cfg);
}

}  // namespace k3lat
