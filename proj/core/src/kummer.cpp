#include "k3lat/kummer.hpp"

#include <algorithm>
#include <cctype>

#include "k3lat/errors.hpp"
#include "k3lat/named_lattices.hpp"

namespace k3lat {
namespace {

std::size_t e_index(int i, int j) { return static_cast<std::size_t>((i - 1) * 4 + (j - 1)); }
std::size_t t_index(int i) { return static_cast<std::size_t>(16 + i - 1); }
std::size_t s_index(int j) { return static_cast<std::size_t>(20 + j - 1); }
constexpr std::size_t kF = 24;

}  // namespace

KummerSpan::KummerSpan(int fs_pairing) : fs_(fs_pairing) {
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) labels_.push_back("E" + std::to_string(i) + std::to_string(j));
  for (int i = 1; i <= 4; ++i) labels_.push_back("T" + std::to_string(i));
  for (int j = 1; j <= 4; ++j) labels_.push_back("S" + std::to_string(j));
  labels_.push_back("F");
  for (std::size_t k = 0; k < kSize; ++k) table_[k][k] = -2;
  table_[kF][kF] = 0;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      table_[t_index(i)][e_index(i, j)] = table_[e_index(i, j)][t_index(i)] = 1;
      table_[s_index(j)][e_index(i, j)] = table_[e_index(i, j)][s_index(j)] = 1;
    }
  for (int j = 1; j <= 4; ++j) table_[kF][s_index(j)] = table_[s_index(j)][kF] = fs_;
}

std::size_t KummerSpan::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) raise(ErrorKind::ShapeError, "unknown Kummer curve '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

KummerSpan::Combination KummerSpan::combination(std::string_view expr) const {
  Combination out{};
  std::size_t i = 0;
  auto skip = [&]() {
    while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i;
  };
  skip();
  while (i < expr.size()) {
    int sign = 1;
    if (expr[i] == '+' || expr[i] == '-') {
      sign = expr[i] == '-' ? -1 : 1;
      ++i;
      skip();
    }
    Integer coeff = 1;
    std::size_t start = i;
    while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) ++i;
    if (i > start) coeff = parse_integer(expr.substr(start, i - start));
    if (i < expr.size() && expr[i] == '*') ++i;
    start = i;
    while (i < expr.size() && std::isalnum(static_cast<unsigned char>(expr[i]))) ++i;
    if (i == start) raise(ErrorKind::ShapeError, "malformed Kummer combination '" + std::string(expr) + "'");
    out[index_of(expr.substr(start, i - start))] += sign * coeff;
    skip();
  }
  return out;
}

Integer KummerSpan::pairing(const Combination& a, const Combination& b) const {
  Integer total = 0;
  for (std::size_t i = 0; i < kSize; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < kSize; ++j)
      if (b[j] != 0 && table_[i][j] != 0) total += a[i] * b[j] * table_[i][j];
  }
  return total;
}

std::array<std::string, 5> kummer_curve_expressions(int d) {
  if (d < 1 || d > 5) raise(ErrorKind::RangeError, "Kummer configuration needs 1 <= d <= 5");
  std::string g3 = "T4";
  if (d <= 3) {
    for (int i = 1; i <= d; ++i) g3 += "+E4" + std::to_string(i);
  } else {
    for (int i = 1; i <= d - 3; ++i) g3 += "+E4" + std::to_string(i);
    g3 += "+E44+S4+E24+T2+E21+E22+E23";
  }
  return {"S1+E11+T1+E12+S2+E13+S3", "F+S4+E24+T2+E21+E22+E23", "T3+E31+E32+E33", "T2+E21+E22", g3};
}

KummerCheck verify_kummer(int d, const KummerSpan& span) {
  KummerCheck out;
  out.d = d;
  const auto exprs = kummer_curve_expressions(d);
  std::array<KummerSpan::Combination, 5> curves;
  for (std::size_t i = 0; i < 5; ++i) curves[i] = span.combination(exprs[i]);
  out.gram = IntMatrix(5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) out.gram(i, j) = span.pairing(curves[i], curves[j]);
  out.gram_matches = out.gram == build_K(d)->gram();
  const std::array<const char*, 5> tests{"T1", "T3", "E41", "E24", "E23"};
  out.test_matrix = IntMatrix(5, 5);
  for (std::size_t r = 0; r < 5; ++r) {
    const auto t = span.combination(tests[r]);
    for (std::size_t c = 0; c < 5; ++c) out.test_matrix(r, c) = span.pairing(t, curves[c]);
  }
  out.test_invariants = smith_invariants(out.test_matrix);
  out.primitive = std::all_of(out.test_invariants.begin(), out.test_invariants.end(),
                              [](const Integer& x) { return x == 1; });
  return out;
}

}  // namespace k3lat
