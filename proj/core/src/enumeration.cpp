#include "k3lat/enumeration.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "k3lat/errors.hpp"

namespace k3lat {
namespace detail {
namespace {

// Textbook LLL on an integer basis under a positive definite inner product.
template <typename Inner>
void lll_reduce(std::vector<IVec>& b, Inner inner) {
  const std::size_t m = b.size();
  if (m < 2) return;
  std::vector<std::vector<double>> mu(m, std::vector<double>(m, 0.0));
  std::vector<double> bstar(m, 0.0);
  auto gram_schmidt = [&]() {
    std::vector<std::vector<double>> g(m, std::vector<double>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j <= i; ++j) g[i][j] = g[j][i] = static_cast<double>(inner(b[i], b[j]));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        double s = g[i][j];
        for (std::size_t t = 0; t < j; ++t) s -= mu[j][t] * mu[i][t] * bstar[t];
        mu[i][j] = s / bstar[j];
      }
      double s = g[i][i];
      for (std::size_t t = 0; t < i; ++t) s -= mu[i][t] * mu[i][t] * bstar[t];
      bstar[i] = s;
    }
  };
  gram_schmidt();
  std::size_t k = 1;
  int guard = 0;
  while (k < m && guard++ < 100000) {
    for (std::size_t jj = k; jj-- > 0;) {
      const double q = std::round(mu[k][jj]);
      if (q != 0.0) {
        const auto qi = static_cast<std::int64_t>(q);
        b[k] = sub(b[k], scale(qi, b[jj]));
        gram_schmidt();
      }
    }
    if (bstar[k] < (0.99 - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]) {
      std::swap(b[k], b[k - 1]);
      gram_schmidt();
      k = std::max<std::size_t>(k - 1, 1);
    } else {
      ++k;
    }
  }
}

}  // namespace

SliceEnumerator::SliceEnumerator(const LatticePtr& lattice, const IVec& reference)
    : gram_(*lattice), reference_(reference) {
  const auto& sig = lattice->profile().signature;
  if (sig.positive != 1)
    raise(ErrorKind::SignatureError, "enumeration requires a lattice of signature (1, n-1)");
  reference_square_ = gram_.square(reference_);
  if (reference_square_ <= 0) raise(ErrorKind::NotPositiveClass, "reference class must have positive square");
  functional_ = gram_.apply(reference_);

  // Column operations bringing the functional to (c, 0, ..., 0).
  const std::size_t n = gram_.rank();
  std::vector<IVec> cols(n, IVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) cols[i][i] = 1;
  IVec f = functional_;
  while (true) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (f[i] != 0 && (p == n || std::llabs(f[i]) < std::llabs(f[p]))) p = i;
    bool single = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == p || f[j] == 0) continue;
      const std::int64_t q = f[j] / f[p];
      f[j] -= q * f[p];
      cols[j] = sub(cols[j], scale(q, cols[p]));
      if (f[j] != 0) single = false;
    }
    if (single) {
      if (f[p] < 0) {
        f[p] = -f[p];
        cols[p] = negate(cols[p]);
      }
      content_ = f[p];
      lift_ = cols[p];
      for (std::size_t j = 0; j < n; ++j)
        if (j != p) complement_.push_back(cols[j]);
      break;
    }
  }

  auto inner = [this](const IVec& u, const IVec& v) { return -gram_.pair(u, v); };
  lll_reduce(complement_, inner);

  const std::size_t m = complement_.size();
  a_.assign(m * m, 0);
  lift_pairings_.assign(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) a_[i * m + j] = inner(complement_[i], complement_[j]);
    lift_pairings_[i] = gram_.pair(complement_[i], lift_);
  }
  // Upper Cholesky A = R^T R; store mu_ij = r_ij / r_ii and q_ii = r_ii^2.
  std::vector<double> r(m * m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      double s = static_cast<double>(a_[i * m + j]);
      for (std::size_t t = 0; t < i; ++t) s -= r[t * m + i] * r[t * m + j];
      if (i == j) {
        if (s <= 0) raise(ErrorKind::SignatureError, "orthogonal complement is not negative definite");
        r[i * m + i] = std::sqrt(s);
      } else {
        r[i * m + j] = s / r[i * m + i];
      }
    }
  }
  chol_.assign(m * m, 0.0);
  diag_.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    diag_[i] = r[i * m + i] * r[i * m + i];
    for (std::size_t j = i + 1; j < m; ++j) chol_[i * m + j] = r[i * m + j] / r[i * m + i];
  }
}

std::uint64_t SliceEnumerator::slice(std::int64_t k, std::int64_t square_min, std::int64_t square_max,
                                     std::vector<IVec>& out) const {
  if (square_max < square_min) return 0;
  if (k % content_ != 0) return 0;
  const std::int64_t y = k / content_;
  const IVec base = scale(y, lift_);
  const std::int64_t base_square = gram_.square(base);
  const std::size_t m = complement_.size();
  const std::size_t start = out.size();

  auto emit_if = [&](const IVec& v) {
    const std::int64_t s = gram_.square(v);
    if (s >= square_min && s <= square_max) {
      assert(degree(v) == k);
      out.push_back(v);
    }
  };

  if (m == 0) {
    emit_if(base);
    return 1;
  }

  // v = base + sum w_j c_j;  v^2 = base^2 + 2 b.w - w^T A w  with  b_j = y * (c_j . lift).
  std::vector<double> b(m);
  for (std::size_t j = 0; j < m; ++j) b[j] = static_cast<double>(y) * static_cast<double>(lift_pairings_[j]);
  // Center z = A^{-1} b via the stored factorization A = R^T R.
  std::vector<double> z(m);
  {
    std::vector<double> u(m);
    for (std::size_t i = 0; i < m; ++i) {  // solve R^T u = b
      double s = b[i];
      for (std::size_t t = 0; t < i; ++t) s -= chol_[t * m + i] * std::sqrt(diag_[t]) * u[t];
      u[i] = s / std::sqrt(diag_[i]);
    }
    for (std::size_t i = m; i-- > 0;) {  // solve R z = u
      double s = u[i];
      for (std::size_t t = i + 1; t < m; ++t) s -= chol_[i * m + t] * std::sqrt(diag_[i]) * z[t];
      z[i] = s / std::sqrt(diag_[i]);
    }
  }
  double bz = 0;
  for (std::size_t j = 0; j < m; ++j) bz += b[j] * z[j];
  const double radius = static_cast<double>(base_square) - static_cast<double>(square_min) + bz;
  const double slack = 1e-7 * (1.0 + std::fabs(radius) + std::fabs(bz));
  if (radius < -slack) return 0;

  std::uint64_t nodes = 0;
  std::vector<std::int64_t> w(m, 0);
  std::vector<double> partial(m + 1, 0.0);  // accumulated form value from levels > i
  std::vector<double> centre(m, 0.0);
  std::vector<std::int64_t> upper(m, 0);

  // Iterative Fincke-Pohst from the last coordinate down.
  auto set_range = [&](std::size_t i) -> bool {
    double c = z[i];
    for (std::size_t j = i + 1; j < m; ++j) c -= chol_[i * m + j] * (static_cast<double>(w[j]) - z[j]);
    centre[i] = c;
    const double rem = radius - partial[i + 1];
    if (rem < -slack) return false;
    const double half = std::sqrt(std::max(rem, 0.0) / diag_[i]) + 1e-7 * (1.0 + std::fabs(c));
    const double lo = std::ceil(c - half);
    const double hi = std::floor(c + half);
    if (lo > hi) return false;
    w[i] = static_cast<std::int64_t>(lo);
    upper[i] = static_cast<std::int64_t>(hi);
    return true;
  };

  std::size_t level = m - 1;
  partial[m] = 0.0;
  bool ok = set_range(level);
  while (true) {
    if (!ok || w[level] > upper[level]) {
      if (level == m - 1) break;
      ++level;
      ++w[level];
      ok = true;
      continue;
    }
    ++nodes;
    const double t = static_cast<double>(w[level]) - centre[level];
    partial[level] = partial[level + 1] + diag_[level] * t * t;
    if (level == 0) {
      IVec v = base;
      for (std::size_t j = 0; j < m; ++j)
        if (w[j] != 0) v = add(v, scale(w[j], complement_[j]));
      emit_if(v);
      ++w[0];
      continue;
    }
    --level;
    ok = set_range(level);
  }
  std::sort(out.begin() + static_cast<std::ptrdiff_t>(start), out.end());
  return nodes;
}

}  // namespace detail

CompletenessBound completeness_bound(const DivisorClass& reference, const Integer& square_min,
                                     const Integer& square_max, const Integer& degree_min,
                                     const Integer& degree_max) {
  const auto& lattice = *reference.lattice();
  const std::size_t n = lattice.rank();
  CompletenessBound out;
  out.reference_square = reference.square();
  out.square_min = square_min;
  out.square_max = square_max;
  out.degree_min = degree_min;
  out.degree_max = degree_max;
  std::vector<Integer> h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i] += lattice.entry(i, j) * reference[j];
  out.form = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.form(i, j) = 2 * h[i] * h[j] - out.reference_square * lattice.entry(i, j);
  out.form_determinant = determinant(out.form);
  const Integer kmax = std::max(abs(degree_min), abs(degree_max));
  out.level = 2 * kmax * kmax - out.reference_square * square_min;
  if (out.level < 0 || degree_min > degree_max) out.level = 0;
  IntMatrix adj = adjugate(out.form);
  out.box.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.box[i] = isqrt(out.level * adj(i, i) / out.form_determinant);
  return out;
}

EnumResult enumerate_window(const DivisorClass& reference, const Integer& square_min, const Integer& square_max,
                            const Integer& degree_min, const Integer& degree_max) {
  const auto& lattice = reference.lattice();
  detail::SliceEnumerator en(lattice, detail::to_ivec(reference));
  EnumResult result;
  result.bound = completeness_bound(reference, square_min, square_max, degree_min, degree_max);
  if (degree_min > degree_max || square_min > square_max) return result;
  const std::int64_t smin = to_int64(square_min);
  const std::int64_t smax = to_int64(square_max);
  std::vector<detail::IVec> found;
  for (std::int64_t k = to_int64(degree_min); k <= to_int64(degree_max); ++k)
    result.nodes_visited += en.slice(k, smin, smax, found);
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  result.classes.reserve(found.size());
  for (const auto& v : found) {
    DivisorClass d = detail::to_class(lattice, v);
#ifndef NDEBUG
    const Integer s = d.square();
    const Integer k = pairing(d, reference);
    assert(s >= square_min && s <= square_max && k >= degree_min && k <= degree_max);
#endif
    result.classes.push_back(std::move(d));
  }
  return result;
}

EnumResult enumerate_by_square_and_degree(const EnumQuery& query) {
  return enumerate_window(query.reference, query.square, query.square, query.degree_min, query.degree_max);
}

std::vector<DivisorClass> roots_orthogonal_to(const DivisorClass& d) {
  if (d.square() <= 0) raise(ErrorKind::NotPositiveClass, "roots_orthogonal_to requires a class of positive square");
  return enumerate_window(d, -2, -2, 0, 0).classes;
}

}  // namespace k3lat
