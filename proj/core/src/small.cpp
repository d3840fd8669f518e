#include "k3lat/detail/small.hpp"

#include <limits>

#include "k3lat/errors.hpp"

namespace k3lat::detail {

std::int64_t narrow(__int128 value) {
  if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min())
    raise(ErrorKind::RangeError, "64-bit overflow in search arithmetic");
  return static_cast<std::int64_t>(value);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) raise(ErrorKind::RangeError, "64-bit overflow in search arithmetic");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) raise(ErrorKind::RangeError, "64-bit overflow in search arithmetic");
  return out;
}

SmallGram::SmallGram(const GramLattice& lattice) : n_(lattice.rank()), g_(n_ * n_) {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) g_[i * n_ + j] = to_int64(lattice.entry(i, j));
}

std::int64_t SmallGram::pair(const IVec& a, const IVec& b) const {
  __int128 total = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    __int128 row = 0;
    for (std::size_t j = 0; j < n_; ++j) row += static_cast<__int128>(g_[i * n_ + j]) * b[j];
    total += static_cast<__int128>(a[i]) * narrow(row);
  }
  return narrow(total);
}

IVec SmallGram::apply(const IVec& v) const {
  IVec out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    __int128 row = 0;
    for (std::size_t j = 0; j < n_; ++j) row += static_cast<__int128>(g_[i * n_ + j]) * v[j];
    out[i] = narrow(row);
  }
  return out;
}

std::int64_t dot(const IVec& a, const IVec& b) {
  __int128 total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += static_cast<__int128>(a[i]) * b[i];
  return narrow(total);
}

IVec add(const IVec& a, const IVec& b) {
  IVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return out;
}

IVec sub(const IVec& a, const IVec& b) {
  IVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = narrow(static_cast<__int128>(a[i]) - b[i]);
  return out;
}

IVec scale(std::int64_t k, const IVec& a) {
  IVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_mul(k, a[i]);
  return out;
}

IVec negate(const IVec& a) { return scale(-1, a); }

bool is_zero(const IVec& a) {
  for (auto x : a)
    if (x != 0) return false;
  return true;
}

IVec to_ivec(const DivisorClass& d) {
  IVec out(d.rank());
  for (std::size_t i = 0; i < d.rank(); ++i) out[i] = to_int64(d[i]);
  return out;
}

DivisorClass to_class(const LatticePtr& lattice, const IVec& v) {
  std::vector<Integer> coords(v.begin(), v.end());
  return DivisorClass(lattice, std::move(coords));
}

}  // namespace k3lat::detail
