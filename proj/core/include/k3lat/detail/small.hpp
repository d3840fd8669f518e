#pragma once

#include <cstdint>
#include <vector>

#include "k3lat/lattice.hpp"

// 64-bit kernels shared by the search routines. All arithmetic is overflow checked;
// values that leave the 64-bit range raise RangeError.
namespace k3lat::detail {

using IVec = std::vector<std::int64_t>;

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t narrow(__int128 value);

class SmallGram {
 public:
  explicit SmallGram(const GramLattice& lattice);

  std::size_t rank() const { return n_; }
  std::int64_t entry(std::size_t i, std::size_t j) const { return g_[i * n_ + j]; }
  std::int64_t pair(const IVec& a, const IVec& b) const;
  std::int64_t square(const IVec& a) const { return pair(a, a); }
  // G * v
  IVec apply(const IVec& v) const;

 private:
  std::size_t n_;
  std::vector<std::int64_t> g_;
};

std::int64_t dot(const IVec& a, const IVec& b);
IVec add(const IVec& a, const IVec& b);
IVec sub(const IVec& a, const IVec& b);
IVec scale(std::int64_t k, const IVec& a);
IVec negate(const IVec& a);
bool is_zero(const IVec& a);

IVec to_ivec(const DivisorClass& d);
DivisorClass to_class(const LatticePtr& lattice, const IVec& v);

}  // namespace k3lat::detail
