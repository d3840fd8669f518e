#include "k3lat/matrix.hpp"

#include <utility>

#include "k3lat/errors.hpp"

namespace k3lat {
namespace {

template <typename T>
Matrix<T> multiply_impl(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) raise(ErrorKind::ShapeError, "matrix product with incompatible shapes");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

IntMatrix minor_without(const IntMatrix& m, std::size_t row, std::size_t col) {
  IntMatrix out(m.rows() - 1, m.cols() - 1);
  for (std::size_t r = 0, rr = 0; r < m.rows(); ++r) {
    if (r == row) continue;
    for (std::size_t c = 0, cc = 0; c < m.cols(); ++c) {
      if (c == col) continue;
      out(rr, cc++) = m(r, c);
    }
    ++rr;
  }
  return out;
}

}  // namespace

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) { return multiply_impl(a, b); }
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) { return multiply_impl(a, b); }

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

Integer determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) raise(ErrorKind::ShapeError, "determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  Integer sign = 1;
  Integer previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<Integer> smith_invariants(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t n = std::min(rows, cols);
  auto swap_rows = [&](std::size_t x, std::size_t y) {
    for (std::size_t c = 0; c < cols; ++c) std::swap(a(x, c), a(y, c));
  };
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, x), a(r, y));
  };
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      // Move the smallest non-zero entry of the trailing block to (t, t).
      std::size_t pr = rows, pc = cols;
      Integer best = 0;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (a(r, c) != 0 && (pr == rows || abs(a(r, c)) < best)) {
            best = abs(a(r, c));
            pr = r;
            pc = c;
          }
      if (pr == rows) {
        std::vector<Integer> out;
        for (std::size_t i = 0; i < n; ++i) out.push_back(i < t ? Integer(abs(a(i, i))) : Integer(0));
        return out;
      }
      swap_rows(t, pr);
      swap_cols(t, pc);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a(r, t) == 0) continue;
        Integer q = a(r, t) / a(t, t);
        for (std::size_t c = t; c < cols; ++c) a(r, c) -= q * a(t, c);
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a(t, c) == 0) continue;
        Integer q = a(t, c) / a(t, t);
        for (std::size_t r = t; r < rows; ++r) a(r, c) -= q * a(r, t);
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (a(r, c) % a(t, t) != 0) {
            for (std::size_t cc = t; cc < cols; ++cc) a(t, cc) += a(r, cc);
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
  std::vector<Integer> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(abs(a(i, i)));
  return out;
}

IntMatrix adjugate(const IntMatrix& m) {
  if (m.rows() != m.cols()) raise(ErrorKind::ShapeError, "adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  IntMatrix out(n, n);
  if (n == 1) {
    out(0, 0) = 1;
    return out;
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Integer cof = determinant(minor_without(m, r, c));
      out(c, r) = ((r + c) % 2 == 0) ? cof : Integer(-cof);
    }
  return out;
}

bool is_symmetric(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r + 1; c < m.cols(); ++c)
      if (m(r, c) != m(c, r)) return false;
  return true;
}

}  // namespace k3lat
