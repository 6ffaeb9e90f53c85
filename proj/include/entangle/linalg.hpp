#ifndef ENTANGLE_LINALG_HPP
#define ENTANGLE_LINALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace entangle {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator, 0 = 0/1), which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

// Dense exact-rational matrix, row-major. Zero-size matrices are allowed;
// they show up as flattenings of degenerate direct-sum blocks.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  const std::vector<Rational>& entries() const { return entries_; }

  RationalMatrix transposed() const;

  static RationalMatrix identity(std::size_t n);

  bool operator==(const RationalMatrix& o) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// Exact rank. Integer matrices with small entries take a fraction-free
// Bareiss path on 128-bit arithmetic; anything else (or an overflow) goes
// through pivoted rational elimination. Both routes are exact.
std::size_t rank(const RationalMatrix& m);

// cols - rank; the kernel dimension of w -> M w.
std::size_t nullity(const RationalMatrix& m);

// Exact determinant of a square matrix (0x0 has determinant 1).
Rational determinant(const RationalMatrix& m);

std::string to_string(const Rational& q);

}  // namespace entangle

#endif
