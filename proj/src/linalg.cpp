#include "entangle/linalg.hpp"

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>

namespace entangle {

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

namespace {

using i128 = __int128;

// Entry-magnitude cap for the integer path; products of two capped values
// fit comfortably in 128 bits.
constexpr i128 kIntCap = i128{1} << 62;

i128 iabs(i128 x) { return x < 0 ? -x : x; }

// Fraction-free Bareiss elimination. Returns the rank, or nullopt if an
// intermediate value outgrew the cap.
std::optional<std::size_t> rank_bareiss(std::vector<i128> m, std::size_t rows,
                                        std::size_t cols) {
  auto at = [&](std::size_t r, std::size_t c) -> i128& {
    return m[r * cols + c];
  };
  i128 prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Smallest-magnitude nonzero pivot keeps coefficient growth down.
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (at(i, c) != 0 && (piv == rows || iabs(at(i, c)) < iabs(at(piv, c))))
        piv = i;
    }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(at(piv, j), at(r, j));
    const i128 p = at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const i128 f = at(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (iabs(at(i, j)) >= kIntCap || iabs(at(r, j)) >= kIntCap ||
            iabs(p) >= kIntCap || iabs(f) >= kIntCap)
          return std::nullopt;
        at(i, j) = (p * at(i, j) - f * at(r, j)) / prev;
        if (iabs(at(i, j)) >= kIntCap) return std::nullopt;
      }
      at(i, c) = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

std::size_t rank_rational(const RationalMatrix& in) {
  std::vector<Rational> m(in.entries());
  const std::size_t rows = in.rows(), cols = in.cols();
  auto at = [&](std::size_t r, std::size_t c) -> Rational& {
    return m[r * cols + c];
  };
  std::size_t r = 0;
  Rational factor, tmp;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (at(i, c) == 0) continue;
      if (piv == rows ||
          mpz_cmpabs(at(i, c).get_num_mpz_t(), at(piv, c).get_num_mpz_t()) < 0)
        piv = i;
    }
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j < cols; ++j) swap(at(piv, j), at(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (at(i, c) == 0) continue;
      factor = at(i, c) / at(r, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (at(r, j) == 0) continue;
        tmp = factor * at(r, j);
        at(i, j) -= tmp;
      }
      at(i, c) = 0;
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  // Integer fast path when every entry is an integral value in 64 bits.
  std::vector<i128> ints;
  ints.reserve(m.rows() * m.cols());
  bool integral = true;
  for (const Rational& q : m.entries()) {
    if (q.get_den() != 1 || !q.get_num().fits_slong_p()) {
      integral = false;
      break;
    }
    ints.push_back(q.get_num().get_si());
  }
  if (integral) {
    if (auto r = rank_bareiss(std::move(ints), m.rows(), m.cols())) return *r;
  }
  return rank_rational(m);
}

std::size_t nullity(const RationalMatrix& m) { return m.cols() - rank(m); }

Rational determinant(const RationalMatrix& in) {
  if (in.rows() != in.cols())
    throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = in.rows();
  std::vector<Rational> m(in.entries());
  auto at = [&](std::size_t r, std::size_t c) -> Rational& {
    return m[r * n + c];
  };
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = c; j < n; ++j) swap(at(piv, j), at(c, j));
      det = -det;
    }
    det *= at(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (at(i, c) == 0) continue;
      Rational f = at(i, c) / at(c, c);
      for (std::size_t j = c + 1; j < n; ++j) at(i, j) -= f * at(c, j);
    }
  }
  return det;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace entangle
