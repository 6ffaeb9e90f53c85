#include "entangle/invariants.hpp"

#include <sstream>
#include <stdexcept>

namespace entangle {

std::string to_string(const Signature& s) {
  std::ostringstream out;
  out << '(' << s.n1 << ',' << s.n2 << ',' << s.n3 << ',' << s.n12 << ','
      << s.n13 << ',' << s.n23 << ',' << s.n123 << ')';
  return out.str();
}

RationalMatrix flatten(const Tensor3& t, int axis) {
  if (axis < 1 || axis > 3)
    throw std::invalid_argument("flatten: bad axis");
  const Dims& d = t.dims();
  int b = axis == 1 ? 2 : 1;
  int c = axis == 3 ? 2 : 3;
  RationalMatrix m(static_cast<std::size_t>(d[b]) * d[c],
                   static_cast<std::size_t>(d[axis]));
  for (int i = 1; i <= d.d1; ++i)
    for (int j = 1; j <= d.d2; ++j)
      for (int k = 1; k <= d.d3; ++k) {
        int slot[4] = {0, i, j, k};
        std::size_t row =
            static_cast<std::size_t>(slot[b] - 1) * d[c] + (slot[c] - 1);
        m.at(row, slot[axis] - 1) = t.at(i, j, k);
      }
  return m;
}

RationalMatrix flatten(const Tensor3& t, int b, int c) {
  if (b < 1 || c > 3 || b >= c)
    throw std::invalid_argument("flatten: pair must satisfy 1 <= b < c <= 3");
  const Dims& d = t.dims();
  int a = 6 - b - c;  // the remaining axis
  RationalMatrix m(static_cast<std::size_t>(d[a]),
                   static_cast<std::size_t>(d[b]) * d[c]);
  for (int i = 1; i <= d.d1; ++i)
    for (int j = 1; j <= d.d2; ++j)
      for (int k = 1; k <= d.d3; ++k) {
        int slot[4] = {0, i, j, k};
        std::size_t col =
            static_cast<std::size_t>(slot[b] - 1) * d[c] + (slot[c] - 1);
        m.at(slot[a] - 1, col) = t.at(i, j, k);
      }
  return m;
}

RationalMatrix triple_kernel_matrix(const Tensor3& t) {
  const Dims& d = t.dims();
  const std::size_t cols = static_cast<std::size_t>(d.total());
  const std::size_t rows = static_cast<std::size_t>(d.d1) * d.d1 +
                           static_cast<std::size_t>(d.d2) * d.d2 +
                           static_cast<std::size_t>(d.d3) * d.d3;
  RationalMatrix m(rows, cols);
  auto w = [&](int i, int j, int k) {
    return (static_cast<std::size_t>(i - 1) * d.d2 + (j - 1)) * d.d3 + (k - 1);
  };
  std::size_t row = 0;
  // Axis-1 block: for each (i, i0), sum_{j,k} v[i,j,k] * w[i0,j,k].
  for (int i = 1; i <= d.d1; ++i)
    for (int i0 = 1; i0 <= d.d1; ++i0, ++row)
      for (int j = 1; j <= d.d2; ++j)
        for (int k = 1; k <= d.d3; ++k)
          m.at(row, w(i0, j, k)) = t.at(i, j, k);
  for (int j = 1; j <= d.d2; ++j)
    for (int j0 = 1; j0 <= d.d2; ++j0, ++row)
      for (int i = 1; i <= d.d1; ++i)
        for (int k = 1; k <= d.d3; ++k)
          m.at(row, w(i, j0, k)) = t.at(i, j, k);
  for (int k = 1; k <= d.d3; ++k)
    for (int k0 = 1; k0 <= d.d3; ++k0, ++row)
      for (int i = 1; i <= d.d1; ++i)
        for (int j = 1; j <= d.d2; ++j)
          m.at(row, w(i, j, k0)) = t.at(i, j, k);
  return m;
}

Signature signature(const Tensor3& t) {
  const Dims& d = t.dims();
  Signature s;
  s.n1 = static_cast<long>(nullity(flatten(t, 1)));
  s.n2 = static_cast<long>(nullity(flatten(t, 2)));
  s.n3 = static_cast<long>(nullity(flatten(t, 3)));
  s.n12 = static_cast<long>(nullity(flatten(t, 1, 2)));
  s.n13 = static_cast<long>(nullity(flatten(t, 1, 3)));
  s.n23 = static_cast<long>(nullity(flatten(t, 2, 3)));
  s.n123 = static_cast<long>(nullity(triple_kernel_matrix(t)));
  // The single-axis and pair nullities must agree through the rank
  // identity d_a - n_a = d_b*d_c - n_bc.
  bool ok = d.d1 - s.n1 == long{d.d2} * d.d3 - s.n23 &&
            d.d2 - s.n2 == long{d.d1} * d.d3 - s.n13 &&
            d.d3 - s.n3 == long{d.d1} * d.d2 - s.n12;
  if (!ok)
    throw std::logic_error("signature: rank identity violated (bug)");
  return s;
}

}  // namespace entangle
