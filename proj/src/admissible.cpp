#include "entangle/admissible.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace entangle {

namespace {

bool axis_ok(long da, long db, long dc, long na, long nb, long nc) {
  if (na < std::max(0L, da - db * dc) || na > da) return false;
  return da - na <= (db - nb) * (dc - nc);
}

}  // namespace

bool is_admissible(Dims dims, long n1, long n2, long n3) {
  const long d1 = dims.d1, d2 = dims.d2, d3 = dims.d3;
  return axis_ok(d1, d2, d3, n1, n2, n3) && axis_ok(d2, d1, d3, n2, n1, n3) &&
         axis_ok(d3, d1, d2, n3, n1, n2);
}

std::vector<AdmissibleTriple> enumerate_admissible(Dims dims) {
  std::vector<AdmissibleTriple> out;
  for (long n1 = 0; n1 <= dims.d1; ++n1)
    for (long n2 = 0; n2 <= dims.d2; ++n2)
      for (long n3 = 0; n3 <= dims.d3; ++n3)
        if (is_admissible(dims, n1, n2, n3)) out.push_back({n1, n2, n3});
  return out;
}

long count_admissible(Dims dims) {
  const long d1 = dims.d1, d2 = dims.d2, d3 = dims.d3;
  if (d1 <= 0 || d2 <= 0 || d3 <= 0) return d1 == 0 || d2 == 0 || d3 == 0;
  // 1 for the zero tensor, plus all rank triples r_a >= 1 with
  // r_a * r_b >= r_c for every pair. Prune on r1*r2 >= r3.
  long count = 1;
  for (long r1 = 1; r1 <= d1; ++r1)
    for (long r2 = 1; r2 <= d2; ++r2) {
      // r3 must lie in [lo, hi] with r1*r3 >= r2, r2*r3 >= r1, r3 <= r1*r2.
      const long lo = std::max({1L, (r2 + r1 - 1) / r1, (r1 + r2 - 1) / r2});
      const long hi = std::min(static_cast<long>(d3), r1 * r2);
      if (hi >= lo) count += hi - lo + 1;
    }
  return count;
}

double approx_count_equal(long d) {
  if (d < 1) throw std::invalid_argument("approx_count_equal: d must be >= 1");
  const double x = static_cast<double>(d);
  const double h = x + 0.5;
  return x * x * x + 0.75 * x * x + 11.0 / 16.0 - 1.5 * h * h * std::log(h);
}

N123Bounds n123_bounds(Dims dims, AdmissibleTriple t) {
  if (!is_admissible(dims, t.n1, t.n2, t.n3))
    throw std::invalid_argument("n123_bounds: triple not admissible");
  const long d1 = dims.d1, d2 = dims.d2, d3 = dims.d3;
  const long n1 = t.n1, n2 = t.n2, n3 = t.n3;
  N123Bounds b;
  b.upper = d1 * d2 * d3 -
            std::max({d1 * (d1 - n1), d2 * (d2 - n2), d3 * (d3 - n3)});
  b.lower_c1 = std::max({(d1 * d2 - d3 + n3) * n3, (d1 * d3 - d2 + n2) * n2,
                         (d2 * d3 - d1 + n1) * n1});
  const long base = n1 * ((d2 - n2) * (d3 - n3) - (d1 - n1)) +
                    n2 * ((d1 - n1) * (d3 - n3) - (d2 - n2)) +
                    n3 * ((d1 - n1) * (d2 - n2) - (d3 - n3));
  b.lower_c2 = base + std::max({n1 * (d2 * n3 + n2 * d3 - n2 * n3),
                                n2 * (d1 * n3 + n1 * d3 - n1 * n3),
                                n3 * (d1 * n2 + n1 * d2 - n1 * n2)});
  b.lower_c3 = b.lower_c2 + std::min({(d1 - n1) * n2 * n3,
                                      n1 * (d2 - n2) * n3,
                                      n1 * n2 * (d3 - n3)});
  return b;
}

}  // namespace entangle
