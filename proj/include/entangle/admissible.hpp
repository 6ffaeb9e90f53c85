#ifndef ENTANGLE_ADMISSIBLE_HPP
#define ENTANGLE_ADMISSIBLE_HPP

#include <vector>

#include "entangle/tensor.hpp"

namespace entangle {

// Nullity triple (n1,n2,n3); admissibility is relative to a Dims context.
struct AdmissibleTriple {
  long n1 = 0, n2 = 0, n3 = 0;
  bool operator==(const AdmissibleTriple&) const = default;
  auto operator<=>(const AdmissibleTriple&) const = default;
};

// Upper bound and the three conjectured lower bounds on n123 for a given
// admissible triple. The lowers are nested: c1 <= c2 <= c3.
struct N123Bounds {
  long upper = 0;
  long lower_c1 = 0, lower_c2 = 0, lower_c3 = 0;
};

// True iff for every axis split {a,b,c}:
//   max(0, d_a - d_b*d_c) <= n_a <= d_a  and
//   d_a - n_a <= (d_b - n_b)(d_c - n_c).
bool is_admissible(Dims dims, long n1, long n2, long n3);

// All admissible triples in lexicographic order.
std::vector<AdmissibleTriple> enumerate_admissible(Dims dims);

// N_{d1,d2,d3}: the number of admissible triples, computed by the pruned
// rank-triple sum (1 for the zero tensor plus all positive rank triples
// with r_a*r_b >= r_c pairwise).
long count_admissible(Dims dims);

// The closed-form approximation to N_{d,d,d}:
//   d^3 + (3/4)d^2 + 11/16 - (3/2)(d+1/2)^2 ln(d+1/2).
double approx_count_equal(long d);

// Bounds on n123 for an admissible triple; throws std::invalid_argument
// on an inadmissible one.
N123Bounds n123_bounds(Dims dims, AdmissibleTriple t);

}  // namespace entangle

#endif
