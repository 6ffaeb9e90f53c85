#ifndef ENTANGLE_INVARIANTS_HPP
#define ENTANGLE_INVARIANTS_HPP

#include <string>

#include "entangle/tensor.hpp"

namespace entangle {

// The seven kernel dimensions of a tensor. n12 etc. are the pair
// invariants; n123 the triple one. For a tensor at dims (d1,d2,d3) the
// identity d_a - n_a = d_b*d_c - n_bc holds for every axis split.
struct Signature {
  long n1 = 0, n2 = 0, n3 = 0;
  long n12 = 0, n13 = 0, n23 = 0;
  long n123 = 0;

  bool operator==(const Signature&) const = default;
};

std::string to_string(const Signature& s);

// Single-axis flattening: columns indexed by the axis-a slot, rows by the
// remaining two slots, row-major in ascending axis order. nullity = n_a.
RationalMatrix flatten(const Tensor3& t, int axis);

// Pair flattening for {b,c}: columns indexed by (slot_b, slot_c) pairs
// (b < c, slot_b major), rows by the third axis. nullity = n_bc.
RationalMatrix flatten(const Tensor3& t, int b, int c);

// Constraint matrix of the triple kernel: d1*d2*d3 columns (unknowns
// w_{i,j,k}, row-major) and d1^2+d2^2+d3^2 rows; for each axis and each
// (slot, slot0) pair the row sum_{rest} v[slot on axis] * w[slot0 on axis].
// nullity = n123.
RationalMatrix triple_kernel_matrix(const Tensor3& t);

// All seven nullities. Throws std::logic_error if the rank identity
// d_a - n_a = d_b*d_c - n_bc fails (an implementation bug, never input).
Signature signature(const Tensor3& t);

}  // namespace entangle

#endif
