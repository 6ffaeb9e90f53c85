#ifndef ENTANGLE_TENSOR_HPP
#define ENTANGLE_TENSOR_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "entangle/linalg.hpp"

namespace entangle {

// Dimensions (d1,d2,d3). Zero is allowed so that degenerate direct-sum
// blocks like 0_0^{0,0,2} are representable.
struct Dims {
  int d1 = 0, d2 = 0, d3 = 0;

  int operator[](int axis) const {  // axis in 1..3
    switch (axis) {
      case 1: return d1;
      case 2: return d2;
      case 3: return d3;
    }
    throw std::out_of_range("Dims: axis must be 1, 2 or 3");
  }
  int& operator[](int axis) {
    switch (axis) {
      case 1: return d1;
      case 2: return d2;
      case 3: return d3;
    }
    throw std::out_of_range("Dims: axis must be 1, 2 or 3");
  }
  long total() const { return long{d1} * d2 * d3; }
  bool operator==(const Dims&) const = default;
};

std::string to_string(const Dims& d);

// Nonempty subset of {1,2,3}; labels the axes a direct sum acts on.
class AxisSet {
 public:
  AxisSet(std::initializer_list<int> axes);
  explicit AxisSet(unsigned mask);  // bit a-1 set <=> axis a in the set

  bool contains(int axis) const { return mask_ >> (axis - 1) & 1u; }
  int size() const;
  unsigned mask() const { return mask_; }
  bool full() const { return mask_ == 0b111u; }

  static AxisSet all() { return AxisSet{1, 2, 3}; }

  std::string to_string() const;  // e.g. "123", "13"
  bool operator==(const AxisSet&) const = default;

 private:
  unsigned mask_;
};

// Dense 3-tensor of rationals; indices are 1-based in the API.
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(Dims dims)
      : dims_(dims), entries_(static_cast<std::size_t>(dims.total())) {
    if (dims.d1 < 0 || dims.d2 < 0 || dims.d3 < 0)
      throw std::invalid_argument("Tensor3: negative dimension");
  }

  const Dims& dims() const { return dims_; }

  Rational& at(int i, int j, int k) { return entries_[index(i, j, k)]; }
  const Rational& at(int i, int j, int k) const {
    return entries_[index(i, j, k)];
  }

  const std::vector<Rational>& entries() const { return entries_; }
  std::vector<Rational>& entries() { return entries_; }

  bool is_zero() const;
  bool operator==(const Tensor3&) const = default;

 private:
  std::size_t index(int i, int j, int k) const {
    if (i < 1 || i > dims_.d1 || j < 1 || j > dims_.d2 || k < 1 ||
        k > dims_.d3)
      throw std::out_of_range("Tensor3: index out of range");
    return (static_cast<std::size_t>(i - 1) * dims_.d2 + (j - 1)) * dims_.d3 +
           (k - 1);
  }

  Dims dims_;
  std::vector<Rational> entries_;
};

// Raised by parse_term_list on malformed input; position is a 0-based
// offset into the text.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg), position(position) {}
  std::size_t position;
};

// Term-list grammar:
//   expr := '0' | term (('+'|'-') term)*
//   term := [coeff '*'] '[' int ',' int ',' int ']'
//   coeff := int ['/' posint]
// Whitespace is ignored; an empty string is the zero tensor. Repeated
// terms have their coefficients summed.
Tensor3 parse_term_list(std::string_view text, Dims dims);

// Canonical form: lexicographic (i,j,k) order, unit coefficients omitted,
// zero tensor prints as "0". parse(format(t)) == t.
std::string format_term_list(const Tensor3& t);

// Contracts a square matrix against one axis:
//   new(l on axis) = sum_s m[l][s] * old(s on axis).
Tensor3 mode_transform(const Tensor3& t, int axis, const RationalMatrix& m);

// perm[a-1] is the destination axis of source axis a.
Tensor3 axis_permute(const Tensor3& t, const std::array<int, 3>& perm);

// Diagonal block embedding along the given axes. Axes outside the set must
// have equal dimension in all parts; along each axis in the set, part q is
// offset by the sum of the preceding parts' dimensions.
Tensor3 direct_sum_embed(const std::vector<Tensor3>& parts, AxisSet axes);

// Rank-one split: entry = factor[slot on `axis`] * plane[other two slots],
// the other two axes taken in ascending order.
Tensor3 tensor_product(const std::vector<Rational>& factor,
                       const RationalMatrix& plane, int axis);

}  // namespace entangle

#endif
