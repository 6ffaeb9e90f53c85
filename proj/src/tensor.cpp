#include "entangle/tensor.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <tuple>

namespace entangle {

std::string to_string(const Dims& d) {
  std::ostringstream out;
  out << d.d1 << ',' << d.d2 << ',' << d.d3;
  return out.str();
}

AxisSet::AxisSet(std::initializer_list<int> axes) : mask_(0) {
  for (int a : axes) {
    if (a < 1 || a > 3) throw std::invalid_argument("AxisSet: axis out of range");
    mask_ |= 1u << (a - 1);
  }
  if (mask_ == 0) throw std::invalid_argument("AxisSet: empty set");
}

AxisSet::AxisSet(unsigned mask) : mask_(mask) {
  if (mask == 0 || mask > 0b111u)
    throw std::invalid_argument("AxisSet: bad mask");
}

int AxisSet::size() const {
  return (mask_ & 1) + (mask_ >> 1 & 1) + (mask_ >> 2 & 1);
}

std::string AxisSet::to_string() const {
  std::string s;
  for (int a = 1; a <= 3; ++a)
    if (contains(a)) s += static_cast<char>('0' + a);
  return s;
}

bool Tensor3::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Rational& q) { return q == 0; });
}

namespace {

// Cursor over the term-list text; skips whitespace between tokens.
struct Scanner {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool done() {
    skip_ws();
    return pos == text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c, const char* what) {
    if (!accept(c))
      throw ParseError(std::string("expected ") + what, pos);
  }
  long integer() {
    skip_ws();
    std::size_t start = pos;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    if (pos == text.size() ||
        !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected integer", start);
    long v = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1'000'000'000L) throw ParseError("integer too large", start);
      ++pos;
    }
    return neg ? -v : v;
  }
};

int index_in_range(Scanner& s, int dim, int axis) {
  std::size_t start = s.pos;
  long v = s.integer();
  if (v < 1 || v > dim) {
    std::ostringstream msg;
    msg << "index " << v << " out of range 1.." << dim << " on axis " << axis;
    throw ParseError(msg.str(), start);
  }
  return static_cast<int>(v);
}

}  // namespace

Tensor3 parse_term_list(std::string_view text, Dims dims) {
  Tensor3 t(dims);
  Scanner s{text};
  if (s.done()) return t;
  if (s.peek() == '0') {
    std::size_t zero_at = s.pos;
    ++s.pos;
    if (!s.done()) throw ParseError("unexpected text after '0'", s.pos);
    (void)zero_at;
    return t;
  }
  bool first = true;
  while (true) {
    bool negate = false;
    if (first) {
      if (s.accept('-')) negate = true;
    } else {
      if (s.accept('-'))
        negate = true;
      else
        s.expect('+', "'+' or '-'");
    }
    first = false;
    // Optional coefficient before '['.
    Rational coeff = 1;
    if (s.peek() != '[') {
      std::size_t cstart = s.pos;
      long num = s.integer();
      long den = 1;
      if (s.accept('/')) {
        std::size_t dstart = s.pos;
        den = s.integer();
        if (den <= 0) throw ParseError("denominator must be positive", dstart);
      }
      if (num == 0) throw ParseError("zero coefficient", cstart);
      coeff = Rational(num, den);
      coeff.canonicalize();
      s.expect('*', "'*'");
    }
    if (negate) coeff = -coeff;
    s.expect('[', "'['");
    int i = index_in_range(s, dims.d1, 1);
    s.expect(',', "','");
    int j = index_in_range(s, dims.d2, 2);
    s.expect(',', "','");
    int k = index_in_range(s, dims.d3, 3);
    s.expect(']', "']'");
    t.at(i, j, k) += coeff;
    if (s.done()) break;
    if (s.peek() != '+' && s.peek() != '-')
      throw ParseError("expected '+', '-' or end of input", s.pos);
  }
  return t;
}

std::string format_term_list(const Tensor3& t) {
  std::ostringstream out;
  bool first = true;
  const Dims& d = t.dims();
  for (int i = 1; i <= d.d1; ++i)
    for (int j = 1; j <= d.d2; ++j)
      for (int k = 1; k <= d.d3; ++k) {
        const Rational& q = t.at(i, j, k);
        if (q == 0) continue;
        Rational mag = abs(q);
        if (first)
          out << (q < 0 ? "-" : "");
        else
          out << (q < 0 ? " - " : " + ");
        first = false;
        if (mag != 1) out << mag.get_str() << '*';
        out << '[' << i << ',' << j << ',' << k << ']';
      }
  if (first) return "0";
  return out.str();
}

Tensor3 mode_transform(const Tensor3& t, int axis, const RationalMatrix& m) {
  const Dims& d = t.dims();
  const std::size_t n = static_cast<std::size_t>(d[axis]);
  if (m.rows() != n || m.cols() != n)
    throw std::invalid_argument("mode_transform: matrix/axis size mismatch");
  Tensor3 out(d);
  for (int i = 1; i <= d.d1; ++i)
    for (int j = 1; j <= d.d2; ++j)
      for (int k = 1; k <= d.d3; ++k) {
        const Rational& v = t.at(i, j, k);
        if (v == 0) continue;
        int src = axis == 1 ? i : axis == 2 ? j : k;
        for (std::size_t l = 0; l < n; ++l) {
          const Rational& coef = m.at(l, src - 1);
          if (coef == 0) continue;
          int li = i, lj = j, lk = k;
          (axis == 1 ? li : axis == 2 ? lj : lk) = static_cast<int>(l) + 1;
          out.at(li, lj, lk) += coef * v;
        }
      }
  return out;
}

Tensor3 axis_permute(const Tensor3& t, const std::array<int, 3>& perm) {
  unsigned seen = 0;
  for (int p : perm) {
    if (p < 1 || p > 3) throw std::invalid_argument("axis_permute: bad axis");
    seen |= 1u << (p - 1);
  }
  if (seen != 0b111u)
    throw std::invalid_argument("axis_permute: not a permutation");
  const Dims& d = t.dims();
  Dims nd;
  for (int a = 1; a <= 3; ++a) nd[perm[a - 1]] = d[a];
  Tensor3 out(nd);
  int idx[4] = {0, 0, 0, 0};
  for (idx[1] = 1; idx[1] <= d.d1; ++idx[1])
    for (idx[2] = 1; idx[2] <= d.d2; ++idx[2])
      for (idx[3] = 1; idx[3] <= d.d3; ++idx[3]) {
        const Rational& v = t.at(idx[1], idx[2], idx[3]);
        if (v == 0) continue;
        int nidx[4];
        for (int a = 1; a <= 3; ++a) nidx[perm[a - 1]] = idx[a];
        out.at(nidx[1], nidx[2], nidx[3]) = v;
      }
  return out;
}

Tensor3 direct_sum_embed(const std::vector<Tensor3>& parts, AxisSet axes) {
  if (parts.empty())
    throw std::invalid_argument("direct_sum_embed: no parts");
  Dims total = parts.front().dims();
  for (std::size_t q = 1; q < parts.size(); ++q) {
    const Dims& dq = parts[q].dims();
    for (int a = 1; a <= 3; ++a) {
      if (axes.contains(a))
        total[a] += dq[a];
      else if (dq[a] != total[a])
        throw std::invalid_argument(
            "direct_sum_embed: shared axis dimensions differ");
    }
  }
  Tensor3 out(total);
  Dims offset{0, 0, 0};
  for (const Tensor3& part : parts) {
    const Dims& d = part.dims();
    for (int i = 1; i <= d.d1; ++i)
      for (int j = 1; j <= d.d2; ++j)
        for (int k = 1; k <= d.d3; ++k) {
          const Rational& v = part.at(i, j, k);
          if (v == 0) continue;
          out.at(i + offset.d1, j + offset.d2, k + offset.d3) = v;
        }
    for (int a = 1; a <= 3; ++a)
      if (axes.contains(a)) offset[a] += d[a];
  }
  return out;
}

Tensor3 tensor_product(const std::vector<Rational>& factor,
                       const RationalMatrix& plane, int axis) {
  if (axis < 1 || axis > 3)
    throw std::invalid_argument("tensor_product: bad axis");
  Dims d;
  // The plane covers the two remaining axes in ascending order.
  switch (axis) {
    case 1:
      d = {static_cast<int>(factor.size()), static_cast<int>(plane.rows()),
           static_cast<int>(plane.cols())};
      break;
    case 2:
      d = {static_cast<int>(plane.rows()), static_cast<int>(factor.size()),
           static_cast<int>(plane.cols())};
      break;
    default:
      d = {static_cast<int>(plane.rows()), static_cast<int>(plane.cols()),
           static_cast<int>(factor.size())};
  }
  Tensor3 out(d);
  for (int i = 1; i <= d.d1; ++i)
    for (int j = 1; j <= d.d2; ++j)
      for (int k = 1; k <= d.d3; ++k) {
        int f = axis == 1 ? i : axis == 2 ? j : k;
        int r, c;
        switch (axis) {
          case 1: r = j; c = k; break;
          case 2: r = i; c = k; break;
          default: r = i; c = j;
        }
        out.at(i, j, k) = factor[f - 1] * plane.at(r - 1, c - 1);
      }
  return out;
}

}  // namespace entangle
