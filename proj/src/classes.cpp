#include "entangle/classes.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace entangle {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open data file: " + path);
  json j;
  in >> j;
  return j;
}

Dims dims_from_json(const json& j) {
  return Dims{j.at(0).get<int>(), j.at(1).get<int>(), j.at(2).get<int>()};
}

Signature sig_from_json(const json& j) {
  Signature s;
  s.n1 = j.at(0).get<long>();
  s.n2 = j.at(1).get<long>();
  s.n3 = j.at(2).get<long>();
  s.n12 = j.at(3).get<long>();
  s.n13 = j.at(4).get<long>();
  s.n23 = j.at(5).get<long>();
  s.n123 = j.at(6).get<long>();
  return s;
}

// "^{a,b,c}" suffix of a parametric class name.
std::optional<Dims> parse_dims_suffix(std::string_view s) {
  if (s.size() < 3 || s[0] != '^' || s[1] != '{' || s.back() != '}')
    return std::nullopt;
  int v[3];
  std::size_t pos = 2;
  for (int a = 0; a < 3; ++a) {
    std::size_t end = pos;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end])))
      ++end;
    if (end == pos) return std::nullopt;
    v[a] = std::stoi(std::string(s.substr(pos, end - pos)));
    pos = end;
    const char expect = a < 2 ? ',' : '}';
    if (pos >= s.size() || s[pos] != expect) return std::nullopt;
    ++pos;
  }
  if (pos != s.size()) return std::nullopt;
  return Dims{v[0], v[1], v[2]};
}

}  // namespace

std::string default_data_dir() {
  if (const char* env = std::getenv("ENTANGLE_DATA"); env && *env)
    return env;
#ifdef ENTANGLE_DATA_DIR
  return ENTANGLE_DATA_DIR;
#else
  return "data";
#endif
}

Catalog::Catalog(const std::string& data_dir) : data_dir_(data_dir) {
  json j = load_json(data_dir_ + "/catalog.json");
  for (const json& row : j.at("classes")) {
    ClassRecord r;
    r.name = row.at("name").get<std::string>();
    r.dims = dims_from_json(row.at("dims"));
    r.representative = row.at("representative").get<std::string>();
    r.sig = sig_from_json(row.at("signature"));
    if (row.contains("decomposition"))
      r.decomposition = row.at("decomposition").get<std::string>();
    if (row.contains("alt_representatives"))
      for (const json& a : row.at("alt_representatives"))
        r.alt_representatives.push_back(a.get<std::string>());
    records_.push_back(std::move(r));
  }
}

const ClassRecord* Catalog::find(const std::string& name) const {
  for (const ClassRecord& r : records_)
    if (r.name == name) return &r;
  return nullptr;
}

ClassRecord Catalog::resolve(const std::string& name) const {
  if (const ClassRecord* r = find(name)) return *r;
  // Zero class at arbitrary dims: 0_0^{a,b,c}.
  if (name.rfind("0_0", 0) == 0) {
    if (auto d = parse_dims_suffix(std::string_view(name).substr(3))) {
      ClassRecord r;
      r.name = name;
      r.dims = *d;
      r.representative = "0";
      r.sig = Signature{d->d1, d->d2, d->d3, long{d->d1} * d->d2,
                        long{d->d1} * d->d3, long{d->d2} * d->d3, d->total()};
      return r;
    }
  }
  // I_d family: I_k^{a,b,c} with each of a,b,c either 1 or k.
  if (name.rfind("I_", 0) == 0) {
    std::size_t caret = name.find('^');
    if (caret != std::string::npos) {
      const std::string num = name.substr(2, caret - 2);
      if (!num.empty() && std::all_of(num.begin(), num.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          })) {
        const int k = std::stoi(num);
        auto d = parse_dims_suffix(std::string_view(name).substr(caret));
        if (k >= 1 && d &&
            (d->d1 == k || d->d1 == 1) && (d->d2 == k || d->d2 == 1) &&
            (d->d3 == k || d->d3 == 1) && std::max({d->d1, d->d2, d->d3}) == k) {
          ClassRecord r;
          r.name = name;
          r.dims = *d;
          std::ostringstream rep;
          for (int i = 1; i <= k; ++i) {
            if (i > 1) rep << '+';
            rep << '[' << (d->d1 == k ? i : 1) << ',' << (d->d2 == k ? i : 1)
                << ',' << (d->d3 == k ? i : 1) << ']';
          }
          r.representative = rep.str();
          r.sig = signature(parse_term_list(r.representative, r.dims));
          return r;
        }
      }
    }
  }
  throw std::invalid_argument("unknown class name: " + name);
}

const std::vector<ClassRecord>& catalog(const Catalog& cat) {
  return cat.records();
}

std::string classify(const Catalog& cat, Dims dims, const Signature& s) {
  for (const ClassRecord& r : cat.records())
    if (r.dims == dims && r.sig.n1 == s.n1 && r.sig.n2 == s.n2 &&
        r.sig.n3 == s.n3 && r.sig.n123 == s.n123)
      return r.name;
  // Parametric matches outside the loaded records.
  if (s.n1 == dims.d1 && s.n2 == dims.d2 && s.n3 == dims.d3 &&
      s.n123 == dims.total())
    return "0_0^{" + to_string(dims) + "}";
  return "unknown";
}

// ---------------------------------------------------------------------------
// Expression parsing

namespace {

struct ExprScanner {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
};

// Position just past the parenthesis group starting at `open`.
std::size_t match_paren(std::string_view s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) return i + 1;
  }
  throw ParseError("unbalanced '('", open);
}

DirectSumExpr parse_one(ExprScanner& s);

DirectSumExpr parse_inline_leaf(ExprScanner& s) {
  // "{dims:a,b,c; v:<term list>}"
  std::size_t open = s.pos;
  std::size_t close = s.text.find('}', open);
  // The term list itself contains no '}', so the first one closes the leaf.
  if (close == std::string_view::npos)
    throw ParseError("unbalanced '{'", open);
  std::string body(s.text.substr(open + 1, close - open - 1));
  s.pos = close + 1;
  std::size_t dims_at = body.find("dims:");
  std::size_t semi = body.find(';');
  std::size_t v_at = body.find("v:", semi == std::string::npos ? 0 : semi);
  if (dims_at == std::string::npos || semi == std::string::npos ||
      v_at == std::string::npos)
    throw ParseError("inline leaf must look like {dims:a,b,c; v:...}", open);
  DirectSumExpr e;
  e.inline_leaf = true;
  std::istringstream din(body.substr(dims_at + 5, semi - dims_at - 5));
  char c1, c2;
  if (!(din >> e.inline_dims.d1 >> c1 >> e.inline_dims.d2 >> c2 >>
        e.inline_dims.d3) ||
      c1 != ',' || c2 != ',')
    throw ParseError("bad dims in inline leaf", open);
  e.inline_terms = body.substr(v_at + 2);
  // Validate the term list now so errors point at the leaf.
  parse_term_list(e.inline_terms, e.inline_dims);
  return e;
}

DirectSumExpr parse_name_leaf(ExprScanner& s) {
  s.skip_ws();
  std::size_t start = s.pos;
  if (s.text[s.pos] == '(') {
    // Parenthesized class name like (Z_3+Z_3)^{3,3,3}.
    s.pos = match_paren(s.text, s.pos);
  }
  while (s.pos < s.text.size()) {
    char c = s.text[s.pos];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')')
      break;
    if (c == '{') {
      // Consume a balanced brace group (the ^{...} dims suffix).
      std::size_t close = s.text.find('}', s.pos);
      if (close == std::string_view::npos)
        throw ParseError("unbalanced '{' in class name", s.pos);
      s.pos = close + 1;
      continue;
    }
    ++s.pos;
  }
  if (s.pos == start) throw ParseError("expected class name", start);
  DirectSumExpr e;
  e.name = std::string(s.text.substr(start, s.pos - start));
  return e;
}

unsigned parse_axes(ExprScanner& s) {
  // "(+)S" with S a nonempty set of digits from {1,2,3}.
  s.skip_ws();
  if (s.text.substr(s.pos, 3) != "(+)")
    throw ParseError("expected '(+)' separator", s.pos);
  s.pos += 3;
  unsigned mask = 0;
  while (s.pos < s.text.size() && s.text[s.pos] >= '1' && s.text[s.pos] <= '3')
    mask |= 1u << (s.text[s.pos++] - '1');
  if (mask == 0) throw ParseError("expected axis digits after '(+)'", s.pos);
  return mask;
}

DirectSumExpr parse_node(ExprScanner& s) {
  ++s.pos;  // consume '('
  DirectSumExpr node;
  node.children.push_back(parse_one(s));
  node.axes_mask = parse_axes(s);
  node.children.push_back(parse_one(s));
  while (s.peek() != ')') {
    std::size_t at = s.pos;
    unsigned mask = parse_axes(s);
    if (mask != node.axes_mask)
      throw ParseError("mixed axis sets within one node", at);
    node.children.push_back(parse_one(s));
  }
  ++s.pos;  // consume ')'
  return node;
}

DirectSumExpr parse_one(ExprScanner& s) {
  char c = s.peek();
  if (c == '\0') throw ParseError("unexpected end of expression", s.pos);
  if (c == '{') return parse_inline_leaf(s);
  if (c == '(') {
    // "(...)^" is a parenthesized class name; otherwise a node.
    std::size_t after = match_paren(s.text, s.pos);
    while (after < s.text.size() &&
           std::isspace(static_cast<unsigned char>(s.text[after])))
      ++after;
    if (after < s.text.size() && s.text[after] == '^')
      return parse_name_leaf(s);
    return parse_node(s);
  }
  return parse_name_leaf(s);
}

}  // namespace

DirectSumExpr parse_expr(std::string_view text) {
  ExprScanner s{text};
  DirectSumExpr e = parse_one(s);
  if (s.peek() != '\0')
    throw ParseError("unexpected text after expression", s.pos);
  return e;
}

std::string to_string(const DirectSumExpr& e) {
  if (e.is_leaf()) {
    if (!e.inline_leaf) return e.name;
    return "{dims:" + to_string(e.inline_dims) + "; v:" + e.inline_terms + "}";
  }
  std::string sep = " (+)" + AxisSet(e.axes_mask).to_string() + " ";
  std::string out = "(";
  for (std::size_t i = 0; i < e.children.size(); ++i) {
    if (i) out += sep;
    out += to_string(e.children[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Composition

namespace {

struct Component {
  Dims dims;
  Signature sig;
};

Component leaf_component(const DirectSumExpr& e, const Catalog& cat) {
  if (e.inline_leaf)
    return {e.inline_dims,
            signature(parse_term_list(e.inline_terms, e.inline_dims))};
  ClassRecord r = cat.resolve(e.name);
  return {r.dims, r.sig};
}

Dims combine_dims(const std::vector<Dims>& parts, unsigned mask) {
  Dims total = parts.front();
  for (std::size_t q = 1; q < parts.size(); ++q)
    for (int a = 1; a <= 3; ++a) {
      if (mask >> (a - 1) & 1)
        total[a] += parts[q][a];
      else if (parts[q][a] != total[a])
        throw std::invalid_argument(
            "direct sum: shared axis dimensions differ");
    }
  return total;
}

Component compose_component(const DirectSumExpr& e, const Catalog& cat) {
  if (e.is_leaf()) return leaf_component(e, cat);
  if (e.axes_mask != 0b111u)
    throw std::invalid_argument(
        "compose_signature: exact formulas need full-axis nodes; use "
        "compose_bounds for partial-axis sums");
  std::vector<Component> parts;
  std::vector<Dims> dims;
  for (const DirectSumExpr& c : e.children) {
    parts.push_back(compose_component(c, cat));
    dims.push_back(parts.back().dims);
  }
  const std::size_t p = parts.size();
  Component out;
  out.dims = combine_dims(dims, 0b111u);
  // Single-axis invariants add up.
  for (const Component& c : parts) {
    out.sig.n1 += c.sig.n1;
    out.sig.n2 += c.sig.n2;
    out.sig.n3 += c.sig.n3;
  }
  // Pair invariants add up plus the cross-dimension terms over q1 != q2.
  out.sig.n12 = out.sig.n13 = out.sig.n23 = 0;
  for (std::size_t q = 0; q < p; ++q) {
    out.sig.n12 += parts[q].sig.n12;
    out.sig.n13 += parts[q].sig.n13;
    out.sig.n23 += parts[q].sig.n23;
  }
  for (std::size_t q1 = 0; q1 < p; ++q1)
    for (std::size_t q2 = 0; q2 < p; ++q2) {
      if (q1 == q2) continue;
      out.sig.n12 += long{dims[q1].d1} * dims[q2].d2;
      out.sig.n13 += long{dims[q1].d1} * dims[q2].d3;
      out.sig.n23 += long{dims[q1].d2} * dims[q2].d3;
    }
  // Triple invariant: component sum, the (sum d_a)(sum n_bc) products,
  // minus the diagonal d_a^(q) n_bc^(q) terms, plus the pairwise-distinct
  // triple products.
  long D1 = 0, D2 = 0, D3 = 0, N12 = 0, N13 = 0, N23 = 0;
  for (std::size_t q = 0; q < p; ++q) {
    D1 += dims[q].d1;
    D2 += dims[q].d2;
    D3 += dims[q].d3;
    N12 += parts[q].sig.n12;
    N13 += parts[q].sig.n13;
    N23 += parts[q].sig.n23;
  }
  long n123 = 0;
  for (const Component& c : parts) n123 += c.sig.n123;
  n123 += D1 * N23 + D2 * N13 + D3 * N12;
  for (std::size_t q = 0; q < p; ++q)
    n123 -= dims[q].d1 * parts[q].sig.n23 + dims[q].d2 * parts[q].sig.n13 +
            dims[q].d3 * parts[q].sig.n12;
  for (std::size_t q1 = 0; q1 < p; ++q1)
    for (std::size_t q2 = 0; q2 < p; ++q2)
      for (std::size_t q3 = 0; q3 < p; ++q3) {
        if (q1 == q2 || q2 == q3 || q3 == q1) continue;
        n123 += long{dims[q1].d1} * dims[q2].d2 * dims[q3].d3;
      }
  out.sig.n123 = n123;
  return out;
}

}  // namespace

Dims expr_dims(const DirectSumExpr& e, const Catalog& cat) {
  if (e.is_leaf())
    return e.inline_leaf ? e.inline_dims : cat.resolve(e.name).dims;
  std::vector<Dims> dims;
  for (const DirectSumExpr& c : e.children) dims.push_back(expr_dims(c, cat));
  return combine_dims(dims, e.axes_mask);
}

Signature compose_signature(const DirectSumExpr& e, const Catalog& cat) {
  return compose_component(e, cat).sig;
}

Tensor3 compose_vector(const DirectSumExpr& e, const Catalog& cat) {
  if (e.is_leaf()) {
    if (e.inline_leaf) return parse_term_list(e.inline_terms, e.inline_dims);
    ClassRecord r = cat.resolve(e.name);
    return parse_term_list(r.representative, r.dims);
  }
  std::vector<Tensor3> parts;
  for (const DirectSumExpr& c : e.children)
    parts.push_back(compose_vector(c, cat));
  return direct_sum_embed(parts, AxisSet(e.axes_mask));
}

// ---------------------------------------------------------------------------
// Bounds

namespace {

struct BoundComponent {
  Dims dims;
  BoundSignature bs;
};

Bound exact(long v) { return Bound{v, true}; }
Bound atleast(long v) { return Bound{v, false}; }

// Relabels axes: source axis a becomes perm[a-1]. Pair invariants are
// indexed by the excluded axis, so they move with the same permutation
// (n23 excludes 1, n13 excludes 2, n12 excludes 3).
BoundComponent permute(const BoundComponent& c, const std::array<int, 3>& perm) {
  const Bound n[4] = {{}, c.bs.n1, c.bs.n2, c.bs.n3};
  const Bound pair[4] = {{}, c.bs.n23, c.bs.n13, c.bs.n12};
  BoundComponent out;
  Bound nn[4], np[4];
  for (int a = 1; a <= 3; ++a) {
    out.dims[perm[a - 1]] = c.dims[a];
    nn[perm[a - 1]] = n[a];
    np[perm[a - 1]] = pair[a];
  }
  out.bs.n1 = nn[1];
  out.bs.n2 = nn[2];
  out.bs.n3 = nn[3];
  out.bs.n23 = np[1];
  out.bs.n13 = np[2];
  out.bs.n12 = np[3];
  out.bs.n123 = c.bs.n123;
  return out;
}

// One-decomposition inequalities for a sum along axis 1 of two blocks with
// shared d2, d3. All seven results are lower bounds.
BoundComponent ineq_axis1(const BoundComponent& a, const BoundComponent& b) {
  if (a.dims.d2 != b.dims.d2 || a.dims.d3 != b.dims.d3)
    throw std::invalid_argument("direct sum: shared axis dimensions differ");
  const long d1 = a.dims.d1 + b.dims.d1, d2 = a.dims.d2, d3 = a.dims.d3;
  BoundComponent out;
  out.dims = {static_cast<int>(d1), static_cast<int>(d2),
              static_cast<int>(d3)};
  out.bs.n1 = atleast(std::max(d1 - d2 * d3, a.bs.n1.value + b.bs.n1.value));
  out.bs.n2 = atleast(std::max(0L, a.bs.n2.value + b.bs.n2.value - d2));
  out.bs.n3 = atleast(std::max(0L, a.bs.n3.value + b.bs.n3.value - d3));
  out.bs.n12 =
      atleast(std::max(d1 * d2 - d3, a.bs.n12.value + b.bs.n12.value));
  out.bs.n13 =
      atleast(std::max(d1 * d3 - d2, a.bs.n13.value + b.bs.n13.value));
  out.bs.n23 =
      atleast(std::max(0L, a.bs.n23.value + b.bs.n23.value - d2 * d3));
  out.bs.n123 = atleast(std::max(
      0L, a.bs.n123.value + b.bs.n123.value -
              b.dims.d1 * (a.dims.d1 - a.bs.n1.value) -
              a.dims.d1 * (b.dims.d1 - b.bs.n1.value)));
  return out;
}

// Two-decomposition results for a sum along axes {1,2} of two blocks with
// shared d3: equalities for n1, n2, n13, n23, lower bounds for the rest.
BoundComponent ineq_axes12(const BoundComponent& a, const BoundComponent& b) {
  if (a.dims.d3 != b.dims.d3)
    throw std::invalid_argument("direct sum: shared axis dimensions differ");
  const long d1 = a.dims.d1 + b.dims.d1, d2 = a.dims.d2 + b.dims.d2,
             d3 = a.dims.d3;
  const long cross = long{a.dims.d1} * b.dims.d2 + long{b.dims.d1} * a.dims.d2;
  BoundComponent out;
  out.dims = {static_cast<int>(d1), static_cast<int>(d2),
              static_cast<int>(d3)};
  out.bs.n1 = {a.bs.n1.value + b.bs.n1.value, a.bs.n1.exact && b.bs.n1.exact};
  out.bs.n2 = {a.bs.n2.value + b.bs.n2.value, a.bs.n2.exact && b.bs.n2.exact};
  out.bs.n3 = atleast(std::max(0L, a.bs.n3.value + b.bs.n3.value - d3));
  out.bs.n12 = atleast(
      std::max(d1 * d2 - d3, a.bs.n12.value + b.bs.n12.value + cross));
  out.bs.n13 = {a.bs.n13.value + b.bs.n13.value,
                a.bs.n13.exact && b.bs.n13.exact};
  out.bs.n23 = {a.bs.n23.value + b.bs.n23.value,
                a.bs.n23.exact && b.bs.n23.exact};
  out.bs.n123 = atleast(
      std::max(0L, a.bs.n123.value + b.bs.n123.value - cross * d3 +
                       b.dims.d1 * a.bs.n23.value + b.dims.d2 * a.bs.n13.value +
                       a.dims.d1 * b.bs.n23.value +
                       a.dims.d2 * b.bs.n13.value));
  return out;
}

// Full-axis exact formulas for two blocks; exactness tracks the inputs.
BoundComponent exact_pair(const BoundComponent& a, const BoundComponent& b) {
  BoundComponent out;
  out.dims = {a.dims.d1 + b.dims.d1, a.dims.d2 + b.dims.d2,
              a.dims.d3 + b.dims.d3};
  auto add = [](const Bound& x, const Bound& y, long extra = 0) {
    return Bound{x.value + y.value + extra, x.exact && y.exact};
  };
  out.bs.n1 = add(a.bs.n1, b.bs.n1);
  out.bs.n2 = add(a.bs.n2, b.bs.n2);
  out.bs.n3 = add(a.bs.n3, b.bs.n3);
  out.bs.n12 = add(a.bs.n12, b.bs.n12,
                   long{a.dims.d1} * b.dims.d2 + long{b.dims.d1} * a.dims.d2);
  out.bs.n13 = add(a.bs.n13, b.bs.n13,
                   long{a.dims.d1} * b.dims.d3 + long{b.dims.d1} * a.dims.d3);
  out.bs.n23 = add(a.bs.n23, b.bs.n23,
                   long{a.dims.d2} * b.dims.d3 + long{b.dims.d2} * a.dims.d3);
  out.bs.n123 = {a.bs.n123.value + b.bs.n123.value +
                     b.dims.d1 * a.bs.n23.value + b.dims.d2 * a.bs.n13.value +
                     b.dims.d3 * a.bs.n12.value + a.dims.d1 * b.bs.n23.value +
                     a.dims.d2 * b.bs.n13.value + a.dims.d3 * b.bs.n12.value,
                 a.bs.n123.exact && b.bs.n123.exact && a.bs.n23.exact &&
                     a.bs.n13.exact && a.bs.n12.exact && b.bs.n23.exact &&
                     b.bs.n13.exact && b.bs.n12.exact};
  return out;
}

BoundComponent bounds_component(const DirectSumExpr& e, const Catalog& cat) {
  if (e.is_leaf()) {
    Component c = leaf_component(e, cat);
    BoundComponent out;
    out.dims = c.dims;
    out.bs = {exact(c.sig.n1),  exact(c.sig.n2),  exact(c.sig.n3),
              exact(c.sig.n12), exact(c.sig.n13), exact(c.sig.n23),
              exact(c.sig.n123)};
    return out;
  }
  std::vector<BoundComponent> parts;
  for (const DirectSumExpr& c : e.children)
    parts.push_back(bounds_component(c, cat));
  // Fold left two at a time; the direct sum is associative.
  BoundComponent acc = parts.front();
  for (std::size_t q = 1; q < parts.size(); ++q) {
    const BoundComponent& next = parts[q];
    switch (e.axes_mask) {
      case 0b111u:
        acc = exact_pair(acc, next);
        break;
      case 0b001u:
        acc = ineq_axis1(acc, next);
        break;
      case 0b010u:  // axis 2: swap 1 <-> 2
        acc = permute(ineq_axis1(permute(acc, {2, 1, 3}),
                                  permute(next, {2, 1, 3})),
                      {2, 1, 3});
        break;
      case 0b100u:  // axis 3: swap 1 <-> 3
        acc = permute(ineq_axis1(permute(acc, {3, 2, 1}),
                                  permute(next, {3, 2, 1})),
                      {3, 2, 1});
        break;
      case 0b011u:
        acc = ineq_axes12(acc, next);
        break;
      case 0b101u:  // axes {1,3}: swap 2 <-> 3
        acc = permute(ineq_axes12(permute(acc, {1, 3, 2}),
                                   permute(next, {1, 3, 2})),
                      {1, 3, 2});
        break;
      case 0b110u:  // axes {2,3}: send 2->1, 3->2, 1->3
        acc = permute(ineq_axes12(permute(acc, {3, 1, 2}),
                                   permute(next, {3, 1, 2})),
                      {2, 3, 1});
        break;
      default:
        throw std::invalid_argument("compose_bounds: bad axis set");
    }
  }
  return acc;
}

}  // namespace

std::string to_string(const Bound& b) {
  return (b.exact ? "" : ">=") + std::to_string(b.value);
}

BoundSignature compose_bounds(const DirectSumExpr& e, const Catalog& cat) {
  return bounds_component(e, cat).bs;
}

std::vector<RelationReport> relations_check(const Catalog& cat) {
  json j = load_json(cat.data_dir() + "/relations.json");
  std::vector<RelationReport> out;
  for (const json& row : j.at("relations")) {
    RelationReport r;
    r.label = row.at("label").get<std::string>();
    for (const json& side : row.at("sides"))
      r.sides.push_back(side.get<std::string>());
    for (const std::string& side : r.sides)
      r.signatures.push_back(compose_signature(parse_expr(side), cat));
    r.pass = std::all_of(
        r.signatures.begin(), r.signatures.end(),
        [&](const Signature& s) { return s == r.signatures.front(); });
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace entangle
