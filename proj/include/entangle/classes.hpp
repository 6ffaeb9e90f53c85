#ifndef ENTANGLE_CLASSES_HPP
#define ENTANGLE_CLASSES_HPP

#include <optional>
#include <string>
#include <vector>

#include "entangle/invariants.hpp"
#include "entangle/tensor.hpp"

namespace entangle {

// One catalog row: a named class at fixed dims with a representative term
// list, its full signature, and (when known) a direct-sum recipe over
// irreducible classes.
struct ClassRecord {
  std::string name;
  Dims dims;
  std::string representative;
  Signature sig;
  std::string decomposition;                    // expression text, may be ""
  std::vector<std::string> alt_representatives; // printed alternates, if any
};

// Direct-sum expression tree. A node with axes_mask == 0 is a leaf: either
// a class name (possibly parametric, like 0_0^{1,1,2} or I_4^{4,4,4}) or
// an inline tensor "{dims:a,b,c; v:<term list>}".
struct DirectSumExpr {
  unsigned axes_mask = 0;  // 0 for leaves, else the node's axis set
  std::vector<DirectSumExpr> children;
  std::string name;     // leaf: class name ("" for inline leaves)
  bool inline_leaf = false;
  Dims inline_dims;
  std::string inline_terms;

  bool is_leaf() const { return axes_mask == 0; }
};

// Expression syntax: leaf = class name or "{dims:a,b,c; v:<term list>}";
// node = "(e1 (+)S e2 ...)" with S a digit set, e.g.
// "(W_5^{3,3,3} (+)123 I_3^{3,3,3})". A "(...)^{...}" group is a
// parenthesized class name, not a node.
DirectSumExpr parse_expr(std::string_view text);

std::string to_string(const DirectSumExpr& e);

// The class catalog, loaded from JSON data files.
class Catalog {
 public:
  explicit Catalog(const std::string& data_dir);

  const std::vector<ClassRecord>& records() const { return records_; }
  const std::string& data_dir() const { return data_dir_; }

  // Exact-name lookup in the loaded records; nullopt for parametric names.
  const ClassRecord* find(const std::string& name) const;

  // Resolves a leaf name to a record, instantiating parametric families:
  // 0_0^{a,b,c} (the zero class at any dims) and the seven I_d patterns
  // (dims each 1 or d). Throws std::invalid_argument on unknown names.
  ClassRecord resolve(const std::string& name) const;

 private:
  std::string data_dir_;
  std::vector<ClassRecord> records_;
};

// Data directory resolution: explicit argument > ENTANGLE_DATA env var >
// compiled-in default (the repo's data/ directory).
std::string default_data_dir();

// All cataloged classes (the 39 three-tribit classes first, then the
// irreducible classes at smaller dims).
const std::vector<ClassRecord>& catalog(const Catalog& cat);

// Name of the class with this signature at these dims, or "unknown".
// Classes are determined by the quadruple (n1,n2,n3,n123).
std::string classify(const Catalog& cat, Dims dims, const Signature& s);

// Dims of the value an expression denotes.
Dims expr_dims(const DirectSumExpr& e, const Catalog& cat);

// Exact composed signature; every node must be full-axis {1,2,3}.
// Leaf signatures come from the catalog (or are computed for inline and
// parametric leaves); nodes apply the decomposition formulas.
Signature compose_signature(const DirectSumExpr& e, const Catalog& cat);

// The block tensor itself, built by recursive diagonal embedding.
Tensor3 compose_vector(const DirectSumExpr& e, const Catalog& cat);

// A per-invariant bound: exact value or lower bound.
struct Bound {
  long value = 0;
  bool exact = true;
};

struct BoundSignature {
  Bound n1, n2, n3, n12, n13, n23, n123;
};

std::string to_string(const Bound& b);

// Bound report for an arbitrary expression: full-axis nodes use the exact
// composition formulas, one- and two-axis nodes the corresponding
// inequality sets (equalities where the two-axis case provides them).
// All formulas are monotone in the component invariants, so lower bounds
// propagate soundly through nesting.
BoundSignature compose_bounds(const DirectSumExpr& e, const Catalog& cat);

// One isomorphism relation: several expressions claimed to share a class.
struct RelationReport {
  std::string label;
  std::vector<std::string> sides;
  std::vector<Signature> signatures;
  bool pass = false;
};

// Evaluates every relation in the data file by composing each side's
// signature and checking equality.
std::vector<RelationReport> relations_check(const Catalog& cat);

}  // namespace entangle

#endif
