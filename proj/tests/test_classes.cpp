#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "entangle/classes.hpp"

using namespace entangle;

namespace {

const Catalog& cat() {
  static Catalog c(std::string(ENTANGLE_SOURCE_DIR) + "/data");
  return c;
}

Signature sig_of(const std::string& expr) {
  return compose_signature(parse_expr(expr), cat());
}

}  // namespace

TEST_CASE("catalog contents") {
  const auto& records = catalog(cat());
  REQUIRE(records.size() >= 39 + 25);
  CHECK(records[0].name == "C_0");
  CHECK(records[38].name == "C_38");

  const ClassRecord* c19 = cat().find("C_19");
  REQUIRE(c19);
  CHECK(c19->sig.n123 == 10);
  CHECK(c19->representative == "[1,1,1]+[2,1,2]+[1,2,2]+[1,3,3]+[3,3,2]");
  CHECK(c19->decomposition == "W_5^{3,3,3}");

  const ClassRecord* c0 = cat().find("C_0");
  REQUIRE(c0);
  CHECK(c0->sig == Signature{3, 3, 3, 9, 9, 9, 27});
  CHECK(c0->decomposition == "0_0^{3,3,3}");

  // Both printed D_3 representatives share the class signature.
  const ClassRecord* d3 = cat().find("D_3^{3,2,2}");
  REQUIRE(d3);
  REQUIRE(d3->alt_representatives.size() == 1);
  CHECK(signature(parse_term_list(d3->alt_representatives[0], d3->dims)) ==
        d3->sig);
}

TEST_CASE("parametric resolution") {
  ClassRecord i4 = cat().resolve("I_4^{4,4,4}");
  CHECK(i4.dims == Dims{4, 4, 4});
  CHECK(i4.representative == "[1,1,1]+[2,2,2]+[3,3,3]+[4,4,4]");
  CHECK(i4.sig.n123 == 24);

  ClassRecord i51 = cat().resolve("I_5^{5,1,5}");
  CHECK(i51.dims == Dims{5, 1, 5});
  CHECK(i51.sig.n123 == 0);

  ClassRecord zero = cat().resolve("0_0^{0,0,2}");
  CHECK(zero.dims == Dims{0, 0, 2});
  CHECK(zero.sig.n123 == 0);

  CHECK_THROWS_AS(cat().resolve("Q_7^{3,3,3}"), std::invalid_argument);
  CHECK_THROWS_AS(cat().resolve("I_4^{4,3,4}"), std::invalid_argument);
}

TEST_CASE("classify") {
  CHECK(classify(cat(), {3, 3, 3}, Signature{0, 0, 0, 0, 0, 0, 6}) == "C_34");
  CHECK(classify(cat(), {3, 3, 3}, Signature{1, 1, 2, 0, 0, 0, 17}) == "C_2");
  CHECK(classify(cat(), {3, 3, 3}, Signature{0, 0, 0, 0, 0, 0, 11}) ==
        "unknown");
  CHECK(classify(cat(), {2, 2, 2}, Signature{0, 0, 0, 2, 2, 2, 1}) ==
        "Z_3^{2,2,2}");
  CHECK(classify(cat(), {4, 4, 4}, Signature{4, 4, 4, 16, 16, 16, 64}) ==
        "0_0^{4,4,4}");
  CHECK(classify(cat(), {4, 4, 4}, Signature{0, 0, 0, 0, 0, 0, 24}) ==
        "unknown");
}

TEST_CASE("expression parsing") {
  DirectSumExpr e = parse_expr("(W_5^{3,3,3} (+)123 I_3^{3,3,3})");
  REQUIRE_FALSE(e.is_leaf());
  CHECK(e.axes_mask == 0b111u);
  REQUIRE(e.children.size() == 2);
  CHECK(e.children[0].name == "W_5^{3,3,3}");
  CHECK(to_string(e) == "(W_5^{3,3,3} (+)123 I_3^{3,3,3})");

  // Parenthesized class names are leaves, not nodes.
  DirectSumExpr leaf = parse_expr("(Z_3+Z_3)^{3,3,3}");
  CHECK(leaf.is_leaf());
  CHECK(leaf.name == "(Z_3+Z_3)^{3,3,3}");

  DirectSumExpr inl =
      parse_expr("{dims:2,2,2; v:[1,1,1]+[2,2,2]}");
  REQUIRE(inl.is_leaf());
  CHECK(inl.inline_leaf);
  CHECK(inl.inline_dims == Dims{2, 2, 2});

  DirectSumExpr multi = parse_expr(
      "(I_1^{1,1,1} (+)123 I_1^{1,1,1} (+)123 I_1^{1,1,1})");
  CHECK(multi.children.size() == 3);

  CHECK_THROWS_AS(parse_expr("(A (+)12 B (+)13 C)"), ParseError);
  CHECK_THROWS_AS(parse_expr("(A (+)123"), ParseError);
  CHECK_THROWS_AS(parse_expr("{dims:2,2; v:0}"), ParseError);
}

TEST_CASE("compose_signature matches published cells") {
  CHECK(sig_of("(W_5^{3,3,3} (+)123 I_3^{3,3,3})").n123 == 124);
  CHECK(sig_of("(I_1^{1,1,1} (+)123 (Z_6+I_2)^{3,3,3})").n123 == 20);
  Signature triple =
      sig_of("(I_1^{1,1,1} (+)123 I_1^{1,1,1} (+)123 I_1^{1,1,1})");
  CHECK(triple.n1 == 0);
  CHECK(triple.n123 == 6);
  CHECK(classify(cat(), {3, 3, 3}, triple) == "C_34");

  CHECK_THROWS_AS(sig_of("(I_2^{2,2,1} (+)3 0_0^{2,2,1})"),
                  std::invalid_argument);
}

TEST_CASE("compose_vector builds the block tensor") {
  Tensor3 c34 = compose_vector(
      parse_expr("(I_1^{1,1,1} (+)123 I_1^{1,1,1} (+)123 I_1^{1,1,1})"),
      cat());
  CHECK(format_term_list(c34) == "[1,1,1] + [2,2,2] + [3,3,3]");

  DirectSumExpr c2 = parse_expr("(I_2^{2,2,1} (+)123 0_0^{1,1,2})");
  Signature s = signature(compose_vector(c2, cat()));
  CHECK(s.n1 == 1);
  CHECK(s.n2 == 1);
  CHECK(s.n3 == 2);
  CHECK(s.n123 == 17);
  CHECK(s == compose_signature(c2, cat()));

  CHECK(format_term_list(compose_vector(parse_expr("C_19"), cat())) ==
        format_term_list(parse_term_list(cat().find("C_19")->representative,
                                         {3, 3, 3})));
}

TEST_CASE("equal components corollary agrees with the composition formulas") {
  // p identical copies: n_a scales by p, the pair invariants pick up
  // p(p-1) d_b d_c, and the triple invariant the two correction terms.
  for (const char* leaf :
       {"Z_3^{2,2,2}", "I_2^{2,2,2}", "W_5^{3,3,3}", "D_3^{3,2,2}"}) {
    ClassRecord r = cat().resolve(leaf);
    for (int p = 2; p <= 4; ++p) {
      DirectSumExpr e;
      e.axes_mask = 0b111u;
      DirectSumExpr child;
      child.name = leaf;
      for (int q = 0; q < p; ++q) e.children.push_back(child);
      Signature got = compose_signature(e, cat());
      const Signature& s = r.sig;
      const long d1 = r.dims.d1, d2 = r.dims.d2, d3 = r.dims.d3;
      CHECK(got.n1 == p * s.n1);
      CHECK(got.n2 == p * s.n2);
      CHECK(got.n3 == p * s.n3);
      CHECK(got.n12 == p * s.n12 + p * (p - 1) * d1 * d2);
      CHECK(got.n13 == p * s.n13 + p * (p - 1) * d1 * d3);
      CHECK(got.n23 == p * s.n23 + p * (p - 1) * d2 * d3);
      CHECK(got.n123 ==
            p * s.n123 +
                p * (p - 1) * (d1 * s.n23 + d2 * s.n13 + d3 * s.n12) +
                p * (p - 1) * (p - 2) * d1 * d2 * d3);
    }
  }
}

TEST_CASE("compose_bounds on verification rows") {
  // C_23: two-axis-complement case with a zero block.
  BoundSignature c23 =
      compose_bounds(parse_expr("(Z_5^{3,3,2} (+)3 0_0^{3,3,1})"), cat());
  CHECK(c23.n3.value == 1);
  CHECK(c23.n123.value == 9);
  const ClassRecord* rec23 = cat().find("C_23");
  REQUIRE(rec23);
  CHECK(rec23->sig.n1 >= c23.n1.value);
  CHECK(rec23->sig.n123 >= c23.n123.value);

  // C_12: axes {1,2} give equalities for n1, n2.
  BoundSignature c12 =
      compose_bounds(parse_expr("(D_3^{2,2,3} (+)12 0_0^{1,1,3})"), cat());
  CHECK(c12.n1.exact);
  CHECK(c12.n1.value == 1);
  CHECK(c12.n2.exact);
  CHECK(c12.n2.value == 1);
  CHECK_FALSE(c12.n3.exact);
  CHECK(c12.n3.value == 0);
  CHECK_FALSE(c12.n123.exact);
  CHECK(c12.n123.value == 12);
  CHECK(to_string(c12.n3) == ">=0");
  CHECK(to_string(c12.n1) == "1");

  // Full-axis expressions stay exact.
  BoundSignature full =
      compose_bounds(parse_expr("(W_5^{3,3,3} (+)123 I_3^{3,3,3})"), cat());
  CHECK(full.n123.exact);
  CHECK(full.n123.value == 124);
}

TEST_CASE("relations all hold") {
  const auto reports = relations_check(cat());
  CHECK(reports.size() == 15);
  for (const RelationReport& r : reports) {
    INFO(r.label);
    CHECK(r.pass);
  }
}
