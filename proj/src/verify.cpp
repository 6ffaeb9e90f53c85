#include "entangle/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "entangle/admissible.hpp"
#include "entangle/invariants.hpp"

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

void add(RunReport& rep, std::string name, std::string expected,
         std::string actual) {
  CheckResult c;
  c.pass = expected == actual;
  c.name = std::move(name);
  c.expected = std::move(expected);
  c.actual = std::move(actual);
  rep.checks.push_back(std::move(c));
}

std::string quad_string(const Signature& s) {
  std::ostringstream out;
  out << '(' << s.n1 << ',' << s.n2 << ',' << s.n3 << ',' << s.n123 << ')';
  return out.str();
}

void check_catalog(RunReport& rep, const Catalog& cat) {
  for (const ClassRecord& r : cat.records()) {
    Signature got = signature(parse_term_list(r.representative, r.dims));
    add(rep, "catalog " + r.name, to_string(r.sig), to_string(got));
    for (std::size_t i = 0; i < r.alt_representatives.size(); ++i) {
      Signature alt =
          signature(parse_term_list(r.alt_representatives[i], r.dims));
      add(rep, "catalog " + r.name + " alt rep " + std::to_string(i + 1),
          to_string(r.sig), to_string(alt));
    }
  }
  // The I_d family, d = 1..6, all seven constructions.
  for (int d = 1; d <= 6; ++d) {
    const std::string ds = std::to_string(d);
    struct Pattern {
      std::string dims;
      long n1, n2, n3, n123;
    };
    const Pattern patterns[7] = {
        {ds + ",1,1", d - 1, 0, 0, 0}, {"1," + ds + ",1", 0, d - 1, 0, 0},
        {"1,1," + ds, 0, 0, d - 1, 0}, {ds + "," + ds + ",1", 0, 0, 0, 0},
        {ds + ",1," + ds, 0, 0, 0, 0}, {"1," + ds + "," + ds, 0, 0, 0, 0},
        {ds + "," + ds + "," + ds, 0, 0, 0, long{d} * (d - 1) * (d - 2)},
    };
    for (const Pattern& p : patterns) {
      const std::string name = "I_" + ds + "^{" + p.dims + "}";
      ClassRecord r = cat.resolve(name);
      Signature got = signature(parse_term_list(r.representative, r.dims));
      std::ostringstream expected;
      expected << '(' << p.n1 << ',' << p.n2 << ',' << p.n3 << ',' << p.n123
               << ')';
      add(rep, "I_d family " + name, expected.str(), quad_string(got));
    }
  }
}

void check_composed(RunReport& rep, const Catalog& cat) {
  json j = load_json(cat.data_dir() + "/composed_tables.json");
  for (const json& table : j.at("tables")) {
    const std::string tname = table.at("name").get<std::string>();
    const auto& rows = table.at("rows");
    const auto& cols = table.at("cols");
    const auto& values = table.at("n123");
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const std::string expr_text = "(" + rows[r].get<std::string>() +
                                      " (+)123 " +
                                      cols[c].get<std::string>() + ")";
        const long expected = values[r][c].get<long>();
        DirectSumExpr expr = parse_expr(expr_text);
        Signature formula = compose_signature(expr, cat);
        add(rep, "table " + tname + " formula " + expr_text,
            std::to_string(expected), std::to_string(formula.n123));
        Signature block = signature(compose_vector(expr, cat));
        add(rep, "table " + tname + " block " + expr_text, to_string(formula),
            to_string(block));
      }
  }
}

void check_counting(RunReport& rep, const Catalog& cat, bool extended) {
  json j = load_json(cat.data_dir() + "/counting.json");
  std::vector<long> extended_d;
  for (const json& d : j.at("extended_d")) extended_d.push_back(d.get<long>());
  for (const json& row : j.at("rows")) {
    const int d = row.at("d").get<int>();
    const long expected = row.at("N").get<long>();
    const bool is_extended =
        std::find(extended_d.begin(), extended_d.end(), d) != extended_d.end();
    if (is_extended && !extended) continue;
    const long got = count_admissible({d, d, d});
    add(rep, "count N_{" + std::to_string(d) + "}", std::to_string(expected),
        std::to_string(got));
  }
  for (const json& row : j.at("rows")) {
    const int d = row.at("d").get<int>();
    const long n = row.at("N").get<long>();
    const double approx = approx_count_equal(d);
    add(rep, "approx rounded d=" + std::to_string(d),
        std::to_string(row.at("approx_rounded").get<long>()),
        std::to_string(std::llround(approx)));
    const double rel = approx / static_cast<double>(n) - 1.0;
    const double expected_rel = row.at("rel_error").get<double>();
    CheckResult c;
    c.name = "approx rel error d=" + std::to_string(d);
    std::ostringstream exp_s, act_s;
    exp_s.setf(std::ios::fixed);
    act_s.setf(std::ios::fixed);
    exp_s.precision(4);
    act_s.precision(4);
    exp_s << expected_rel;
    act_s << rel;
    c.expected = exp_s.str();
    c.actual = act_s.str();
    c.pass = std::abs(rel - expected_rel) <= 1e-4;
    rep.checks.push_back(std::move(c));
  }
}

void check_relations(RunReport& rep, const Catalog& cat) {
  for (const RelationReport& r : relations_check(cat)) {
    std::string sigs;
    for (const Signature& s : r.signatures) {
      if (!sigs.empty()) sigs += " ";
      sigs += to_string(s);
    }
    std::string expected;
    for (std::size_t i = 0; i < r.signatures.size(); ++i) {
      if (i) expected += " ";
      expected += to_string(r.signatures.front());
    }
    add(rep, "relation " + r.label, expected, sigs);
  }
}

void check_bounds(RunReport& rep, const Catalog& cat) {
  json j = load_json(cat.data_dir() + "/verification.json");
  for (const json& row : j.at("rows")) {
    const std::string cls = row.at("class").get<std::string>();
    const ClassRecord* rec = cat.find(cls);
    if (!rec || rec->decomposition.empty()) {
      add(rep, "bounds " + cls, "decomposition present", "missing");
      continue;
    }
    BoundSignature bs =
        compose_bounds(parse_expr(rec->decomposition), cat);
    const auto& printed = row.at("bounds");
    const std::string expected = printed[0].get<std::string>() + "," +
                                 printed[1].get<std::string>() + "," +
                                 printed[2].get<std::string>() + "," +
                                 printed[3].get<std::string>();
    const std::string got = to_string(bs.n1) + "," + to_string(bs.n2) + "," +
                            to_string(bs.n3) + "," + to_string(bs.n123);
    add(rep, "bounds " + cls + " printed", expected, got);
    // Saturation: the exact signature attains each bound value.
    std::ostringstream bound_vals, exact_vals;
    bound_vals << '(' << bs.n1.value << ',' << bs.n2.value << ','
               << bs.n3.value << ',' << bs.n123.value << ')';
    add(rep, "bounds " + cls + " saturated", quad_string(rec->sig),
        bound_vals.str());
  }
}

}  // namespace

RunReport verify_tables(const Catalog& cat, bool extended) {
  RunReport rep;
  check_catalog(rep, cat);
  check_composed(rep, cat);
  check_counting(rep, cat, extended);
  check_relations(rep, cat);
  check_bounds(rep, cat);
  return rep;
}

}  // namespace entangle
