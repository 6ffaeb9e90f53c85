#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "entangle/admissible.hpp"
#include "entangle/classes.hpp"
#include "entangle/dynamics.hpp"
#include "entangle/invariants.hpp"
#include "entangle/verify.hpp"

namespace {

using entangle::Catalog;
using entangle::Dims;
using entangle::Signature;
using nlohmann::json;

Dims parse_dims_arg(const std::string& text) {
  Dims d;
  char c1, c2;
  std::istringstream in(text);
  if (!(in >> d.d1 >> c1 >> d.d2 >> c2 >> d.d3) || c1 != ',' || c2 != ',' ||
      !in.eof())
    throw CLI::ValidationError("--dims", "expected d1,d2,d3");
  if (d.d1 < 0 || d.d2 < 0 || d.d3 < 0)
    throw CLI::ValidationError("--dims", "dimensions must be non-negative");
  return d;
}

json sig_to_json(const Signature& s) {
  return json{{"n", {s.n1, s.n2, s.n3}},
              {"n_pairs", {s.n12, s.n13, s.n23}},
              {"n123", s.n123}};
}

void emit(const json& j, bool table) {
  if (!table) {
    std::cout << j.dump(1) << "\n";
    return;
  }
  // Flat two-column view of the JSON for human reading.
  for (const auto& [key, value] : j.items())
    std::cout << key << "\t" << value.dump() << "\n";
}

struct Options {
  std::string data_dir;
  bool table = false;
};

const Catalog& catalog_for(const Options& opt) {
  static std::unique_ptr<Catalog> cat;
  if (!cat)
    cat = std::make_unique<Catalog>(
        opt.data_dir.empty() ? entangle::default_data_dir() : opt.data_dir);
  return *cat;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact algebraic entanglement invariants toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Options opt;
  app.add_option("--data", opt.data_dir, "data directory override");
  app.add_flag_callback(
      "--format-table", [&] { opt.table = true; },
      "human-readable output");
  // Accept the documented spelling "--format table" too.
  std::string format = "json";
  app.add_option("--format", format, "output format: json (default) or table")
      ->check(CLI::IsMember({"json", "table"}));

  // ENTANGLE_THREADS caps worker parallelism. All computations here are
  // deterministic and orchestrated single-threaded, so any cap >= 1 is
  // honored by construction.

  std::string dims_text, vector_text, signature_text, expr_text, class_name;
  bool construct = false, approx = false, exhaustive = false, extended = false;
  int kmax = 1;
  long samples = 0;
  std::uint64_t seed = 0;

  CLI::App* invariants = app.add_subcommand("invariants", "signature of a tensor");
  invariants->add_option("--dims", dims_text)->required();
  invariants->add_option("--vector", vector_text)->required();

  CLI::App* classify = app.add_subcommand("classify", "class of a tensor or signature");
  classify->add_option("--dims", dims_text)->required();
  classify->add_option("--vector", vector_text);
  classify->add_option("--signature", signature_text);

  CLI::App* admissible = app.add_subcommand("admissible", "admissible triples");
  admissible->add_option("--dims", dims_text)->required();

  CLI::App* count = app.add_subcommand("count", "count admissible triples");
  count->add_option("--dims", dims_text)->required();
  count->add_flag("--approx", approx);

  CLI::App* compose = app.add_subcommand("compose", "compose a direct-sum expression");
  compose->add_option("--expr", expr_text)->required();
  compose->add_flag("--construct", construct);

  CLI::App* reach = app.add_subcommand("reach", "estimated annihilation reach");
  reach->add_option("--class", class_name)->required();
  reach->add_option("--kmax", kmax)->required();
  reach->add_option("--samples", samples)->required();
  reach->add_option("--seed", seed)->required();

  CLI::App* census = app.add_subcommand("census", "census of 0/1 tensors");
  census->add_option("--dims", dims_text)->required();
  census->add_flag("--exhaustive", exhaustive);
  census->add_option("--samples", samples);
  census->add_option("--seed", seed);

  CLI::App* scan = app.add_subcommand("scan-conjectures", "bound scan on random tensors");
  scan->add_option("--dims", dims_text)->required();
  scan->add_option("--samples", samples)->required();
  scan->add_option("--seed", seed)->required();

  CLI::App* verify = app.add_subcommand("verify-tables", "reproduce every table");
  verify->add_flag("--extended", extended);

  CLI11_PARSE(app, argc, argv);
  if (format == "table") opt.table = true;

  try {
    if (invariants->parsed()) {
      Dims d = parse_dims_arg(dims_text);
      Signature s = entangle::signature(entangle::parse_term_list(vector_text, d));
      emit(sig_to_json(s), opt.table);
      return 0;
    }

    if (classify->parsed()) {
      Dims d = parse_dims_arg(dims_text);
      Signature s;
      if (!vector_text.empty()) {
        s = entangle::signature(entangle::parse_term_list(vector_text, d));
      } else if (!signature_text.empty()) {
        long n1, n2, n3, n123;
        char c1, c2, c3;
        std::istringstream in(signature_text);
        if (!(in >> n1 >> c1 >> n2 >> c2 >> n3 >> c3 >> n123) || c1 != ',' ||
            c2 != ',' || c3 != ',')
          throw CLI::ValidationError("--signature", "expected n1,n2,n3,n123");
        s.n1 = n1;
        s.n2 = n2;
        s.n3 = n3;
        s.n123 = n123;
        // Pair invariants follow from the rank identity.
        s.n23 = long{d.d2} * d.d3 - d.d1 + n1;
        s.n13 = long{d.d1} * d.d3 - d.d2 + n2;
        s.n12 = long{d.d1} * d.d2 - d.d3 + n3;
      } else {
        throw CLI::ValidationError("classify", "need --vector or --signature");
      }
      const std::string name = entangle::classify(catalog_for(opt), d, s);
      emit(json{{"class", name}, {"known", name != "unknown"}}, opt.table);
      return 0;
    }

    if (admissible->parsed()) {
      Dims d = parse_dims_arg(dims_text);
      json triples = json::array();
      for (const entangle::AdmissibleTriple& t : entangle::enumerate_admissible(d))
        triples.push_back({t.n1, t.n2, t.n3});
      emit(json{{"count", triples.size()}, {"triples", triples}}, opt.table);
      return 0;
    }

    if (count->parsed()) {
      Dims d = parse_dims_arg(dims_text);
      json out{{"N", entangle::count_admissible(d)}};
      if (approx) {
        if (d.d1 != d.d2 || d.d2 != d.d3)
          throw CLI::ValidationError("--approx", "closed form needs equal dims");
        out["approx"] = entangle::approx_count_equal(d.d1);
      }
      emit(out, opt.table);
      return 0;
    }

    if (compose->parsed()) {
      const Catalog& cat = catalog_for(opt);
      entangle::DirectSumExpr e = entangle::parse_expr(expr_text);
      json out{{"expr", entangle::to_string(e)}};
      bool full_axis = true;
      std::function<void(const entangle::DirectSumExpr&)> walk =
          [&](const entangle::DirectSumExpr& node) {
            if (!node.is_leaf() && node.axes_mask != 0b111u) full_axis = false;
            for (const auto& c : node.children) walk(c);
          };
      walk(e);
      if (full_axis) {
        Signature s = entangle::compose_signature(e, cat);
        out["signature"] = sig_to_json(s);
        Dims d = entangle::expr_dims(e, cat);
        out["class"] = entangle::classify(cat, d, s);
      }
      entangle::BoundSignature bs = entangle::compose_bounds(e, cat);
      out["bounds"] = json{
          {"n1", to_string(bs.n1)},     {"n2", to_string(bs.n2)},
          {"n3", to_string(bs.n3)},     {"n12", to_string(bs.n12)},
          {"n13", to_string(bs.n13)},   {"n23", to_string(bs.n23)},
          {"n123", to_string(bs.n123)},
      };
      if (construct) {
        Signature s = entangle::signature(entangle::compose_vector(e, cat));
        out["constructed_signature"] = sig_to_json(s);
      }
      emit(out, opt.table);
      return 0;
    }

    if (reach->parsed()) {
      entangle::ReachTable t = entangle::estimate_reach(
          catalog_for(opt), class_name, kmax, samples, seed);
      json entries = json::array();
      for (const entangle::ReachEntry& e : t.entries) {
        json row{{"target", e.target}};
        if (e.min_k) row["min_k"] = *e.min_k;
        entries.push_back(row);
      }
      // Orbit sampling under-approximates the true reach sets, hence the
      // explicit label.
      emit(json{{"source", t.source},
                {"kmax", t.k_max},
                {"samples", t.samples},
                {"seed", t.seed},
                {"semantics", "observed lower bound"},
                {"targets", entries}},
           opt.table);
      return 0;
    }

    if (census->parsed()) {
      Dims d = parse_dims_arg(dims_text);
      entangle::CensusReport r =
          exhaustive ? entangle::census_exhaustive(d)
                     : entangle::census_sampled(d, samples, seed);
      json cells = json::array();
      long total = 0;
      for (const entangle::CensusCell& c : r.cells) {
        cells.push_back({{"quadruple", {c.n1, c.n2, c.n3, c.n123}},
                         {"count", c.count},
                         {"witness", c.witness}});
        total += c.count;
      }
      json out{{"dims", {d.d1, d.d2, d.d3}},
               {"mode", r.exhaustive ? "exhaustive" : "sampled"},
               {"total", total},
               {"cells", cells}};
      if (!r.exhaustive) {
        out["samples"] = r.samples;
        out["seed"] = r.seed;
      }
      emit(out, opt.table);
      return 0;
    }

    if (scan->parsed()) {
      Dims d = parse_dims_arg(dims_text);
      entangle::ConjectureScan r = entangle::scan_conjectures(d, samples, seed);
      emit(json{{"dims", {d.d1, d.d2, d.d3}},
                {"samples", r.samples},
                {"seed", r.seed},
                {"violations", r.violations},
                {"violation_details", r.violation_details},
                {"attained",
                 {{"lower_c1", r.attained_c1},
                  {"lower_c2", r.attained_c2},
                  {"lower_c3", r.attained_c3},
                  {"upper", r.attained_upper}}}},
           opt.table);
      return 0;
    }

    if (verify->parsed()) {
      const Catalog& cat = catalog_for(opt);
      entangle::RunReport rep = entangle::verify_tables(cat, extended);
      json checks = json::array();
      for (const entangle::CheckResult& c : rep.checks)
        checks.push_back({{"name", c.name},
                          {"expected", c.expected},
                          {"actual", c.actual},
                          {"pass", c.pass}});
      emit(json{{"overall", rep.overall() ? "pass" : "fail"},
                {"checks_run", rep.checks.size()},
                {"failures", rep.failures()},
                {"checks", checks}},
           opt.table);
      return rep.overall() ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
