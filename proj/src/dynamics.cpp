#include "entangle/dynamics.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "entangle/admissible.hpp"

namespace entangle {

Tensor3 annihilate(const Tensor3& t, int axis, int index) {
  if (axis < 1 || axis > 3)
    throw std::invalid_argument("annihilate: bad axis");
  if (index < 1 || index > t.dims()[axis])
    throw std::out_of_range("annihilate: slice index out of range");
  Tensor3 out = t;
  const Dims& d = t.dims();
  for (int i = 1; i <= d.d1; ++i)
    for (int j = 1; j <= d.d2; ++j)
      for (int k = 1; k <= d.d3; ++k) {
        int slot = axis == 1 ? i : axis == 2 ? j : k;
        if (slot == index) out.at(i, j, k) = 0;
      }
  return out;
}

namespace {

RationalMatrix random_invertible(SplitMix64& rng, std::size_t n, long bound) {
  long b = bound;
  for (int attempt = 0;; ++attempt) {
    if (attempt == 64) {
      b *= 2;  // nonsingular draws are overwhelmingly likely; widen anyway
      attempt = 0;
    }
    RationalMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m.at(r, c) = rng.range(-b, b);
    if (n == 0 || determinant(m) != 0) return m;
  }
}

}  // namespace

Tensor3 random_local_gl(const Tensor3& t, SplitMix64& rng, long bound) {
  if (bound < 1) throw std::invalid_argument("random_local_gl: bound >= 1");
  Tensor3 out = t;
  for (int axis = 1; axis <= 3; ++axis) {
    RationalMatrix m = random_invertible(
        rng, static_cast<std::size_t>(t.dims()[axis]), bound);
    out = mode_transform(out, axis, m);
  }
  return out;
}

ReachTable estimate_reach(const Catalog& cat, const std::string& source,
                          int k_max, long samples, std::uint64_t seed) {
  ClassRecord rec = cat.resolve(source);
  const Tensor3 rep = parse_term_list(rec.representative, rec.dims);
  const Dims dims = rec.dims;

  ReachTable table;
  table.source = source;
  table.k_max = k_max;
  table.samples = samples;
  table.seed = seed;

  std::map<std::string, int> min_k;
  min_k[classify(cat, dims, signature(rep))] = 0;

  for (long s = 0; s < samples; ++s) {
    SplitMix64 rng = SplitMix64::split(seed, static_cast<std::uint64_t>(s));
    Tensor3 t = random_local_gl(rep, rng);
    Signature prev = signature(t);
    for (int k = 1; k <= k_max; ++k) {
      const int axis = static_cast<int>(rng.below(3)) + 1;
      const int index = static_cast<int>(rng.below(
                            static_cast<std::uint64_t>(dims[axis]))) + 1;
      t = annihilate(t, axis, index);
      Signature sig = signature(t);
      // Dropping a slice can only lower the flattening ranks.
      if (dims.d1 - sig.n1 > dims.d1 - prev.n1 ||
          dims.d2 - sig.n2 > dims.d2 - prev.n2 ||
          dims.d3 - sig.n3 > dims.d3 - prev.n3)
        throw std::logic_error("annihilate increased a flattening rank");
      prev = sig;
      const std::string cls = classify(cat, dims, sig);
      auto [it, inserted] = min_k.emplace(cls, k);
      if (!inserted && k < it->second) it->second = k;
    }
  }
  for (const auto& [target, k] : min_k)
    table.entries.push_back({target, k});
  return table;
}

namespace {

void census_tally(std::map<std::tuple<long, long, long, long>, CensusCell>& acc,
                  const Tensor3& t) {
  Signature s = signature(t);
  if (!is_admissible(t.dims(), s.n1, s.n2, s.n3))
    throw std::logic_error("census: computed triple is not admissible");
  auto key = std::make_tuple(s.n1, s.n2, s.n3, s.n123);
  auto [it, inserted] = acc.try_emplace(key);
  CensusCell& cell = it->second;
  if (inserted) {
    cell.n1 = s.n1;
    cell.n2 = s.n2;
    cell.n3 = s.n3;
    cell.n123 = s.n123;
    cell.witness = format_term_list(t);
  }
  ++cell.count;
}

CensusReport census_finish(
    Dims dims, std::map<std::tuple<long, long, long, long>, CensusCell>& acc) {
  CensusReport report;
  report.dims = dims;
  for (auto& [key, cell] : acc) report.cells.push_back(std::move(cell));
  return report;
}

}  // namespace

CensusReport census_exhaustive(Dims dims) {
  const long total = dims.total();
  if (total > 16)
    throw std::invalid_argument("census: exhaustive mode requires d1*d2*d3 <= 16");
  std::map<std::tuple<long, long, long, long>, CensusCell> acc;
  Tensor3 t(dims);
  for (std::uint64_t mask = 0; mask < (1ull << total); ++mask) {
    for (long e = 0; e < total; ++e)
      t.entries()[static_cast<std::size_t>(e)] = (mask >> e) & 1 ? 1 : 0;
    census_tally(acc, t);
  }
  CensusReport report = census_finish(dims, acc);
  report.exhaustive = true;
  return report;
}

CensusReport census_sampled(Dims dims, long samples, std::uint64_t seed) {
  const long total = dims.total();
  std::map<std::tuple<long, long, long, long>, CensusCell> acc;
  Tensor3 t(dims);
  for (long s = 0; s < samples; ++s) {
    SplitMix64 rng = SplitMix64::split(seed, static_cast<std::uint64_t>(s));
    for (long e = 0; e < total; ++e)
      t.entries()[static_cast<std::size_t>(e)] = rng.below(2) ? 1 : 0;
    census_tally(acc, t);
  }
  CensusReport report = census_finish(dims, acc);
  report.samples = samples;
  report.seed = seed;
  return report;
}

ConjectureScan scan_conjectures(Dims dims, long samples, std::uint64_t seed) {
  ConjectureScan scan;
  scan.dims = dims;
  scan.samples = samples;
  scan.seed = seed;
  const long total = dims.total();
  Tensor3 t(dims);
  for (long s = 0; s < samples; ++s) {
    SplitMix64 rng = SplitMix64::split(seed, static_cast<std::uint64_t>(s));
    for (long e = 0; e < total; ++e)
      t.entries()[static_cast<std::size_t>(e)] = rng.range(-1, 1);
    Signature sig = signature(t);
    N123Bounds b = n123_bounds(dims, {sig.n1, sig.n2, sig.n3});
    const bool ok = b.lower_c1 <= b.lower_c2 && b.lower_c2 <= b.lower_c3 &&
                    b.lower_c3 <= sig.n123 && sig.n123 <= b.upper;
    if (!ok) {
      ++scan.violations;
      if (scan.violation_details.size() < 16) {
        std::ostringstream msg;
        msg << "sample " << s << ": signature " << to_string(sig)
            << " bounds [" << b.lower_c1 << ',' << b.lower_c2 << ','
            << b.lower_c3 << ',' << b.upper << ']';
        scan.violation_details.push_back(msg.str());
      }
      continue;
    }
    if (sig.n123 == b.lower_c1) ++scan.attained_c1;
    if (sig.n123 == b.lower_c2) ++scan.attained_c2;
    if (sig.n123 == b.lower_c3) ++scan.attained_c3;
    if (sig.n123 == b.upper) ++scan.attained_upper;
  }
  return scan;
}

}  // namespace entangle
