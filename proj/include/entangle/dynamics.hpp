#ifndef ENTANGLE_DYNAMICS_HPP
#define ENTANGLE_DYNAMICS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "entangle/classes.hpp"
#include "entangle/invariants.hpp"
#include "entangle/tensor.hpp"

namespace entangle {

// Deterministic 64-bit generator (splitmix64). Cheap to seed, so each
// sample gets its own stream split from (seed, index) and parallel or
// serial runs agree.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  static SplitMix64 split(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 g(seed);
    return SplitMix64(g.next() ^ (index * 0x9e3779b97f4a7c15ull));
  }

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  // Uniform in [lo, hi].
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

// Zeroes the index-th slice along the given axis; dims are unchanged.
Tensor3 annihilate(const Tensor3& t, int axis, int index);

// Applies an independent random invertible integer matrix (entries uniform
// in [-bound, bound]) to each axis. Singular draws are resampled, with the
// bound widened after 64 failures. Deterministic given the generator state.
Tensor3 random_local_gl(const Tensor3& t, SplitMix64& rng, long bound = 3);

struct ReachEntry {
  std::string target;
  std::optional<int> min_k;  // smallest annihilation count observed
};

struct ReachTable {
  std::string source;
  int k_max = 0;
  long samples = 0;
  std::uint64_t seed = 0;
  // Observed lower bound on the reach sets: orbit sampling of the
  // representative cannot prove a class unreachable.
  std::vector<ReachEntry> entries;
};

ReachTable estimate_reach(const Catalog& cat, const std::string& source,
                          int k_max, long samples, std::uint64_t seed);

struct CensusCell {
  long n1 = 0, n2 = 0, n3 = 0, n123 = 0;
  long count = 0;
  std::string witness;
  auto operator<=>(const CensusCell&) const = default;
};

struct CensusReport {
  Dims dims;
  bool exhaustive = false;
  long samples = 0;      // sampled mode
  std::uint64_t seed = 0;
  std::vector<CensusCell> cells;  // sorted by quadruple
};

// Iterates 0/1 tensors: all 2^(d1 d2 d3) of them in exhaustive mode
// (requires d1 d2 d3 <= 16), or n uniform draws in sampled mode.
CensusReport census_exhaustive(Dims dims);
CensusReport census_sampled(Dims dims, long samples, std::uint64_t seed);

struct ConjectureScan {
  Dims dims;
  long samples = 0;
  std::uint64_t seed = 0;
  long violations = 0;
  std::vector<std::string> violation_details;
  // How often each bound was attained exactly.
  long attained_c1 = 0, attained_c2 = 0, attained_c3 = 0, attained_upper = 0;
};

// Samples tensors with entries in {-1,0,1} and checks
// lower_c1 <= lower_c2 <= lower_c3 <= n123 <= upper on each.
ConjectureScan scan_conjectures(Dims dims, long samples, std::uint64_t seed);

}  // namespace entangle

#endif
