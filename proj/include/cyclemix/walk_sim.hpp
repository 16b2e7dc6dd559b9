#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cyclemix/mixing.hpp"
#include "cyclemix/partition.hpp"

#include "json.hpp"

namespace cyclemix {

struct WalkConfig {
  int n = 0;
  int k = 0;
  int t = 0;
  long long samples = 1;
  std::uint64_t seed = 1;
  int workers = 1;
  bool check_parity = false;  // verify sgn = ((-1)^{k-1})^t on every sample
};

/// Tallies of sampled endpoints by cycle type. Merging is counter addition.
struct ClassHistogram {
  int n = 0;
  std::map<Partition, std::uint64_t> counts;
  std::uint64_t total = 0;

  void merge(const ClassHistogram& other);
  double frequency(const Partition& rho) const;
  std::string to_csv() const;
  nlohmann::ordered_json to_json() const;
};

/// Deterministic bounded uniform draw (rejection sampling); kept independent
/// of std::uniform_int_distribution so histograms reproduce across standard
/// libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Uniformly random k-cycle as an image table. An ordered k-subset is drawn
/// by a partial Fisher-Yates pass and closed into a cycle; each k-cycle
/// arises from exactly k of the ordered tuples, so the class is uniform.
std::vector<int> sample_k_cycle(int n, int k, std::mt19937_64& rng);

/// Cycle type of an image table, by marked traversal.
Partition cycle_type_of(const std::vector<int>& perm);

/// samples independent t-step products of uniform k-cycles, tallied by cycle
/// type. Worker w draws from a stream seeded with mix(seed, w) and owns a
/// private histogram; a final merge makes the result deterministic in
/// (seed, workers). Throws std::runtime_error if a parity check fails.
ClassHistogram run_walk(const WalkConfig& cfg);

/// (1/2) sum over classes |count/total - ref prob|. Marginal TV over cycle
/// types, which equals permutation-level TV for class-function laws.
double empirical_tv(const ClassHistogram& hist, const ClassDistribution& ref);

/// Empirical TV against the coset-uniform law with the given sign.
double empirical_tv_to_coset_uniform(const ClassHistogram& hist, int coset_sign);

}  // namespace cyclemix
