#include "cyclemix/walk_sim.hpp"

#include <algorithm>
#include <cstdio>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace cyclemix {

void ClassHistogram::merge(const ClassHistogram& other) {
  for (const auto& [rho, c] : other.counts) counts[rho] += c;
  total += other.total;
}

double ClassHistogram::frequency(const Partition& rho) const {
  auto it = counts.find(rho);
  if (it == counts.end() || total == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(total);
}

namespace {

std::string format6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::string ClassHistogram::to_csv() const {
  std::string out = "cycle_type,count,frequency\n";
  for (const auto& [rho, c] : counts)
    out += "\"" + rho.to_string() + "\"," + std::to_string(c) + "," +
           format6(static_cast<double>(c) / static_cast<double>(total)) + "\n";
  return out;
}

nlohmann::ordered_json ClassHistogram::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["total"] = total;
  j["classes"] = nlohmann::ordered_json::array();
  for (const auto& [rho, c] : counts) {
    nlohmann::ordered_json row;
    row["cycle_type"] = rho.to_string();
    row["count"] = c;
    row["frequency"] = std::stod(format6(static_cast<double>(c) / static_cast<double>(total)));
    j["classes"].push_back(std::move(row));
  }
  return j;
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

namespace {

// Draw an ordered k-subset into pool[0..k). The pool persists across calls;
// any permutation of 0..n-1 works as a starting state.
void draw_support(std::vector<int>& pool, int k, std::mt19937_64& rng) {
  const int n = static_cast<int>(pool.size());
  for (int i = 0; i < k; ++i) {
    const int j = i + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - i)));
    std::swap(pool[i], pool[j]);
  }
}

// state <- state o cycle, touching only the k moved images.
void apply_cycle(std::vector<int>& state, const std::vector<int>& pool, int k) {
  const int first = state[pool[0]];
  for (int i = 0; i + 1 < k; ++i) state[pool[i]] = state[pool[i + 1]];
  state[pool[k - 1]] = first;
}

}  // namespace

std::vector<int> sample_k_cycle(int n, int k, std::mt19937_64& rng) {
  if (k < 2 || k > n) throw std::invalid_argument("sample_k_cycle needs 2 <= k <= n");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  draw_support(pool, k, rng);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = 0; i < k; ++i) perm[pool[i]] = pool[(i + 1) % k];
  return perm;
}

Partition cycle_type_of(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  std::vector<int> lengths;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<int>());
  return Partition(std::move(lengths));
}

ClassHistogram run_walk(const WalkConfig& cfg) {
  if (cfg.n < 2 || cfg.k < 2 || cfg.k > cfg.n)
    throw std::invalid_argument("run_walk needs 2 <= k <= n");
  if (cfg.t < 0 || cfg.samples < 1) throw std::invalid_argument("run_walk: bad t or samples");
  const int workers = std::max(1, cfg.workers);
  const int expected_sign = (cfg.k % 2 == 1 || cfg.t % 2 == 0) ? 1 : -1;
#ifdef NDEBUG
  const bool check_parity = cfg.check_parity;
#else
  const bool check_parity = true;  // debug builds always assert the sign
#endif

  std::mutex merge_mutex;
  ClassHistogram result;
  result.n = cfg.n;
  std::uint64_t parity_failures = 0;

  auto worker_main = [&](int w, long long count) {
    std::mt19937_64 rng(splitmix64(cfg.seed ^ (0x517cc1b727220a95ull * (w + 1))));
    std::vector<int> pool(cfg.n), state(cfg.n);
    ClassHistogram local;
    local.n = cfg.n;
    std::uint64_t local_parity_failures = 0;
    std::iota(pool.begin(), pool.end(), 0);
    for (long long s = 0; s < count; ++s) {
      std::iota(state.begin(), state.end(), 0);
      for (int step = 0; step < cfg.t; ++step) {
        draw_support(pool, cfg.k, rng);
        apply_cycle(state, pool, cfg.k);
      }
      Partition rho = cycle_type_of(state);
      if (check_parity) {
        const int sign = ((cfg.n - rho.rows()) % 2 == 0) ? 1 : -1;
        if (sign != expected_sign) ++local_parity_failures;
      }
      local.counts[std::move(rho)] += 1;
      local.total += 1;
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    result.merge(local);
    parity_failures += local_parity_failures;
  };

  const long long base = cfg.samples / workers;
  const long long extra = cfg.samples % workers;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    const long long count = base + (w < extra ? 1 : 0);
    if (count > 0) pool.emplace_back(worker_main, w, count);
  }
  for (auto& th : pool) th.join();

  if (parity_failures > 0)
    throw std::runtime_error("run_walk: parity invariant failed on " +
                             std::to_string(parity_failures) + " samples");
  return result;
}

double empirical_tv(const ClassHistogram& hist, const ClassDistribution& ref) {
  if (hist.n != ref.n) throw std::invalid_argument("empirical_tv: mismatched n");
  double tv = 0.0;
  for (size_t j = 0; j < ref.classes.size(); ++j)
    tv += std::abs(hist.frequency(ref.classes[j]) - ref.prob_as_double(j));
  return tv / 2.0;
}

double empirical_tv_to_coset_uniform(const ClassHistogram& hist, int coset_sign) {
  CosetUniform coset{hist.n, coset_sign};
  double tv = 0.0;
  for_each_partition(hist.n, [&](const Partition& rho) {
    tv += std::abs(hist.frequency(rho) - to_double(coset.class_mass(rho)));
  });
  return tv / 2.0;
}

}  // namespace cyclemix
