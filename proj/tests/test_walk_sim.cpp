#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include "cyclemix/walk_sim.hpp"

using namespace cyclemix;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
}  // namespace

TEST_CASE("uniform_below stays in range") {
  std::mt19937_64 rng(11);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 70000; ++i) ++hits[uniform_below(rng, 7)];
  for (int c : hits) CHECK(std::abs(c - 10000) < 500);  // ~4.2 sigma
}

TEST_CASE("sample_k_cycle shape and uniformity") {
  std::mt19937_64 rng(5);
  {
    const auto perm = sample_k_cycle(2, 2, rng);
    CHECK(perm == std::vector<int>{1, 0});
  }
  for (int i = 0; i < 50; ++i) {
    const auto perm = sample_k_cycle(7, 4, rng);
    CHECK(cycle_type_of(perm) == P({4, 1, 1, 1}));
  }
  {
    // 3 transpositions in S_3, binomial bound at 1e5 draws
    std::map<std::vector<int>, int> counts;
    for (int i = 0; i < 100000; ++i) counts[sample_k_cycle(3, 2, rng)] += 1;
    REQUIRE(counts.size() == 3);
    for (const auto& [perm, count] : counts)
      CHECK(std::abs(count / 100000.0 - 1.0 / 3) < 3 * std::sqrt((1.0 / 3) * (2.0 / 3) / 100000));
  }
  {
    // 8 equally likely 3-cycles in S_4; chi-square with 7 dof
    std::map<std::vector<int>, int> counts;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) counts[sample_k_cycle(4, 3, rng)] += 1;
    REQUIRE(counts.size() == 8);
    double chi2 = 0.0;
    const double expected = draws / 8.0;
    for (const auto& [perm, count] : counts)
      chi2 += (count - expected) * (count - expected) / expected;
    CHECK(chi2 < 40.0);
  }
  CHECK_THROWS_AS(sample_k_cycle(3, 1, rng), std::invalid_argument);
  CHECK_THROWS_AS(sample_k_cycle(3, 4, rng), std::invalid_argument);
}

TEST_CASE("cycle_type_of") {
  CHECK(cycle_type_of({0, 1, 2}) == P({1, 1, 1}));
  CHECK(cycle_type_of({1, 0, 3, 2}) == P({2, 2}));
  CHECK(cycle_type_of({1, 2, 3, 0}) == P({4}));
}

TEST_CASE("walk endpoints at t = 0 and t = 1") {
  {
    const ClassHistogram hist = run_walk({.n = 6, .k = 3, .t = 0, .samples = 500, .seed = 3});
    CHECK(hist.total == 500);
    CHECK(hist.counts.at(CycleType::identity(6).cycles()) == 500);
  }
  {
    const ClassHistogram hist = run_walk({.n = 6, .k = 3, .t = 1, .samples = 500, .seed = 3});
    CHECK(hist.counts.at(P({3, 1, 1, 1})) == 500);
  }
}

TEST_CASE("reproducibility in (seed, workers)") {
  const WalkConfig cfg{.n = 7, .k = 2, .t = 5, .samples = 20000, .seed = 123, .workers = 4};
  const ClassHistogram a = run_walk(cfg);
  const ClassHistogram b = run_walk(cfg);
  CHECK(a.counts == b.counts);
  CHECK(a.total == b.total);

  WalkConfig other = cfg;
  other.seed = 124;
  CHECK(run_walk(other).counts != a.counts);
}

TEST_CASE("parity checking accepts valid walks") {
  for (int k : {2, 3}) {
    const ClassHistogram hist = run_walk(
        {.n = 6, .k = k, .t = 3, .samples = 2000, .seed = 17, .workers = 2,
         .check_parity = true});
    const int expected_sign = (k % 2 == 1) ? 1 : -1;  // t = 3 odd
    for (const auto& [rho, count] : hist.counts)
      CHECK(CycleType(rho).sign() == expected_sign);
  }
}

TEST_CASE("empirical tv against references") {
  // point mass at the identity vs the even-coset uniform law
  ClassHistogram point;
  point.n = 6;
  point.counts[CycleType::identity(6).cycles()] = 100;
  point.total = 100;
  CHECK(empirical_tv_to_coset_uniform(point, 1) ==
        doctest::Approx(1.0 - 2.0 / 720.0));

  const CharacterTable table = character_table(6);
  {
    // exact law at t = 0 is the same point mass
    const ClassDistribution ref = exact_distribution(table, CycleType::k_cycle(6, 2), 0);
    CHECK(empirical_tv(point, ref) == doctest::Approx(0.0));
    // disjoint support: everything on transpositions
    ClassHistogram disjoint;
    disjoint.n = 6;
    disjoint.counts[P({2, 1, 1, 1, 1})] = 50;
    disjoint.total = 50;
    CHECK(empirical_tv(disjoint, ref) == doctest::Approx(1.0));
  }
  {
    ClassHistogram wrong_n;
    wrong_n.n = 5;
    wrong_n.total = 1;
    const ClassDistribution ref = exact_distribution(table, CycleType::k_cycle(6, 2), 1);
    CHECK_THROWS_AS(empirical_tv(wrong_n, ref), std::invalid_argument);
  }
}

TEST_CASE("empirical law converges to the exact law") {
  const CharacterTable table = character_table(8);
  const ClassDistribution ref = exact_distribution(table, CycleType::k_cycle(8, 3), 8);
  double prev = 1.0;
  for (long long samples : {1000, 10000, 100000, 1000000}) {
    const ClassHistogram hist =
        run_walk({.n = 8, .k = 3, .t = 8, .samples = samples, .seed = 29, .workers = 2});
    const double tv = empirical_tv(hist, ref);
    CHECK(tv < prev + 0.02);  // decreasing up to multinomial noise
    prev = tv;
  }
  CHECK(prev <= 0.01);
}

TEST_CASE("mixed and unmixed regimes at n = 8, k = 3") {
  const int mixed_t = static_cast<int>(2.0 * (8.0 / 3.0) * std::log(8.0));  // ~11
  const ClassHistogram mixed =
      run_walk({.n = 8, .k = 3, .t = mixed_t, .samples = 100000, .seed = 31, .workers = 2});
  CHECK(empirical_tv_to_coset_uniform(mixed, 1) < 0.1);
  const ClassHistogram unmixed =
      run_walk({.n = 8, .k = 3, .t = 1, .samples = 100000, .seed = 31, .workers = 2});
  CHECK(empirical_tv_to_coset_uniform(unmixed, 1) > 0.9);
}

TEST_CASE("histogram serialization") {
  const ClassHistogram hist = run_walk({.n = 5, .k = 2, .t = 2, .samples = 100, .seed = 8});
  const std::string csv = hist.to_csv();
  CHECK(csv.find("cycle_type,count,frequency") == 0);
  const auto j = hist.to_json();
  CHECK(j["total"] == 100);
}
