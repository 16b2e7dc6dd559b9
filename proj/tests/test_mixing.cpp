#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "cyclemix/mixing.hpp"

using namespace cyclemix;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[i] = f[g[i]];
  return h;
}

Partition cycle_type(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  std::vector<int> lens;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end(), std::greater<int>());
  return Partition(lens);
}

// All transpositions of S_n as image tables.
std::vector<std::vector<int>> transpositions(int n) {
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::swap(p[i], p[j]);
      out.push_back(std::move(p));
    }
  return out;
}

}  // namespace

TEST_CASE("exact distribution: empty and single convolutions") {
  const CharacterTable table = character_table(5);
  const CycleType C = CycleType::k_cycle(5, 3);
  {
    const ClassDistribution dist = exact_distribution(table, C, 0);
    for (size_t j = 0; j < dist.classes.size(); ++j)
      CHECK(dist.exact[j] == (dist.classes[j] == CycleType::identity(5).cycles() ? 1 : 0));
  }
  {
    const ClassDistribution dist = exact_distribution(table, C, 1);
    for (size_t j = 0; j < dist.classes.size(); ++j)
      CHECK(dist.exact[j] == (dist.classes[j] == C.cycles() ? 1 : 0));
  }
  CHECK_THROWS_AS(exact_distribution(table, C, -1), std::invalid_argument);
}

TEST_CASE("two transposition steps in S_4 match pair enumeration") {
  const CharacterTable table = character_table(4);
  const ClassDistribution dist = exact_distribution(table, CycleType::k_cycle(4, 2), 2);

  std::map<Partition, int> pair_counts;
  const auto taus = transpositions(4);
  for (const auto& a : taus)
    for (const auto& b : taus) pair_counts[cycle_type(compose(a, b))] += 1;

  int total = 0;
  for (size_t j = 0; j < dist.classes.size(); ++j) {
    const int count = pair_counts.count(dist.classes[j]) ? pair_counts[dist.classes[j]] : 0;
    CHECK(dist.exact[j] == make_rat(Int(count), Int(36)));
    total += count;
  }
  CHECK(total == 36);
  CHECK(dist.exact[table.class_index(CycleType::identity(4).cycles())] == Rat(1, 6));
}

TEST_CASE("distribution mass and coset support") {
  for (int n : {4, 6}) {
    const CharacterTable table = character_table(n);
    for (int k = 2; k <= n; ++k) {
      const CycleType C = CycleType::k_cycle(n, k);
      for (int t = 0; t <= 8; ++t) {
        const ClassDistribution dist = exact_distribution(table, C, t);
        Rat sum = 0;
        const int coset_sign = (C.sign() == -1 && t % 2 == 1) ? -1 : 1;
        for (size_t j = 0; j < dist.classes.size(); ++j) {
          CHECK(dist.exact[j] >= 0);
          sum += dist.exact[j];
          if (CycleType(dist.classes[j]).sign() != coset_sign) CHECK(dist.exact[j] == 0);
        }
        CHECK(sum == 1);
      }
    }
  }
}

TEST_CASE("exact tv examples") {
  const CharacterTable t4 = character_table(4);
  CHECK(exact_tv(t4, CycleType::k_cycle(4, 2), 0) == Rat(11, 12));  // 1 - 2/4!
  CHECK(exact_tv(t4, CycleType::k_cycle(4, 2), 1) == Rat(1, 2));
  CHECK(exact_tv(t4, CycleType::k_cycle(4, 2), 2) == Rat(1, 12));
  const CharacterTable t5 = character_table(5);
  CHECK(exact_tv(t5, CycleType::k_cycle(5, 3), 0) == Rat(59, 60));
  for (int t = 0; t <= 12; ++t) {
    const Rat tv = exact_tv(t5, CycleType::k_cycle(5, 2), t);
    CHECK(tv >= 0);
    CHECK(tv <= 1);
  }
}

TEST_CASE("l2 upper bound") {
  const CharacterTable t4 = character_table(4);
  const CycleType C2 = CycleType::k_cycle(4, 2);
  CHECK(tv_upper_bound_squared(t4, C2, 2) == Rat(1, 18));
  CHECK(tv_upper_bound_exact(t4, C2, 2) == doctest::Approx(0.2357022604));

  const CharacterTable t6 = character_table(6);
  const CycleType C = CycleType::k_cycle(6, 2);
  double prev = tv_upper_bound_exact(t6, C, 1);
  for (int t = 2; t <= 25; ++t) {
    const double next = tv_upper_bound_exact(t6, C, t);
    CHECK(next <= prev + 1e-15);
    prev = next;
  }
  CHECK(prev < 1e-3);

  const CharacterTable t10 = character_table(10);
  CHECK(tv_upper_bound_exact(t10, CycleType::k_cycle(10, 2), 12) < 1.0);
}

TEST_CASE("upper bound dominates exact tv") {
  for (int n : {4, 6, 8}) {
    const CharacterTable table = character_table(n);
    for (int k = 2; k <= n; ++k) {
      const CycleType C = CycleType::k_cycle(n, k);
      for (int t = 0; t <= 12; ++t) {
        const Rat tv = exact_tv(table, C, t);
        CHECK(tv * tv <= tv_upper_bound_squared(table, C, t));
      }
    }
  }
}

TEST_CASE("regime-mode upper bound runs beyond the table cap") {
  const double bound = tv_upper_bound_regimes(24, 2, 60);
  CHECK(bound >= 0.0);
  CHECK(std::isfinite(bound));
  CHECK_THROWS_AS(tv_upper_bound_regimes(70, 2, 60), std::domain_error);
  CHECK(std::isfinite(tv_upper_bound_regimes(70, 2, 60, {}, 80)));
}

TEST_CASE("moment formulas") {
  CHECK(moments_fixed_points(7, 3, 0, 0).mean == 6);
  {
    // one transposition step in S_6: brute force over the 15 transpositions
    const auto taus = transpositions(6);
    REQUIRE(taus.size() == 15);
    Rat mean = 0, second = 0;
    for (const auto& tau : taus) {
      int fixed = 0;
      for (int i = 0; i < 6; ++i) fixed += (tau[i] == i);
      mean += make_rat(Int(fixed - 1), Int(15));
      second += make_rat(Int((fixed - 1) * (fixed - 1)), Int(15));
    }
    const MomentReport report = moments_fixed_points(6, 2, 1, 1);
    CHECK(report.mean == mean);
    CHECK(report.mean == 3);
    CHECK(report.second_moment == second);
    CHECK(report.second_moment == 9);
    CHECK(report.variance == 0);
  }
  CHECK(moments_fixed_points(6, 2, 1, 2).mean == Rat(9, 5));
  CHECK_THROWS_AS(moments_fixed_points(4, 2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(moments_fixed_points(8, 3, 2, 1), std::invalid_argument);  // 2j > k
  for (int t = 0; t <= 10; ++t) CHECK(moments_fixed_points(9, 3, 0, t).variance >= 0);
}

TEST_CASE("moments agree with the convolution law") {
  for (int n : {6, 8}) {
    const CharacterTable table = character_table(n);
    for (int k = 2; k <= 4; ++k) {
      const CycleType C = CycleType::k_cycle(n, k);
      for (int t = 0; t <= 6; ++t) {
        const MomentReport report = moments_fixed_points(n, k, C.two_cycles(), t);
        const ClassDistribution dist = exact_distribution(table, C, t);
        Rat m1 = 0, m2 = 0;
        for (size_t c = 0; c < dist.classes.size(); ++c) {
          const Rat stat(CycleType(dist.classes[c]).fixed_points() - 1);
          m1 += dist.exact[c] * stat;
          m2 += dist.exact[c] * stat * stat;
        }
        CHECK(report.mean == m1);
        CHECK(report.second_moment == m2);
      }
    }
  }
  {
    // double transpositions exercise j = 2
    const CharacterTable table = character_table(8);
    const CycleType C(P({2, 2, 1, 1, 1, 1}));
    for (int t = 0; t <= 4; ++t) {
      const MomentReport report = moments_fixed_points(8, 4, 2, t);
      const ClassDistribution dist = exact_distribution(table, C, t);
      Rat m1 = 0;
      for (size_t c = 0; c < dist.classes.size(); ++c)
        m1 += dist.exact[c] * Rat(CycleType(dist.classes[c]).fixed_points() - 1);
      CHECK(report.mean == m1);
    }
  }
}

TEST_CASE("second-moment lower bound") {
  CHECK(tv_lower_bound(6, 2, 1, 30) == 0.0);  // mean far below 1
  {
    const double bound = tv_lower_bound(8, 2, 1, 2);
    CHECK(bound == doctest::Approx(0.4818397614));
    const CharacterTable table = character_table(8);
    CHECK(bound <= to_double(exact_tv(table, CycleType::k_cycle(8, 2), 2)) + 1e-12);
  }
  for (int n : {6, 8}) CHECK(tv_lower_bound(n, 2, 1, 0) ==
                             doctest::Approx(1.0 - 1.0 / (n - 1)));
}

TEST_CASE("lower bound below exact tv across the small grid") {
  for (int n : {5, 6, 7, 8}) {
    const CharacterTable table = character_table(n);
    for (int k = 2; k <= n; ++k) {
      const CycleType C = CycleType::k_cycle(n, k);
      for (int t = 0; t <= 10; ++t)
        CHECK(tv_lower_bound(n, k, C.two_cycles(), t) <=
              to_double(exact_tv(table, C, t)) + 1e-12);
    }
  }
}

TEST_CASE("cutoff scan") {
  const CharacterTable t8 = character_table(8);
  {
    const auto rows = cutoff_scan(t8, CycleType::k_cycle(8, 3), 0, 12);
    REQUIRE(rows.size() == 13);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i > 0) CHECK(rows[i].tv_exact <= rows[i - 1].tv_exact);
      CHECK(rows[i].tv_lower <= to_double(rows[i].tv_exact) + 1e-12);
      CHECK(to_double(rows[i].tv_exact) <= rows[i].tv_upper + 1e-12);
    }
  }
  {
    // 7-cycles are even permutations: one coset for every t
    const auto rows = cutoff_scan(t8, CycleType::k_cycle(8, 7), 0, 4);
    CHECK(rows[0].tv_exact == Rat(1) - make_rat(Int(2), Int(40320)));
    for (const auto& row : rows) CHECK(row.tv_exact == exact_tv(t8, CycleType::k_cycle(8, 7), row.t));
  }
  CHECK(cutoff_scan(t8, CycleType::k_cycle(8, 2), 3, 2).empty());
  const std::string csv = cutoff_csv(cutoff_scan(t8, CycleType::k_cycle(8, 2), 0, 1));
  CHECK(csv.find("t,tv_exact,tv_exact_float,tv_upper,tv_lower") == 0);
}

TEST_CASE("plancherel identity and coset fourier coefficients at n = 6") {
  const int n = 6;
  const CharacterTable table = character_table(n);
  for (int k : {2, 3}) {
    const CycleType C = CycleType::k_cycle(n, k);
    const int ci = table.class_index(C.cycles());
    for (int t = 1; t <= 4; ++t) {
      Rat lhs = 0;
      for (size_t i = 0; i < table.lambdas.size(); ++i)
        lhs += Rat(table.dims[i] * table.dims[i]) *
               pow_rat(make_rat(table.values[i][ci], table.dims[i]),
                       static_cast<unsigned long>(2 * t));
      const ClassDistribution dist = exact_distribution(table, C, t);
      Rat rhs = 0;
      for (size_t c = 0; c < dist.classes.size(); ++c)
        rhs += dist.exact[c] * dist.exact[c] / Rat(table.sizes[c]);
      CHECK(lhs == Rat(factorial(n)) * rhs);
    }
  }
  for (int coset_sign : {1, -1}) {
    const CosetUniform coset{n, coset_sign};
    for (size_t i = 0; i < table.lambdas.size(); ++i) {
      Rat coeff = 0;
      for (size_t j = 0; j < table.classes.size(); ++j)
        coeff += coset.class_mass(table.classes[j]) * make_rat(table.values[i][j], table.dims[i]);
      if (table.lambdas[i].first() == n)
        CHECK(coeff == 1);
      else if (table.lambdas[i].rows() == n)
        CHECK(coeff == coset_sign);
      else
        CHECK(coeff == 0);
    }
  }
}
