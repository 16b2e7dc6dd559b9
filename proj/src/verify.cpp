#include "cyclemix/verify.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "cyclemix/asymptotics.hpp"
#include "cyclemix/characters.hpp"
#include "cyclemix/mixing.hpp"
#include "cyclemix/partition.hpp"
#include "cyclemix/walk_sim.hpp"

namespace cyclemix {

namespace {

class Suite {
 public:
  Suite(std::ostream& log) : log_(log) {}

  void check(bool ok, const std::string& what) {
    if (ok) {
      ++result_.passed;
      log_ << "  [ok]   " << what << "\n";
    } else {
      ++result_.failed;
      result_.failures.push_back(what);
      log_ << "  [FAIL] " << what << "\n";
    }
  }

  SuiteResult result() const { return result_; }

 private:
  std::ostream& log_;
  SuiteResult result_;
};

int cap(int n_max, int dflt) { return n_max < 0 ? dflt : n_max; }

// Independent partition counter (pentagonal-number recurrence).
Int partition_count(int n) {
  static std::vector<Int> table{1};
  for (int m = static_cast<int>(table.size()); m <= n; ++m) {
    Int total = 0;
    for (int g = 1;; ++g) {
      const int p1 = m - g * (3 * g - 1) / 2;
      const int p2 = m - g * (3 * g + 1) / 2;
      if (p1 < 0 && p2 < 0) break;
      Int term = 0;
      if (p1 >= 0) term += table[p1];
      if (p2 >= 0) term += table[p2];
      total += (g % 2 == 1) ? term : Int(-term);
    }
    table.push_back(total);
  }
  return table[n];
}

void suite_partitions(Suite& s, int n_max) {
  for (int n = 1; n <= cap(n_max, 20); ++n) {
    bool roundtrip = true, mass = true, involution = true, diag = true;
    for_each_partition(n, [&](const Partition& lambda) {
      const FrobeniusCoords fc = to_frobenius(lambda);
      roundtrip &= (from_frobenius(fc) == lambda);
      long long total = 0;
      for (int i = 0; i < fc.m(); ++i) total += fc.a2[i] + fc.b2[i];
      mass &= (total == 2ll * n);
      involution &= (lambda.conjugate().conjugate() == lambda);
      diag &= (fc.m() * fc.m() <= n);
    });
    s.check(roundtrip, "frobenius round-trip, n=" + std::to_string(n));
    s.check(mass, "frobenius mass sum(a)+sum(b)=n, n=" + std::to_string(n));
    s.check(involution, "conjugation involution, n=" + std::to_string(n));
    s.check(diag, "diagonal m <= sqrt(n), n=" + std::to_string(n));
  }
  for (int n = 1; n <= cap(n_max, 30); ++n) {
    Int count = 0;
    PartitionStream stream(n);
    while (stream.next()) ++count;
    s.check(count == partition_count(n), "enumeration count = p(n), n=" + std::to_string(n));
  }
  for (int n = 1; n <= cap(n_max, 12); ++n) {
    Int total = 0;
    for_each_partition(n, [&](const Partition& rho) { total += class_size(CycleType(rho)); });
    s.check(total == factorial(n), "class sizes sum to n!, n=" + std::to_string(n));
  }
}

void suite_dimensions(Suite& s, int n_max) {
  for (int n = 1; n <= cap(n_max, 14); ++n) {
    bool agree = true, ds_bound = true;
    Int burnside = 0;
    for_each_partition(n, [&](const Partition& lambda) {
      const Int f = dimension(lambda);
      agree &= (f == dimension_hook_oracle(lambda));
      burnside += f * f;
      const Int bound = binomial(n, lambda.first());
      ds_bound &= (f * f <= bound * bound * factorial(n - lambda.first()));
    });
    s.check(agree, "determinant dimension = hook oracle, n=" + std::to_string(n));
    s.check(burnside == factorial(n), "sum of f^2 = n!, n=" + std::to_string(n));
    s.check(ds_bound, "f <= binom(n, l1) sqrt((n-l1)!), n=" + std::to_string(n));
  }
}

void suite_oracle_equivalence(Suite& s, int n_max) {
  for (int n = 2; n <= cap(n_max, 8); ++n) {
    MnEvaluator mn;
    bool general_ok = true, kcycle_ok = true, duality_ok = true;
    const auto lambdas = all_partitions(n);
    const auto classes = lambdas;
    for (const auto& lambda : lambdas) {
      const Int f = dimension(lambda);
      const Partition dual = lambda.conjugate();
      for (const auto& rho_parts : classes) {
        const CycleType rho(rho_parts);
        const Int mn_value = mn.evaluate(lambda, rho);
        general_ok &= (char_general(lambda, rho) == mn_value);
        duality_ok &= (mn.evaluate(dual, rho) == Int(rho.sign()) * mn_value);
        const int k = rho.nontrivial_total();
        if (k >= 2 && rho.cycles().part(0) == k)  // single k-cycle class
          kcycle_ok &= (char_ratio_kcycle(lambda, k) * Rat(f) == Rat(mn_value));
      }
    }
    s.check(general_ok, "tuple-sum characters = MN oracle, n=" + std::to_string(n));
    s.check(kcycle_ok, "residue ratio * dim = MN at k-cycles, n=" + std::to_string(n));
    s.check(duality_ok, "chi^dual = sgn * chi, n=" + std::to_string(n));
  }
}

void suite_small_characters(Suite& s, int n_max) {
  for (int n = 5; n <= cap(n_max, 10); ++n) {
    MnEvaluator mn;
    std::vector<int> std_parts{n - 1, 1};
    std::vector<int> hook_parts{n - 2, 1, 1};
    std::vector<int> two_row_parts{n - 2, 2};
    const Partition std_rep(std_parts), hook(hook_parts), two_row(two_row_parts);
    const Partition trivial(std::vector<int>{n});
    bool closed = true, tensor = true;
    for_each_partition(n, [&](const Partition& rho_parts) {
      const CycleType rho(rho_parts);
      const Int c1 = mn.evaluate(std_rep, rho);
      closed &= (small_char(SmallChar::std_rep, rho) == c1);
      closed &= (small_char(SmallChar::hook, rho) == mn.evaluate(hook, rho));
      closed &= (small_char(SmallChar::two_row, rho) == mn.evaluate(two_row, rho));
      tensor &= (c1 * c1 == mn.evaluate(two_row, rho) + mn.evaluate(hook, rho) + c1 +
                                mn.evaluate(trivial, rho));
    });
    s.check(closed, "closed small-character forms = MN, n=" + std::to_string(n));
    s.check(tensor, "square of standard character decomposes, n=" + std::to_string(n));
  }
}

void suite_asymptotics(Suite& s, int n_max) {
  // Exactness of the long-row main term when r < k inside the regime.
  {
    bool exact = true;
    int cases = 0;
    for (int n = 2; n <= cap(n_max, 12); ++n)
      for_each_partition(n, [&](const Partition& lambda) {
        const int r = n - lambda.first();
        for (int k = 2; k <= n; ++k)
          if (r < k && r + k + 1 < n / 2.0) {
            exact &= (main_term_part_a(lambda, k) == char_ratio_kcycle(lambda, k));
            ++cases;
          }
      });
    s.check(exact && cases > 0,
            "long-row main term exact when r < k (" + std::to_string(cases) + " cases)");
  }
  // Main-term bound exp(-kr/n).
  {
    bool ok = true;
    for (int n = 2; n <= cap(n_max, 14); ++n)
      for_each_partition(n, [&](const Partition& lambda) {
        const int r = n - lambda.first();
        for (int k = 2; k <= n; ++k)
          if (k + r + 1 < n / 2.0) {
            const double mt = to_double(main_term_part_a(lambda, k));
            ok &= (mt <= std::exp(mt_upper_bound(n, k, r)) + 1e-12);
          }
      });
    s.check(ok, "main term <= exp(-kr/n) in regime");
  }
  // Power sums dominated by the optimization value.
  {
    bool ok = true;
    for (int n = 2; n <= cap(n_max, 14); ++n)
      for_each_partition(n, [&](const Partition& lambda) {
        const FrobeniusCoords fc = to_frobenius(lambda);
        if (fc.b2[0] > fc.a2[0]) return;
        const int r = n - lambda.first();
        for (int k = 2; k <= 20; ++k) {
          double ps = 0.0;
          for (int i = 0; i < fc.m(); ++i)
            ps += std::pow(fc.a(i) / n, k) + std::pow(fc.b(i) / n, k);
          ok &= (std::log(ps) <= power_sum_bound(n, k, r, PowerSumForm::sharp) + 1e-9);
        }
      });
    s.check(ok, "power sums <= sharp optimization value");
  }
  // sharp <= all_r on a grid.
  {
    bool ok = true;
    for (int k = 2; k <= 50; ++k)
      for (int pct = 1; pct <= 99; ++pct)
        ok &= (power_sum_bound(100, k, pct, PowerSumForm::sharp) <=
               power_sum_bound(100, k, pct, PowerSumForm::all_r) + 1e-12);
    s.check(ok, "sharp optimization value <= -kr/2n envelope");
  }
  // Short-row bound never contradicts an exact ratio.
  {
    bool ok = true;
    int applicable = 0;
    for (int n = 2; n <= cap(n_max, 14); ++n)
      for_each_partition(n, [&](const Partition& lambda) {
        for (int k = 2; k <= n; ++k)
          if (auto bound = bound_part_b(lambda, k)) {
            ++applicable;
            ok &= std::abs(to_double(char_ratio_kcycle(lambda, k))) <=
                  std::exp(*bound) + 1e-12;
          }
      });
    s.check(ok, "short-row bound vs exact ratios (" + std::to_string(applicable) +
                    " applicable cases at small n)");
  }
  // Single-pole reduction for trivial and hook shapes.
  {
    bool ok = true;
    int cases = 0;
    for (int n = 4; n <= cap(n_max, 12); ++n) {
      std::vector<Partition> shapes{Partition(std::vector<int>{n})};
      for (int tail = 1; tail <= n - 2; ++tail) {
        std::vector<int> parts{n - tail};
        parts.insert(parts.end(), tail, 1);
        shapes.emplace_back(parts);
      }
      for (const auto& lambda : shapes) {
        const FrobeniusCoords fc = to_frobenius(lambda);
        for (int k = 2; 2 * k <= n; ++k)
          if (fc.a(0) > n - k - 0.5) {
            ok &= (kcycle_residue_terms(lambda, k).size() == 1);
            ++cases;
          }
      }
    }
    s.check(ok && cases > 0,
            "single residue term for dominant hooks (" + std::to_string(cases) + " cases)");
  }
  // Exponent criterion with the calibrated constant.
  {
    const AsymptoticConfig cfg;
    bool ok = true;
    for (int n : {8, 10}) {
      if (n > cap(n_max, 10)) continue;
      for_each_partition(n, [&](const Partition& lambda) {
        if (lambda.first() == n) return;
        for (int k = 2; k <= n - 1; ++k) ok &= proposition_21_check(lambda, k, cfg.c1);
      });
    }
    s.check(ok, "exponent criterion holds at the calibrated constant");
  }
}

void suite_mixing(Suite& s, int n_max) {
  for (int n = 2; n <= cap(n_max, 8); ++n) {
    const CharacterTable table = character_table(n);
    bool mass = true, parity = true, monotone = true, dominated = true, lower_ok = true;
    for (int k = 2; k <= n; ++k) {
      const CycleType C = CycleType::k_cycle(n, k);
      Rat prev_tv;
      bool have_prev = false;
      for (int t = 0; t <= 10; ++t) {
        const ClassDistribution dist = exact_distribution(table, C, t);
        Rat sum = 0;
        const int coset_sign = (C.sign() == -1 && t % 2 == 1) ? -1 : 1;
        for (size_t j = 0; j < dist.classes.size(); ++j) {
          sum += dist.exact[j];
          const CycleType rho(dist.classes[j]);
          if (rho.sign() != coset_sign) parity &= (dist.exact[j] == 0);
          mass &= (dist.exact[j] >= 0);
        }
        mass &= (sum == 1);
        const Rat tv = exact_tv(table, C, t);
        if (have_prev) monotone &= (tv <= prev_tv);
        prev_tv = tv;
        have_prev = true;
        dominated &= (tv * tv <= tv_upper_bound_squared(table, C, t));
        if (n >= 5)
          lower_ok &= (tv_lower_bound(n, k, C.two_cycles(), t) <= to_double(tv) + 1e-12);
      }
    }
    s.check(mass, "distribution sums to 1 and is nonnegative, n=" + std::to_string(n));
    s.check(parity, "distribution supported on the right coset, n=" + std::to_string(n));
    s.check(monotone, "exact TV nonincreasing in t, n=" + std::to_string(n));
    s.check(dominated, "TV^2 <= L2 bound squared, n=" + std::to_string(n));
    if (n >= 5) s.check(lower_ok, "second-moment lower bound <= TV, n=" + std::to_string(n));
  }
  // Moment formulas vs the convolution law.
  for (int n : {6, 8}) {
    if (n > cap(n_max, 8)) continue;
    const CharacterTable table = character_table(n);
    bool ok = true;
    for (int k = 2; k <= 4; ++k) {
      const CycleType C = CycleType::k_cycle(n, k);
      const int j = C.two_cycles();
      for (int t = 0; t <= 6; ++t) {
        const MomentReport report = moments_fixed_points(n, k, j, t);
        const ClassDistribution dist = exact_distribution(table, C, t);
        Rat m1 = 0, m2 = 0;
        for (size_t c = 0; c < dist.classes.size(); ++c) {
          const CycleType rho(dist.classes[c]);
          const Rat stat(rho.fixed_points() - 1);
          m1 += dist.exact[c] * stat;
          m2 += dist.exact[c] * stat * stat;
        }
        ok &= (m1 == report.mean && m2 == report.second_moment);
      }
    }
    s.check(ok, "moment formulas = convolution moments, n=" + std::to_string(n));
  }
  // Plancherel: sum f^2 ratio^{2t} = n! sum mu(sigma)^2.
  for (int n = 2; n <= cap(n_max, 8); ++n) {
    const CharacterTable table = character_table(n);
    bool ok = true;
    for (int k = 2; k <= n; ++k) {
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
        ok &= (lhs == Rat(factorial(n)) * rhs);
      }
    }
    s.check(ok, "Plancherel identity for the walk law, n=" + std::to_string(n));
  }
  // Fourier coefficients of the coset-uniform law.
  for (int n = 3; n <= cap(n_max, 8); ++n) {
    const CharacterTable table = character_table(n);
    bool ok = true;
    for (int coset_sign : {1, -1}) {
      const CosetUniform coset{n, coset_sign};
      for (size_t i = 0; i < table.lambdas.size(); ++i) {
        Rat coeff = 0;
        for (size_t j = 0; j < table.classes.size(); ++j)
          coeff += coset.class_mass(table.classes[j]) *
                   make_rat(table.values[i][j], table.dims[i]);
        if (table.lambdas[i].first() == n)
          ok &= (coeff == 1);
        else if (table.lambdas[i].rows() == n)
          ok &= (coeff == coset_sign);
        else
          ok &= (coeff == 0);
      }
    }
    s.check(ok, "coset-uniform Fourier coefficients, n=" + std::to_string(n));
  }
}

void suite_simulation(Suite& s, int n_max) {
  const int n = std::min(cap(n_max, 8), 8);
  {
    WalkConfig cfg{.n = n, .k = 3, .t = 4, .samples = 20000, .seed = 99, .workers = 3,
                   .check_parity = true};
    const ClassHistogram h1 = run_walk(cfg);
    const ClassHistogram h2 = run_walk(cfg);
    s.check(h1.counts == h2.counts && h1.total == h2.total,
            "identical (seed, workers) reproduce the histogram");
  }
  {
    const CharacterTable table = character_table(n);
    const CycleType C = CycleType::k_cycle(n, 3);
    const ClassDistribution ref = exact_distribution(table, C, 8);
    double prev = 1.0;
    bool shrinking = true;
    for (long long samples : {1000, 10000, 100000}) {
      WalkConfig cfg{.n = n, .k = 3, .t = 8, .samples = samples, .seed = 7, .workers = 2};
      const double tv = empirical_tv(run_walk(cfg), ref);
      shrinking &= (tv < prev + 0.02);
      prev = tv;
    }
    s.check(shrinking && prev < 0.02, "empirical TV shrinks toward the exact law");
  }
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"partitions",      "dimension-identities", "oracle-equivalence",
          "small-characters", "asymptotics",          "mixing",
          "simulation",       "all"};
}

SuiteResult run_suite(const std::string& name, int n_max, std::ostream& log) {
  Suite s(log);
  bool known = false;
  auto want = [&](const char* suite) {
    const bool match = (name == suite || name == "all");
    known |= (name == suite);
    return match;
  };
  if (want("partitions")) suite_partitions(s, n_max);
  if (want("dimension-identities")) suite_dimensions(s, n_max);
  if (want("oracle-equivalence")) suite_oracle_equivalence(s, n_max);
  if (want("small-characters")) suite_small_characters(s, n_max);
  if (want("asymptotics")) suite_asymptotics(s, n_max);
  if (want("mixing")) suite_mixing(s, n_max);
  if (want("simulation")) suite_simulation(s, n_max);
  if (!known && name != "all") throw std::invalid_argument("unknown suite: " + name);
  return s.result();
}

}  // namespace cyclemix
