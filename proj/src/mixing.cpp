#include "cyclemix/mixing.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace cyclemix {

ClassDistribution exact_distribution(const CharacterTable& table, const CycleType& C, int t) {
  if (t < 0) throw std::invalid_argument("exact_distribution needs t >= 0");
  const int n = table.n;
  if (C.n() != n) throw std::invalid_argument("exact_distribution: class size mismatch");
  const int ci = table.class_index(C.cycles());
  const size_t count = table.lambdas.size();

  // weight_lambda = f^lambda * ratio^t, then P(rho) = |rho|/n! * sum_lambda weight * chi(rho)
  std::vector<Rat> weights(count);
  for (size_t i = 0; i < count; ++i) {
    const Rat ratio = make_rat(table.values[i][ci], table.dims[i]);
    weights[i] = Rat(table.dims[i]) * pow_rat(ratio, static_cast<unsigned long>(t));
  }

  ClassDistribution dist;
  dist.n = n;
  dist.kind = DistKind::exact;
  dist.classes = table.classes;
  dist.exact.resize(count);
  const Int nfact = factorial(n);
  for (size_t j = 0; j < count; ++j) {
    Rat sum = 0;
    for (size_t i = 0; i < count; ++i) sum += weights[i] * Rat(table.values[i][j]);
    dist.exact[j] = sum * make_rat(table.sizes[j], nfact);
  }
  return dist;
}

Rat exact_tv(const CharacterTable& table, const CycleType& C, int t) {
  const ClassDistribution dist = exact_distribution(table, C, t);
  CosetUniform coset{table.n, (C.sign() == -1 && t % 2 == 1) ? -1 : 1};
  Rat tv = 0;
  for (size_t j = 0; j < dist.classes.size(); ++j)
    tv += abs_rat(dist.exact[j] - coset.class_mass(dist.classes[j]));
  return tv / 2;
}

Rat tv_upper_bound_squared(const CharacterTable& table, const CycleType& C, int t) {
  const int n = table.n;
  const int ci = table.class_index(C.cycles());
  const Partition trivial(std::vector<int>{n});
  const Partition sign_rep(std::vector<int>(n, 1));
  Rat sum = 0;
  for (size_t i = 0; i < table.lambdas.size(); ++i) {
    if (table.lambdas[i] == trivial || table.lambdas[i] == sign_rep) continue;
    const Rat ratio = make_rat(table.values[i][ci], table.dims[i]);
    sum += Rat(table.dims[i] * table.dims[i]) * pow_rat(ratio, static_cast<unsigned long>(2 * t));
  }
  return sum / 4;
}

double tv_upper_bound_exact(const CharacterTable& table, const CycleType& C, int t) {
  return std::sqrt(to_double(tv_upper_bound_squared(table, C, t)));
}

double tv_upper_bound_regimes(int n, int k, int t, const AsymptoticConfig& cfg,
                              int enum_cap) {
  if (n < 2) throw std::invalid_argument("tv_upper_bound_regimes needs n >= 2");
  if (n > enum_cap)
    throw std::domain_error("tv_upper_bound_regimes: n = " + std::to_string(n) +
                            " exceeds the partition-enumeration cap " +
                            std::to_string(enum_cap));
  // log-sum-exp accumulation of sum f^2 |ratio|^{2t} over nontrivial lambda
  double max_term = -std::numeric_limits<double>::infinity();
  std::vector<double> terms;
  const Partition trivial(std::vector<int>{n});
  const Partition sign_rep(std::vector<int>(n, 1));
  for_each_partition(n, [&](const Partition& lambda) {
    if (lambda == trivial || lambda == sign_rep) return;
    const double log_ratio = log_ratio_upper_bound(lambda, k, cfg);
    const double term = 2.0 * log_dimension(lambda) + 2.0 * t * log_ratio;
    terms.push_back(term);
    max_term = std::max(max_term, term);
  });
  if (terms.empty() || max_term == -std::numeric_limits<double>::infinity()) return 0.0;
  double sum = 0.0;
  for (double term : terms) sum += std::exp(term - max_term);
  const double log_s = max_term + std::log(sum);
  return 0.5 * std::exp(0.5 * log_s);
}

MomentReport moments_fixed_points(int n, int k, int j, int t) {
  if (n < 5) throw std::invalid_argument("moments_fixed_points needs n >= 5");
  if (k < 2 || k > n || j < 0 || 2 * j > k)
    throw std::invalid_argument("moments_fixed_points: invalid (k, j)");
  if (t < 0) throw std::invalid_argument("moments_fixed_points needs t >= 0");
  const unsigned long ut = static_cast<unsigned long>(t);

  // E[i_1 - 1] through the (n-1)-dimensional eigenvalue; the second moment
  // adds the hook and two-row shapes.
  const Rat mean = Rat(n - 1) * pow_rat(make_rat(Int(n - 1 - k), Int(n - 1)), ut);
  const long long pair_count = static_cast<long long>(n - 1) * (n - 2);
  const Rat hook_term =
      make_rat(to_int(pair_count), Int(2)) *
      pow_rat(make_rat(to_int(static_cast<long long>(n - 1 - k) * (n - 2 - k) - 2 * j),
                       to_int(pair_count)),
              ut);
  const Rat two_row_term =
      make_rat(to_int(pair_count - 2), Int(2)) *
      pow_rat(make_rat(to_int(static_cast<long long>(n - 1 - k) * (n - 2 - k) + 2 * j - 2),
                       to_int(pair_count - 2)),
              ut);
  MomentReport report;
  report.mean = mean;
  report.second_moment = Rat(1) + mean + hook_term + two_row_term;
  report.variance = report.second_moment - mean * mean;
  return report;
}

double tv_lower_bound(int n, int k, int j, int t) {
  const MomentReport m = moments_fixed_points(n, k, j, t);
  if (m.mean <= 1) return 0.0;
  const double e = to_double(m.mean);
  const double var = to_double(m.variance);
  const double gap = e - std::sqrt(e);
  const double bound = 1.0 - var / (gap * gap) - 1.0 / e;
  return std::max(0.0, bound);
}

std::vector<CutoffRow> cutoff_scan(const CharacterTable& table, const CycleType& C,
                                   int t_min, int t_max) {
  std::vector<CutoffRow> rows;
  const int k = C.nontrivial_total();
  const int j = C.two_cycles();
  for (int t = t_min; t <= t_max; ++t) {
    CutoffRow row;
    row.t = t;
    row.tv_exact = exact_tv(table, C, t);
    row.tv_upper = tv_upper_bound_exact(table, C, t);
    row.tv_lower = (table.n >= 5 && k >= 2) ? tv_lower_bound(table.n, k, j, t) : 0.0;
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

std::string format6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

}  // namespace

std::string cutoff_csv(const std::vector<CutoffRow>& rows) {
  std::string out = "t,tv_exact,tv_exact_float,tv_upper,tv_lower\n";
  for (const auto& row : rows) {
    out += std::to_string(row.t) + "," + rat_string(row.tv_exact) + "," +
           format6(to_double(row.tv_exact)) + "," + format6(row.tv_upper) + "," +
           format6(row.tv_lower) + "\n";
  }
  return out;
}

nlohmann::ordered_json cutoff_json(const std::vector<CutoffRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json jr;
    jr["t"] = row.t;
    jr["tv_exact"] = {{"rational", rat_string(row.tv_exact)},
                      {"value", std::stod(format6(to_double(row.tv_exact)))}};
    jr["tv_upper"] = std::stod(format6(row.tv_upper));
    jr["tv_lower"] = std::stod(format6(row.tv_lower));
    arr.push_back(std::move(jr));
  }
  return arr;
}

}  // namespace cyclemix
