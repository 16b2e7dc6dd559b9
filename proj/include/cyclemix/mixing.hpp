#pragma once

#include <string>
#include <vector>

#include "cyclemix/asymptotics.hpp"
#include "cyclemix/characters.hpp"
#include "cyclemix/partition.hpp"

#include "json.hpp"

namespace cyclemix {

/// Uniform measure on the coset of the alternating group carrying the walk
/// after t steps: density (1 + sgn(sigma) * coset_sign)/n!.
struct CosetUniform {
  int n = 0;
  int coset_sign = 1;  // sgn(C)^t

  Rat density(int perm_sign) const {
    return make_rat(Int(1 + perm_sign * coset_sign), factorial(n));
  }
  /// Probability the coset-uniform measure assigns to a whole class.
  Rat class_mass(const Partition& rho) const {
    CycleType ct(rho);
    return Rat(class_size(ct)) * density(ct.sign());
  }
};

enum class DistKind { exact, empirical };

/// Probability vector over the conjugacy classes of S_n, in the table's
/// reverse-lexicographic class order. Exact distributions carry rationals;
/// empirical ones carry doubles.
struct ClassDistribution {
  int n = 0;
  DistKind kind = DistKind::exact;
  std::vector<Partition> classes;
  std::vector<Rat> exact;      // kind == exact
  std::vector<double> approx;  // kind == empirical

  double prob_as_double(size_t j) const {
    return kind == DistKind::exact ? to_double(exact[j]) : approx[j];
  }
};

/// Law of the t-step walk generated by class C, by Fourier inversion:
///   P(class rho) = |rho|/n! * sum_lambda f^lambda (chi^lambda(C)/f^lambda)^t chi^lambda(rho).
/// Exact rationals throughout; t = 0 is the point mass at the identity.
ClassDistribution exact_distribution(const CharacterTable& table, const CycleType& C, int t);

/// Exact total variation distance ||mu_C^{*t} - U_t||, as
/// (1/2) sum over classes |P(rho) - U_t(rho-class)|.
Rat exact_tv(const CharacterTable& table, const CycleType& C, int t);

/// Exact square of the L2 upper bound:
///   (1/4) sum_{lambda != (n), (1^n)} (f^lambda)^2 (chi^lambda(C)/f^lambda)^{2t}.
/// TV^2 <= this quantity, exactly.
Rat tv_upper_bound_squared(const CharacterTable& table, const CycleType& C, int t);

/// sqrt of the above, as a double.
double tv_upper_bound_exact(const CharacterTable& table, const CycleType& C, int t);

/// Same bound with |ratio| estimated per regime instead of exactly; usable
/// beyond the exact table cap. Enumerates all p(n) partitions, so n is
/// capped (p(64) is ~1.7e6 shapes, a couple of seconds; p(100) is ~1.9e8).
/// Envelopes whose regime does not apply clip to the trivial |ratio| <= 1,
/// so at small n the bound can stay vacuously large; it tightens as n grows
/// into the estimates' regimes.
double tv_upper_bound_regimes(int n, int k, int t, const AsymptoticConfig& cfg = {},
                              int enum_cap = 64);

/// First and second moments of the fixed-point statistic (i_1 - 1) under the
/// t-step walk whose generator has k non-fixed points and j 2-cycles.
struct MomentReport {
  Rat mean;
  Rat second_moment;
  Rat variance;  // second_moment - mean^2
};

/// Closed forms for the moments; n >= 5 (the two-row and hook shapes behind
/// the second moment need it). Exact rationals.
MomentReport moments_fixed_points(int n, int k, int j, int t);

/// Second-moment (Chebyshev) lower bound on the TV distance, with test set
/// {sigma : i_1(sigma) - 1 > sqrt E}:
///   max(0, 1 - Var/(E - sqrt E)^2 - 1/E), and 0 when E <= 1.
double tv_lower_bound(int n, int k, int j, int t);

struct CutoffRow {
  int t;
  Rat tv_exact;
  double tv_upper;
  double tv_lower;
};

/// Per-step table of exact TV with upper and lower bounds, for t in
/// [t_min, t_max]. The lower bound column is 0 for n < 5 where the moment
/// formulas are rejected.
std::vector<CutoffRow> cutoff_scan(const CharacterTable& table, const CycleType& C,
                                   int t_min, int t_max);

std::string cutoff_csv(const std::vector<CutoffRow>& rows);
nlohmann::ordered_json cutoff_json(const std::vector<CutoffRow>& rows);

}  // namespace cyclemix
