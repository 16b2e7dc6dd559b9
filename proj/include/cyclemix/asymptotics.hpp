#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "cyclemix/characters.hpp"
#include "cyclemix/partition.hpp"
#include "cyclemix/rational.hpp"

namespace cyclemix {

/// Knobs for the asymptotic character-ratio estimates. The literature leaves
/// every implied constant unnamed; they are surfaced here with defaults of 1,
/// and the calibrated constants carry provenance notes next to their
/// defaults. Error envelopes are always reported separately, never silently
/// folded into main terms.
struct AsymptoticConfig {
  double epsilon = 0.01;  // regime slack, in (0, 1/2)
  double theta = 0.67;    // contour-radius exponent for part b, > 2/3
  double delta = 0.05;    // k <= delta*n applicability cap (part b and the
                          // exponent-criterion range)
  double c0 = 0.5;        // small-r threshold r <= c0*n for the power-sum
                          // bound; 0.5 verified by reduction to 1-u <= e^-u
  double c1 = 1.0;        // exponent-criterion constant; calibrated sweep over
                          // all lambda |- n, n in {8,10,12}, k in [2, n-1]
                          // needs c >= -0.493, so 1.0 has ample margin
  double c2 = 4.0;        // dimension-sum exponent constant; at 4.0 the sum is
                          // 2.0597 at n=10 and decreasing through n=40
  double part_a_oconst = 1.0;      // coefficient on r^{-1/2} in the part a error
  double part_c_rel_oconst = 1.0;  // coefficient on k n^{3/4+eps}/a_i
  double part_c_add_oconst = 1.0;  // coefficient on the additive part c error
  double part_c_log_exponent = 2.0;  // exponent on log n inside
                                     // (k log^e n / sqrt n)^k; 1 is also
                                     // defensible, so it is a knob
  double k_switch_factor = 6.0;      // large-k regime at k >= factor * log n
  double r_switch_exponent = 5.0 / 6.0;  // small-k part a cutoff r <= n^exp
  int exact_cutoff = 40;  // below this n the exact residue sum is cheaper
                          // than any estimate, so the dispatcher uses it
  int dimension_sum_cap = 40;
};

enum class Regime { part_a, part_b, part_c, exact };

std::string regime_name(Regime r);

/// Signed log-space estimate of a character ratio with an explicit error
/// envelope. log_error_bound = -inf means the estimate is exact;
/// +inf means no rigorous envelope applies at these parameters.
struct RatioEstimate {
  double log_main_term;  // log |main term|; -inf when the main term is 0
  int sign;              // sign of the main term (0 iff main term is 0)
  double log_error_bound;
  Regime regime;
};

class RegimeViolation : public std::domain_error {
 public:
  explicit RegimeViolation(const std::string& what) : std::domain_error(what) {}
};

/// Main term of the long-first-row evaluation:
///   (a_1 - 1/2)^{falling k} / n^{falling k}
///     * prod_{j>=2} (a_1 - a_j - k)/(a_1 - a_j)
///     * prod_{j>=1} (a_1 + b_j)/(a_1 + b_j - k).
/// Exact rational; computable for any lambda, k with no pole collision
/// (a_1 + b_j = k throws std::domain_error; collisions cannot occur in the
/// part a regime r + k + 1 < n/2). Regime enforcement lives in
/// part_a_regime_ok / error_bound_part_a, since the main term itself is also
/// evaluated outside the regime for diagnostics.
Rat main_term_part_a(const Partition& lambda, int k);

bool part_a_regime_ok(int n, int k, int r, double epsilon);

/// Log of the part a error envelope k*(log((1+eps)(k+1+r)/(n-k)) + C/sqrt r).
/// Returns -inf when r < k (the error is exactly zero there). Throws
/// RegimeViolation when r + k + 1 >= (1/2 - eps) n.
double error_bound_part_a(int n, int k, int r, const AsymptoticConfig& cfg = {});

/// Short-row bound |ratio| <= e^{-k/2}, applicable when
/// k_switch <= k <= delta*n and max(a_1, b_1) <= e^{-theta} n (the dual
/// partition has the same |ratio|, so the condition is symmetrized).
/// Returns the log bound, or nullopt when the hypotheses fail.
std::optional<double> bound_part_b(const Partition& lambda, int k,
                                   const AsymptoticConfig& cfg = {});

/// Power-sum expansion main term
///   sum_{a_i > k sqrt n} (a_i/n)^k + (-1)^{k-1} sum_{b_i > k sqrt n} (b_i/n)^k
/// with the relative and additive error envelopes folded into
/// log_error_bound. Throws RegimeViolation unless k < n^{1/2 - eps}.
RatioEstimate main_term_part_c(const Partition& lambda, int k,
                               const AsymptoticConfig& cfg = {});

/// log bound -k*r/n on the part a main term (valid for k + r + 1 < n/2).
double mt_upper_bound(int n, int k, int r);

/// max(-kr/n + kr log r/(2n log n) + c kr/(n log n), -k/2 + ck/log n).
double criterion_bound(int n, int k, int r, double c);

enum class PowerSumForm {
  sharp,    // log(l(1-d)^k + (1-l(1-d))^k), l = floor(1/(1-d)), d = r/n
  small_r,  // -kd + kd^2, valid for d <= c0
  all_r,    // -kd/2
};

double power_sum_bound(int n, int k, int r, PowerSumForm form);

/// Exponent criterion |ratio|^{(n/k)(log n + c)} <= 1/f^lambda, checked with
/// the exact residue-sum ratio.
bool proposition_21_check(const Partition& lambda, int k, double c);

/// sum over lambda |- n of (f^lambda)^{-c/log n}, in log space via hook
/// lengths. Throws std::domain_error above the cap.
double dimension_sum(int n, double c, int cap = 40);

/// Regime dispatcher. Selection: exact below the exact cutoff; for
/// k >= k_switch, part b when r > 0.49 n else part a; for smaller k, part a
/// when r <= n^{r_switch_exponent} else part c. Ties at k = k_switch resolve
/// to the large-k branch.
RatioEstimate estimate_ratio(const Partition& lambda, int k,
                             const AsymptoticConfig& cfg = {});

/// Rigorous log upper bound on |ratio| assembled from the dispatched regime
/// (main term magnitude plus error envelope); used by the bound-mode mixing
/// estimates. +inf when no regime applies.
double log_ratio_upper_bound(const Partition& lambda, int k,
                             const AsymptoticConfig& cfg = {});

}  // namespace cyclemix
