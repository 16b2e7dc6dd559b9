#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "cyclemix/partition.hpp"
#include "cyclemix/rational.hpp"

#include "json.hpp"

namespace cyclemix {

/// Dimension f^lambda of the irreducible representation indexed by lambda,
/// computed from the determinant form: n!/(mu_1! ... mu_n!) prod_{i<j}(mu_i - mu_j).
Int dimension(const Partition& lambda);

/// Independent route to the same number via the product of hook lengths.
Int dimension_hook_oracle(const Partition& lambda);

/// Exact character ratio chi^lambda(C)/f^lambda at the class C of k-cycles,
/// evaluated as the residue sum
///   sum_i  mu_i^{falling k} / n^{falling k} * prod_{j != i} (mu_i - mu_j - k)/(mu_i - mu_j).
/// A term vanishes automatically when mu_i < k (the falling factorial hits
/// zero) or when mu_i - k collides with another mu_j. Throws
/// std::invalid_argument unless 2 <= k <= n.
Rat char_ratio_kcycle(const Partition& lambda, int k);

/// The individual nonzero residue terms behind char_ratio_kcycle, in order of
/// decreasing mu_i. Exposed for the pole-structure checks.
std::vector<Rat> kcycle_residue_terms(const Partition& lambda, int k);

struct GeneralCharOptions {
  // Refuse tuple sums with n^r above this many terms. r is the number of
  // nontrivial cycles of the class.
  double budget = 1e8;
};

/// Exact character value chi^lambda(rho) for an arbitrary class rho, as the
/// tuple sum over poles with vector falling factorials. Cost grows like n^r;
/// guarded by options.budget.
Int char_general(const Partition& lambda, const CycleType& rho,
                 const GeneralCharOptions& options = {});

/// Murnaghan-Nakayama evaluation by recursive border-strip removal on beta
/// sets, memoized on (remaining shape, remaining cycles). Independent of the
/// residue-sum path; used as its oracle. Reusable across calls; not
/// thread-safe, use one evaluator per worker.
class MnEvaluator {
 public:
  Int evaluate(const Partition& lambda, const CycleType& rho);

 private:
  struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
      size_t h = 1469598103934665603ull;
      for (int x : v) h = (h ^ static_cast<size_t>(x + 7)) * 1099511628211ull;
      return h;
    }
  };
  Int eval(std::vector<int> beta, const std::vector<int>& cycles, size_t from);
  std::unordered_map<std::vector<int>, Int, VecHash> memo_;
};

/// One-shot Murnaghan-Nakayama value (fresh evaluator per call).
Int char_mn_oracle(const Partition& lambda, const CycleType& rho);

/// The three closed-form characters determined by fixed points i_1 and
/// 2-cycles i_2 alone.
enum class SmallChar {
  std_rep,   // (n-1,1):    i_1 - 1
  hook,      // (n-2,1,1):  (i_1-1)(i_1-2)/2 - i_2
  two_row,   // (n-2,2):    (i_1-1)(i_1-2)/2 + i_2 - 1
};

Int small_char(SmallChar which, const CycleType& rho);

struct CharacterTable {
  int n = 0;
  std::vector<Partition> lambdas;   // reverse-lex
  std::vector<Partition> classes;   // reverse-lex
  std::vector<Int> dims;            // f^lambda, aligned with lambdas
  std::vector<Int> sizes;           // |class|, aligned with classes
  std::vector<std::vector<Int>> values;  // values[lambda][class]

  int class_index(const Partition& rho) const;
  int lambda_index(const Partition& lambda) const;

  std::string to_csv() const;
  nlohmann::ordered_json to_json() const;
};

/// Full integer character table of S_n. Throws std::domain_error above the
/// cap (the table is quadratic in p(n); the default keeps builds at desk
/// scale). workers > 1 parallelizes over rows.
CharacterTable character_table(int n, int cap = 14, int workers = 1);

/// Dimension proxy (n-1)!/prod a'_i! b'_i! with a'_i = lambda_i - i,
/// b'_i = lambda'_i - i. log f^lambda tracks log D(lambda) asymptotically;
/// reported as a diagnostic, never asserted exactly.
struct DimensionProxy {
  double log_d = 0.0;
  Rat d_exact;
};

DimensionProxy larsen_shalev_D(const Partition& lambda);

/// log f^lambda as a double, via hook lengths. Cheap at any desk-scale n.
double log_dimension(const Partition& lambda);

}  // namespace cyclemix
