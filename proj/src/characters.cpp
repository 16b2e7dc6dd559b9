#include "cyclemix/characters.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <thread>

namespace cyclemix {

Int dimension(const Partition& lambda) {
  const int n = lambda.n();
  const auto mu = mu_vector(lambda, n);
  Int num = factorial(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) num *= to_int(mu[i] - mu[j]);
  Int den = 1;
  for (long long m : mu) den *= factorial(static_cast<unsigned long>(m));
  return num / den;
}

Int dimension_hook_oracle(const Partition& lambda) {
  const int n = lambda.n();
  const Partition conj = lambda.conjugate();
  Int hooks = 1;
  for (int i = 0; i < lambda.rows(); ++i)
    for (int j = 0; j < lambda.part(i); ++j)
      hooks *= to_int(lambda.part(i) - (j + 1) + conj.part(j) - (i + 1) + 1);
  return factorial(n) / hooks;
}

namespace {

struct ResidueTerm {
  long long mu_i;
  Rat value;
};

std::vector<ResidueTerm> residue_terms(const Partition& lambda, int k) {
  const int n = lambda.n();
  if (k < 2 || k > n) throw std::invalid_argument("char_ratio_kcycle needs 2 <= k <= n");
  const auto mu = mu_vector(lambda, n);
  const std::set<long long> values(mu.begin(), mu.end());
  const Int nk = falling_factorial(n, k);

  std::vector<ResidueTerm> terms;
  for (int i = 0; i < n; ++i) {
    if (mu[i] < k) continue;                 // falling factorial vanishes
    if (values.count(mu[i] - k)) continue;   // zero numerator factor
    Int num = falling_factorial(mu[i], k);
    Int den = nk;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      num *= to_int(mu[i] - mu[j] - k);
      den *= to_int(mu[i] - mu[j]);
    }
    terms.push_back({mu[i], make_rat(std::move(num), std::move(den))});
  }
  return terms;
}

}  // namespace

Rat char_ratio_kcycle(const Partition& lambda, int k) {
  Rat total = 0;
  for (auto& t : residue_terms(lambda, k)) total += t.value;
  return total;
}

std::vector<Rat> kcycle_residue_terms(const Partition& lambda, int k) {
  std::vector<Rat> out;
  for (auto& t : residue_terms(lambda, k)) out.push_back(t.value);
  return out;
}

namespace {

// Depth-first tuple sum for the general character ratio. At each level one
// nontrivial cycle length is subtracted from one coordinate of nu; the
// accumulated vector falling factorial prunes a branch as soon as it hits
// zero (more subtraction cannot revive it). Vandermonde collisions only kill
// individual leaves, so they are checked there.
struct TupleSum {
  int n;
  std::vector<int> ks;
  std::vector<long long> mu;
  std::vector<long long> nu;
  std::vector<int> touched;  // multiplicity of subtraction per coordinate
  Rat total = 0;
  Int nk;

  void run() {
    Int one = 1;
    dfs(0, one);
  }

  void dfs(size_t depth, const Int& ff) {
    if (depth == ks.size()) {
      leaf(ff);
      return;
    }
    const int k = ks[depth];
    for (int c = 0; c < n; ++c) {
      if (nu[c] < k) continue;  // factor would be zero for every extension
      Int next = ff * falling_factorial(nu[c], k);
      nu[c] -= k;
      ++touched[c];
      dfs(depth + 1, next);
      --touched[c];
      nu[c] += k;
    }
  }

  void leaf(const Int& ff) {
    Int num = ff;
    Int den = nk;
    for (int c = 0; c < n && num != 0; ++c) {
      if (!touched[c]) continue;
      for (int d = 0; d < n; ++d) {
        if (d == c || (touched[d] && d < c)) continue;  // each pair once
        num *= to_int(nu[c] - nu[d]);
        den *= to_int(mu[c] - mu[d]);
        if (num == 0) break;
      }
    }
    if (num != 0) total += make_rat(std::move(num), std::move(den));
  }
};

}  // namespace

Int char_general(const Partition& lambda, const CycleType& rho,
                 const GeneralCharOptions& options) {
  const int n = lambda.n();
  if (rho.n() != n) throw std::invalid_argument("char_general: class and lambda must share n");

  std::vector<int> ks;
  for (int p : rho.cycles().parts())
    if (p > 1) ks.push_back(p);
  if (ks.empty()) return dimension(lambda);

  if (std::pow(static_cast<double>(n), static_cast<double>(ks.size())) > options.budget)
    throw std::domain_error("char_general: n^r exceeds the configured budget of " +
                            std::to_string(static_cast<long long>(options.budget)) +
                            " tuple terms");

  int ktot = 0;
  for (int k : ks) ktot += k;

  TupleSum sum;
  sum.n = n;
  sum.ks = std::move(ks);
  sum.mu = mu_vector(lambda, n);
  sum.nu = sum.mu;
  sum.touched.assign(n, 0);
  sum.nk = falling_factorial(n, ktot);
  sum.run();

  Rat chi = sum.total * Rat(dimension(lambda));
  if (chi.get_den() != 1) throw std::logic_error("char_general: non-integer character");
  return chi.get_num();
}

namespace {

// Beta set of a shape with exactly len entries (len >= rows).
std::vector<int> beta_set(const std::vector<int>& shape, int len) {
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i)
    beta[i] = (i < static_cast<int>(shape.size()) ? shape[i] : 0) + (len - 1 - i);
  return beta;
}

// Partition parts recovered from a strictly decreasing beta set (may be empty).
std::vector<int> shape_from_beta(const std::vector<int>& beta) {
  const int len = static_cast<int>(beta.size());
  std::vector<int> shape;
  for (int i = 0; i < len; ++i) {
    int part = beta[i] - (len - 1 - i);
    if (part > 0) shape.push_back(part);
  }
  return shape;
}

}  // namespace

Int MnEvaluator::eval(std::vector<int> beta, const std::vector<int>& cycles, size_t from) {
  if (from == cycles.size()) return 1;

  std::vector<int> key = shape_from_beta(beta);
  key.push_back(-1);
  key.insert(key.end(), cycles.begin() + from, cycles.end());
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const int k = cycles[from];
  Int total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - k;
    if (target < 0) continue;
    if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int height = 0;  // beads passed over = strip height
    for (int b : beta)
      if (target < b && b < beta[i]) ++height;
    std::vector<int> next = beta;
    next[i] = target;
    std::sort(next.begin(), next.end(), std::greater<int>());
    Int sub = eval(std::move(next), cycles, from + 1);
    total += (height % 2 == 0) ? sub : Int(-sub);
  }
  memo_.emplace(std::move(key), total);
  return total;
}

Int MnEvaluator::evaluate(const Partition& lambda, const CycleType& rho) {
  if (lambda.n() != rho.n())
    throw std::invalid_argument("char_mn_oracle: class and lambda must share n");
  // Largest cycles first: deep all-ones suffixes are shared across classes.
  std::vector<int> cycles = rho.cycles().parts();
  return eval(beta_set(lambda.parts(), lambda.rows()), cycles, 0);
}

Int char_mn_oracle(const Partition& lambda, const CycleType& rho) {
  MnEvaluator ev;
  return ev.evaluate(lambda, rho);
}

Int small_char(SmallChar which, const CycleType& rho) {
  const int n = rho.n();
  const Int i1 = rho.fixed_points();
  const Int i2 = rho.two_cycles();
  switch (which) {
    case SmallChar::std_rep:
      if (n < 2) throw std::invalid_argument("small_char: std_rep needs n >= 2");
      return i1 - 1;
    case SmallChar::hook:
      if (n < 4) throw std::invalid_argument("small_char: hook needs n >= 4");
      return (i1 - 1) * (i1 - 2) / 2 - i2;
    case SmallChar::two_row:
      if (n < 4) throw std::invalid_argument("small_char: two_row needs n >= 4");
      return (i1 - 1) * (i1 - 2) / 2 + i2 - 1;
  }
  throw std::logic_error("unreachable");
}

int CharacterTable::class_index(const Partition& rho) const {
  for (size_t j = 0; j < classes.size(); ++j)
    if (classes[j] == rho) return static_cast<int>(j);
  throw std::invalid_argument("class not in table: " + rho.to_string());
}

int CharacterTable::lambda_index(const Partition& lambda) const {
  for (size_t i = 0; i < lambdas.size(); ++i)
    if (lambdas[i] == lambda) return static_cast<int>(i);
  throw std::invalid_argument("lambda not in table: " + lambda.to_string());
}

std::string CharacterTable::to_csv() const {
  std::string out = "lambda,dim";
  for (const auto& rho : classes) out += ",\"" + rho.to_string() + "\"";
  out += "\n";
  for (size_t i = 0; i < lambdas.size(); ++i) {
    out += "\"" + lambdas[i].to_string() + "\"," + dims[i].get_str();
    for (size_t j = 0; j < classes.size(); ++j) out += "," + values[i][j].get_str();
    out += "\n";
  }
  return out;
}

nlohmann::ordered_json CharacterTable::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["lambdas"] = nlohmann::ordered_json::array();
  for (const auto& l : lambdas) j["lambdas"].push_back(l.to_string());
  j["classes"] = nlohmann::ordered_json::array();
  for (const auto& r : classes) j["classes"].push_back(r.to_string());
  j["class_sizes"] = nlohmann::ordered_json::array();
  for (const auto& s : sizes) j["class_sizes"].push_back(s.get_str());
  j["dims"] = nlohmann::ordered_json::array();
  for (const auto& d : dims) j["dims"].push_back(d.get_str());
  j["values"] = nlohmann::ordered_json::array();
  for (const auto& row : values) {
    nlohmann::ordered_json jr = nlohmann::ordered_json::array();
    for (const auto& v : row) jr.push_back(v.get_str());
    j["values"].push_back(std::move(jr));
  }
  return j;
}

CharacterTable character_table(int n, int cap, int workers) {
  if (n < 1) throw std::invalid_argument("character_table needs n >= 1");
  if (n > cap)
    throw std::domain_error("character_table: n = " + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap));
  CharacterTable table;
  table.n = n;
  table.lambdas = all_partitions(n);
  table.classes = table.lambdas;
  const size_t count = table.lambdas.size();
  table.values.assign(count, {});
  table.dims.resize(count);
  table.sizes.resize(count);
  for (size_t j = 0; j < count; ++j) table.sizes[j] = class_size(CycleType(table.classes[j]));

  auto fill_rows = [&](size_t begin, size_t end) {
    MnEvaluator ev;  // per-worker memo
    for (size_t i = begin; i < end; ++i) {
      auto& row = table.values[i];
      row.resize(count);
      for (size_t j = 0; j < count; ++j)
        row[j] = ev.evaluate(table.lambdas[i], CycleType(table.classes[j]));
    }
  };

  workers = std::max(1, std::min<int>(workers, static_cast<int>(count)));
  if (workers == 1) {
    fill_rows(0, count);
  } else {
    std::vector<std::thread> pool;
    const size_t chunk = (count + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      size_t begin = w * chunk;
      size_t end = std::min(count, begin + chunk);
      if (begin < end) pool.emplace_back(fill_rows, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  const int identity = table.class_index(Partition(std::vector<int>(n, 1)));
  for (size_t i = 0; i < count; ++i) table.dims[i] = table.values[i][identity];
  return table;
}

DimensionProxy larsen_shalev_D(const Partition& lambda) {
  const int n = lambda.n();
  const Partition conj = lambda.conjugate();
  const int m = lambda.diagonal();
  Int den = 1;
  double logden = 0.0;
  for (int i = 0; i < m; ++i) {
    const unsigned long ap = lambda.part(i) - (i + 1);
    const unsigned long bp = conj.part(i) - (i + 1);
    den *= factorial(ap) * factorial(bp);
    logden += std::lgamma(ap + 1.0) + std::lgamma(bp + 1.0);
  }
  DimensionProxy proxy;
  proxy.d_exact = make_rat(factorial(n - 1), std::move(den));
  proxy.log_d = std::lgamma(static_cast<double>(n)) - logden;
  return proxy;
}

double log_dimension(const Partition& lambda) {
  const int n = lambda.n();
  const Partition conj = lambda.conjugate();
  double logf = std::lgamma(n + 1.0);
  for (int i = 0; i < lambda.rows(); ++i)
    for (int j = 0; j < lambda.part(i); ++j)
      logf -= std::log(lambda.part(i) - (j + 1) + conj.part(j) - (i + 1) + 1.0);
  return logf;
}

}  // namespace cyclemix
