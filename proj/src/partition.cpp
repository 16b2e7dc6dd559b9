#include "cyclemix/partition.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace cyclemix {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("partition must be nonempty");
  long long sum = 0;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    sum += parts_[i];
  }
  if (sum > (1 << 28)) throw std::invalid_argument("partition too large");
  n_ = static_cast<int>(sum);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    int value = 0;
    auto sub = text.substr(pos, comma - pos);
    auto [ptr, ec] = std::from_chars(sub.data(), sub.data() + sub.size(), value);
    if (ec != std::errc() || ptr != sub.data() + sub.size())
      throw std::invalid_argument("bad partition syntax: " + std::string(text));
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<int> cols(parts_[0]);
  for (int j = 0; j < parts_[0]; ++j)
    cols[j] = static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                             [&](int p) { return p >= j + 1; }));
  return Partition(std::move(cols));
}

int Partition::diagonal() const {
  int m = 0;
  while (m < rows() && parts_[m] >= m + 1) ++m;
  return m;
}

std::string Partition::to_string() const {
  std::string s;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

namespace {

std::string half_string(long long doubled) {
  if (doubled % 2 == 0) return std::to_string(doubled / 2);
  return std::to_string(doubled) + "/2";
}

}  // namespace

std::string FrobeniusCoords::to_string() const {
  std::string s = "a:";
  for (int i = 0; i < m(); ++i) {
    if (i) s += ',';
    s += half_string(a2[i]);
  }
  s += ";b:";
  for (int i = 0; i < m(); ++i) {
    if (i) s += ',';
    s += half_string(b2[i]);
  }
  return s;
}

FrobeniusCoords to_frobenius(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  const int m = lambda.diagonal();
  FrobeniusCoords fc;
  fc.n = lambda.n();
  fc.a2.resize(m);
  fc.b2.resize(m);
  for (int i = 0; i < m; ++i) {
    fc.a2[i] = 2ll * (lambda.part(i) - (i + 1)) + 1;
    fc.b2[i] = 2ll * (conj.part(i) - (i + 1)) + 1;
  }
  return fc;
}

Partition from_frobenius(const FrobeniusCoords& fc) {
  const int m = fc.m();
  if (m < 1 || static_cast<int>(fc.b2.size()) != m)
    throw std::invalid_argument("frobenius coordinates need |a| = |b| >= 1");
  long long mass = 0;
  for (int i = 0; i < m; ++i) {
    for (long long v : {fc.a2[i], fc.b2[i]}) {
      if (v < 1 || v % 2 == 0)
        throw std::invalid_argument("frobenius entries must be positive half-odd-integers");
    }
    if (i > 0 && (fc.a2[i] >= fc.a2[i - 1] || fc.b2[i] >= fc.b2[i - 1]))
      throw std::invalid_argument("frobenius entries must be strictly decreasing");
    mass += fc.a2[i] + fc.b2[i];
  }
  if (mass % 2 != 0) throw std::invalid_argument("frobenius mass must be an integer");
  const long long n = mass / 2;

  std::vector<int> parts;
  std::vector<int> cols(m);
  for (int i = 0; i < m; ++i) {
    parts.push_back(static_cast<int>((fc.a2[i] - 1) / 2 + (i + 1)));  // rows through diagonal
    cols[i] = static_cast<int>((fc.b2[i] - 1) / 2 + (i + 1));         // column lengths
  }
  // Rows below the diagonal are recovered from the column lengths.
  for (int i = m + 1;; ++i) {
    int row = static_cast<int>(std::count_if(cols.begin(), cols.end(),
                                             [&](int c) { return c >= i; }));
    if (row == 0) break;
    parts.push_back(row);
  }
  Partition lambda(std::move(parts));
  if (lambda.n() != n) throw std::invalid_argument("inconsistent frobenius coordinates");
  return lambda;
}

CycleType::CycleType(Partition cycles) : cycles_(std::move(cycles)) {
  fixed_points_ = 0;
  two_cycles_ = 0;
  for (int p : cycles_.parts()) {
    if (p == 1) ++fixed_points_;
    if (p == 2) ++two_cycles_;
  }
  sign_ = ((cycles_.n() - cycles_.rows()) % 2 == 0) ? 1 : -1;
}

CycleType CycleType::k_cycle(int n, int k) {
  if (k < 2 || k > n) throw std::invalid_argument("k-cycle class needs 2 <= k <= n");
  std::vector<int> parts{k};
  parts.insert(parts.end(), n - k, 1);
  return CycleType(Partition(std::move(parts)));
}

CycleType CycleType::identity(int n) {
  return CycleType(Partition(std::vector<int>(n, 1)));
}

namespace {

// Reverse-lexicographic descent: after a prefix with smallest part "maxpart",
// emit parts from min(maxpart, remaining) down to 1.
void descend(int remaining, int maxpart, std::vector<int>& acc,
             const std::function<void(const Partition&)>& fn) {
  if (remaining == 0) {
    fn(Partition(acc));
    return;
  }
  for (int p = std::min(maxpart, remaining); p >= 1; --p) {
    acc.push_back(p);
    descend(remaining - p, p, acc, fn);
    acc.pop_back();
  }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
  if (n < 1) throw std::invalid_argument("partition enumeration needs n >= 1");
  std::vector<int> acc;
  descend(n, n, acc, fn);
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

PartitionStream::PartitionStream(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("partition enumeration needs n >= 1");
}

std::optional<Partition> PartitionStream::next() {
  if (done_) return std::nullopt;
  if (current_.empty()) {
    current_ = {n_};
    return Partition(current_);
  }
  // Successor in reverse-lexicographic order: shrink the rightmost part
  // greater than 1, then refill greedily.
  int i = static_cast<int>(current_.size()) - 1;
  while (i >= 0 && current_[i] == 1) --i;
  if (i < 0) {
    done_ = true;
    return std::nullopt;
  }
  int remaining = static_cast<int>(current_.size()) - i - 1 + 1;  // the ones plus one unit
  current_.resize(i + 1);
  current_[i] -= 1;
  int cap = current_[i];
  while (remaining > 0) {
    int p = std::min(cap, remaining);
    current_.push_back(p);
    remaining -= p;
  }
  return Partition(current_);
}

std::vector<long long> mu_vector(const Partition& lambda, int n) {
  if (lambda.n() != n) throw std::invalid_argument("mu_vector: lambda must be a partition of n");
  std::vector<long long> mu(n);
  for (int i = 0; i < n; ++i) mu[i] = lambda.part(i) + (n - 1 - i);
  return mu;
}

Int class_size(const CycleType& rho) {
  const auto& parts = rho.cycles().parts();
  Int den = 1;
  int run = 1;
  for (size_t i = 0; i < parts.size(); ++i) {
    den *= parts[i];
    if (i + 1 < parts.size() && parts[i + 1] == parts[i]) {
      ++run;
    } else {
      den *= factorial(run);
      run = 1;
    }
  }
  return factorial(rho.n()) / den;
}

int delta_statistic(const Partition& lambda) {
  const int m = lambda.diagonal();
  return lambda.n() - m * m - (lambda.first() - m);
}

}  // namespace cyclemix
