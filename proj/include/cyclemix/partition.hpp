#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclemix/rational.hpp"

namespace cyclemix {

/// Integer partition in row notation: weakly decreasing positive parts.
/// Partitions index both the irreducible representations and the conjugacy
/// classes of the symmetric group, so this is the universal key type.
class Partition {
 public:
  /// Throws std::invalid_argument unless parts are weakly decreasing and
  /// positive. The empty partition (n = 0) is rejected.
  explicit Partition(std::vector<int> parts);

  /// Parses comma-joined row notation, e.g. "3,2".
  static Partition parse(std::string_view text);

  int n() const { return n_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i < rows() ? parts_[i] : 0; }  // 0-based, padded
  int first() const { return parts_[0]; }
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;

  /// Side length of the Durfee square (number of diagonal boxes).
  int diagonal() const;

  std::string to_string() const;  // "3,2"

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// Diagonal hook coordinates of a partition: a_i = lambda_i - i + 1/2 and
/// b_i = lambda'_i - i + 1/2 for i up to the diagonal length m. Half-integers
/// are stored doubled (as odd integers) so every derived quantity stays in
/// exact integer arithmetic.
struct FrobeniusCoords {
  std::vector<long long> a2;  // 2*a_i, strictly decreasing odd positives
  std::vector<long long> b2;  // 2*b_i, same constraints
  int n = 0;

  int m() const { return static_cast<int>(a2.size()); }
  double a(int i) const { return static_cast<double>(a2[i]) / 2.0; }
  double b(int i) const { return static_cast<double>(b2[i]) / 2.0; }

  std::string to_string() const;  // "a:5/2,1/2;b:3/2,1/2"
};

FrobeniusCoords to_frobenius(const Partition& lambda);

/// Inverse of to_frobenius. Throws std::invalid_argument on coordinate lists
/// that are not strictly decreasing positive half-odd-integers of equal
/// length.
Partition from_frobenius(const FrobeniusCoords& fc);

/// Conjugacy class of S_n described by its cycle structure.
class CycleType {
 public:
  explicit CycleType(Partition cycles);
  static CycleType k_cycle(int n, int k);  // class (k, 1^{n-k})
  static CycleType identity(int n);

  const Partition& cycles() const { return cycles_; }
  int n() const { return cycles_.n(); }
  int fixed_points() const { return fixed_points_; }   // i_1
  int two_cycles() const { return two_cycles_; }       // i_2
  int sign() const { return sign_; }                   // (-1)^{n - #cycles}
  int nontrivial_total() const { return cycles_.n() - fixed_points_; }  // k

  bool operator==(const CycleType&) const = default;

 private:
  Partition cycles_;
  int fixed_points_;
  int two_cycles_;
  int sign_;
};

/// Visits every partition of n exactly once in reverse-lexicographic order,
/// starting from (n). The order is part of the output contract (tables and
/// CSV files are emitted in it).
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);

std::vector<Partition> all_partitions(int n);

/// Single-consumer stream over the same order; re-creatable at will.
class PartitionStream {
 public:
  explicit PartitionStream(int n);
  std::optional<Partition> next();

 private:
  int n_;
  std::vector<int> current_;
  bool done_ = false;
};

/// mu = lambda + (n-1, n-2, ..., 0), with lambda zero-padded to length n.
/// Strictly decreasing and nonnegative.
std::vector<long long> mu_vector(const Partition& lambda, int n);

/// |class| = n! / prod_j j^{m_j} m_j!  (m_j = multiplicity of part j).
Int class_size(const CycleType& rho);

/// Boxes lying neither in the first row nor in the Durfee square:
/// n - m^2 - (lambda_1 - m).
int delta_statistic(const Partition& lambda);

}  // namespace cyclemix

template <>
struct std::hash<cyclemix::Partition> {
  size_t operator()(const cyclemix::Partition& p) const {
    size_t h = 1469598103934665603ull;
    for (int x : p.parts()) h = (h ^ static_cast<size_t>(x)) * 1099511628211ull;
    return h;
  }
};
