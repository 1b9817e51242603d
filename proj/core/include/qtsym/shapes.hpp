// Partitions, compositions, their statistics and orders.
//
// The two shapes are distinct types: compositions are order-sensitive
// (operator indexing), partitions are weakly decreasing.  A partition widens
// into a composition explicitly via Composition::of.
#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace qtsym {

class Partition {
 public:
  Partition() = default;  // the empty partition
  explicit Partition(std::vector<int> parts);  // throws unless weakly decreasing, parts >= 1

  static Partition empty() { return Partition(); }
  /// Sorts arbitrary positive parts into a partition.
  static Partition sorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;        // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i < length() ? parts_[static_cast<size_t>(i)] : 0; }

  Partition conjugate() const;
  int n_stat() const;                        // sum (i-1) * lambda_i
  int multiplicity(int value) const;         // m_value(lambda)
  std::vector<int> multiplicity_vector() const;  // m_1..m_n, n = |lambda|

  std::string to_string() const;             // "[3,1]"
  static Partition parse(std::string_view);  // throws std::invalid_argument

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

class Composition {
 public:
  Composition() = default;  // the empty composition
  explicit Composition(std::vector<int> parts);  // throws unless all parts >= 1

  static Composition empty() { return Composition(); }
  static Composition of(const Partition& p);     // widening conversion

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return parts_[static_cast<size_t>(i)]; }

  int n_stat() const;
  std::set<int> descent_set() const;   // partial sums except the last
  std::uint64_t descent_mask() const;  // bit i set iff i is a descent (size < 64)
  Composition reversed() const;
  Partition sorted() const;

  std::string to_string() const;
  static Composition parse(std::string_view);

  auto operator<=>(const Composition&) const = default;

 private:
  std::vector<int> parts_;
};

/// a <= b in refinement order (a finer than b): Des(b) subset of Des(a).
/// Throws std::invalid_argument when |a| != |b|.
bool refines(const Composition& a, const Composition& b);

/// M(lambda) = sum_i binom(m_i(lambda) + 1, 2).
long m_stat(const Partition& p);

/// z_lambda = prod_i m_i! * i^{m_i}.
long long z_mu(const Partition& p);

/// All partitions of n in decreasing lexicographic order ((n) first),
/// optionally restricted to a fixed number of parts.
std::vector<Partition> partitions_of(int n, std::optional<int> length = std::nullopt);

/// All compositions of n in lexicographic order ((1,...,1) first),
/// optionally restricted to a fixed number of parts.
std::vector<Composition> compositions_of(int n, std::optional<int> length = std::nullopt);

long long binomial(int n, int k);
long long catalan(int n);

std::ostream& operator<<(std::ostream&, const Partition&);
std::ostream& operator<<(std::ostream&, const Composition&);

}  // namespace qtsym
