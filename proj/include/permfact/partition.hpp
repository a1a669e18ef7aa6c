#pragma once

#include "permfact/exactnum.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permfact {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An integer partition stored as its nonincreasing list of parts. Indexes
/// both the conjugacy classes and the irreducible characters of S_n.
class Partition {
 public:
  Partition() = default;

  /// Accepts parts in any order; throws std::invalid_argument on a
  /// nonpositive part.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Grammar: comma-separated tokens `p` or `b^e`; "()" or "" is empty.
  static Partition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& part_vector() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  int size() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  /// m_i: number of parts equal to i.
  int multiplicity(int i) const;
  /// part -> multiplicity, for parts that occur.
  std::map<int, int> multiplicities() const;

  Partition conjugate() const;

  /// "3,1,1"; the empty partition renders as "()".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> all_partitions(int n);

/// Partitions of n with exactly d parts, in the same order.
std::vector<Partition> partitions_with_length(int n, int d);

/// prod_i i^{m_i} m_i!
Integer z_lambda(const Partition& lambda);
/// n! / z_lambda
Integer class_size(const Partition& lambda);
/// prod_i m_i!
Integer aut_lambda(const Partition& lambda);

/// gamma with one copy of part i removed. Throws std::invalid_argument if
/// i is not a part.
Partition remove_part(const Partition& gamma, int i);
Partition add_part(const Partition& gamma, int i);

/// The hook [1^j, n-j].
Partition hook_shape(int n, int j);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

}  // namespace permfact
