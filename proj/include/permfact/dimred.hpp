#pragma once

#include "permfact/exactnum.hpp"
#include "permfact/partition.hpp"

#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace permfact {

/// Raised by build_database when a recursively computed count disagrees with
/// the explicit formula (or is not a nonnegative integer).
class DatabaseValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lookup of a key the database was never built for (as opposed to a key
/// whose count is zero).
class DatabaseRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class DatabaseFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// sum_{j=1}^{i} C(i,j) (m+j-i)! S(l, m+j-i) / l!, with S the Stirling numbers
/// of the second kind; terms with m+j-i < 0 vanish.
Rational tilde_S(int m, int i, int l);

/// Normalized counts m!/n! mu_{n,m}(gamma), keyed by (gamma, m); n = |gamma|.
class ReductionTables {
 public:
  void set(const Partition& gamma, int m, const Rational& value);
  bool contains(const Partition& gamma, int m) const;
  /// Throws std::out_of_range if the entry was never set.
  const Rational& get(const Partition& gamma, int m) const;

  /// Fills every m in 1..|gamma| from the explicit formula.
  void fill_from_formula(const Partition& gamma);

  std::size_t size() const { return tilde_mu_.size(); }

 private:
  std::map<std::pair<Partition, int>, Rational> tilde_mu_;
};

/// m!/n! mu_{n,m}(gamma) from the recursion that removes one part i:
///   -sum_{l>m} tilde_S(m,1,l) T(gamma, l) + 1/(i a_i) sum_{l>0} tilde_S(m,i,l) T(gamma minus i, l).
/// Needs T(gamma, l) for m < l <= n and T(gamma minus i, l) for 1 <= l <= n-i.
/// Throws std::invalid_argument when len(gamma) < 2 (the base case is the
/// two-full-cycle count) or i is not a part; std::out_of_range if an input
/// entry is missing from `tables`.
Rational reduce_mu(const Partition& gamma, int m, int i, const ReductionTables& tables);

/// Same, with the required inputs taken from the explicit formula.
Rational reduce_mu(const Partition& gamma, int m, int i);

struct CountRecord {
  int n;
  int m;
  Partition gamma;
  Integer value;

  friend bool operator==(const CountRecord&, const CountRecord&) = default;
};

/// Record order of the file: (n, len(gamma), gamma ascending, m).
bool record_less(const CountRecord& a, const CountRecord& b);

/// Every nonzero mu_{n,m}(gamma) for n <= n_max.
class Database {
 public:
  Database() = default;
  Database(int n_max, std::vector<CountRecord> records);

  int n_max() const { return n_max_; }
  const std::vector<CountRecord>& records() const { return records_; }

  /// Zero for absent valid keys; DatabaseRangeError when n was not built;
  /// std::invalid_argument for malformed keys (m < 1, |gamma| != n).
  Integer lookup(int n, int m, const Partition& gamma) const;

  void write(std::ostream& out) const;
  static Database read(std::istream& in);

  void save(const std::string& path) const;
  static Database load(const std::string& path);

 private:
  int n_max_ = 0;
  std::vector<CountRecord> records_;
  std::map<std::tuple<int, int, Partition>, Integer> index_;
};

/// Builds length layer by length layer: len 1 from the two-full-cycle
/// formula, longer gamma by reduce_mu removing the smallest part. Each value
/// is checked against the explicit formula before it is kept.
Database build_database(int n_max);

}  // namespace permfact
