#pragma once

#include "permfact/exactnum.hpp"
#include "permfact/partition.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace permfact {

/// Raised when an exact computation produces a value that contradicts a
/// structural guarantee (non-integral or negative count). Always a bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An ordered list of conjugacy classes of the same S_n.
class ClassTuple {
 public:
  /// Throws std::invalid_argument if the list is empty, a class is empty, or
  /// sizes differ.
  explicit ClassTuple(std::vector<Partition> classes);

  int n() const { return n_; }
  const std::vector<Partition>& classes() const { return classes_; }
  std::size_t count() const { return classes_.size(); }

 private:
  std::vector<Partition> classes_;
  int n_ = 0;
};

/// One evaluated count together with what was asked.
struct CountResult {
  int n = 0;
  int m = 0;
  Integer value;
  std::vector<Partition> classes;  // the query; for mu this is {(n), gamma}
  bool full_cycle_query = false;   // true for mu_{n,m}(gamma)
};

/// W_{n,m}(C_1..C_t): prod|C_i| / m! * sum_lambda frak_c(lambda,m) (f^lambda)^{1-t} prod chi^lambda(C_i).
/// Throws std::out_of_range unless 1 <= m <= n.
Rational w_number(const ClassTuple& classes, int m);

/// W_{n,m}((n), C_1..C_t) through hook characters only. `others` may be empty.
Rational w_number_full_cycle(int n, std::span<const Partition> others, int m);

/// Number of tuples (s_1..s_t), s_i in C_i, whose product has m cycles.
Integer xi(const ClassTuple& classes, int m);

/// mu_{n,m}(gamma): factorizations of the fixed n-cycle as s*p with s of type
/// gamma and p having m cycles. Zero for m > n; std::out_of_range for m < 1.
Integer mu(const Partition& gamma, int m);

/// Coefficients of prod_i ((1+y)^{gamma_i} - 1); index e holds the sum over
/// compositions of e into len(gamma) positive parts of prod C(gamma_i, k_i).
std::vector<Integer> composition_binomial_poly(const Partition& gamma);

/// g = (1 + n - d - m)/2 when that is a nonnegative integer.
std::optional<int> genus_of(int n, int d, int m);

/// m = 1 - 2g + n - d; may be < 1, in which case no factorization exists.
int cycles_for_genus(int n, int d, int g);

}  // namespace permfact
