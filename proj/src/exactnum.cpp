#include "permfact/exactnum.hpp"

#include <functional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace permfact {

namespace {

// Row-wise memo of a triangular recurrence T(n,k), 0 <= k <= n. Rows are
// appended under an exclusive lock and never modified afterwards, so readers
// only need the shared lock.
class TriangularTable {
 public:
  using Row = std::vector<Integer>;
  using Recurrence = std::function<Row(const Row& prev, long n)>;

  explicit TriangularTable(Recurrence next) : next_(std::move(next)) {
    rows_.push_back(Row{Integer(1)});
  }

  Integer get(long n, long k) {
    if (n < 0 || k < 0 || k > n) return Integer(0);
    {
      std::shared_lock lock(mutex_);
      if (static_cast<std::size_t>(n) < rows_.size()) return rows_[n][k];
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= static_cast<std::size_t>(n)) {
      rows_.push_back(next_(rows_.back(), static_cast<long>(rows_.size())));
    }
    return rows_[n][k];
  }

 private:
  Recurrence next_;
  std::vector<Row> rows_;
  std::shared_mutex mutex_;
};

TriangularTable& stirling1_table() {
  // c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k)
  static TriangularTable table([](const TriangularTable::Row& prev, long n) {
    TriangularTable::Row row(n + 1);
    for (long k = 0; k <= n; ++k) {
      Integer v = 0;
      if (k >= 1) v += prev[k - 1];
      if (k <= n - 1) v += (n - 1) * prev[k];
      row[k] = v;
    }
    return row;
  });
  return table;
}

TriangularTable& stirling2_table() {
  // S(n,k) = k S(n-1,k) + S(n-1,k-1)
  static TriangularTable table([](const TriangularTable::Row& prev, long n) {
    TriangularTable::Row row(n + 1);
    for (long k = 0; k <= n; ++k) {
      Integer v = 0;
      if (k >= 1) v += prev[k - 1];
      if (k <= n - 1) v += k * prev[k];
      row[k] = v;
    }
    return row;
  });
  return table;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_decimal(const Integer& v) { return v.get_str(10); }

std::string to_decimal(const Rational& v) {
  if (is_integral(v)) return v.get_num().get_str(10);
  return v.get_str(10);
}

Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer double_factorial_odd(long n) {
  if (n < 0) throw std::domain_error("double_factorial_odd of a negative number");
  Integer r = 1;
  for (long i = 1; i <= n; ++i) r *= 2 * i - 1;
  return r;
}

Integer binomial(long a, long k) {
  if (k < 0) return Integer(0);
  if (a >= 0) {
    if (a < k) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(k));
    return r;
  }
  // Falling factorial, which GMP also supports directly for negative tops.
  Integer top = a;
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

Integer stirling_first_unsigned(long n, long k) {
  if (n < 0) throw std::domain_error("stirling_first_unsigned: n < 0");
  return stirling1_table().get(n, k);
}

Integer stirling_first_signed(long n, long k) {
  Integer c = stirling_first_unsigned(n, k);
  return sign_power(n - k) > 0 ? c : Integer(-c);
}

Integer stirling_second(long n, long k) {
  if (n < 0) throw std::domain_error("stirling_second: n < 0");
  return stirling2_table().get(n, k);
}

}  // namespace permfact
