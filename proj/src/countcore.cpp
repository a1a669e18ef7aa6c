#include "permfact/countcore.hpp"

#include "permfact/charkit.hpp"

#include <algorithm>

namespace permfact {

namespace {

void require_cycle_range(int n, int m, const char* what) {
  if (m < 1 || m > n) {
    throw std::out_of_range(std::string(what) + ": need 1 <= m <= n (n=" + std::to_string(n) +
                            ", m=" + std::to_string(m) + ")");
  }
}

// base^e for a possibly negative e.
Rational rational_power(const Integer& base, long e) {
  Integer p;
  mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  return e >= 0 ? Rational(p) : make_rational(1, p);
}

Integer checked_integer(const Rational& value, const std::string& context) {
  if (!is_integral(value)) {
    throw ConsistencyError(context + " produced non-integral value " + to_decimal(value));
  }
  if (value < 0) throw ConsistencyError(context + " produced negative value " + to_decimal(value));
  return value.get_num();
}

}  // namespace

ClassTuple::ClassTuple(std::vector<Partition> classes) : classes_(std::move(classes)) {
  if (classes_.empty()) throw std::invalid_argument("at least one conjugacy class is required");
  n_ = classes_.front().size();
  if (n_ < 1) throw std::invalid_argument("conjugacy classes must be nonempty partitions");
  for (const auto& c : classes_) {
    if (c.size() != n_) {
      throw std::invalid_argument("inconsistent class sizes: (" + classes_.front().to_string() +
                                  ") and (" + c.to_string() + ")");
    }
  }
}

Rational w_number(const ClassTuple& classes, int m) {
  const int n = classes.n();
  require_cycle_range(n, m, "w_number");
  const long t = static_cast<long>(classes.count());
  Rational sum = 0;
  for (const auto& lambda : all_partitions(n)) {
    Integer chars = 1;
    for (const auto& c : classes.classes()) {
      chars *= character(lambda, c);
      if (chars == 0) break;
    }
    if (chars == 0) continue;
    const Rational c = frak_c(lambda, m);
    if (c == 0) continue;
    sum += c * rational_power(dimension(lambda), 1 - t) * chars;
  }
  Integer sizes = 1;
  for (const auto& c : classes.classes()) sizes *= class_size(c);
  return sum * sizes / Rational(factorial(m));
}

Rational w_number_full_cycle(int n, std::span<const Partition> others, int m) {
  require_cycle_range(n, m, "w_number_full_cycle");
  for (const auto& c : others) {
    if (c.size() != n) throw std::invalid_argument("w_number_full_cycle: class (" + c.to_string() + ") is not a partition of n");
  }
  const long t = static_cast<long>(others.size());
  std::vector<std::vector<Integer>> hook_chars;
  hook_chars.reserve(others.size());
  for (const auto& c : others) hook_chars.push_back(hook_character_poly(c));

  Rational sum = 0;
  for (int j = 0; j < n; ++j) {
    const Integer top = binomial(n - 1 - j, n - m);
    if (top == 0) continue;
    Integer chars = 1;
    for (const auto& poly : hook_chars) chars *= poly[static_cast<std::size_t>(j)];
    if (chars == 0) continue;
    Rational term = Rational(top * chars) * rational_power(binomial(n - 1, j), -(t - 1));
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  Integer sizes = factorial(n - 1);
  for (const auto& c : others) sizes *= class_size(c);
  return sum * sizes / Rational(factorial(m));
}

Integer xi(const ClassTuple& classes, int m) {
  const int n = classes.n();
  require_cycle_range(n, m, "xi");

  const Partition full{n};
  const auto& list = classes.classes();
  const auto full_it = std::find(list.begin(), list.end(), full);
  std::vector<Partition> others;
  if (full_it != list.end()) {
    others.insert(others.end(), list.begin(), full_it);
    others.insert(others.end(), full_it + 1, list.end());
  }

  Rational total = 0;
  for (int k = 0; k <= n - m; ++k) {
    const Rational w = full_it != list.end() ? w_number_full_cycle(n, others, m + k) : w_number(classes, m + k);
    const Rational term = Rational(stirling_first_unsigned(m + k, m)) * w;
    if (k % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return checked_integer(total, "xi");
}

std::vector<Integer> composition_binomial_poly(const Partition& gamma) {
  std::vector<Integer> poly{Integer(1)};
  for (int part : gamma.parts()) {
    std::vector<Integer> next(poly.size() + static_cast<std::size_t>(part));
    for (std::size_t a = 0; a < poly.size(); ++a) {
      if (poly[a] == 0) continue;
      for (int k = 1; k <= part; ++k) next[a + static_cast<std::size_t>(k)] += poly[a] * binomial(part, k);
    }
    poly = std::move(next);
  }
  return poly;
}

Integer mu(const Partition& gamma, int m) {
  const int n = gamma.size();
  if (n < 1) throw std::invalid_argument("mu: gamma must be a nonempty partition");
  if (m < 1) throw std::out_of_range("mu: m must be positive");
  if (m > n) return Integer(0);

  const std::vector<Integer> compositions = composition_binomial_poly(gamma);
  Rational sum = 0;
  for (int k = 0; k <= n - m; ++k) {
    const std::size_t e = static_cast<std::size_t>(n - m - k + 1);
    if (e >= compositions.size() || compositions[e] == 0) continue;
    Rational term = make_rational(stirling_first_unsigned(m + k, m) * compositions[e], factorial(m + k));
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return checked_integer(sum * Rational(class_size(gamma)), "mu(" + gamma.to_string() + ")");
}

std::optional<int> genus_of(int n, int d, int m) {
  const int twice = 1 + n - d - m;
  if (twice < 0 || twice % 2 != 0) return std::nullopt;
  return twice / 2;
}

int cycles_for_genus(int n, int d, int g) { return 1 - 2 * g + n - d; }

}  // namespace permfact
