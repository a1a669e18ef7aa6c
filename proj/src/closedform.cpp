#include "permfact/closedform.hpp"

#include "permfact/countcore.hpp"

#include <sstream>
#include <stdexcept>

namespace permfact {

namespace {

void require_positive_m(int m, const char* what) {
  if (m < 1) throw std::out_of_range(std::string(what) + ": m must be positive");
}

Integer to_count(const Rational& value, const std::string& context) {
  if (!is_integral(value) || value < 0) {
    throw ConsistencyError(context + " is not a nonnegative integer: " + to_decimal(value));
  }
  return value.get_num();
}

Rational signed_term(long sign_exponent, const Rational& magnitude) {
  return sign_power(sign_exponent) > 0 ? magnitude : Rational(-magnitude);
}

// Univariate polynomial in x with rational coefficients, index = degree.
using XPoly = std::vector<Rational>;

XPoly poly_mul(const XPoly& a, const XPoly& b) {
  if (a.empty() || b.empty()) return {};
  XPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void poly_add_scaled(XPoly& acc, const XPoly& p, const Rational& scale) {
  if (acc.size() < p.size()) acc.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) acc[i] += scale * p[i];
}

// C(x + shift, k) as a polynomial in x.
XPoly binomial_in_x(long shift, long k) {
  XPoly out{Rational(1)};
  for (long i = 0; i < k; ++i) out = poly_mul(out, XPoly{Rational(shift - i), Rational(1)});
  const Rational inv = make_rational(1, factorial(k));
  for (auto& c : out) c *= inv;
  return out;
}

Rational coefficient(const XPoly& p, long degree) {
  if (degree < 0 || static_cast<std::size_t>(degree) >= p.size()) return Rational(0);
  return p[static_cast<std::size_t>(degree)];
}

Rational evaluate_binomial(const Integer& top, long k) {
  // C(top, k) for arbitrary integer top
  if (k < 0) return Rational(0);
  Integer value;
  mpz_bin_ui(value.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(value);
}

}  // namespace

Integer mu_genus_zero(const Partition& gamma) {
  const int n = gamma.size();
  if (n < 1) throw std::invalid_argument("mu_genus_zero: gamma must be nonempty");
  return to_count(make_rational(factorial(n), aut_lambda(gamma) * factorial(n + 1 - gamma.length())),
                  "mu_genus_zero");
}

Integer zagier_stanley(int n, int m) {
  if (n < 1) throw std::invalid_argument("zagier_stanley: n must be positive");
  require_positive_m(m, "zagier_stanley");
  if ((n - m) % 2 != 0) return Integer(0);
  return to_count(make_rational(stirling_first_unsigned(n + 1, m), binomial(n + 1, 2)), "zagier_stanley");
}

Integer mu_one_p(int n, int p, int m) {
  if (p < 0 || p >= n) throw std::invalid_argument("mu_one_p: need 0 <= p < n");
  require_positive_m(m, "mu_one_p");
  std::vector<int> parts(static_cast<std::size_t>(p), 1);
  parts.push_back(n - p);
  const Partition gamma(std::move(parts));
  const long q = n + 1 - p;
  const Integer c = stirling_first_unsigned(q, m);
  const Integer numerator = c - sign_power(q - m) * c;
  return to_count(make_rational(numerator * class_size(gamma), factorial(q)), "mu_one_p");
}

Integer mu_t_p(int n, int t, int p, int m) {
  if (p < 1 || t < 0 || n - p - t < 1) throw std::invalid_argument("mu_t_p: need p >= 1, t >= 0, n-p-t >= 1");
  require_positive_m(m, "mu_t_p");
  if ((n - m - t) % 2 == 0) return Integer(0);
  std::vector<int> parts(static_cast<std::size_t>(t), 1);
  parts.push_back(p);
  parts.push_back(n - p - t);
  const Partition gamma(std::move(parts));
  Rational sum = 0;
  for (int j = 1; j <= n - t; ++j) {
    const Integer choose = binomial(p, n + 1 - j - t);
    if (choose == 0) continue;
    const int weight = sign_power(n - j - t) - sign_power(j - m);
    if (weight == 0) continue;
    sum += make_rational(weight * choose * stirling_first_unsigned(j, m), factorial(j));
  }
  return to_count(sum * Rational(class_size(gamma)), "mu_t_p");
}

Integer mu_two_parts(int n, int p, int m) {
  if (p < 1 || p > n - 1) throw std::invalid_argument("mu_two_parts: need 1 <= p <= n-1");
  require_positive_m(m, "mu_two_parts");
  if ((n - m) % 2 == 0) return Integer(0);
  const Partition gamma{p, n - p};
  Rational sum = 0;
  for (int j = m; j <= n; ++j) {
    sum += make_rational(binomial(p, n + 1 - j) * stirling_first_signed(j, m), factorial(j));
  }
  return to_count(Rational(-2) * sum * Rational(class_size(gamma)), "mu_two_parts");
}

Integer mu_hook_boccara(int n, int m) {
  if (n < 3) throw std::invalid_argument("mu_hook_boccara: need n >= 3");
  require_positive_m(m, "mu_hook_boccara");
  if ((n - m) % 2 == 0) return Integer(0);
  return to_count(make_rational(2 * stirling_first_unsigned(n, m), n - 1), "mu_hook_boccara");
}

Integer one_face_map_count(int n_edges, int g) {
  if (n_edges < 1) throw std::invalid_argument("one_face_map_count: need at least one edge");
  if (g < 0 || g > n_edges / 2) {
    throw std::invalid_argument("one_face_map_count: genus " + std::to_string(g) + " out of range for " +
                                std::to_string(n_edges) + " edges");
  }
  const int m = n_edges + 1 - 2 * g;
  Rational sum = 0;
  for (int k = 0; m + k - 1 <= n_edges; ++k) {
    const long i = m + k;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(i - 1));
    const Rational magnitude =
        make_rational(stirling_first_unsigned(i, m) * binomial(n_edges, i - 1) * power, factorial(i));
    sum += signed_term(k, magnitude);
  }
  return to_count(sum * Rational(double_factorial_odd(n_edges)), "one_face_map_count");
}

std::vector<HZTableRow> one_face_map_table(int n_edges) {
  std::vector<HZTableRow> rows;
  for (int g = 0; g <= n_edges / 2; ++g) rows.push_back({n_edges, g, one_face_map_count(n_edges, g)});
  return rows;
}

Rational w_number_p_power(int n_blocks, int p, int m) {
  if (n_blocks < 1 || p < 1) throw std::invalid_argument("w_number_p_power: need n_blocks, p >= 1");
  const long total = static_cast<long>(n_blocks) * p;
  if (m < 1 || m > total) throw std::out_of_range("w_number_p_power: need 1 <= m <= np");
  Integer sum = 0;
  for (int i = 0; i <= n_blocks; ++i) {
    const Integer term = binomial(n_blocks, i) * binomial(static_cast<long>(p) * (n_blocks - i), total - m + 1);
    if (i % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  Integer p_power;
  mpz_ui_pow_ui(p_power.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n_blocks));
  return make_rational(factorial(total - 1) * factorial(total) * sum, factorial(m) * factorial(n_blocks) * p_power);
}

Integer mu_p_power(int n_blocks, int p, int m) {
  if (n_blocks < 1 || p < 1) throw std::invalid_argument("mu_p_power: need n_blocks, p >= 1");
  require_positive_m(m, "mu_p_power");
  const long total = static_cast<long>(n_blocks) * p;
  if (m > total) return Integer(0);
  Rational sum = 0;
  for (long k = 0; k <= total - m; ++k) {
    sum += signed_term(k, Rational(stirling_first_unsigned(m + k, m)) * w_number_p_power(n_blocks, p, static_cast<int>(m + k)));
  }
  return to_count(sum / Rational(factorial(total - 1)), "mu_p_power");
}

Integer generalized_catalan(int n_blocks, int p) {
  return to_count(make_rational(binomial(static_cast<long>(n_blocks) * p, n_blocks),
                                static_cast<long>(n_blocks) * (p - 1) + 1),
                  "generalized_catalan");
}

Integer jackson_direct(int n, int m, int d) {
  Integer total = 0;
  for (const auto& gamma : partitions_with_length(n, d)) total += mu(gamma, m);
  return total;
}

Integer jackson_closed(int n, int m, int d) {
  if (n < 1 || m < 1 || d < 1) throw std::invalid_argument("jackson_closed: need n, m, d >= 1");
  Rational sum = 0;
  for (int k = 1; k <= n; ++k) {
    const Integer c = stirling_first_unsigned(k, m);
    if (c == 0) continue;
    const Rational magnitude = make_rational(c * binomial(n - 1, k - 1) * stirling_first_unsigned(n - k + 1, d),
                                             factorial(k) * factorial(n - k + 1));
    sum += signed_term(k - m, magnitude);
  }
  return to_count(sum * Rational(factorial(n)), "jackson_closed");
}

Integer jackson_by_length(int n, int m, int d) {
  const Integer direct = jackson_direct(n, m, d);
  const Integer closed = jackson_closed(n, m, d);
  if (direct != closed) {
    throw ConsistencyError("jackson_by_length: direct " + to_decimal(direct) + " != closed " + to_decimal(closed));
  }
  return direct;
}

VerificationReport jackson_generating_check(int n) {
  VerificationReport report;
  report.name = "jackson-gf n=" + std::to_string(n);
  std::vector<std::vector<Integer>> table(static_cast<std::size_t>(n + 1), std::vector<Integer>(static_cast<std::size_t>(n + 1)));
  for (int m = 1; m <= n; ++m) {
    for (int d = 1; d <= n; ++d) table[static_cast<std::size_t>(m)][static_cast<std::size_t>(d)] = jackson_direct(n, m, d);
  }
  for (int x = 0; x <= n + 1; ++x) {
    for (int y = 0; y <= n + 1; ++y) {
      Integer lhs = 0;
      Integer x_power = x;
      for (int m = 1; m <= n; ++m, x_power *= x) {
        Integer y_power = y;
        for (int d = 1; d <= n; ++d, y_power *= y) {
          lhs += table[static_cast<std::size_t>(m)][static_cast<std::size_t>(d)] * x_power * y_power;
        }
      }
      Rational rhs = 0;
      for (int k = 1; k <= n; ++k) {
        rhs += Rational(binomial(n - 1, k - 1)) * evaluate_binomial(x, k) *
               evaluate_binomial(Integer(y + n - k), n - k + 1);
      }
      rhs *= Rational(factorial(n));
      std::ostringstream line;
      line << "n=" << n << " x=" << x << " y=" << y << " lhs=" << to_decimal(lhs) << " rhs=" << to_decimal(rhs);
      report.record(Rational(lhs) == rhs, line.str());
    }
  }
  return report;
}

VerificationReport hz_series_check(int n_max) {
  VerificationReport report;
  report.name = "harer-zagier n_max=" + std::to_string(n_max);

  // y^0: 1 = 1.
  report.record(true, "y^0: 1 = 1");

  // First identity: sum_g xi_{n,g} x^{n+1-2g} = (2n-1)!! sum_i C(x,i) C(n,i-1) 2^{i-1}.
  for (int n = 1; n <= n_max; ++n) {
    XPoly rhs;
    for (int i = 1; i <= n + 1; ++i) {
      Integer power;
      mpz_ui_pow_ui(power.get_mpz_t(), 2, static_cast<unsigned long>(i - 1));
      poly_add_scaled(rhs, binomial_in_x(0, i), Rational(binomial(n, i - 1) * power));
    }
    for (auto& c : rhs) c *= Rational(double_factorial_odd(n));
    for (long degree = 0; degree <= n + 1; ++degree) {
      Rational lhs = 0;
      int g = -1;
      if ((n + 1 - degree) % 2 == 0) {
        g = static_cast<int>((n + 1 - degree) / 2);
        if (g <= n / 2) lhs = Rational(one_face_map_count(n, g));
      }
      std::ostringstream line;
      line << "identity 1 n=" << n;
      if (g >= 0) line << " g=" << g;
      line << " x^" << degree << ": " << to_decimal(lhs) << " vs " << to_decimal(coefficient(rhs, degree));
      report.record(lhs == coefficient(rhs, degree), line.str());
    }
  }

  // Second identity, coefficient of y^{n+1}:
  // 2 sum_g xi_{n,g}/(2n-1)!! x^{n+1-2g} = [y^{n+1}] (1+y)^x (1-y)^{-x}
  //                                        = sum_{a+b=n+1} C(x,a) C(x+b-1,b).
  for (int n = 0; n <= n_max; ++n) {
    const int s = n + 1;
    XPoly rhs;
    for (int a = 0; a <= s; ++a) {
      const int b = s - a;
      poly_add_scaled(rhs, poly_mul(binomial_in_x(0, a), binomial_in_x(b - 1, b)), Rational(1));
    }
    for (long degree = 0; degree <= s; ++degree) {
      Rational lhs = 0;
      int g = -1;
      if ((s - degree) % 2 == 0) {
        g = static_cast<int>((s - degree) / 2);
        // n = 0 is the empty gluing, counted once.
        const Integer count = n == 0 ? (g == 0 ? Integer(1) : Integer(0))
                                     : (g <= n / 2 ? one_face_map_count(n, g) : Integer(0));
        lhs = make_rational(2 * count, double_factorial_odd(n));
      }
      std::ostringstream line;
      line << "identity 2 n=" << n;
      if (g >= 0) line << " g=" << g;
      line << " x^" << degree << "y^" << s << ": " << to_decimal(lhs) << " vs " << to_decimal(coefficient(rhs, degree));
      report.record(lhs == coefficient(rhs, degree), line.str());
    }
  }

  // Pointwise spot check of the truncated series at small integer x.
  for (int x = 0; x <= n_max + 2; ++x) {
    for (int s = 1; s <= n_max + 1; ++s) {
      Rational series = 0;
      for (int a = 0; a <= s; ++a) {
        const int b = s - a;
        series += evaluate_binomial(x, a) * evaluate_binomial(Integer(x + b - 1), b);
      }
      const int n = s - 1;
      Rational lhs = 0;
      for (int g = 0; 2 * g <= s; ++g) {
        const Integer count = n == 0 ? (g == 0 ? Integer(1) : Integer(0))
                                     : (g <= n / 2 ? one_face_map_count(n, g) : Integer(0));
        Integer x_power;
        mpz_ui_pow_ui(x_power.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(s - 2 * g));
        lhs += make_rational(2 * count * x_power, double_factorial_odd(n));
      }
      std::ostringstream line;
      line << "identity 2 at x=" << x << " y^" << s << ": " << to_decimal(lhs) << " vs " << to_decimal(series);
      report.record(lhs == series, line.str());
    }
  }
  return report;
}

PolynomialityResult polynomiality_check(int n, int d, int g) {
  if (d < 1 || n < d || g < 0) throw std::invalid_argument("polynomiality_check: need n >= d >= 1, g >= 0");
  const int m = cycles_for_genus(n, d, g);
  if (m < 1) throw std::invalid_argument("polynomiality_check: 1 - 2g + n - d must be positive");

  PolynomialityResult result;
  result.report.name = "polynomiality n=" + std::to_string(n) + " d=" + std::to_string(d) + " g=" + std::to_string(g);

  std::vector<Partition> basis;
  for (int degree = 0; degree <= 2 * g; ++degree) {
    for (auto& rho : all_partitions(degree)) basis.push_back(std::move(rho));
  }
  const auto points = partitions_with_length(n, d);
  result.points = points.size();
  result.basis_size = basis.size();

  // Augmented system: rows = points, columns = power-sum products, last = value.
  std::vector<std::vector<Rational>> rows;
  for (const auto& gamma : points) {
    std::vector<Rational> row;
    for (const auto& rho : basis) {
      Integer product = 1;
      for (int e : rho.parts()) {
        Integer power_sum = 0;
        for (int part : gamma.parts()) {
          Integer power;
          mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(e));
          power_sum += power;
        }
        product *= power_sum;
      }
      row.emplace_back(product);
    }
    row.push_back(make_rational(aut_lambda(gamma) * mu(gamma, m), factorial(n)));
    rows.push_back(std::move(row));
  }

  const std::size_t cols = basis.size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c <= cols; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  result.rank = rank;
  bool consistent = true;
  for (std::size_t r = rank; r < rows.size(); ++r) consistent = consistent && rows[r][cols] == 0;

  std::ostringstream line;
  line << "n=" << n << " d=" << d << " g=" << g << " m=" << m << " points=" << points.size()
       << " basis=" << basis.size() << " rank=" << rank << (consistent ? " consistent" : " inconsistent");
  result.report.record(consistent, line.str());

  if (g == 0 && !points.empty()) {
    result.constant = rows[0][cols] / rows[0][0];
    const Rational expected = make_rational(1, factorial(n + 1 - d));
    std::ostringstream constant_line;
    constant_line << "n=" << n << " d=" << d << " genus-zero constant " << to_decimal(result.constant)
                  << " expected " << to_decimal(expected);
    result.report.record(result.constant == expected, constant_line.str());
  }
  return result;
}

}  // namespace permfact
