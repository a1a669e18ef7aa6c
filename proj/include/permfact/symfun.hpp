#pragma once

#include "permfact/exactnum.hpp"
#include "permfact/partition.hpp"
#include "permfact/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace permfact {

/// Multivariate polynomial with exact rational coefficients over a fixed
/// number of variables. Zero coefficients are never stored.
class SparsePolynomial {
 public:
  using Exponent = std::vector<int>;

  explicit SparsePolynomial(int variables = 0) : variables_(variables) {}

  static SparsePolynomial constant(int variables, const Rational& c);
  static SparsePolynomial variable(int variables, int index);

  int variables() const { return variables_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponent& e) const;

  /// Adds c * x^e; drops the term if the coefficient cancels.
  void add_term(const Exponent& e, const Rational& c);

  SparsePolynomial& operator+=(const SparsePolynomial& other);
  SparsePolynomial& operator-=(const SparsePolynomial& other);
  SparsePolynomial& operator*=(const Rational& c);
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) { return a += b; }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) { return a -= b; }
  friend SparsePolynomial operator*(SparsePolynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

  /// Re-indexes into `total` variables, shifting variable i to i + offset.
  SparsePolynomial embed(int offset, int total) const;

  /// Exchanges variables i and j.
  SparsePolynomial swap_variables(int i, int j) const;

  std::string to_string() const;

 private:
  void check_same_arity(const SparsePolynomial& other) const;

  int variables_;
  std::map<Exponent, Rational> terms_;
};

/// p_lambda(x_1..x_k).
SparsePolynomial power_sum(const Partition& lambda, int k);

/// s_lambda(x_1..x_k) = (1/n!) sum_alpha |C_alpha| chi^lambda(alpha) p_alpha.
SparsePolynomial schur(const Partition& lambda, int k);

/// m_lambda(x_1..x_k): every distinct monomial with exponent multiset lambda.
SparsePolynomial monomial_sym(const Partition& lambda, int k);

/// sum_{m,alpha,gamma} xi_{n,m}(alpha,gamma)/(n!)^2 p_alpha(x) p_gamma(y) z^m
/// against sum_lambda frak_m(lambda,z)/f^lambda s_lambda(x) s_lambda(y), at
/// z = 0..n with n variables per alphabet.
VerificationReport verify_schur_identity(int n);

/// The m = 1 generating function three ways: from xi directly, from the
/// alternating frak_c sum against Schur functions, and from the
/// monomial-basis expression. All pairs must agree.
VerificationReport verify_m1_identities(int n);

}  // namespace permfact
