#pragma once

#include <gmpxx.h>

#include <string>

namespace permfact {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Arbitrary-precision rational, kept in lowest terms with a positive
/// denominator by every GMP operation.
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::domain_error on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

/// Decimal rendering, never scientific notation. Rationals print as "p/q"
/// (or just "p" when integral).
std::string to_decimal(const Integer& v);
std::string to_decimal(const Rational& v);

/// (-1)^e for any integer exponent.
inline int sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

Integer factorial(long n);

/// (2n-1)!! = 1*3*...*(2n-1); 1 for n = 0.
Integer double_factorial_odd(long n);

/// Generalized binomial a(a-1)...(a-k+1)/k! for any integer a; 0 when k < 0.
Integer binomial(long a, long k);

/// Signless Stirling numbers of the first kind c(n,k). Zero outside 0 <= k <= n.
Integer stirling_first_unsigned(long n, long k);

/// s(n,k) = (-1)^(n-k) c(n,k).
Integer stirling_first_signed(long n, long k);

/// Stirling numbers of the second kind S(n,k). Zero outside 0 <= k <= n.
Integer stirling_second(long n, long k);

}  // namespace permfact
