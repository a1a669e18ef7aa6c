#pragma once

#include "permfact/exactnum.hpp"
#include "permfact/partition.hpp"
#include "permfact/report.hpp"

#include <vector>

namespace permfact {

// Specialized one-face bipartite map counts. Each is an independent closed
// form; the tests hold every one of them to mu() from countcore.

/// Genus-zero count n! / (prod a_i! (n+1-len)!) at m = n + 1 - len(gamma).
Integer mu_genus_zero(const Partition& gamma);

/// Two n-cycles: c(n+1,m) / C(n+1,2) when n - m is even, else 0.
Integer zagier_stanley(int n, int m);

/// gamma = [1^p, n-p], 0 <= p < n, via the two-term form
/// (c(q,m) - (-1)^{q-m} c(q,m)) / q! * |C_gamma| with q = n + 1 - p.
Integer mu_one_p(int n, int p, int m);

/// gamma = [1^t, p, n-p-t] with p >= 1, t >= 0, n-p-t >= 1.
Integer mu_t_p(int n, int t, int p, int m);

/// gamma = [p, n-p]: -2 sum_j C(p, n+1-j) s(j,m)/j! * |C_gamma| when n - m is odd.
Integer mu_two_parts(int n, int p, int m);

/// gamma = (n-1, 1), n >= 3: 2 c(n,m) / (n-1) when n - m is odd.
Integer mu_hook_boccara(int n, int m);

/// One-face maps with n_edges edges and genus g (single-face gluings of a
/// 2n-gon). Throws std::invalid_argument unless 0 <= g <= n_edges/2.
Integer one_face_map_count(int n_edges, int g);

struct HZTableRow {
  int n_edges;
  int genus;
  Integer count;
};

/// Rows for every genus 0..floor(n_edges/2).
std::vector<HZTableRow> one_face_map_table(int n_edges);

/// W_{np,m} for gamma = [p^n] from the closed alternating binomial sum.
Rational w_number_p_power(int n_blocks, int p, int m);

/// mu for gamma = [p^{n_blocks}] through the inclusion-exclusion over W_{np,m}.
Integer mu_p_power(int n_blocks, int p, int m);

/// Generalized Catalan number C(np, n) / (n(p-1)+1).
Integer generalized_catalan(int n_blocks, int p);

/// sum over gamma |- n with d parts of mu(gamma, m), by direct summation.
Integer jackson_direct(int n, int m, int d);

/// The same aggregate from the closed k-sum
/// n! sum_k (-1)^{k-m} c(k,m)/k! C(n-1,k-1) c(n-k+1,d)/(n-k+1)!.
Integer jackson_closed(int n, int m, int d);

/// Both routes; throws ConsistencyError if they disagree.
Integer jackson_by_length(int n, int m, int d);

/// Checks sum_{m,d} mu_{n,m}(d) x^m y^d = n! sum_k C(n-1,k-1) C(x,k) C(y+n-k, n-k+1)
/// on the integer grid 0 <= x, y <= n + 1.
VerificationReport jackson_generating_check(int n);

/// Both generating identities for one-face maps, coefficient by coefficient,
/// for every n <= n_max.
VerificationReport hz_series_check(int n_max);

struct PolynomialityResult {
  VerificationReport report;
  std::size_t points = 0;
  std::size_t basis_size = 0;
  std::size_t rank = 0;
  Rational constant;  // the fitted value when g = 0
};

/// Fits Aut(gamma)/n! mu(gamma, m), m = 1 - 2g + n - d, over all gamma |- n with
/// d parts as a symmetric polynomial of degree <= 2g in the parts.
PolynomialityResult polynomiality_check(int n, int d, int g);

}  // namespace permfact
