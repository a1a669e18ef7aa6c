#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permfact/closedform.hpp"
#include "permfact/countcore.hpp"
#include "permfact/oracle.hpp"

using namespace permfact;

namespace {

Partition ones_plus(int ones, std::vector<int> rest) {
  for (int i = 0; i < ones; ++i) rest.push_back(1);
  return Partition(std::move(rest));
}

Partition power_shape(int blocks, int p) { return Partition(std::vector<int>(static_cast<std::size_t>(blocks), p)); }

}  // namespace

TEST_CASE("genus-zero counts") {
  CHECK(mu_genus_zero(Partition{2, 1}) == 3);
  CHECK(mu_genus_zero(Partition{2, 2, 2}) == 5);
  CHECK(mu_genus_zero(Partition{4}) == 1);
  for (int n = 1; n <= 12; ++n) {
    for (const auto& gamma : all_partitions(n)) CHECK(mu_genus_zero(gamma) == mu(gamma, n + 1 - gamma.length()));
  }
}

TEST_CASE("two full cycles") {
  CHECK(zagier_stanley(3, 1) == 1);
  CHECK(zagier_stanley(3, 2) == 0);
  CHECK(zagier_stanley(5, 3) == 15);
  for (int n = 1; n <= 12; ++n) {
    for (int m = 1; m <= n; ++m) {
      CHECK(zagier_stanley(n, m) == mu(Partition{n}, m));
      CHECK(zagier_stanley(n, m) == mu_one_p(n, 0, m));
    }
  }
}

TEST_CASE("fixed points plus one cycle") {
  CHECK(mu_one_p(3, 1, 2) == 3);
  CHECK(mu_one_p(3, 0, 1) == 1);
  CHECK(mu_one_p(4, 1, 1) == 4);
  CHECK(mu_one_p(4, 1, 2) == 0);
  for (int n = 1; n <= 12; ++n) {
    for (int p = 0; p < n; ++p) {
      for (int m = 1; m <= n; ++m) CHECK(mu_one_p(n, p, m) == mu(ones_plus(p, {n - p}), m));
    }
  }
}

TEST_CASE("fixed points plus two cycles") {
  CHECK(mu_t_p(3, 0, 1, 2) == 3);
  CHECK(mu_t_p(4, 0, 3, 3) == 4);
  CHECK(mu_t_p(4, 0, 3, 2) == 0);
  for (int n = 2; n <= 12; ++n) {
    for (int t = 0; t <= n - 2; ++t) {
      for (int p = 1; n - t - p >= 1; ++p) {
        for (int m = 1; m <= n; ++m) CHECK(mu_t_p(n, t, p, m) == mu(ones_plus(t, {p, n - t - p}), m));
      }
    }
  }
}

TEST_CASE("two parts") {
  CHECK(mu_two_parts(3, 1, 2) == 3);
  CHECK(mu_two_parts(4, 2, 2) == 0);
  CHECK(mu_two_parts(4, 2, 2) == mu(Partition{2, 2}, 2));
  for (int n = 2; n <= 12; ++n) {
    for (int p = 1; p < n; ++p) {
      for (int m = 1; m <= n; ++m) {
        CHECK(mu_two_parts(n, p, m) == mu(Partition{p, n - p}, m));
        CHECK(mu_two_parts(n, p, m) == mu_t_p(n, 0, p, m));
      }
    }
  }
}

TEST_CASE("one fixed point and an (n-1)-cycle") {
  for (int n = 3; n <= 12; ++n) {
    for (int m = 1; m <= n; ++m) {
      CHECK(mu_hook_boccara(n, m) == mu(Partition{n - 1, 1}, m));
      CHECK(mu_hook_boccara(n, m) == mu_t_p(n, 0, n - 1, m));
      if ((n - m) % 2 == 1) {
        CHECK(mu_hook_boccara(n, m) * (n - 1) == 2 * stirling_first_unsigned(n, m));
      }
    }
  }
  // the 2-cycle of S_2 cannot be written this way: (1,1) has a repeated part
  CHECK(mu(Partition{1, 1}, 1) == 1);
  CHECK(2 * stirling_first_unsigned(2, 1) == 2);
  CHECK_THROWS_AS(mu_hook_boccara(2, 1), std::invalid_argument);
}

TEST_CASE("one-face maps") {
  CHECK(one_face_map_count(1, 0) == 1);
  CHECK(one_face_map_count(3, 0) == 5);
  CHECK(one_face_map_count(2, 1) == 1);
  CHECK(one_face_map_count(3, 1) == 10);
  CHECK(one_face_map_count(5, 2) == 483);
  CHECK_THROWS_AS(one_face_map_count(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(one_face_map_count(2, -1), std::invalid_argument);
  for (int n = 1; n <= 12; ++n) {
    CHECK(one_face_map_count(n, 0) == binomial(2 * n, n) / (n + 1));
    Integer total = 0;
    for (const auto& row : one_face_map_table(n)) {
      CHECK(row.n_edges == n);
      total += row.count;
    }
    CHECK(total == double_factorial_odd(n));
  }
  for (int n = 1; n <= 5; ++n) {
    const auto brute = oracle::brute_one_face_maps(n);
    for (int g = 0; g <= n / 2; ++g) {
      CHECK(one_face_map_count(n, g) == mu(power_shape(n, 2), n + 1 - 2 * g));
      CHECK(one_face_map_count(n, g) == brute[static_cast<std::size_t>(g)]);
    }
  }
}

TEST_CASE("equal cycles") {
  CHECK(mu_p_power(2, 3, 5) == 3);
  CHECK(mu_p_power(3, 2, 4) == 5);
  CHECK(mu_p_power(2, 2, 1) == 1);
  for (int np = 1; np <= 12; ++np) {
    for (int p = 1; p <= np; ++p) {
      if (np % p != 0) continue;
      const int blocks = np / p;
      for (int m = 1; m <= np; ++m) {
        CHECK(mu_p_power(blocks, p, m) == mu(power_shape(blocks, p), m));
        CHECK(w_number_p_power(blocks, p, m) == w_number_full_cycle(np, std::vector<Partition>{power_shape(blocks, p)}, m));
      }
      CHECK(generalized_catalan(blocks, p) == mu(power_shape(blocks, p), blocks * (p - 1) + 1));
    }
  }
}

TEST_CASE("aggregate by number of parts") {
  CHECK(jackson_direct(2, 2, 1) == 1);
  CHECK(jackson_direct(2, 1, 2) == 1);
  CHECK(jackson_direct(3, 1, 1) == 1);
  // n = 2: the records are x^2 y and x y^2
  CHECK(jackson_closed(2, 2, 1) == 1);
  CHECK(jackson_closed(2, 1, 2) == 1);
  CHECK(jackson_closed(2, 1, 1) == 0);
  CHECK(jackson_closed(2, 2, 2) == 0);
  for (int n = 1; n <= 8; ++n) {
    for (int m = 1; m <= n; ++m) {
      for (int d = 1; d <= n; ++d) CHECK(jackson_by_length(n, m, d) == jackson_direct(n, m, d));
    }
    CHECK(jackson_generating_check(n).passed);
  }
}

TEST_CASE("one-face map generating identities") {
  CHECK(hz_series_check(0).passed);
  CHECK(hz_series_check(1).passed);
  CHECK(hz_series_check(4).passed);
  const auto report = hz_series_check(8);
  CHECK(report.passed);
  CHECK(report.cases > 0);
}

TEST_CASE("polynomiality in the parts") {
  auto r = polynomiality_check(6, 2, 0);
  CHECK(r.report.passed);
  CHECK(r.constant == make_rational(1, factorial(5)));
  r = polynomiality_check(8, 2, 1);
  CHECK(r.report.passed);
  CHECK(r.points == 4);
  r = polynomiality_check(5, 5, 0);
  CHECK(r.report.passed);
  CHECK(r.points == 1);
  CHECK(r.constant == 1);
  for (int n = 2; n <= 10; ++n) {
    for (int d = 2; d <= std::min(3, n); ++d) {
      const auto g0 = polynomiality_check(n, d, 0);
      CHECK(g0.report.passed);
      CHECK(g0.constant == make_rational(1, factorial(n + 1 - d)));
    }
  }
}
