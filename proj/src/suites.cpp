#include "permfact/suites.hpp"

#include "permfact/closedform.hpp"
#include "permfact/countcore.hpp"
#include "permfact/dimred.hpp"
#include "permfact/oracle.hpp"
#include "permfact/parallel.hpp"
#include "permfact/symfun.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace permfact {

namespace {

constexpr int kTripleSuiteDegree = 5;
constexpr int kPairSuiteDegree = 7;

std::string eq_line(const std::string& what, const Integer& a, const Integer& b) {
  return what + ": " + to_decimal(a) + (a == b ? " == " : " != ") + to_decimal(b);
}

Partition gamma_one_p(int n, int p) {
  std::vector<int> parts(static_cast<std::size_t>(p), 1);
  parts.push_back(n - p);
  return Partition(std::move(parts));
}

VerificationReport oracle_suite(int n_max) {
  VerificationReport report;
  report.name = "oracle";
  const int pair_max = std::min(n_max, kPairSuiteDegree);
  const int triple_max = std::min(n_max, kTripleSuiteDegree);
  const int mu_max = std::min(n_max, oracle::kMaxMuDegree);
  if (pair_max < n_max || triple_max < n_max || mu_max < n_max) {
    report.lines.push_back("NOTE enumeration clipped: pairs n<=" + std::to_string(pair_max) + ", triples n<=" +
                           std::to_string(triple_max) + ", mu n<=" + std::to_string(mu_max));
  }
  for (int n = 1; n <= pair_max; ++n) {
    for (const auto& alpha : all_partitions(n)) {
      for (const auto& gamma : all_partitions(n)) {
        const ClassTuple classes({alpha, gamma});
        const auto brute = oracle::brute_xi_distribution(classes);
        for (int m = 1; m <= n; ++m) {
          std::ostringstream what;
          what << "xi n=" << n << " (" << alpha << ")(" << gamma << ") m=" << m;
          const Integer formula = xi(classes, m);
          report.record(formula == brute[static_cast<std::size_t>(m)], eq_line(what.str(), formula, brute[static_cast<std::size_t>(m)]));
        }
      }
    }
  }
  for (int n = 1; n <= triple_max; ++n) {
    const auto parts = all_partitions(n);
    for (const auto& a : parts) {
      for (const auto& b : parts) {
        for (const auto& c : parts) {
          const ClassTuple classes({a, b, c});
          const auto brute = oracle::brute_xi_distribution(classes);
          for (int m = 1; m <= n; ++m) {
            std::ostringstream what;
            what << "xi n=" << n << " (" << a << ")(" << b << ")(" << c << ") m=" << m;
            const Integer formula = xi(classes, m);
            report.record(formula == brute[static_cast<std::size_t>(m)], eq_line(what.str(), formula, brute[static_cast<std::size_t>(m)]));
          }
        }
      }
    }
  }
  for (int n = 1; n <= mu_max; ++n) {
    const auto table = oracle::brute_mu_table(n);
    for (const auto& gamma : all_partitions(n)) {
      for (int m = 1; m <= n; ++m) {
        auto it = table.find({gamma, m});
        const Integer brute = it == table.end() ? Integer(0) : it->second;
        std::ostringstream what;
        what << "mu n=" << n << " (" << gamma << ") m=" << m;
        const Integer formula = mu(gamma, m);
        report.record(formula == brute, eq_line(what.str(), formula, brute));
      }
    }
  }
  return report;
}

VerificationReport closedform_suite(int n_max) {
  VerificationReport report;
  report.name = "closedform";
  for (int n = 1; n <= n_max; ++n) {
    for (const auto& gamma : all_partitions(n)) {
      const Integer expected = mu(gamma, n + 1 - gamma.length());
      report.record(mu_genus_zero(gamma) == expected,
                    eq_line("genus-zero (" + gamma.to_string() + ")", mu_genus_zero(gamma), expected));
    }
    for (int m = 1; m <= n; ++m) {
      const std::string nm = " n=" + std::to_string(n) + " m=" + std::to_string(m);
      const Integer zs = zagier_stanley(n, m);
      const Integer full = mu(Partition{n}, m);
      report.record(zs == full, eq_line("zagier-stanley" + nm, zs, full));
      for (int p = 0; p < n; ++p) {
        const Integer closed = mu_one_p(n, p, m);
        const Integer formula = mu(gamma_one_p(n, p), m);
        report.record(closed == formula, eq_line("one-p p=" + std::to_string(p) + nm, closed, formula));
      }
      for (int t = 0; t < n; ++t) {
        for (int p = 1; n - p - t >= 1; ++p) {
          std::vector<int> parts(static_cast<std::size_t>(t), 1);
          parts.push_back(p);
          parts.push_back(n - p - t);
          const Integer closed = mu_t_p(n, t, p, m);
          const Integer formula = mu(Partition(std::move(parts)), m);
          report.record(closed == formula,
                        eq_line("t-p t=" + std::to_string(t) + " p=" + std::to_string(p) + nm, closed, formula));
        }
      }
      for (int p = 1; p <= n - 1; ++p) {
        const Integer closed = mu_two_parts(n, p, m);
        const Integer formula = mu(Partition{p, n - p}, m);
        report.record(closed == formula, eq_line("two-parts p=" + std::to_string(p) + nm, closed, formula));
      }
      if (n >= 3) {
        const Integer closed = mu_hook_boccara(n, m);
        const Integer formula = mu(Partition{n - 1, 1}, m);
        report.record(closed == formula, eq_line("(n-1,1)" + nm, closed, formula));
      }
      for (int p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        const int blocks = n / p;
        const Integer closed = mu_p_power(blocks, p, m);
        const Integer formula = mu(Partition(std::vector<int>(static_cast<std::size_t>(blocks), p)), m);
        report.record(closed == formula, eq_line("p-power p=" + std::to_string(p) + nm, closed, formula));
      }
    }
    for (int p = 1; p <= n; ++p) {
      if (n % p != 0) continue;
      const int blocks = n / p;
      const int extreme = blocks * (p - 1) + 1;
      const Integer formula = mu(Partition(std::vector<int>(static_cast<std::size_t>(blocks), p)), extreme);
      report.record(generalized_catalan(blocks, p) == formula,
                    eq_line("generalized Catalan n=" + std::to_string(blocks) + " p=" + std::to_string(p),
                            generalized_catalan(blocks, p), formula));
    }
  }
  return report;
}

VerificationReport jackson_suite(int n_max) {
  VerificationReport report;
  report.name = "jackson";
  for (int n = 1; n <= n_max; ++n) {
    for (int m = 1; m <= n; ++m) {
      for (int d = 1; d <= n; ++d) {
        const Integer direct = jackson_direct(n, m, d);
        const Integer closed = jackson_closed(n, m, d);
        report.record(direct == closed, eq_line("jackson n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                                    " d=" + std::to_string(d),
                                                direct, closed));
      }
    }
    report.merge(jackson_generating_check(n));
  }
  return report;
}

VerificationReport hz_suite(int n_max) {
  VerificationReport report = hz_series_check(n_max);
  report.name = "hz";
  const int brute_max = std::min(n_max, 5);
  for (int n = 1; n <= brute_max; ++n) {
    const auto brute = oracle::brute_one_face_maps(n);
    for (int g = 0; g <= n / 2; ++g) {
      const Integer formula = one_face_map_count(n, g);
      report.record(formula == brute[static_cast<std::size_t>(g)],
                    eq_line("maps n=" + std::to_string(n) + " g=" + std::to_string(g), formula, brute[static_cast<std::size_t>(g)]));
    }
  }
  return report;
}

VerificationReport dimred_suite(int n_max) {
  VerificationReport report;
  report.name = "dimred";
  for (int n = 2; n <= n_max; ++n) {
    for (const auto& gamma : all_partitions(n)) {
      if (gamma.length() < 2) continue;
      ReductionTables tables;
      tables.fill_from_formula(gamma);
      for (const auto& [part, mult] : gamma.multiplicities()) tables.fill_from_formula(remove_part(gamma, part));
      for (const auto& [part, mult] : gamma.multiplicities()) {
        for (int m = 1; m <= n; ++m) {
          const Rational reduced = reduce_mu(gamma, m, part, tables);
          const Rational& expected = tables.get(gamma, m);
          std::ostringstream line;
          line << "reduce (" << gamma << ") i=" << part << " m=" << m << ": " << to_decimal(reduced)
               << (reduced == expected ? " == " : " != ") << to_decimal(expected);
          report.record(reduced == expected, line.str());
        }
      }
    }
  }
  try {
    const Database db = build_database(n_max);
    report.record(true, "db build n_max=" + std::to_string(n_max) + " records=" + std::to_string(db.records().size()));
  } catch (const DatabaseValidationError& e) {
    report.record(false, std::string("db build: ") + e.what());
  }
  return report;
}

VerificationReport polynomiality_suite(int n_max) {
  VerificationReport report;
  report.name = "polynomiality";
  for (int n = 2; n <= n_max; ++n) {
    for (int d = 2; d <= std::min(3, n); ++d) {
      for (int g = 0; g <= 2; ++g) {
        if (cycles_for_genus(n, d, g) < 1) continue;
        report.merge(polynomiality_check(n, d, g).report);
      }
    }
  }
  return report;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"oracle", "closedform", "schur",  "m1",           "jackson",
                                              "hz",     "dimred",     "polynomiality", "all"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

VerificationReport run_suite(const std::string& name, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  if (name == "oracle") return oracle_suite(n_max);
  if (name == "closedform") return closedform_suite(n_max);
  if (name == "schur") {
    VerificationReport report;
    report.name = "schur";
    for (int n = 1; n <= n_max; ++n) report.merge(verify_schur_identity(n));
    return report;
  }
  if (name == "m1") {
    VerificationReport report;
    report.name = "m1";
    for (int n = 1; n <= n_max; ++n) report.merge(verify_m1_identities(n));
    return report;
  }
  if (name == "jackson") return jackson_suite(n_max);
  if (name == "hz") return hz_suite(n_max);
  if (name == "dimred") return dimred_suite(std::max(n_max, 1));
  if (name == "polynomiality") return polynomiality_suite(n_max);
  if (name == "all") {
    VerificationReport report;
    report.name = "all";
    for (const auto& suite : suite_names()) {
      if (suite != "all") report.merge(run_suite(suite, n_max));
    }
    return report;
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace permfact
