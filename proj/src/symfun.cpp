#include "permfact/symfun.hpp"

#include "permfact/charkit.hpp"
#include "permfact/countcore.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace permfact {

namespace {

std::string describe_first_difference(const SparsePolynomial& a, const SparsePolynomial& b) {
  const SparsePolynomial diff = a - b;
  if (diff.is_zero()) return "equal";
  const auto& [exponent, c] = *diff.terms().begin();
  std::ostringstream os;
  os << "monomial [";
  for (std::size_t i = 0; i < exponent.size(); ++i) os << (i ? "," : "") << exponent[i];
  os << "] differs by " << to_decimal(c);
  return os.str();
}

// x-alphabet in variables [0, k), y-alphabet in [k, 2k).
SparsePolynomial xy_product(const SparsePolynomial& fx, const SparsePolynomial& gy, int k) {
  return fx.embed(0, 2 * k) * gy.embed(k, 2 * k);
}

}  // namespace

SparsePolynomial SparsePolynomial::constant(int variables, const Rational& c) {
  SparsePolynomial p(variables);
  p.add_term(Exponent(static_cast<std::size_t>(variables), 0), c);
  return p;
}

SparsePolynomial SparsePolynomial::variable(int variables, int index) {
  if (index < 0 || index >= variables) throw std::out_of_range("SparsePolynomial::variable: bad index");
  SparsePolynomial p(variables);
  Exponent e(static_cast<std::size_t>(variables), 0);
  e[static_cast<std::size_t>(index)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

Rational SparsePolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePolynomial::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != variables_) throw std::invalid_argument("SparsePolynomial: exponent arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void SparsePolynomial::check_same_arity(const SparsePolynomial& other) const {
  if (other.variables_ != variables_) throw std::invalid_argument("SparsePolynomial: variable count mismatch");
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  check_same_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
  check_same_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  a.check_same_arity(b);
  SparsePolynomial out(a.variables_);
  SparsePolynomial::Exponent e(static_cast<std::size_t>(a.variables_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

SparsePolynomial SparsePolynomial::embed(int offset, int total) const {
  if (offset < 0 || offset + variables_ > total) throw std::invalid_argument("SparsePolynomial::embed: does not fit");
  SparsePolynomial out(total);
  for (const auto& [e, c] : terms_) {
    Exponent wide(static_cast<std::size_t>(total), 0);
    std::copy(e.begin(), e.end(), wide.begin() + offset);
    out.terms_.emplace(std::move(wide), c);
  }
  return out;
}

SparsePolynomial SparsePolynomial::swap_variables(int i, int j) const {
  if (i < 0 || j < 0 || i >= variables_ || j >= variables_) throw std::out_of_range("swap_variables: bad index");
  SparsePolynomial out(variables_);
  for (const auto& [e, c] : terms_) {
    Exponent swapped = e;
    std::swap(swapped[static_cast<std::size_t>(i)], swapped[static_cast<std::size_t>(j)]);
    out.terms_.emplace(std::move(swapped), c);
  }
  return out;
}

std::string SparsePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << to_decimal(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << "*x" << (i + 1);
      if (e[i] > 1) os << '^' << e[i];
    }
  }
  return os.str();
}

SparsePolynomial power_sum(const Partition& lambda, int k) {
  if (k < 1) throw std::invalid_argument("power_sum: need at least one variable");
  SparsePolynomial result = SparsePolynomial::constant(k, Rational(1));
  for (int part : lambda.parts()) {
    SparsePolynomial factor(k);
    for (int i = 0; i < k; ++i) {
      SparsePolynomial::Exponent e(static_cast<std::size_t>(k), 0);
      e[static_cast<std::size_t>(i)] = part;
      factor.add_term(e, Rational(1));
    }
    result = result * factor;
  }
  return result;
}

SparsePolynomial schur(const Partition& lambda, int k) {
  if (k < 1) throw std::invalid_argument("schur: need at least one variable");
  const int n = lambda.size();
  SparsePolynomial result(k);
  for (const auto& alpha : all_partitions(n)) {
    const Integer chi = character(lambda, alpha);
    if (chi == 0) continue;
    result += power_sum(alpha, k) * Rational(chi * class_size(alpha));
  }
  result *= make_rational(1, factorial(n));
  return result;
}

SparsePolynomial monomial_sym(const Partition& lambda, int k) {
  if (k < 1) throw std::invalid_argument("monomial_sym: need at least one variable");
  SparsePolynomial result(k);
  if (lambda.length() > k) return result;
  std::vector<int> exponent(static_cast<std::size_t>(k), 0);
  std::copy(lambda.parts().begin(), lambda.parts().end(), exponent.begin());
  std::sort(exponent.begin(), exponent.end());
  do {
    result.add_term(exponent, Rational(1));
  } while (std::next_permutation(exponent.begin(), exponent.end()));
  return result;
}

VerificationReport verify_schur_identity(int n) {
  if (n < 1) throw std::invalid_argument("verify_schur_identity: n must be positive");
  VerificationReport report;
  report.name = "schur identity n=" + std::to_string(n);
  const int k = n;
  const auto parts = all_partitions(n);
  const Rational inv_square = make_rational(1, factorial(n) * factorial(n));

  std::vector<SparsePolynomial> p_x, p_y;
  for (const auto& alpha : parts) {
    p_x.push_back(power_sum(alpha, k));
    p_y.push_back(p_x.back());
  }
  // coefficient table xi[m][alpha][gamma]
  std::vector<std::vector<std::vector<Integer>>> counts(static_cast<std::size_t>(n + 1));
  for (int m = 1; m <= n; ++m) {
    counts[static_cast<std::size_t>(m)].assign(parts.size(), std::vector<Integer>(parts.size()));
    for (std::size_t a = 0; a < parts.size(); ++a) {
      for (std::size_t g = 0; g < parts.size(); ++g) {
        counts[static_cast<std::size_t>(m)][a][g] = xi(ClassTuple({parts[a], parts[g]}), m);
      }
    }
  }
  std::vector<SparsePolynomial> schur_pairs;
  for (const auto& lambda : parts) {
    const SparsePolynomial s = schur(lambda, k);
    schur_pairs.push_back(xy_product(s, s, k) * make_rational(1, dimension(lambda)));
  }

  for (int z = 0; z <= n; ++z) {
    SparsePolynomial lhs(2 * k);
    for (std::size_t a = 0; a < parts.size(); ++a) {
      for (std::size_t g = 0; g < parts.size(); ++g) {
        Integer weighted = 0;
        Integer z_power = z;
        for (int m = 1; m <= n; ++m, z_power *= z) weighted += counts[static_cast<std::size_t>(m)][a][g] * z_power;
        if (weighted == 0) continue;
        lhs += xy_product(p_x[a], p_y[g], k) * (Rational(weighted) * inv_square);
      }
    }
    SparsePolynomial rhs(2 * k);
    for (std::size_t l = 0; l < parts.size(); ++l) {
      const Rational weight = frak_m(parts[l], z);
      if (weight == 0) continue;
      rhs += schur_pairs[l] * weight;
    }
    std::ostringstream line;
    line << "n=" << n << " z=" << z << " terms=" << lhs.terms().size() << ": " << describe_first_difference(lhs, rhs);
    report.record(lhs == rhs, line.str());
  }
  return report;
}

VerificationReport verify_m1_identities(int n) {
  if (n < 1) throw std::invalid_argument("verify_m1_identities: n must be positive");
  VerificationReport report;
  report.name = "m=1 identities n=" + std::to_string(n);
  const int k = n;
  const auto parts = all_partitions(n);
  const Rational inv_square = make_rational(1, factorial(n) * factorial(n));

  SparsePolynomial direct(2 * k);
  for (const auto& alpha : parts) {
    const SparsePolynomial pa = power_sum(alpha, k);
    for (const auto& gamma : parts) {
      const Integer count = xi(ClassTuple({alpha, gamma}), 1);
      if (count == 0) continue;
      direct += xy_product(pa, power_sum(gamma, k), k) * (Rational(count) * inv_square);
    }
  }

  SparsePolynomial via_schur(2 * k);
  for (const auto& lambda : parts) {
    Rational weight = 0;
    for (int j = 0; j < n; ++j) {
      const Rational term = frak_c(lambda, j + 1) / Rational(j + 1);
      if (j % 2 == 0) {
        weight += term;
      } else {
        weight -= term;
      }
    }
    if (weight == 0) continue;
    const SparsePolynomial s = schur(lambda, k);
    via_schur += xy_product(s, s, k) * (weight / Rational(dimension(lambda)));
  }

  SparsePolynomial via_monomials(2 * k);
  for (const auto& lambda : parts) {
    for (const auto& nu : parts) {
      const int rest = n + 1 - lambda.length() - nu.length();
      if (rest < 0) continue;
      const Rational weight = make_rational(factorial(n - lambda.length()) * factorial(n - nu.length()),
                                            factorial(n) * factorial(rest));
      via_monomials += xy_product(monomial_sym(lambda, k), monomial_sym(nu, k), k) * weight;
    }
  }

  report.record(direct == via_schur, "n=" + std::to_string(n) + " direct vs schur-sum: " +
                                         describe_first_difference(direct, via_schur));
  report.record(direct == via_monomials, "n=" + std::to_string(n) + " direct vs monomial-sum: " +
                                             describe_first_difference(direct, via_monomials));
  report.record(via_schur == via_monomials, "n=" + std::to_string(n) + " schur-sum vs monomial-sum: " +
                                                describe_first_difference(via_schur, via_monomials));
  return report;
}

}  // namespace permfact
