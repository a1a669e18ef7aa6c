#include "permfact/charkit.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace permfact {

namespace {

// Beta-set (first-column hook lengths) of lambda padded to `len` rows.
std::vector<int> beta_set(const Partition& lambda, int len) {
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    const int part = i < lambda.length() ? lambda[static_cast<std::size_t>(i)] : 0;
    beta[static_cast<std::size_t>(i)] = part + (len - 1 - i);
  }
  return beta;
}

Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    const int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

Integer mn_recursive(const Partition& lambda, const Partition& mu, CharacterCache& cache) {
  if (mu.empty()) return Integer(lambda.empty() ? 1 : 0);
  if (auto hit = cache.find(lambda, mu)) return *hit;

  // Removing a border strip of length r moves one bead of the beta-set from b
  // to b - r; the sign is (-1)^(leg length) = (-1)^(beads strictly between).
  const int r = mu[0];
  const Partition rest = remove_part(mu, r);
  const std::vector<int> beta = beta_set(lambda, lambda.length());
  Integer total = 0;
  for (std::size_t idx = 0; idx < beta.size(); ++idx) {
    const int from = beta[idx];
    const int to = from - r;
    if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
    int between = 0;
    for (int b : beta) between += (b > to && b < from) ? 1 : 0;
    std::vector<int> moved = beta;
    moved[idx] = to;
    const Integer sub = mn_recursive(from_beta_set(std::move(moved)), rest, cache);
    if (between % 2 == 0) {
      total += sub;
    } else {
      total -= sub;
    }
  }
  cache.insert(lambda, mu, total);
  return total;
}

}  // namespace

std::vector<DiagramCell> diagram(const Partition& lambda) {
  std::vector<DiagramCell> cells;
  const Partition conj = lambda.conjugate();
  for (int i = 0; i < lambda.length(); ++i) {
    const int row_len = lambda[static_cast<std::size_t>(i)];
    for (int j = 0; j < row_len; ++j) {
      const int arm = row_len - j - 1;
      const int leg = conj[static_cast<std::size_t>(j)] - i - 1;
      cells.push_back(DiagramCell{i + 1, j + 1, j - i, arm + leg + 1});
    }
  }
  return cells;
}

Integer dimension(const Partition& lambda) {
  Integer hooks = 1;
  for (const auto& cell : diagram(lambda)) hooks *= cell.hook;
  Integer f = factorial(lambda.size());
  mpz_divexact(f.get_mpz_t(), f.get_mpz_t(), hooks.get_mpz_t());
  return f;
}

std::optional<Integer> CharacterCache::find(const Partition& lambda, const Partition& mu) const {
  std::shared_lock lock(mutex_);
  auto it = values_.find({lambda, mu});
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void CharacterCache::insert(const Partition& lambda, const Partition& mu, const Integer& value) {
  std::unique_lock lock(mutex_);
  values_.try_emplace({lambda, mu}, value);
}

std::size_t CharacterCache::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

void CharacterCache::clear() {
  std::unique_lock lock(mutex_);
  values_.clear();
}

CharacterCache& CharacterCache::global() {
  static CharacterCache cache;
  return cache;
}

Integer character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw std::invalid_argument("character: |" + lambda.to_string() + "| != |" + mu.to_string() + "|");
  }
  return mn_recursive(lambda, mu, CharacterCache::global());
}

std::vector<Integer> hook_character_poly(const Partition& alpha) {
  const int n = alpha.size();
  if (n < 1) throw std::invalid_argument("hook_character_poly: empty partition");
  std::vector<Integer> num{Integer(1)};
  for (int part : alpha.parts()) {
    // multiply by 1 - (-y)^part
    std::vector<Integer> next(num.size() + static_cast<std::size_t>(part));
    for (std::size_t k = 0; k < num.size(); ++k) {
      next[k] += num[k];
      next[k + static_cast<std::size_t>(part)] -= sign_power(part) * num[k];
    }
    num = std::move(next);
  }
  // Synthetic division by 1 + y; the remainder vanishes since alpha has a part.
  std::vector<Integer> quotient(num.size() - 1);
  Integer carry = 0;
  for (std::size_t j = 0; j + 1 < num.size(); ++j) {
    quotient[j] = num[j] - carry;
    carry = quotient[j];
  }
  if (num.back() - carry != 0) throw std::logic_error("hook_character_poly: inexact division");
  return quotient;
}

Rational frak_m(const Partition& lambda, long m) {
  Rational product = 1;
  for (const auto& cell : diagram(lambda)) {
    const long numerator = m + cell.content;
    if (numerator == 0) return Rational(0);
    product *= make_rational(numerator, cell.hook);
  }
  return product;
}

Rational frak_c(const Partition& lambda, long m) {
  if (m < 0) throw std::invalid_argument("frak_c: m < 0");
  Rational sum = 0;
  for (long d = 0; d <= m; ++d) {
    const Rational term = Rational(binomial(m, d)) * frak_m(lambda, m - d);
    if (d % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

}  // namespace permfact
