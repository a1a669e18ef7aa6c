#pragma once

#include "permfact/exactnum.hpp"
#include "permfact/partition.hpp"

#include <cstddef>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

namespace permfact {

/// A cell (row, col) of a Young diagram, 1-based, with content col - row and
/// its hook length.
struct DiagramCell {
  int row;
  int col;
  int content;
  int hook;

  friend bool operator==(const DiagramCell&, const DiagramCell&) = default;
};

/// Cells listed row by row, left to right. Empty for the empty partition.
std::vector<DiagramCell> diagram(const Partition& lambda);

/// f^lambda = n! / prod h(u).
Integer dimension(const Partition& lambda);

/// Memo of chi^lambda(mu). Lookups take a shared lock; inserts are idempotent
/// because values are deterministic, so racing writers are harmless.
class CharacterCache {
 public:
  std::optional<Integer> find(const Partition& lambda, const Partition& mu) const;
  void insert(const Partition& lambda, const Partition& mu, const Integer& value);
  std::size_t size() const;
  void clear();

  static CharacterCache& global();

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<Partition, Partition>& key) const noexcept {
      PartitionHash h;
      return h(key.first) * 1000003u ^ h(key.second);
    }
  };
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::pair<Partition, Partition>, Integer, KeyHash> values_;
};

/// Irreducible character chi^lambda evaluated on the class mu, by the
/// Murnaghan-Nakayama rule (largest class part stripped first). Throws
/// std::invalid_argument when |lambda| != |mu|.
Integer character(const Partition& lambda, const Partition& mu);

/// Coefficients c_0..c_{n-1} of (1+y)^{-1} prod_i (1 - (-y)^i)^{a_i}, where
/// c_j = chi^{[1^j, n-j]}(alpha).
std::vector<Integer> hook_character_poly(const Partition& alpha);

/// prod_{u in lambda} (m + c(u)) / h(u).
Rational frak_m(const Partition& lambda, long m);

/// sum_{d=0}^{m} (-1)^d C(m,d) frak_m(lambda, m-d).
Rational frak_c(const Partition& lambda, long m);

}  // namespace permfact
