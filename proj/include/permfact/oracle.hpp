#pragma once

#include "permfact/countcore.hpp"
#include "permfact/exactnum.hpp"
#include "permfact/partition.hpp"

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace permfact::oracle {

/// Refusal to enumerate a symmetric group beyond the configured guard.
class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr int kMaxPairDegree = 9;    // t = 2
inline constexpr int kMaxTripleDegree = 6;  // t >= 3
inline constexpr int kMaxMuDegree = 9;
inline constexpr int kMaxMapEdges = 6;      // involutions on 2n <= 12 points

/// A permutation of {0..n-1}, stored as its image list.
class Perm {
 public:
  Perm() = default;
  /// Throws std::invalid_argument if `images` is not a bijection.
  explicit Perm(std::vector<int> images);

  static Perm identity(int n);
  /// The n-cycle i -> i+1 mod n, i.e. (1 2 ... n).
  static Perm full_cycle(int n);
  /// Builds a permutation from 1-based disjoint cycles, e.g. {{1,2,3}}.
  static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);
  /// A fixed representative of the class lambda: consecutive runs as cycles.
  static Perm representative(const Partition& lambda);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  Perm inverse() const;
  int cycle_count() const;

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

/// (a o b)(x) = a(b(x)); the right factor acts first. Throws
/// std::invalid_argument on a size mismatch.
Perm compose(const Perm& a, const Perm& b);

Partition cycle_type(const Perm& p);

/// All of S_n grouped by cycle type, in lexicographic order within a class.
std::map<Partition, std::vector<Perm>> permutations_by_class(int n);

/// Counts tuples (s_1..s_t), s_i in C_i, with the product s_1 s_2 ... s_t
/// having m cycles. s_1 is pinned to `first` and the count scaled by |C_1|.
Integer brute_xi(const ClassTuple& classes, int m, const Perm& first);
Integer brute_xi(const ClassTuple& classes, int m);

/// Full cycle-count distribution for the tuple: entry m holds brute_xi(classes, m).
std::vector<Integer> brute_xi_distribution(const ClassTuple& classes);

/// Counts s in C_gamma with s^{-1} (1 2 ... n) having m cycles.
Integer brute_mu(const Partition& gamma, int m);

/// (gamma, m) -> count for every s in S_n, one pass over the group.
std::map<std::pair<Partition, int>, Integer> brute_mu_table(int n);

/// One-face maps with n_edges edges by genus: fixed-point-free involutions s
/// on 2n points with s^{-1} omega having n+1-2g cycles. Index g of the result.
std::vector<Integer> brute_one_face_maps(int n_edges);

}  // namespace permfact::oracle
