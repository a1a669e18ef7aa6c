#include "permfact/oracle.hpp"

#include "permfact/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace permfact::oracle {

namespace {

int count_cycles(const std::vector<int>& images, std::vector<char>& seen) {
  const std::size_t n = images.size();
  seen.assign(n, 0);
  int cycles = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images[j])) seen[j] = 1;
  }
  return cycles;
}

Partition cycle_type_of(const std::vector<int>& images, std::vector<char>& seen) {
  const std::size_t n = images.size();
  seen.assign(n, 0);
  std::vector<int> lengths;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images[j])) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

// Calls fn(images) for every permutation of {0..n-1} whose image of 0 is
// `first`, in lexicographic order.
template <typename Fn>
void for_each_perm_starting_with(int n, int first, Fn&& fn) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::rotate(images.begin(), images.begin() + first, images.begin() + first + 1);
  do {
    fn(images);
  } while (std::next_permutation(images.begin() + 1, images.end()));
}

void require_degree(int n, int limit, const std::string& what) {
  if (n > limit) {
    throw GuardError(what + ": n=" + std::to_string(n) + " exceeds the enumeration guard " +
                     std::to_string(limit));
  }
}

void pair_up(std::vector<int>& involution, int remaining, const std::vector<int>& omega,
             std::vector<Integer>& by_genus, int n_edges, std::vector<int>& scratch,
             std::vector<char>& seen) {
  const int size = static_cast<int>(involution.size());
  if (remaining == 0) {
    // s^{-1} = s for an involution
    for (int x = 0; x < size; ++x) scratch[static_cast<std::size_t>(x)] = involution[static_cast<std::size_t>(omega[static_cast<std::size_t>(x)])];
    const int cycles = count_cycles(scratch, seen);
    by_genus[static_cast<std::size_t>((n_edges + 1 - cycles) / 2)] += 1;
    return;
  }
  int a = 0;
  while (involution[static_cast<std::size_t>(a)] >= 0) ++a;
  for (int b = a + 1; b < size; ++b) {
    if (involution[static_cast<std::size_t>(b)] >= 0) continue;
    involution[static_cast<std::size_t>(a)] = b;
    involution[static_cast<std::size_t>(b)] = a;
    pair_up(involution, remaining - 2, omega, by_genus, n_edges, scratch, seen);
    involution[static_cast<std::size_t>(a)] = -1;
    involution[static_cast<std::size_t>(b)] = -1;
  }
}

}  // namespace

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || hit[static_cast<std::size_t>(x)]) {
      throw std::invalid_argument("Perm: image list is not a bijection");
    }
    hit[static_cast<std::size_t>(x)] = 1;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Perm(std::move(images));
}

Perm Perm::full_cycle(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = (i + 1) % n;
  return Perm(std::move(images));
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const int from = cycle[k] - 1;
      const int to = cycle[(k + 1) % cycle.size()] - 1;
      if (from < 0 || from >= n || to < 0 || to >= n) throw std::invalid_argument("Perm::from_cycles: point out of range");
      images[static_cast<std::size_t>(from)] = to;
    }
  }
  return Perm(std::move(images));
}

Perm Perm::representative(const Partition& lambda) {
  std::vector<int> images;
  int start = 0;
  for (int part : lambda.parts()) {
    for (int k = 0; k < part; ++k) images.push_back(start + (k + 1) % part);
    start += part;
  }
  return Perm(std::move(images));
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Perm(std::move(inv));
}

int Perm::cycle_count() const {
  std::vector<char> seen;
  return count_cycles(images_, seen);
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose: permutations of different degree");
  std::vector<int> images(static_cast<std::size_t>(a.size()));
  for (int x = 0; x < a.size(); ++x) images[static_cast<std::size_t>(x)] = a(b(x));
  return Perm(std::move(images));
}

Partition cycle_type(const Perm& p) {
  std::vector<char> seen;
  return cycle_type_of(p.images(), seen);
}

std::map<Partition, std::vector<Perm>> permutations_by_class(int n) {
  std::map<Partition, std::vector<Perm>> classes;
  std::vector<char> seen;
  for (int first = 0; first < std::max(n, 1); ++first) {
    if (n == 0) {
      classes[Partition()].push_back(Perm());
      break;
    }
    for_each_perm_starting_with(n, first, [&](const std::vector<int>& images) {
      classes[cycle_type_of(images, seen)].emplace_back(images);
    });
  }
  return classes;
}

std::vector<Integer> brute_xi_distribution(const ClassTuple& classes) {
  const int n = classes.n();
  const auto& list = classes.classes();
  require_degree(n, list.size() <= 2 ? kMaxPairDegree : kMaxTripleDegree, "brute_xi");
  const Perm first = Perm::representative(list.front());
  std::vector<Integer> counts(static_cast<std::size_t>(n + 1));

  if (list.size() == 1) {
    counts[static_cast<std::size_t>(first.cycle_count())] = 1;
  } else if (list.size() == 2) {
    // Stream S_n in slices by the image of 0 so the group is never stored.
    const Partition& target = list[1];
    auto slices = parallel_map(static_cast<std::size_t>(n), [&](std::size_t slice) {
      std::vector<long long> local(static_cast<std::size_t>(n + 1), 0);
      std::vector<char> seen;
      std::vector<int> product(static_cast<std::size_t>(n));
      for_each_perm_starting_with(n, static_cast<int>(slice), [&](const std::vector<int>& images) {
        if (cycle_type_of(images, seen) != target) return;
        for (int x = 0; x < n; ++x) product[static_cast<std::size_t>(x)] = first(images[static_cast<std::size_t>(x)]);
        ++local[static_cast<std::size_t>(count_cycles(product, seen))];
      });
      return local;
    });
    for (const auto& local : slices) {
      for (std::size_t m = 0; m < local.size(); ++m) counts[m] += static_cast<long>(local[m]);
    }
  } else {
    const auto group = permutations_by_class(n);
    std::vector<const std::vector<Perm>*> members;
    for (std::size_t i = 1; i < list.size(); ++i) members.push_back(&group.at(list[i]));
    std::vector<char> seen;
    // Depth-first over the product s_1 s_2 ... s_t, accumulated left to right.
    auto descend = [&](auto&& self, std::size_t level, const Perm& prefix) -> void {
      if (level == members.size()) {
        counts[static_cast<std::size_t>(prefix.cycle_count())] += 1;
        return;
      }
      for (const auto& p : *members[level]) self(self, level + 1, compose(prefix, p));
    };
    descend(descend, 0, first);
  }
  const Integer scale = class_size(list.front());
  for (auto& c : counts) c *= scale;
  return counts;
}

Integer brute_xi(const ClassTuple& classes, int m) {
  if (m < 0 || m > classes.n()) return Integer(0);
  return brute_xi_distribution(classes)[static_cast<std::size_t>(m)];
}

Integer brute_xi(const ClassTuple& classes, int m, const Perm& first) {
  const int n = classes.n();
  const auto& list = classes.classes();
  require_degree(n, list.size() <= 2 ? kMaxPairDegree : kMaxTripleDegree, "brute_xi");
  if (first.size() != n || cycle_type(first) != list.front()) {
    throw std::invalid_argument("brute_xi: pinned permutation is not in the first class");
  }
  const auto group = permutations_by_class(n);
  Integer count = 0;
  auto descend = [&](auto&& self, std::size_t level, const Perm& prefix) -> void {
    if (level == list.size()) {
      if (prefix.cycle_count() == m) count += 1;
      return;
    }
    for (const auto& p : group.at(list[level])) self(self, level + 1, compose(prefix, p));
  };
  descend(descend, 1, first);
  return count * class_size(list.front());
}

Integer brute_mu(const Partition& gamma, int m) {
  const int n = gamma.size();
  require_degree(n, kMaxMuDegree, "brute_mu");
  if (n < 1) throw std::invalid_argument("brute_mu: gamma must be nonempty");
  const std::vector<int> omega = Perm::full_cycle(n).images();
  long long count = 0;
  std::vector<char> seen;
  std::vector<int> inverse(static_cast<std::size_t>(n));
  std::vector<int> pi(static_cast<std::size_t>(n));
  for (int first = 0; first < n; ++first) {
    for_each_perm_starting_with(n, first, [&](const std::vector<int>& images) {
      if (cycle_type_of(images, seen) != gamma) return;
      for (int x = 0; x < n; ++x) inverse[static_cast<std::size_t>(images[static_cast<std::size_t>(x)])] = x;
      for (int x = 0; x < n; ++x) pi[static_cast<std::size_t>(x)] = inverse[static_cast<std::size_t>(omega[static_cast<std::size_t>(x)])];
      if (count_cycles(pi, seen) == m) ++count;
    });
  }
  return Integer(static_cast<long>(count));
}

std::map<std::pair<Partition, int>, Integer> brute_mu_table(int n) {
  require_degree(n, kMaxMuDegree, "brute_mu_table");
  if (n < 1) throw std::invalid_argument("brute_mu_table: n must be positive");
  const std::vector<int> omega = Perm::full_cycle(n).images();
  using Tally = std::map<std::pair<Partition, int>, long long>;
  auto slices = parallel_map(static_cast<std::size_t>(n), [&](std::size_t slice) {
    Tally local;
    std::vector<char> seen;
    std::vector<int> inverse(static_cast<std::size_t>(n));
    std::vector<int> pi(static_cast<std::size_t>(n));
    for_each_perm_starting_with(n, static_cast<int>(slice), [&](const std::vector<int>& images) {
      for (int x = 0; x < n; ++x) inverse[static_cast<std::size_t>(images[static_cast<std::size_t>(x)])] = x;
      for (int x = 0; x < n; ++x) pi[static_cast<std::size_t>(x)] = inverse[static_cast<std::size_t>(omega[static_cast<std::size_t>(x)])];
      const int cycles = count_cycles(pi, seen);
      ++local[{cycle_type_of(images, seen), cycles}];
    });
    return local;
  });
  std::map<std::pair<Partition, int>, Integer> table;
  for (const auto& local : slices) {
    for (const auto& [key, value] : local) table[key] += static_cast<long>(value);
  }
  return table;
}

std::vector<Integer> brute_one_face_maps(int n_edges) {
  require_degree(n_edges, kMaxMapEdges, "brute_one_face_maps");
  if (n_edges < 1) throw std::invalid_argument("brute_one_face_maps: need at least one edge");
  const int size = 2 * n_edges;
  std::vector<int> involution(static_cast<std::size_t>(size), -1);
  std::vector<Integer> by_genus(static_cast<std::size_t>(n_edges / 2 + 1));
  std::vector<int> scratch(static_cast<std::size_t>(size));
  std::vector<char> seen;
  pair_up(involution, size, Perm::full_cycle(size).images(), by_genus, n_edges, scratch, seen);
  return by_genus;
}

}  // namespace permfact::oracle
