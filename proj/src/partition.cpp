#include "permfact/partition.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

namespace permfact {

namespace {

std::string_view trim(std::string_view s) {
  const auto not_space = [](char c) { return c != ' ' && c != '\t' && c != '\n' && c != '\r'; };
  while (!s.empty() && !not_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && !not_space(s.back())) s.remove_suffix(1);
  return s;
}

int parse_positive(std::string_view digits, std::string_view token) {
  if (digits.empty()) throw ParseError("malformed partition token '" + std::string(token) + "'");
  long value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ParseError("malformed partition token '" + std::string(token) + "'");
  }
  if (value <= 0) {
    throw ParseError("nonpositive value in partition token '" + std::string(token) + "'");
  }
  if (value > 1'000'000) {
    throw ParseError("value too large in partition token '" + std::string(token) + "'");
  }
  return static_cast<int>(value);
}

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out,
              int want_length) {
  if (remaining == 0) {
    if (want_length < 0 || static_cast<int>(prefix.size()) == want_length) out.emplace_back(prefix);
    return;
  }
  if (want_length >= 0) {
    const int slots = want_length - static_cast<int>(prefix.size());
    if (slots <= 0 || remaining > slots * max_part || remaining < slots) return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    generate(remaining - p, p, prefix, out, want_length);
    prefix.pop_back();
  }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
    n_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "()") return Partition();
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    const std::string_view token = trim(text.substr(start, end - start));
    if (token.empty()) throw ParseError("empty token in partition '" + std::string(text) + "'");
    const std::size_t caret = token.find('^');
    if (caret == std::string_view::npos) {
      parts.push_back(parse_positive(token, token));
    } else {
      const int base = parse_positive(trim(token.substr(0, caret)), token);
      const int exponent = parse_positive(trim(token.substr(caret + 1)), token);
      parts.insert(parts.end(), exponent, base);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int p : parts_) ++m[p];
  return m;
}

Partition Partition::conjugate() const {
  std::vector<int> conj;
  for (int j = 0; j < largest(); ++j) {
    int count = 0;
    for (int p : parts_) count += (p > j) ? 1 : 0;
    conj.push_back(count);
  }
  return Partition(std::move(conj));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "()";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

std::vector<Partition> all_partitions(int n) {
  if (n < 0) throw std::invalid_argument("all_partitions: n < 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(n, n, prefix, out, -1);
  return out;
}

std::vector<Partition> partitions_with_length(int n, int d) {
  if (n < 0 || d < 0) throw std::invalid_argument("partitions_with_length: negative argument");
  std::vector<Partition> out;
  if (d == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<int> prefix;
  generate(n, n, prefix, out, d);
  return out;
}

Integer z_lambda(const Partition& lambda) {
  Integer z = 1;
  for (auto [part, mult] : lambda.multiplicities()) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(mult));
    z *= power * factorial(mult);
  }
  return z;
}

Integer class_size(const Partition& lambda) {
  Integer q = factorial(lambda.size());
  mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), z_lambda(lambda).get_mpz_t());
  return q;
}

Integer aut_lambda(const Partition& lambda) {
  Integer a = 1;
  for (auto [part, mult] : lambda.multiplicities()) a *= factorial(mult);
  return a;
}

Partition remove_part(const Partition& gamma, int i) {
  std::vector<int> parts = gamma.part_vector();
  auto it = std::find(parts.begin(), parts.end(), i);
  if (it == parts.end()) {
    throw std::invalid_argument(std::to_string(i) + " is not a part of (" + gamma.to_string() + ")");
  }
  parts.erase(it);
  return Partition(std::move(parts));
}

Partition add_part(const Partition& gamma, int i) {
  std::vector<int> parts = gamma.part_vector();
  parts.push_back(i);
  return Partition(std::move(parts));
}

Partition hook_shape(int n, int j) {
  if (n < 1 || j < 0 || j >= n) throw std::invalid_argument("hook_shape: need 0 <= j < n");
  std::vector<int> parts(static_cast<std::size_t>(j), 1);
  parts.push_back(n - j);
  return Partition(std::move(parts));
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (int part : p.parts()) {
    h ^= static_cast<std::size_t>(part) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace permfact
