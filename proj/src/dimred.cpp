#include "permfact/dimred.hpp"

#include "permfact/closedform.hpp"
#include "permfact/countcore.hpp"
#include "permfact/parallel.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

namespace permfact {

namespace {

constexpr const char* kHeaderPrefix = "#permfact-db v1 n_max=";
constexpr const char* kBuiltPrefix = "#built n=";

using TildeLookup = std::function<Rational(const Partition&, int)>;

Rational reduce_impl(const Partition& gamma, int m, int i, const TildeLookup& lookup) {
  const int n = gamma.size();
  if (gamma.length() < 2) {
    throw std::invalid_argument("reduce_mu: base case (" + gamma.to_string() +
                                ") has a single part; use the two-full-cycle count");
  }
  const int a_i = gamma.multiplicity(i);
  if (a_i == 0) throw std::invalid_argument("reduce_mu: " + std::to_string(i) + " is not a part of (" + gamma.to_string() + ")");
  if (m < 1 || m > n) throw std::out_of_range("reduce_mu: need 1 <= m <= n");

  Rational same_shape = 0;
  for (int l = m + 1; l <= n; ++l) {
    const Rational s = tilde_S(m, 1, l);
    if (s != 0) same_shape += s * lookup(gamma, l);
  }
  const Partition reduced = remove_part(gamma, i);
  Rational smaller = 0;
  for (int l = 1; l <= n - i; ++l) {
    const Rational s = tilde_S(m, i, l);
    if (s != 0) smaller += s * lookup(reduced, l);
  }
  return smaller / Rational(i * a_i) - same_shape;
}

Rational normalize(const Integer& mu_value, int n, int m) {
  return make_rational(mu_value * factorial(m), factorial(n));
}

Integer denormalize(const Rational& tilde, int n, int m, const std::string& context) {
  const Rational value = tilde * make_rational(factorial(n), factorial(m));
  if (!is_integral(value) || value < 0) {
    throw DatabaseValidationError(context + ": recursion gave non-count " + to_decimal(value));
  }
  return value.get_num();
}

std::string key_string(int n, int m, const Partition& gamma) {
  return "(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ", gamma=" + gamma.to_string() + ")";
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

int parse_int_field(const std::string& field, std::size_t line_no) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != field.size()) {
    throw DatabaseFormatError("line " + std::to_string(line_no) + ": bad integer field '" + field + "'");
  }
  return value;
}

}  // namespace

Rational tilde_S(int m, int i, int l) {
  Rational sum = 0;
  for (int j = 1; j <= i; ++j) {
    const int k = m + j - i;
    if (k < 0) continue;
    const Integer s = stirling_second(l, k);
    if (s == 0) continue;
    sum += make_rational(binomial(i, j) * factorial(k) * s, factorial(l));
  }
  return sum;
}

void ReductionTables::set(const Partition& gamma, int m, const Rational& value) { tilde_mu_[{gamma, m}] = value; }

bool ReductionTables::contains(const Partition& gamma, int m) const { return tilde_mu_.count({gamma, m}) > 0; }

const Rational& ReductionTables::get(const Partition& gamma, int m) const {
  auto it = tilde_mu_.find({gamma, m});
  if (it == tilde_mu_.end()) {
    throw std::out_of_range("ReductionTables: no entry for " + key_string(gamma.size(), m, gamma));
  }
  return it->second;
}

void ReductionTables::fill_from_formula(const Partition& gamma) {
  const int n = gamma.size();
  for (int m = 1; m <= n; ++m) set(gamma, m, normalize(mu(gamma, m), n, m));
}

Rational reduce_mu(const Partition& gamma, int m, int i, const ReductionTables& tables) {
  return reduce_impl(gamma, m, i, [&](const Partition& g, int l) { return tables.get(g, l); });
}

Rational reduce_mu(const Partition& gamma, int m, int i) {
  return reduce_impl(gamma, m, i, [](const Partition& g, int l) { return normalize(mu(g, l), g.size(), l); });
}

bool record_less(const CountRecord& a, const CountRecord& b) {
  return std::forward_as_tuple(a.n, a.gamma.length(), a.gamma.part_vector(), a.m) <
         std::forward_as_tuple(b.n, b.gamma.length(), b.gamma.part_vector(), b.m);
}

Database::Database(int n_max, std::vector<CountRecord> records) : n_max_(n_max), records_(std::move(records)) {
  std::sort(records_.begin(), records_.end(), record_less);
  for (const auto& r : records_) {
    if (r.n < 1 || r.n > n_max_) throw DatabaseFormatError("record outside the built range: " + key_string(r.n, r.m, r.gamma));
    if (r.gamma.size() != r.n) throw DatabaseFormatError("gamma is not a partition of n: " + key_string(r.n, r.m, r.gamma));
    if (!index_.emplace(std::make_tuple(r.n, r.m, r.gamma), r.value).second) {
      throw DatabaseFormatError("duplicate record " + key_string(r.n, r.m, r.gamma));
    }
  }
}

Integer Database::lookup(int n, int m, const Partition& gamma) const {
  if (n < 1 || n > n_max_) {
    throw DatabaseRangeError("n=" + std::to_string(n) + " was not built (database covers n <= " +
                             std::to_string(n_max_) + ")");
  }
  if (gamma.size() != n) throw std::invalid_argument("lookup: gamma (" + gamma.to_string() + ") is not a partition of n");
  if (m < 1) throw std::invalid_argument("lookup: m must be positive");
  auto it = index_.find(std::make_tuple(n, m, gamma));
  return it == index_.end() ? Integer(0) : it->second;
}

void Database::write(std::ostream& out) const {
  out << kHeaderPrefix << n_max_ << '\n';
  std::size_t next = 0;
  for (int n = 1; n <= n_max_; ++n) {
    out << kBuiltPrefix << n << '\n';
    for (; next < records_.size() && records_[next].n == n; ++next) {
      const auto& r = records_[next];
      out << r.n << '\t' << r.m << '\t' << r.gamma.to_string() << '\t' << to_decimal(r.value) << '\n';
    }
  }
}

Database Database::read(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw DatabaseFormatError("empty database file");
  ++line_no;
  if (line.rfind(kHeaderPrefix, 0) != 0) throw DatabaseFormatError("missing '#permfact-db v1' header");
  const int n_max = parse_int_field(line.substr(std::string(kHeaderPrefix).size()), line_no);
  std::set<int> built;
  std::vector<CountRecord> records;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.rfind(kBuiltPrefix, 0) == 0) {
      built.insert(parse_int_field(line.substr(std::string(kBuiltPrefix).size()), line_no));
      continue;
    }
    if (line[0] == '#') continue;
    const auto fields = split_tabs(line);
    if (fields.size() != 4) throw DatabaseFormatError("line " + std::to_string(line_no) + ": expected 4 tab-separated fields");
    CountRecord r{parse_int_field(fields[0], line_no), parse_int_field(fields[1], line_no), Partition(), Integer()};
    try {
      r.gamma = Partition::parse(fields[2]);
    } catch (const std::invalid_argument& e) {
      throw DatabaseFormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (r.value.set_str(fields[3], 10) != 0) {
      throw DatabaseFormatError("line " + std::to_string(line_no) + ": bad value '" + fields[3] + "'");
    }
    records.push_back(std::move(r));
  }
  for (int n = 1; n <= n_max; ++n) {
    if (!built.count(n)) throw DatabaseFormatError("missing built marker for n=" + std::to_string(n));
  }
  return Database(n_max, std::move(records));
}

void Database::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write(out);
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

Database Database::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read(in);
}

Database build_database(int n_max) {
  if (n_max < 1) throw std::invalid_argument("build_database: n_max must be positive");
  ReductionTables tables;
  std::vector<CountRecord> records;

  for (int d = 1; d <= n_max; ++d) {
    std::vector<Partition> layer;
    for (int n = d; n <= n_max; ++n) {
      for (auto& gamma : partitions_with_length(n, d)) layer.push_back(std::move(gamma));
    }
    // Each gamma only reads the finished d-1 layer plus its own larger-m
    // entries, so the layer runs in parallel against a frozen table.
    auto results = parallel_map(layer.size(), [&](std::size_t idx) {
      const Partition& gamma = layer[idx];
      const int n = gamma.size();
      std::vector<Rational> own(static_cast<std::size_t>(n + 1));
      std::vector<CountRecord> out;
      const int smallest = gamma.parts().back();
      for (int m = n; m >= 1; --m) {
        const std::string where = key_string(n, m, gamma);
        Integer value;
        if (d == 1) {
          value = zagier_stanley(n, m);
          own[static_cast<std::size_t>(m)] = normalize(value, n, m);
        } else {
          own[static_cast<std::size_t>(m)] = reduce_impl(gamma, m, smallest, [&](const Partition& g, int l) {
            return g == gamma ? own[static_cast<std::size_t>(l)] : tables.get(g, l);
          });
          value = denormalize(own[static_cast<std::size_t>(m)], n, m, where);
        }
        const Integer expected = mu(gamma, m);
        if (value != expected) {
          throw DatabaseValidationError("validation failed at " + where + ": recursion " + to_decimal(value) +
                                        ", explicit formula " + to_decimal(expected));
        }
        if (value != 0) out.push_back(CountRecord{n, m, gamma, value});
      }
      return std::make_pair(std::move(own), std::move(out));
    });
    for (std::size_t idx = 0; idx < layer.size(); ++idx) {
      auto& [own, out] = results[idx];
      for (int m = 1; m <= layer[idx].size(); ++m) tables.set(layer[idx], m, own[static_cast<std::size_t>(m)]);
      for (auto& r : out) records.push_back(std::move(r));
    }
  }
  return Database(n_max, std::move(records));
}

}  // namespace permfact
