#include "permfact/cli.hpp"

#include "permfact/closedform.hpp"
#include "permfact/countcore.hpp"
#include "permfact/dimred.hpp"
#include "permfact/parallel.hpp"
#include "permfact/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>

namespace permfact {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kTable, kTsv, kJsonl };

// One table of string cells. Numeric columns are right aligned in table mode
// and emitted as JSON numbers only when they fit in a machine int; counts stay
// strings so no precision is lost.
struct Table {
  std::vector<std::string> header;
  std::vector<bool> numeric;
  std::vector<std::vector<std::string>> rows;
  bool scalar = false;  // a single requested value: table mode prints it bare
};

void emit(const Table& table, Format format, std::ostream& out) {
  switch (format) {
    case Format::kTable: {
      if (table.scalar && table.rows.size() == 1) {
        out << table.rows.front().back() << '\n';
        return;
      }
      std::vector<std::size_t> width(table.header.size());
      for (std::size_t c = 0; c < width.size(); ++c) {
        width[c] = table.header[c].size();
        for (const auto& row : table.rows) width[c] = std::max(width[c], row[c].size());
      }
      auto print_row = [&](const std::vector<std::string>& row) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
          if (c) line += "  ";
          const std::string pad(width[c] - row[c].size(), ' ');
          line += table.numeric[c] ? pad + row[c] : row[c] + pad;
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
      };
      print_row(table.header);
      for (const auto& row : table.rows) print_row(row);
      return;
    }
    case Format::kTsv: {
      auto print_row = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "\t" : "") << row[c];
        out << '\n';
      };
      print_row(table.header);
      for (const auto& row : table.rows) print_row(row);
      return;
    }
    case Format::kJsonl: {
      for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t c = 0; c < row.size(); ++c) {
          const bool small_int = table.numeric[c] && table.header[c] != "value" && table.header[c] != "count";
          if (small_int) {
            obj[table.header[c]] = std::stol(row[c]);
          } else {
            obj[table.header[c]] = row[c];
          }
        }
        out << obj.dump() << '\n';
      }
      return;
    }
  }
}

Partition parse_flag(const std::string& text, const std::string& flag) {
  try {
    return Partition::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::string class_list(const std::vector<Partition>& classes) {
  std::string s;
  for (const auto& c : classes) s += "(" + c.to_string() + ")";
  return s;
}

struct Options {
  std::string format = "table";
  unsigned threads = 1;

  std::vector<std::string> classes;
  std::optional<int> m;
  bool all_m = false;

  std::string gamma;
  std::optional<int> genus;
  bool all = false;

  int edges = 0;

  int n_max = 0;
  std::string out_path;
  std::string db_path;

  std::string suite;
};

int cmd_xi(const Options& opt, Format format, std::ostream& out) {
  std::vector<Partition> parts;
  for (const auto& text : opt.classes) parts.push_back(parse_flag(text, "--class"));
  std::optional<ClassTuple> classes;
  try {
    classes.emplace(parts);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const int n = classes->n();
  Table table{{"n", "m", "classes", "value"}, {true, true, false, true}, {}, !opt.all_m};
  if (opt.all_m) {
    for (int m = 1; m <= n; ++m) {
      const Integer v = xi(*classes, m);
      if (v != 0) table.rows.push_back({std::to_string(n), std::to_string(m), class_list(parts), to_decimal(v)});
    }
  } else {
    if (*opt.m < 1 || *opt.m > n) {
      throw UsageError("--m must satisfy 1 <= m <= n = " + std::to_string(n));
    }
    table.rows.push_back({std::to_string(n), std::to_string(*opt.m), class_list(parts), to_decimal(xi(*classes, *opt.m))});
  }
  emit(table, format, out);
  return kExitOk;
}

int cmd_mu(const Options& opt, Format format, std::ostream& out) {
  const Partition gamma = parse_flag(opt.gamma, "--gamma");
  if (gamma.empty()) throw UsageError("--gamma must be a nonempty partition");
  const int n = gamma.size();
  const int d = gamma.length();
  Table table{{"n", "m", "genus", "gamma", "value"}, {true, true, true, false, true}, {}, !opt.all};
  auto row = [&](int m, const Integer& v) {
    const auto g = genus_of(n, d, m);
    table.rows.push_back({std::to_string(n), std::to_string(m), g ? std::to_string(*g) : "-", gamma.to_string(), to_decimal(v)});
  };
  if (opt.all) {
    for (int m = 1; m <= n; ++m) {
      const Integer v = mu(gamma, m);
      if (v != 0) row(m, v);
    }
  } else if (opt.genus) {
    if (*opt.genus < 0) throw UsageError("--genus must be nonnegative");
    const int m = cycles_for_genus(n, d, *opt.genus);
    const Integer v = (m >= 1 && m <= n) ? mu(gamma, m) : Integer(0);
    table.rows.push_back({std::to_string(n), std::to_string(m), std::to_string(*opt.genus), gamma.to_string(), to_decimal(v)});
  } else {
    if (*opt.m < 1) throw UsageError("--m must be positive");
    row(*opt.m, mu(gamma, *opt.m));
  }
  emit(table, format, out);
  return kExitOk;
}

int cmd_maps(const Options& opt, Format format, std::ostream& out) {
  if (opt.edges < 1) throw UsageError("--edges must be positive");
  Table table{{"edges", "genus", "count"}, {true, true, true}, {}, opt.genus.has_value()};
  if (opt.genus) {
    if (*opt.genus < 0 || *opt.genus > opt.edges / 2) {
      throw UsageError("--genus must lie in 0.." + std::to_string(opt.edges / 2));
    }
    table.rows.push_back(
        {std::to_string(opt.edges), std::to_string(*opt.genus), to_decimal(one_face_map_count(opt.edges, *opt.genus))});
  } else {
    for (const auto& r : one_face_map_table(opt.edges)) {
      table.rows.push_back({std::to_string(r.n_edges), std::to_string(r.genus), to_decimal(r.count)});
    }
  }
  emit(table, format, out);
  return kExitOk;
}

int cmd_db_build(const Options& opt, Format format, std::ostream& out, std::ostream& err) {
  if (opt.n_max < 1) throw UsageError("--n-max must be positive");
  Database db;
  try {
    db = build_database(opt.n_max);
  } catch (const DatabaseValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  db.save(opt.out_path);
  Table table{{"records", "n_max", "path"}, {true, true, false}, {}, false};
  table.rows.push_back({std::to_string(db.records().size()), std::to_string(db.n_max()), opt.out_path});
  emit(table, format, out);
  return kExitOk;
}

int cmd_db_lookup(const Options& opt, Format format, std::ostream& out) {
  const Partition gamma = parse_flag(opt.gamma, "--gamma");
  if (gamma.empty()) throw UsageError("--gamma must be a nonempty partition");
  if (*opt.m < 1) throw UsageError("--m must be positive");
  Database db;
  try {
    db = Database::load(opt.db_path);
  } catch (const DatabaseFormatError& e) {
    throw UsageError(opt.db_path + ": " + e.what());
  }
  const int n = gamma.size();
  Integer v;
  try {
    v = db.lookup(n, *opt.m, gamma);
  } catch (const DatabaseRangeError& e) {
    throw UsageError(e.what());
  }
  Table table{{"n", "m", "gamma", "value"}, {true, true, false, true}, {}, true};
  table.rows.push_back({std::to_string(n), std::to_string(*opt.m), gamma.to_string(), to_decimal(v)});
  emit(table, format, out);
  return kExitOk;
}

int cmd_verify(const Options& opt, Format format, std::ostream& out) {
  if (!is_suite(opt.suite)) throw UsageError("unknown suite '" + opt.suite + "'");
  if (opt.n_max < 1) throw UsageError("--n-max must be positive");
  const VerificationReport report = run_suite(opt.suite, opt.n_max);
  Table table{{"status", "case"}, {false, false}, {}, false};
  for (const auto& line : report.lines) {
    const auto space = line.find(' ');
    table.rows.push_back({line.substr(0, space), space == std::string::npos ? "" : line.substr(space + 1)});
  }
  if (format == Format::kTable) {
    for (const auto& line : report.lines) out << line << '\n';
    out << "suite " << opt.suite << ": " << (report.passed ? "PASS" : "FAIL") << " (" << report.cases << " cases)\n";
  } else {
    emit(table, format, out);
  }
  return report.passed ? kExitOk : kExitVerifyFailed;
}

unsigned default_threads() {
  const char* env = std::getenv("PERMFACT_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) return 1;
  return static_cast<unsigned>(v);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of permutation factorizations and one-face maps", "permfact"};
  app.require_subcommand(1);
  Options opt;
  opt.threads = default_threads();
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"table", "tsv", "jsonl"}))
      ->capture_default_str();
  app.add_option("--threads", opt.threads, "Worker threads (default: $PERMFACT_THREADS or 1)")
      ->check(CLI::PositiveNumber);

  auto* xi_cmd = app.add_subcommand("xi", "Tuples from the given classes whose product has m cycles");
  xi_cmd->add_option("--class", opt.classes, "Conjugacy class as a partition, e.g. 2,1 or 1^2,3")->required();
  auto* xi_m = xi_cmd->add_option("--m", opt.m, "Number of cycles of the product");
  auto* xi_all = xi_cmd->add_flag("--all-m", opt.all_m, "Every m with a nonzero count");
  xi_m->excludes(xi_all);
  xi_cmd->require_option(2);

  auto* mu_cmd = app.add_subcommand("mu", "Factorizations of the n-cycle as (type gamma) x (m cycles)");
  mu_cmd->add_option("--gamma", opt.gamma, "Cycle type of the first factor")->required();
  auto* mu_m = mu_cmd->add_option("--m", opt.m, "Cycles of the second factor");
  auto* mu_g = mu_cmd->add_option("--genus", opt.genus, "Genus; converted to m = 1 - 2g + n - len(gamma)");
  auto* mu_all = mu_cmd->add_flag("--all", opt.all, "Every m with a nonzero count");
  mu_m->excludes(mu_g)->excludes(mu_all);
  mu_g->excludes(mu_all);
  mu_cmd->require_option(2);

  auto* maps_cmd = app.add_subcommand("maps", "One-face maps by number of edges and genus");
  maps_cmd->add_option("--edges", opt.edges, "Number of edges")->required();
  maps_cmd->add_option("--genus", opt.genus, "Single genus");

  auto* db_cmd = app.add_subcommand("db", "Build or query the count database");
  db_cmd->require_subcommand(1);
  auto* build_cmd = db_cmd->add_subcommand("build", "Build and validate the database");
  build_cmd->add_option("--n-max", opt.n_max, "Largest n")->required();
  build_cmd->add_option("--out", opt.out_path, "Output file")->required();
  auto* lookup_cmd = db_cmd->add_subcommand("lookup", "Look up one count");
  lookup_cmd->add_option("--db", opt.db_path, "Database file")->required();
  lookup_cmd->add_option("--gamma", opt.gamma, "Cycle type")->required();
  lookup_cmd->add_option("--m", opt.m, "Cycles")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", opt.suite, "oracle|closedform|schur|m1|jackson|hz|dimred|polynomiality|all")
      ->required();
  verify_cmd->add_option("--n-max", opt.n_max, "Largest n")->required();

  std::vector<const char*> argv{"permfact"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == static_cast<int>(CLI::ExitCodes::Success) ? kExitOk : kExitUsage;
  }

  const Format format = opt.format == "tsv" ? Format::kTsv : opt.format == "jsonl" ? Format::kJsonl : Format::kTable;
  const unsigned previous_threads = thread_count();
  set_thread_count(opt.threads);
  int code = kExitOk;
  try {
    if (*xi_cmd) {
      code = cmd_xi(opt, format, out);
    } else if (*mu_cmd) {
      code = cmd_mu(opt, format, out);
    } else if (*maps_cmd) {
      code = cmd_maps(opt, format, out);
    } else if (*build_cmd) {
      code = cmd_db_build(opt, format, out, err);
    } else if (*lookup_cmd) {
      code = cmd_db_lookup(opt, format, out);
    } else if (*verify_cmd) {
      code = cmd_verify(opt, format, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    code = kExitUsage;
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << '\n';
    code = kExitVerifyFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    code = kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    code = kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    code = kExitUsage;
  }
  set_thread_count(previous_threads);
  return code;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace permfact
