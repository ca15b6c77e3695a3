// cascade: verification and counting front end.
//
//   cascade verify --n 1..3
//   cascade count --n 2 --format csv
//   cascade print array --n 3 --coords

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cascade/report.hpp"

namespace {

struct Options {
  std::string n = "1";
  int k = 2;
  std::string format = "text";
  int threads = -1;
  int oracle_cap = 4;
  bool types_only = false;
  bool skip_full_oracle = false;
  bool coords = false;
  std::string out;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--n", o.n, "rank n, or a range A..B")->required();
  cmd->add_option("--k", o.k, "level k (default 2)");
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--threads", o.threads, "worker threads, 0 = auto (env CASCADE_THREADS)");
  cmd->add_option("--oracle-cap", o.oracle_cap, "largest n for the full partition oracle");
  cmd->add_option("--out", o.out, "write the report to PATH instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration of leading terms on the trapezoid of C_n^(1) root vectors"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "run every identity check per n");
  add_common(verify, o);
  verify->add_flag("--skip-full-oracle", o.skip_full_oracle, "skip the exhaustive partition oracle");

  auto* count = app.add_subcommand("count", "tables of N by type, degree and shape");
  add_common(count, o);
  count->add_flag("--types-only", o.types_only, "use the support walk only (no degree/shape tables)");

  auto* print = app.add_subcommand("print", "render structures");
  print->require_subcommand(1);
  auto* array = print->add_subcommand("array", "the three triangles with root labels");
  add_common(array, o);
  array->add_flag("--coords", o.coords, "append trapezoid coordinates to each label");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cascade::kExitUsage;
  }

  cascade::RunConfig config;
  const auto range = cascade::parse_n_range(o.n);
  if (!range) {
    std::cerr << "error: --n must be a positive integer or A..B with 1 <= A <= B, got '" << o.n
              << "'\n";
    return cascade::kExitUsage;
  }
  config.n = *range;
  config.k = o.k;
  config.format = *cascade::parse_format(o.format);
  config.oracle_cap = o.oracle_cap;
  config.types_only = o.types_only;
  config.skip_full_oracle = o.skip_full_oracle;
  config.coords = o.coords;
  if (o.threads >= 0) {
    config.threads = o.threads;
  } else if (const char* env = std::getenv("CASCADE_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0 || v > 4096) {
      std::cerr << "error: CASCADE_THREADS must be a non-negative integer, got '" << env << "'\n";
      return cascade::kExitUsage;
    }
    config.threads = static_cast<int>(v);
  }

  std::ostringstream buffer;
  int code = cascade::kExitUsage;
  try {
    if (verify->parsed()) {
      code = cascade::run_verify(config, buffer, std::cerr);
    } else if (count->parsed()) {
      code = cascade::run_count(config, buffer, std::cerr);
    } else if (array->parsed()) {
      code = cascade::run_print_array(config, buffer, std::cerr);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cascade::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cascade::kExitFailure;
  }

  if (o.out.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream file(o.out, std::ios::binary);
    file << buffer.str();
    if (!file) {
      std::cerr << "error: cannot write " << o.out << '\n';
      return cascade::kExitUsage;
    }
  }
  return code;
}
