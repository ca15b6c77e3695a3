#include "cascade/report.hpp"

#include <charconv>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "cascade/closed_forms.hpp"

namespace cascade {

using json = nlohmann::ordered_json;

std::optional<Format> parse_format(std::string_view text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "text") return Format::Text;
  return std::nullopt;
}

namespace {

std::optional<int> parse_int(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

}  // namespace

std::optional<NRange> parse_n_range(std::string_view text) {
  NRange range;
  if (const auto sep = text.find(".."); sep != std::string_view::npos) {
    const auto lo = parse_int(text.substr(0, sep));
    const auto hi = parse_int(text.substr(sep + 2));
    if (!lo || !hi) return std::nullopt;
    range = {*lo, *hi};
  } else {
    const auto n = parse_int(text);
    if (!n) return std::nullopt;
    range = {*n, *n};
  }
  if (range.lo < 1 || range.hi < range.lo) return std::nullopt;
  return range;
}

bool RankVerification::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

bool VerifyReport::pass() const {
  for (const auto& r : ranks) {
    if (!r.pass()) return false;
  }
  return true;
}

namespace {

class Checks {
 public:
  explicit Checks(std::vector<CheckResult>& out) : out_(out) {}

  void equal(std::string check, std::string type, ExactInt expected, ExactInt got) {
    out_.push_back({std::move(check), std::move(type), expected.to_string(), got.to_string(),
                    expected == got});
  }

  // Runs `compute` (returning {expected, got}) and records a failure if it throws.
  template <typename Compute>
  void guarded(std::string check, std::string type, Compute&& compute) {
    try {
      const auto [expected, got] = compute();
      equal(std::move(check), std::move(type), expected, got);
    } catch (const std::exception& e) {
      out_.push_back({std::move(check), std::move(type), "", std::string("error: ") + e.what(),
                      false});
    }
  }

 private:
  std::vector<CheckResult>& out_;
};

Count lookup(const std::map<SupportType, Count>& m, const SupportType& t) {
  const auto it = m.find(t);
  return it == m.end() ? 0 : it->second;
}

std::vector<int> weight(int n, std::initializer_list<int> leading) {
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  std::size_t i = 0;
  for (int v : leading) {
    if (i < w.size()) w[i++] = v;
  }
  return w;
}

RankVerification verify_rank(const Rank& rank, const RunConfig& config) {
  RankVerification result;
  result.n = rank.n;
  Checks checks(result.checks);
  const auto types = types_for_level(rank.k);
  const bool level2 = rank.k == 2;

  const auto walk = count_supports(Region::trapezoid(rank), rank.k + 2, config.threads);
  const auto flipped = count_supports(Region::flipped_trapezoid(rank), rank.k + 2, config.threads);

  ExactInt walk_total{0};
  for (const auto& t : types) walk_total += n_per_support(rank.k, t) * ExactInt{lookup(walk, t)};
  const ExactInt reference_total = level2 ? n_t_total(rank) : walk_total;
  result.total = reference_total.to_string();

  // exhaustive partitions of T
  if (!config.skip_full_oracle && rank.n <= config.oracle_cap) {
    result.full_oracle_run = true;
    const CensusReport full =
        oracle_full(rank, OracleOptions{config.threads, config.oracle_cap});
    checks.equal("full_oracle_total", "", reference_total, ExactInt{full.total});
    checks.equal("full_oracle_unclassified", "", ExactInt{0}, ExactInt{full.n_unclassified});
    for (const auto& t : types) {
      checks.equal("full_oracle_by_type", t.key(),
                   n_per_support(rank.k, t) * ExactInt{lookup(walk, t)},
                   ExactInt{lookup(full.n_by_type, t)});
    }
    Count by_degree = 0;
    for (const auto& [m, c] : full.n_by_degree) by_degree += c;
    Count by_shape = 0;
    for (const auto& [s, c] : full.n_by_shape) by_shape += c;
    checks.equal("full_oracle_degree_marginal", "", ExactInt{full.total}, ExactInt{by_degree});
    checks.equal("full_oracle_shape_marginal", "", ExactInt{full.total}, ExactInt{by_shape});
  }

  if (level2) {
    for (const auto& t : types) {
      checks.guarded("sigma_closed_vs_walk", t.key(), [&] {
        return std::pair{sigma_closed(rank, t), ExactInt{lookup(walk, t)}};
      });
    }
    ExactInt poly_sum{0};
    for (const auto& t : types) {
      checks.guarded("n_t_polynomial", t.key(), [&] {
        const ExactInt value = n_t_polynomial_value(rank, t);
        poly_sum += value;
        return std::pair{value, n_per_support(rank.k, t) * sigma_closed(rank, t)};
      });
    }
    checks.equal("n_t_polynomial_sum", "", reference_total, poly_sum);
  }
  if (level2) checks.equal("supports_total", "", reference_total, walk_total);

  if (level2) {
    for (int s = 0; s <= 4; ++s) {
      checks.guarded("weyl_s_theta", "s=" + std::to_string(s), [&] {
        const auto lambda = weight(rank.n, {2 * s});
        return std::pair{dim_s_theta(rank, s), weyl_dim(rank, lambda)};
      });
    }
    if (rank.n >= 2) {
      checks.guarded("weyl_4theta_minus_alpha", "", [&] {
        const auto lambda = weight(rank.n, {7, 1});
        return std::pair{dim_4theta_minus_alpha(rank), weyl_dim(rank, lambda)};
      });
    }
    checks.guarded("dim_q4", "", [&] {
      const ExactInt parts =
          dim_s_theta(rank, 3) + dim_s_theta(rank, 4) + dim_4theta_minus_alpha(rank);
      return std::pair{ExactInt{2LL * rank.n} * binomial(2LL * rank.n + 6, 7), parts};
    });
    checks.guarded("equivalence_identity", "", [&] {
      const ExactInt q4 = ExactInt{2LL * rank.n} * binomial(2LL * rank.n + 6, 7);
      return std::pair{n_t_total(rank), ExactInt{9} * q4 - ExactInt{2} * dim_s_theta(rank, 4)};
    });
  }

  for (const auto& t : types) {
    checks.equal("up_down_symmetry", t.key(), ExactInt{lookup(walk, t)},
                 ExactInt{lookup(flipped, t.mirrored())});
  }
  return result;
}

json exact_json(const std::string& decimal) {
  if (const auto v = ExactInt::parse(decimal)) {
    if (const auto small = v->to_int64()) return *small;
  }
  return decimal;
}

}  // namespace

VerifyReport verify(const RunConfig& config) {
  VerifyReport report;
  report.k = config.k;
  for (int n = config.n.lo; n <= config.n.hi; ++n) {
    report.ranks.push_back(verify_rank(Rank(n, config.k), config));
  }
  return report;
}

CensusReport count(const Rank& rank, const RunConfig& config) {
  if (config.types_only) return supports_report(rank, config.threads);
  CensusReport report = oracle_full(rank, OracleOptions{config.threads, config.oracle_cap});
  const auto walk = count_supports(Region::trapezoid(rank), rank.k + 2, config.threads);
  for (const auto& t : types_for_level(rank.k)) report.sigma[t] = lookup(walk, t);
  return report;
}

json to_json(const CensusReport& report) {
  json j;
  j["n"] = report.rank.n;
  j["k"] = report.rank.k;
  json by_type = json::object();
  for (const auto& [t, c] : report.n_by_type) by_type[t.key()] = c;
  json by_degree = json::object();
  for (auto it = report.n_by_degree.rbegin(); it != report.n_by_degree.rend(); ++it) {
    by_degree[std::to_string(it->first)] = it->second;
  }
  json by_shape = json::object();
  for (const auto& [s, c] : report.n_by_shape) by_shape[s.key()] = c;
  json sigma = json::object();
  for (const auto& [t, c] : report.sigma) sigma[t.key()] = c;
  j["byType"] = std::move(by_type);
  j["byDegree"] = std::move(by_degree);
  j["byShape"] = std::move(by_shape);
  j["total"] = report.total;
  j["sigma"] = std::move(sigma);
  j["unclassified"] = report.n_unclassified;
  j["partitions"] = report.partitions;
  return j;
}

namespace {

SupportType type_from_key(const std::string& key) {
  const auto t = SupportType::parse(key);
  if (!t) throw std::invalid_argument("bad support type key: " + key);
  return *t;
}

Shape shape_from_key(const std::string& key) {
  std::vector<int> degrees;
  std::size_t start = 0;
  while (start <= key.size()) {
    const auto end = std::min(key.find('+', start), key.size());
    const auto v = parse_int(std::string_view(key).substr(start, end - start));
    if (!v || *v < 1) throw std::invalid_argument("bad shape key: " + key);
    degrees.push_back(-*v);
    start = end + 1;
  }
  return Shape::from_degrees(std::move(degrees));
}

}  // namespace

CensusReport census_from_json(const json& j) {
  CensusReport report;
  report.rank = Rank(j.at("n").get<int>(), j.at("k").get<int>());
  for (const auto& [key, c] : j.at("byType").items()) {
    report.n_by_type[type_from_key(key)] = c.get<Count>();
  }
  for (const auto& [key, c] : j.at("byDegree").items()) {
    report.n_by_degree[std::stoi(key)] = c.get<Count>();
  }
  for (const auto& [key, c] : j.at("byShape").items()) {
    report.n_by_shape[shape_from_key(key)] = c.get<Count>();
  }
  for (const auto& [key, c] : j.at("sigma").items()) {
    report.sigma[type_from_key(key)] = c.get<Count>();
  }
  report.total = j.at("total").get<Count>();
  report.n_unclassified = j.at("unclassified").get<Count>();
  report.partitions = j.at("partitions").get<Count>();
  return report;
}

json to_json(const VerifyReport& report) {
  json j;
  j["command"] = "verify";
  j["k"] = report.k;
  j["pass"] = report.pass();
  json ranks = json::array();
  for (const auto& r : report.ranks) {
    json jr;
    jr["n"] = r.n;
    jr["total"] = exact_json(r.total);
    jr["fullOracle"] = r.full_oracle_run;
    jr["pass"] = r.pass();
    json checks = json::array();
    for (const auto& c : r.checks) {
      checks.push_back({{"check", c.check},
                        {"type", c.type},
                        {"expected", exact_json(c.expected)},
                        {"got", exact_json(c.got)},
                        {"pass", c.pass}});
    }
    jr["checks"] = std::move(checks);
    ranks.push_back(std::move(jr));
  }
  j["results"] = std::move(ranks);
  return j;
}

void write_verify(const VerifyReport& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json:
      out << to_json(report).dump(2) << '\n';
      return;
    case Format::Csv:
      out << "n,check,type,expected,got,status\n";
      for (const auto& r : report.ranks) {
        for (const auto& c : r.checks) {
          out << r.n << ',' << c.check << ',' << c.type << ',' << c.expected << ',' << c.got << ','
              << (c.pass ? "pass" : "FAIL") << '\n';
        }
      }
      return;
    case Format::Text:
      for (const auto& r : report.ranks) {
        std::size_t passed = 0;
        for (const auto& c : r.checks) passed += c.pass ? 1 : 0;
        out << "n=" << r.n << " k=" << report.k << " N_T=" << r.total << "  " << passed << "/"
            << r.checks.size() << " checks passed"
            << (r.full_oracle_run ? "" : " (full oracle skipped)") << '\n';
        for (const auto& c : r.checks) {
          out << "  " << (c.pass ? "PASS " : "FAIL ") << c.check;
          if (!c.type.empty()) out << '[' << c.type << ']';
          out << " expected=" << c.expected << " got=" << c.got << '\n';
        }
      }
      out << (report.pass() ? "ALL PASS" : "FAILURES PRESENT") << '\n';
      return;
  }
}

void write_count(const std::vector<CensusReport>& reports, Format format, std::ostream& out) {
  switch (format) {
    case Format::Json: {
      if (reports.size() == 1) {
        out << to_json(reports.front()).dump(2) << '\n';
      } else {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        out << arr.dump(2) << '\n';
      }
      return;
    }
    case Format::Csv:
      out << "key,count\n";
      for (const auto& r : reports) {
        out << "n," << r.rank.n << '\n';
        for (const auto& [t, c] : r.n_by_type) out << t.key() << ',' << c << '\n';
        for (auto it = r.n_by_degree.rbegin(); it != r.n_by_degree.rend(); ++it) {
          out << it->first << ',' << it->second << '\n';
        }
        for (const auto& [s, c] : r.n_by_shape) out << s.key() << ',' << c << '\n';
        out << "total," << r.total << '\n';
      }
      return;
    case Format::Text:
      for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        if (i > 0) out << '\n';
        out << "n=" << r.rank.n << " k=" << r.rank.k << '\n';
        out << "by type (N, supports):\n";
        for (const auto& [t, c] : r.n_by_type) {
          const auto s = r.sigma.find(t);
          out << "  " << std::left << std::setw(7) << t.key() << std::right << std::setw(14) << c;
          if (s != r.sigma.end()) out << std::setw(14) << s->second;
          out << '\n';
        }
        if (!r.n_by_degree.empty()) {
          out << "by degree:\n";
          for (auto it = r.n_by_degree.rbegin(); it != r.n_by_degree.rend(); ++it) {
            out << "  " << std::left << std::setw(7) << it->first << std::right << std::setw(14)
                << it->second << '\n';
          }
        }
        if (!r.n_by_shape.empty()) {
          out << "by shape:\n";
          for (const auto& [s, c] : r.n_by_shape) {
            out << "  " << std::left << std::setw(9) << s.key() << std::right << std::setw(12) << c
                << '\n';
          }
        }
        out << "total " << r.total << '\n';
      }
      return;
  }
}

namespace {

struct ArrayCell {
  StripPoint local;
  ArrayPoint global;
  RootLabel label;
};

// Rows of triangle d top to bottom, cells left to right.
std::vector<std::vector<ArrayCell>> triangle_rows(const Rank& rank, int d) {
  const int two_n = 2 * rank.n;
  std::vector<std::vector<ArrayCell>> rows;
  for (int step = 0; step < two_n; ++step) {
    const int local_row = d % 2 == 1 ? two_n - step : step + 1;
    std::vector<ArrayCell> cells;
    for (int lc = 1; lc <= two_n + 1 - local_row; ++lc) {
      const StripPoint sp{d, local_row, lc};
      cells.push_back({sp, strip_global(rank, sp), root_label(rank, local_row, lc)});
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

}  // namespace

void write_array(const Rank& rank, Format format, bool coords, std::ostream& out) {
  const int two_n = 2 * rank.n;
  switch (format) {
    case Format::Json: {
      json j;
      j["n"] = rank.n;
      json triangles = json::array();
      for (int d = 1; d <= 3; ++d) {
        json rows = json::array();
        for (const auto& cells : triangle_rows(rank, d)) {
          json labels = json::array();
          for (const auto& c : cells) {
            labels.push_back({{"label", to_string(c.label)},
                              {"localCol", c.local.local_col},
                              {"row", c.global.row},
                              {"col", c.global.col}});
          }
          rows.push_back({{"localRow", cells.front().local.local_row}, {"cells", labels}});
        }
        triangles.push_back({{"d", d}, {"degree", -d}, {"rows", rows}});
      }
      j["triangles"] = std::move(triangles);
      out << j.dump(2) << '\n';
      return;
    }
    case Format::Csv:
      out << "d,local_row,local_col,row,col,first,second\n";
      for (int d = 1; d <= 3; ++d) {
        for (const auto& cells : triangle_rows(rank, d)) {
          for (const auto& c : cells) {
            out << d << ',' << c.local.local_row << ',' << c.local.local_col << ','
                << c.global.row << ',' << c.global.col << ',' << c.label.first << ','
                << c.label.second << '\n';
          }
        }
      }
      return;
    case Format::Text:
      for (int d = 1; d <= 3; ++d) {
        if (d > 1) out << '\n';
        out << "triangle d=" << d << " degree=" << -d << '\n';
        for (const auto& cells : triangle_rows(rank, d)) {
          std::ostringstream line;
          line << std::string(static_cast<std::size_t>(2 * (two_n - static_cast<int>(cells.size()))), ' ');
          for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) line << ' ';
            line << to_string(cells[i].label);
            if (coords) line << '@' << to_string(cells[i].global);
          }
          out << line.str() << '\n';
        }
      }
      return;
  }
}

namespace {

bool valid_common(const RunConfig& config, std::ostream& err) {
  if (config.k < 1) {
    err << "error: --k must be >= 1\n";
    return false;
  }
  if (config.oracle_cap < 1) {
    err << "error: --oracle-cap must be >= 1\n";
    return false;
  }
  if (config.threads < 0) {
    err << "error: --threads must be >= 0\n";
    return false;
  }
  return true;
}

}  // namespace

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!valid_common(config, err)) return kExitUsage;
  const VerifyReport report = verify(config);
  write_verify(report, config.format, out);
  if (!report.pass()) {
    for (const auto& r : report.ranks) {
      for (const auto& c : r.checks) {
        if (!c.pass) {
          err << "FAIL " << c.check << " n=" << r.n << " type=" << c.type
              << " expected=" << c.expected << " got=" << c.got << '\n';
        }
      }
    }
    return kExitFailure;
  }
  return kExitPass;
}

int run_count(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (!valid_common(config, err)) return kExitUsage;
  if (!config.types_only && config.n.hi > config.oracle_cap) {
    err << "error: n=" << config.n.hi << " exceeds --oracle-cap " << config.oracle_cap
        << " for the full oracle; use --types-only or raise --oracle-cap\n";
    return kExitUsage;
  }
  std::vector<CensusReport> reports;
  for (int n = config.n.lo; n <= config.n.hi; ++n) reports.push_back(count(Rank(n, config.k), config));
  write_count(reports, config.format, out);
  for (const auto& r : reports) {
    if (r.n_unclassified != 0) {
      err << "FAIL unclassified supports carry N=" << r.n_unclassified << " at n=" << r.rank.n
          << '\n';
      return kExitFailure;
    }
  }
  return kExitPass;
}

int run_print_array(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.n.lo != config.n.hi) {
    err << "error: print array takes a single --n\n";
    return kExitUsage;
  }
  write_array(Rank(config.n.lo, config.k), config.format, config.coords, out);
  return kExitPass;
}

}  // namespace cascade
