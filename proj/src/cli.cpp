#include "ballot/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "ballot/counts.hpp"
#include "ballot/oracle.hpp"
#include "ballot/verify.hpp"

namespace ballot::cli {

namespace {

void require_n(const RunConfig& cfg) {
  if (cfg.n < 0) throw UsageError("--n must be >= 0");
}

void require_series_cap(int order, bool force) {
  if (order > kSeriesCap && !force)
    throw ResourceCapError("order " + std::to_string(order) + " exceeds cap " + std::to_string(kSeriesCap) +
                           " (use --force)");
}

// Runs `body` with the chosen output stream: --out file or `out`.
int with_output(const RunConfig& cfg, std::ostream& out, const std::function<int(std::ostream&)>& body) {
  if (!cfg.out_path) return body(out);
  std::ofstream file(*cfg.out_path, std::ios::trunc);
  if (!file) throw UsageError("cannot open output file " + *cfg.out_path);
  const int code = body(file);
  file.flush();
  if (!file) throw UsageError("failed writing " + *cfg.out_path);
  return code;
}

int emit_table(const RunConfig& cfg, const CountTable& t, std::ostream& out) {
  return with_output(cfg, out, [&](std::ostream& os) {
    if (cfg.format == Format::Csv)
      write_csv(os, t);
    else
      write_json(os, t);
    return kExitOk;
  });
}

struct BFileEntry {
  std::string index;
  BigInt value;
};

std::vector<BFileEntry> read_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open b-file " + path);
  std::vector<BFileEntry> rows;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    std::istringstream ls(line);
    std::string index, value, extra;
    if (!(ls >> index) || index.front() == '#') continue;
    if (!(ls >> value) || (ls >> extra))
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected 'index value'");
    BFileEntry e{index, 0};
    if (e.value.set_str(value, 10) != 0)
      throw UsageError(path + ":" + std::to_string(lineno) + ": bad value '" + value + "'");
    rows.push_back(std::move(e));
  }
  return rows;
}

}  // namespace

const std::vector<std::string>& table_stats() {
  static const std::vector<std::string> stats = {"A", "A_first", "U", "E", "b", "l", "p", "b_factor"};
  return stats;
}

const std::vector<std::string>& oracle_stats() {
  static const std::vector<std::string> stats = {"A_first", "b", "M", "E", "b_factor", "p", "l"};
  return stats;
}

CountTable build_table(const RunConfig& cfg) {
  require_n(cfg);
  const int n = cfg.n;
  const std::string& s = cfg.stat;
  if (s == "b") {
    require_series_cap(n, cfg.force);
    return ballot_desc_gf(n, Recurrences(std::max(n, 1)))[static_cast<std::size_t>(n)];
  }
  if (s == "b_factor") return oracle_b_factor(n, OracleOptions{cfg.force, Exec::Parallel});

  const Recurrences rec(std::max(n, 1));
  if (s == "A") {
    CountTable t("A", n, TableShape::D);
    for (int d = 0; d <= std::max(n - 1, 0); ++d) t.set(CountKey{d, 0, 0}, rec.eulerian(n, d));
    return t;
  }
  if (s == "l") {
    if (n % 2 == 0) throw UsageError("l is defined for odd n only");
    CountTable t("l", n, TableShape::D);
    for (int d = 0; d <= (n - 1) / 2; ++d) t.set(CountKey{d, 0, 0}, rec.l(n, d));
    return t;
  }

  CountTable t(s, n, TableShape::DJ);
  if (s == "A_first") {
    for (int d = 0; d < n; ++d)
      for (int j = 1; j <= n; ++j) t.set(CountKey{d, 0, j}, rec.eulerian_first(n, d, j));
  } else if (s == "U") {
    for (int d = 0; d <= n; ++d)
      for (int j = 1; j <= n; ++j) t.set(CountKey{d, 0, j}, rec.u(n, d, j));
  } else if (s == "E") {
    for (int d = 0; d < n; ++d)
      for (int j = 2; j <= n - 1; ++j) t.set(CountKey{d, 0, j}, rec.e(n, d, j));
  } else if (s == "p") {
    for (int d = 0; d < n; ++d)
      for (int j = 2; j <= n - 1; ++j) t.set(CountKey{d, 0, j}, rec.p_partition(n, d, j));
  } else {
    throw UsageError("unknown stat '" + s + "'");
  }
  return t;
}

CountTable build_oracle_table(const RunConfig& cfg) {
  require_n(cfg);
  const OracleOptions opt{cfg.force, Exec::Parallel};
  const std::string& s = cfg.stat;
  if (s == "A_first") return oracle_eulerian_first(cfg.n, opt);
  if (s == "b") return oracle_ballot_desc(cfg.n, opt);
  if (s == "M") return oracle_odd_order_M(cfg.n, opt);
  if (s == "E") return oracle_E(cfg.n, opt);
  if (s == "b_factor") return oracle_b_factor(cfg.n, opt);
  if (s == "p") return oracle_p_cyclic(cfg.n, opt);
  if (s == "l") {
    if (cfg.n % 2 == 0) throw UsageError("l is defined for odd n only");
    return oracle_l(cfg.n, opt);
  }
  throw UsageError("unknown oracle stat '" + s + "'");
}

void write_json(std::ostream& os, const CountTable& t) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& [k, v] : t.entries()) {
    nlohmann::ordered_json e = {{"d", k.d}};
    if (t.shape() == TableShape::DIJ) e["i"] = k.i;
    if (t.shape() != TableShape::D) e["j"] = k.j;
    e["count"] = to_string(v);
    entries.push_back(std::move(e));
  }
  const nlohmann::ordered_json doc = {{"stat", t.stat()}, {"n", t.n()}, {"entries", std::move(entries)}};
  os << doc.dump(2) << '\n';
}

void write_csv(std::ostream& os, const CountTable& t) {
  switch (t.shape()) {
    case TableShape::D:
      os << "n,d,count\n";
      break;
    case TableShape::DJ:
      os << "n,d,j,count\n";
      break;
    case TableShape::DIJ:
      os << "n,d,i,j,count\n";
      break;
  }
  for (const auto& [k, v] : t.entries()) {
    os << t.n() << ',' << k.d;
    if (t.shape() == TableShape::DIJ) os << ',' << k.i;
    if (t.shape() != TableShape::D) os << ',' << k.j;
    os << ',' << to_string(v) << '\n';
  }
}

int run_table(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  return emit_table(cfg, build_table(cfg), out);
}

int run_oracle(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  return emit_table(cfg, build_oracle_table(cfg), out);
}

int run_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.order < 1) throw UsageError("--order must be >= 1");
  VerifyConfig vc;
  vc.order = cfg.order;
  vc.n_max_oracle = cfg.n_max_oracle;
  vc.force = cfg.force;
  if (cfg.mutation) {
    try {
      vc.mutation = parse_mutation(*cfg.mutation);
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad --inject-mutation: ") + e.what());
    }
  }
  const VerifyContext ctx(vc);
  const auto reports = run_all_checks(ctx);
  bool all = true;
  for (const auto& r : reports) {
    if (r.passed) continue;
    all = false;
    err << "FAIL " << r.name << " at " << r.first_discrepancy->location << ": " << r.first_discrepancy->lhs
        << " != " << r.first_discrepancy->rhs << '\n';
  }
  with_output(cfg, out, [&](std::ostream& os) {
    os << to_json(reports).dump(2) << '\n';
    return kExitOk;
  });
  return all ? kExitOk : kExitMismatch;
}

int run_dump(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.order < 0) throw UsageError("--order must be >= 0");
  require_series_cap(cfg.order, cfg.force);
  const auto& names = SeriesCatalog::kNames;
  if (std::find(names.begin(), names.end(), cfg.stat) == names.end())
    throw UsageError("unknown series '" + cfg.stat + "'");
  const Recurrences rec(std::max(cfg.order, 1));
  const SeriesCatalog catalog(cfg.order, &rec);
  return with_output(cfg, out, [&](std::ostream& os) {
    dump(os, catalog.get(cfg.stat));
    return kExitOk;
  });
}

int run_oeis_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.bfile) throw UsageError("oeis needs --oeis-bfile PATH");
  const auto rows = read_bfile(*cfg.bfile);

  int n_rows = 0;
  for (std::size_t covered = 0; covered < rows.size(); covered += static_cast<std::size_t>(n_rows)) ++n_rows;
  constexpr int kRowCap = 30;
  if (n_rows > kRowCap && !cfg.force)
    throw ResourceCapError("b-file needs Eulerian rows up to n = " + std::to_string(n_rows) + ", cap is " +
                           std::to_string(kRowCap) + " (use --force)");

  const Recurrences rec(std::max(n_rows, 1));
  std::size_t k = 0;
  for (int n = 1; n <= n_rows; ++n)
    for (int d = 0; d < n && k < rows.size(); ++d, ++k) {
      const BigInt ours = rec.eulerian(n, d);
      if (ours != rows[k].value) {
        err << "mismatch at index " << rows[k].index << " (n=" << n << " d=" << d << "): file " << to_string(rows[k].value)
            << ", computed " << to_string(ours) << '\n';
        return kExitMismatch;
      }
    }
  out << "match: " << rows.size() << " entries\n";
  return kExitOk;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ballot permutation and odd-order cycle statistics: tables, oracles and identity checks"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, Format> formats = {{"json", Format::Json}, {"csv", Format::Csv}};
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json or csv")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", cfg.out_path, "write to PATH instead of standard output");
  };
  auto add_force = [&](CLI::App* sub) { sub->add_flag("--force", cfg.force, "lift the size caps"); };

  CLI::App* table = app.add_subcommand("table", "count table from recursions and series");
  table->add_option("--stat", cfg.stat, "A, A_first, U, E, b, l, p or b_factor")->required();
  table->add_option("--n", cfg.n, "permutation size")->required();
  add_output(table);
  add_force(table);

  CLI::App* oracle = app.add_subcommand("oracle", "count table by brute-force enumeration");
  oracle->add_option("--stat", cfg.stat, "A_first, b, M, E, b_factor, p or l")->required();
  oracle->add_option("--n", cfg.n, "permutation size")->required();
  add_output(oracle);
  add_force(oracle);

  CLI::App* verify = app.add_subcommand("verify", "run every identity check");
  verify->add_option("--order", cfg.order, "truncation order")->capture_default_str();
  verify->add_option("--oracle-n", cfg.n_max_oracle, "largest n enumerated by the oracle checks")->capture_default_str();
  verify->add_option("--out", cfg.out_path, "write the report to PATH");
  verify->add_option("--inject-mutation", cfg.mutation)->group("");
  add_force(verify);

  CLI::App* dumpc = app.add_subcommand("dump", "print a generating function coefficient by coefficient");
  dumpc->add_option("--stat", cfg.stat, "F, A, Axy, Uhat, U, E, B, P, Bxy or P4")->required();
  dumpc->add_option("--order", cfg.order, "truncation order")->capture_default_str();
  dumpc->add_option("--out", cfg.out_path, "write to PATH");
  add_force(dumpc);

  CLI::App* oeis = app.add_subcommand("oeis", "compare the Eulerian triangle with a b-file");
  oeis->add_option("--oeis-bfile", cfg.bfile, "b-file: one 'index value' pair per line")->required();
  add_force(oeis);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (table->parsed()) return run_table(cfg, out, err);
    if (oracle->parsed()) return run_oracle(cfg, out, err);
    if (verify->parsed()) return run_verify(cfg, out, err);
    if (dumpc->parsed()) return run_dump(cfg, out, err);
    return run_oeis_check(cfg, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace ballot::cli
