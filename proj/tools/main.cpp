// Command-line front end: closed-form constants, Fekete maximization,
// distribution utilities, volume-ratio asymptotes, and Monte Carlo volume
// estimation, with table/CSV/JSON output. `verify` runs the acceptance gate.
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "schatten/acceptance.hpp"
#include "schatten/asymptotics.hpp"
#include "schatten/fekete.hpp"
#include "schatten/mcvol.hpp"
#include "schatten/parallel.hpp"
#include "schatten/pexponent.hpp"
#include "schatten/quadrature.hpp"
#include "schatten/rng.hpp"
#include "schatten/ullman.hpp"

namespace {

using nlohmann::ordered_json;
using namespace schatten;

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

// ------------------------------------------------------------------- output

// A value that renders as a table/CSV cell or a JSON field.
struct CellValue {
  enum class Kind { Number, Integer, Boolean, Text } kind;
  double num = 0.0;
  long long integer = 0;
  bool boolean = false;
  std::string text;

  static CellValue number(double v) { return {Kind::Number, v, 0, false, {}}; }
  static CellValue integer_of(long long v) { return {Kind::Integer, 0.0, v, false, {}}; }
  static CellValue boolean_of(bool v) { return {Kind::Boolean, 0.0, 0, v, {}}; }
  static CellValue text_of(std::string v) {
    return {Kind::Text, 0.0, 0, false, std::move(v)};
  }
};

// Rectangular result set: named columns, uniform rows, optional footnotes
// (shown in table mode only; CSV stays strictly rectangular and JSON carries
// them as top-level fields).
struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<CellValue>> rows;
  std::vector<std::pair<std::string, CellValue>> footers;

  void add_row(std::vector<CellValue> cells) { rows.push_back(std::move(cells)); }
};

std::string format_cell(const CellValue& c, bool csv) {
  char buf[64];
  switch (c.kind) {
    case CellValue::Kind::Number:
      std::snprintf(buf, sizeof(buf), csv ? "%.17g" : "%.12g", c.num);
      return buf;
    case CellValue::Kind::Integer:
      std::snprintf(buf, sizeof(buf), "%lld", c.integer);
      return buf;
    case CellValue::Kind::Boolean:
      return c.boolean ? "true" : "false";
    case CellValue::Kind::Text:
      return c.text;
  }
  return {};
}

ordered_json cell_to_json(const CellValue& c) {
  switch (c.kind) {
    case CellValue::Kind::Number: return c.num;
    case CellValue::Kind::Integer: return c.integer;
    case CellValue::Kind::Boolean: return c.boolean;
    case CellValue::Kind::Text: return c.text;
  }
  return nullptr;
}

void write_table(const ResultTable& t, std::ostream& os) {
  std::vector<size_t> width(t.columns.size());
  std::vector<std::vector<std::string>> cells;
  for (size_t j = 0; j < t.columns.size(); ++j) width[j] = t.columns[j].size();
  for (const auto& row : t.rows) {
    std::vector<std::string> r;
    for (size_t j = 0; j < row.size(); ++j) {
      r.push_back(format_cell(row[j], false));
      width[j] = std::max(width[j], r.back().size());
    }
    cells.push_back(std::move(r));
  }
  for (size_t j = 0; j < t.columns.size(); ++j) {
    os << (j ? "  " : "") << t.columns[j]
       << std::string(width[j] - t.columns[j].size(), ' ');
  }
  os << '\n';
  for (const auto& row : cells) {
    for (size_t j = 0; j < row.size(); ++j) {
      os << (j ? "  " : "") << row[j] << std::string(width[j] - row[j].size(), ' ');
    }
    os << '\n';
  }
  for (const auto& [name, value] : t.footers) {
    os << name << " = " << format_cell(value, false) << '\n';
  }
}

void write_csv(const ResultTable& t, std::ostream& os) {
  for (size_t j = 0; j < t.columns.size(); ++j) os << (j ? "," : "") << t.columns[j];
  os << '\n';
  for (const auto& row : t.rows) {
    for (size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << format_cell(row[j], true);
    os << '\n';
  }
}

void write_json(const ResultTable& t, std::ostream& os) {
  ordered_json doc;
  ordered_json rows = ordered_json::array();
  for (const auto& row : t.rows) {
    ordered_json r;
    for (size_t j = 0; j < row.size(); ++j) r[t.columns[j]] = cell_to_json(row[j]);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  for (const auto& [name, value] : t.footers) doc[name] = cell_to_json(value);
  os << doc.dump(2) << '\n';
}

struct OutputOptions {
  std::string format = "table";
  std::string out_path;
};

void emit(const ResultTable& t, const OutputOptions& opts) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!opts.out_path.empty()) {
    file.open(opts.out_path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file: " + opts.out_path);
    os = &file;
  }
  if (opts.format == "csv") {
    write_csv(t, *os);
  } else if (opts.format == "json") {
    write_json(t, *os);
  } else {
    write_table(t, *os);
  }
}

// -------------------------------------------------------------------- flags

PExponent parse_p(const std::string& token) {
  if (token == "inf" || token == "Inf" || token == "INF") return PExponent::infinity();
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--p", "not a number: " + token);
  }
  if (used != token.size()) throw CLI::ValidationError("--p", "not a number: " + token);
  if (!(v > 0.0)) throw CLI::ValidationError("--p", "order must be positive");
  return PExponent(v);
}

Field parse_field(const std::string& name) {
  if (name == "real") return Field::Real;
  if (name == "complex") return Field::Complex;
  throw CLI::ValidationError("--field", "must be real or complex");
}

std::string p_label(PExponent p) {
  if (p.is_infinite()) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", p.value());
  return buf;
}

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  cmd->add_option("--out", out.out_path, "write output to a file instead of stdout");
}

// -------------------------------------------------------------- subcommands

int cmd_delta(const std::vector<std::string>& p_tokens, const OutputOptions& out) {
  ResultTable t;
  t.columns = {"p", "delta", "sup_J", "residual"};
  for (const auto& tok : p_tokens) {
    const PExponent p = parse_p(tok);
    const double d = delta(p);
    const double sup = p.is_infinite() ? -2.0 * std::log(2.0) : sup_J(p.value());
    t.add_row({CellValue::text_of(p_label(p)), CellValue::number(d),
               CellValue::number(sup),
               CellValue::number(std::fabs(std::log(d) - sup))});
  }
  emit(t, out);
  return 0;
}

int cmd_fekete(int n, const std::string& p_token, MaximizeOptions opts,
               const OutputOptions& out) {
  const PExponent p = parse_p(p_token);
  if (p.is_infinite()) throw CLI::ValidationError("--p", "fekete needs a finite order");
  FeketeSolution s = maximize(n, p.value(), opts);
  ResultTable t;
  t.columns = {"index",      "point",   "n",          "p",
               "log_delta_n", "delta_n", "iterations", "converged"};
  for (int i = 0; i < s.points.size(); ++i) {
    t.add_row({CellValue::integer_of(i), CellValue::number(s.points.points()[i]),
               CellValue::integer_of(s.n), CellValue::number(s.p),
               CellValue::number(s.log_delta_n), CellValue::number(s.delta_n),
               CellValue::integer_of(s.iterations), CellValue::boolean_of(s.converged)});
  }
  emit(t, out);
  return s.converged ? 0 : kExitNumerical;
}

int cmd_delta_seq(const std::string& p_token, int n_max, MaximizeOptions opts, int threads,
                  const OutputOptions& out) {
  const PExponent p = parse_p(p_token);
  if (p.is_infinite()) throw CLI::ValidationError("--p", "delta-seq needs a finite order");
  DeltaSequence seq = delta_sequence(p.value(), n_max, opts, threads);
  const double closed = delta(p);
  ResultTable t;
  t.columns = {"n", "delta_n", "log_delta_n", "gap_to_limit", "converged"};
  for (const auto& row : seq.rows) {
    t.add_row({CellValue::integer_of(row.n), CellValue::number(row.delta_n),
               CellValue::number(row.log_delta_n),
               CellValue::number(row.delta_n - closed),
               CellValue::boolean_of(row.converged)});
  }
  t.footers = {{"extrapolated", CellValue::number(seq.extrapolated)},
               {"closed_form", CellValue::number(closed)}};
  emit(t, out);
  return seq.all_converged ? 0 : kExitNumerical;
}

int cmd_ullman_grid(const std::string& p_token, int grid, bool density_mode,
                    const OutputOptions& out) {
  const PExponent p = parse_p(p_token);
  if (p.is_infinite()) throw CLI::ValidationError("--p", "needs a finite order");
  if (grid < 2) throw CLI::ValidationError("--grid", "needs at least 2 points");
  UllmanDist u(p.value());
  ResultTable t;
  t.columns = {"x", density_mode ? "density" : "cdf"};
  for (int i = 0; i < grid; ++i) {
    const double x = -1.0 + 2.0 * i / (grid - 1);
    t.add_row({CellValue::number(x),
               CellValue::number(density_mode ? u.density(x) : u.cdf(x))});
  }
  emit(t, out);
  return 0;
}

int cmd_ullman_sample(const std::string& p_token, long long count, std::uint64_t seed,
                      const OutputOptions& out) {
  const PExponent p = parse_p(p_token);
  if (p.is_infinite()) throw CLI::ValidationError("--p", "needs a finite order");
  if (count < 1) throw CLI::ValidationError("--count", "needs at least 1 draw");
  UllmanDist u(p.value());
  RngStream rng(seed, 0);
  ResultTable t;
  t.columns = {"index", "value"};
  for (long long i = 0; i < count; ++i) {
    t.add_row({CellValue::integer_of(i), CellValue::number(u.sample(rng))});
  }
  emit(t, out);
  return 0;
}

int cmd_ullman_moments(const std::string& p_token, long long samples, std::uint64_t seed,
                       const OutputOptions& out) {
  const PExponent p = parse_p(p_token);
  if (p.is_infinite()) throw CLI::ValidationError("--p", "needs a finite order");
  if (samples < 1000) throw CLI::ValidationError("--samples", "needs at least 1000");
  UllmanDist u(p.value());
  const double pv = p.value();
  const double quad = 2.0 * adaptive_integrate(
                                [&](double x) { return std::pow(x, pv) * u.density(x); },
                                0.0, 1.0, 1e-12);
  RngStream rng(seed, 0);
  double acc = 0.0, acc2 = 0.0;
  for (long long i = 0; i < samples; ++i) {
    const double v = std::log(std::fabs(u.sample(rng) - u.sample(rng)));
    acc += v;
    acc2 += v * v;
  }
  const double mean = acc / double(samples);
  const double sd = std::sqrt(std::max(0.0, acc2 / double(samples) - mean * mean));
  ResultTable t;
  t.columns = {"p",           "abs_moment", "abs_moment_quadrature",
               "log_distance", "log_distance_mc", "log_distance_stderr"};
  t.add_row({CellValue::number(pv), CellValue::number(u.abs_moment()),
             CellValue::number(quad), CellValue::number(u.log_distance_expectation()),
             CellValue::number(mean),
             CellValue::number(sd / std::sqrt(double(samples)))});
  emit(t, out);
  return 0;
}

int cmd_vr(const std::vector<std::string>& p_tokens, const std::vector<int>& n_list,
           const std::string& field_name, const OutputOptions& out) {
  const Field field = parse_field(field_name);
  ResultTable t;
  t.columns = {"n", "p", "field", "value", "gamma_form", "residual"};
  for (int n : n_list) {
    for (const auto& tok : p_tokens) {
      const PExponent p = parse_p(tok);
      const VolumeRatioAsymptote vr = volume_ratio_asymptote(n, p, field);
      t.add_row({CellValue::integer_of(n), CellValue::text_of(p_label(p)),
                 CellValue::text_of(field_name), CellValue::number(vr.value),
                 CellValue::number(vr.gamma_form),
                 CellValue::number(std::fabs(vr.value - vr.gamma_form))});
    }
  }
  emit(t, out);
  return 0;
}

int cmd_mc_volume(int n, const std::string& p_token, const std::string& field_name,
                  long long samples, std::uint64_t seed, int threads,
                  const OutputOptions& out) {
  const PExponent p = parse_p(p_token);
  const Field field = parse_field(field_name);
  if (n < 1 || n > 4) throw CLI::ValidationError("--n", "mc-volume supports n in 1..4");
  const Estimate e = volume_ratio_mc(n, p, field, samples, seed, threads);
  ResultTable t;
  t.columns = {"n",     "p",       "field",     "samples", "seed",
               "threads", "value", "std_error", "degenerate"};
  std::vector<CellValue> row = {
      CellValue::integer_of(n),          CellValue::text_of(p_label(p)),
      CellValue::text_of(field_name),    CellValue::integer_of(e.samples),
      CellValue::integer_of((long long)e.seed), CellValue::integer_of(threads),
      CellValue::number(e.value),        CellValue::number(e.std_error),
      CellValue::boolean_of(e.degenerate)};
  if (n == 2 || n == 3) {
    t.columns.push_back("oracle");
    row.push_back(CellValue::number(singular_value_quadrature(n, p, field)));
  }
  t.add_row(std::move(row));
  emit(t, out);
  return e.degenerate ? kExitNumerical : 0;
}

int cmd_verify(std::vector<int> criteria, int threads, std::uint64_t seed) {
  AcceptanceConfig config;
  config.criteria = std::move(criteria);
  config.threads = threads;
  config.seed = seed;
  char self[4096];
  const ssize_t len = readlink("/proc/self/exe", self, sizeof(self) - 1);
  if (len > 0) {
    self[len] = '\0';
    config.cli_path = self;
  }
  const auto results = run_acceptance(config);
  print_results(results, std::cout);
  return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schatten ball volume toolkit"};
  app.require_subcommand(1);

  OutputOptions out;
  const int default_threads = default_thread_count();

  // delta
  auto* delta_cmd = app.add_subcommand("delta", "limit constant and its variational form");
  std::vector<std::string> delta_p;
  delta_cmd->add_option("--p", delta_p, "orders (positive reals or inf)")->required();
  add_output_flags(delta_cmd, out);

  // fekete
  auto* fekete_cmd = app.add_subcommand("fekete", "maximize the n-point configuration");
  int fekete_n = 2;
  std::string fekete_p = "2";
  MaximizeOptions fekete_opts;
  fekete_cmd->add_option("--n", fekete_n, "number of points")->required();
  fekete_cmd->add_option("--p", fekete_p, "order")->required();
  fekete_cmd->add_option("--seed", fekete_opts.seed, "restart seed");
  fekete_cmd->add_option("--restarts", fekete_opts.restarts, "randomized restarts");
  fekete_cmd->add_option("--tol", fekete_opts.tol, "convergence tolerance");
  add_output_flags(fekete_cmd, out);

  // delta-seq
  auto* seq_cmd = app.add_subcommand("delta-seq", "delta_n sequence and extrapolation");
  std::string seq_p = "2";
  int seq_nmax = 16;
  int seq_threads = default_threads;
  MaximizeOptions seq_opts;
  seq_opts.restarts = 1;
  seq_cmd->add_option("--p", seq_p, "order")->required();
  seq_cmd->add_option("--n-max", seq_nmax, "largest configuration size")->required();
  seq_cmd->add_option("--seed", seq_opts.seed, "restart seed");
  seq_cmd->add_option("--restarts", seq_opts.restarts, "randomized restarts");
  seq_cmd->add_option("--tol", seq_opts.tol, "convergence tolerance");
  seq_cmd->add_option("--threads", seq_threads, "worker threads");
  add_output_flags(seq_cmd, out);

  // ullman
  auto* ullman_cmd = app.add_subcommand("ullman", "distribution utilities");
  ullman_cmd->require_subcommand(1);
  std::string ull_p = "2";
  int ull_grid = 101;
  long long ull_count = 100;
  long long ull_samples = 1000000;
  std::uint64_t ull_seed = 1;
  auto* density_cmd = ullman_cmd->add_subcommand("density", "density on a uniform grid");
  density_cmd->add_option("--p", ull_p, "order")->required();
  density_cmd->add_option("--grid", ull_grid, "number of grid points");
  add_output_flags(density_cmd, out);
  auto* cdf_cmd = ullman_cmd->add_subcommand("cdf", "distribution function on a grid");
  cdf_cmd->add_option("--p", ull_p, "order")->required();
  cdf_cmd->add_option("--grid", ull_grid, "number of grid points");
  add_output_flags(cdf_cmd, out);
  auto* sample_cmd = ullman_cmd->add_subcommand("sample", "seeded draws");
  sample_cmd->add_option("--p", ull_p, "order")->required();
  sample_cmd->add_option("--count", ull_count, "number of draws");
  sample_cmd->add_option("--seed", ull_seed, "rng seed");
  sample_cmd->add_option("--threads", seq_threads, "accepted for interface symmetry")
      ->group("");
  add_output_flags(sample_cmd, out);
  auto* moments_cmd = ullman_cmd->add_subcommand("moments", "closed forms vs estimates");
  moments_cmd->add_option("--p", ull_p, "order")->required();
  moments_cmd->add_option("--samples", ull_samples, "MC pair count");
  moments_cmd->add_option("--seed", ull_seed, "rng seed");
  add_output_flags(moments_cmd, out);

  // vr
  auto* vr_cmd = app.add_subcommand("vr", "volume ratio asymptote");
  std::vector<std::string> vr_p;
  std::vector<int> vr_n = {1};
  std::string vr_field = "real";
  vr_cmd->add_option("--p", vr_p, "orders (>= 1 or inf)")->required();
  vr_cmd->add_option("--n", vr_n, "matrix orders");
  vr_cmd->add_option("--field", vr_field, "real or complex");
  add_output_flags(vr_cmd, out);

  // mc-volume
  auto* mc_cmd = app.add_subcommand("mc-volume", "Monte Carlo volume ratio");
  int mc_n = 2;
  std::string mc_p = "1";
  std::string mc_field = "real";
  long long mc_samples = 1000000;
  std::uint64_t mc_seed = 1;
  int mc_threads = default_threads;
  mc_cmd->add_option("--n", mc_n, "matrix order (1..4)")->required();
  mc_cmd->add_option("--p", mc_p, "order")->required();
  mc_cmd->add_option("--field", mc_field, "real or complex");
  mc_cmd->add_option("--samples", mc_samples, "sample count");
  mc_cmd->add_option("--seed", mc_seed, "rng seed");
  mc_cmd->add_option("--threads", mc_threads, "worker threads");
  add_output_flags(mc_cmd, out);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the acceptance criteria");
  std::vector<int> verify_criteria;
  int verify_threads = default_threads;
  std::uint64_t verify_seed = 20260817;
  verify_cmd->add_option("--criterion", verify_criteria, "criterion ids (default: all)");
  verify_cmd->add_option("--threads", verify_threads, "worker threads");
  verify_cmd->add_option("--seed", verify_seed, "base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (delta_cmd->parsed()) return cmd_delta(delta_p, out);
    if (fekete_cmd->parsed()) return cmd_fekete(fekete_n, fekete_p, fekete_opts, out);
    if (seq_cmd->parsed()) {
      return cmd_delta_seq(seq_p, seq_nmax, seq_opts, resolve_thread_count(seq_threads),
                           out);
    }
    if (ullman_cmd->parsed()) {
      if (density_cmd->parsed()) return cmd_ullman_grid(ull_p, ull_grid, true, out);
      if (cdf_cmd->parsed()) return cmd_ullman_grid(ull_p, ull_grid, false, out);
      if (sample_cmd->parsed()) return cmd_ullman_sample(ull_p, ull_count, ull_seed, out);
      if (moments_cmd->parsed()) {
        return cmd_ullman_moments(ull_p, ull_samples, ull_seed, out);
      }
    }
    if (vr_cmd->parsed()) return cmd_vr(vr_p, vr_n, vr_field, out);
    if (mc_cmd->parsed()) {
      return cmd_mc_volume(mc_n, mc_p, mc_field, mc_samples, mc_seed,
                           resolve_thread_count(mc_threads), out);
    }
    if (verify_cmd->parsed()) {
      return cmd_verify(verify_criteria, resolve_thread_count(verify_threads),
                        verify_seed);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}
