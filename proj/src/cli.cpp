#include "spectral/cli.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spectral/ensembles.hpp"
#include "spectral/mc.hpp"
#include "spectral/parallel.hpp"
#include "spectral/paths.hpp"
#include "spectral/rng.hpp"
#include "spectral/sturm.hpp"
#include "spectral/theory.hpp"
#include "spectral/traces.hpp"

namespace spectral::cli {
namespace {

using nlohmann::json;

struct CommonOpts {
  std::uint64_t seed = 1;
  std::string format = "csv";
  std::string out;
  unsigned workers = 0;
  bool strict = false;
};

// One subcommand's output: an ordered config echo, a flat table, and
// human-readable summary lines.  CSV and JSON render the same fields.
struct Document {
  std::vector<std::pair<std::string, json>> config;
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
  std::vector<std::string> summary;
};

json num_or_inf(double v) { return std::isfinite(v) ? json(v) : json("inf"); }

std::string cell_text(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void write_csv(std::ostream& os, const Document& doc) {
  os << '#';
  for (const auto& [key, value] : doc.config) os << ' ' << key << '=' << cell_text(value);
  os << '\n';
  for (std::size_t c = 0; c < doc.columns.size(); ++c)
    os << (c ? "," : "") << doc.columns[c];
  os << '\n';
  for (const auto& row : doc.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << cell_text(row[c]);
    os << '\n';
  }
}

json to_json(const Document& doc) {
  json config = json::object();
  for (const auto& [key, value] : doc.config) config[key] = value;
  json rows = json::array();
  for (const auto& row : doc.rows) rows.push_back(row);
  return json{{"config", config},
              {"columns", doc.columns},
              {"rows", rows},
              {"summary", doc.summary}};
}

int emit(const Document& doc, const CommonOpts& common) {
  const bool to_stdout = common.out.empty();
  std::ofstream file;
  if (!to_stdout) {
    file.open(common.out);
    if (!file) {
      std::cerr << "error: cannot open output file: " << common.out << '\n';
      return 1;
    }
  }
  std::ostream& os = to_stdout ? std::cout : file;
  if (common.format == "json")
    os << to_json(doc).dump(2) << '\n';
  else
    write_csv(os, doc);
  os.flush();
  if (!to_stdout && !file) {
    std::cerr << "error: failed writing " << common.out << '\n';
    return 1;
  }
  // The summary must not corrupt a payload already on stdout.
  std::ostream& lines = to_stdout ? std::cerr : std::cout;
  for (const auto& line : doc.summary) lines << line << '\n';
  return 0;
}

void finish_config(Document& doc, const CommonOpts& common, bool uses_seed, bool uses_workers) {
  if (uses_seed) doc.config.emplace_back("seed", common.seed);
  if (uses_workers) doc.config.emplace_back("workers", resolve_workers(common.workers));
  doc.config.emplace_back("format", common.format);
  doc.config.emplace_back("strict", common.strict);
}

double parse_beta(const std::string& text) {
  if (text == "inf" || text == "Inf" || text == "INF" || text == "infinity")
    return std::numeric_limits<double>::infinity();
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size())
    throw std::domain_error("--beta expects a positive number or 'inf', got '" + text + "'");
  return value;
}

struct EnsembleOpts {
  std::string family = "hermite";
  std::string beta = "2";
  std::size_t n = 1;
  double gamma = 0.0;
  double a = 0.0;
  CLI::App* cmd = nullptr;
};

void add_ensemble_options(CLI::App* cmd, EnsembleOpts& opts) {
  opts.cmd = cmd;
  cmd->add_option("--family", opts.family, "ensemble family")
      ->check(CLI::IsMember({"hermite", "laguerre"}))
      ->capture_default_str();
  cmd->add_option("--beta", opts.beta, "Dyson parameter beta > 0, or 'inf'")
      ->capture_default_str();
  cmd->add_option("--n", opts.n, "matrix dimension")->required();
  cmd->add_option("--gamma", opts.gamma, "Laguerre ratio gamma in (0, 1]");
  cmd->add_option("--a", opts.a, "Laguerre shape parameter (alternative to --gamma)");
}

EnsembleSpec resolve_ensemble(const EnsembleOpts& opts, bool scaled) {
  EnsembleSpec spec;
  spec.family = opts.family == "laguerre" ? Family::laguerre : Family::hermite;
  spec.beta = parse_beta(opts.beta);
  spec.n = opts.n;
  if (opts.cmd->count("--gamma") > 0) spec.gamma = opts.gamma;
  if (opts.cmd->count("--a") > 0) spec.a = opts.a;
  spec.scaled = scaled;
  spec.validate();
  return spec;
}

void echo_ensemble(Document& doc, const EnsembleSpec& spec) {
  doc.config.emplace_back("family",
                          spec.family == Family::hermite ? "hermite" : "laguerre");
  doc.config.emplace_back("beta", num_or_inf(spec.beta));
  doc.config.emplace_back("n", spec.n);
  if (spec.family == Family::laguerre) {
    doc.config.emplace_back("gamma", spec.laguerre_gamma());
    doc.config.emplace_back("a", num_or_inf(spec.laguerre_a()));
  }
  doc.config.emplace_back("scaled", spec.scaled);
}

// ---------------------------------------------------------------------------
// sample
// ---------------------------------------------------------------------------

int cmd_sample(const EnsembleOpts& eopts, bool unscaled, const CommonOpts& common) {
  const EnsembleSpec spec = resolve_ensemble(eopts, !unscaled);
  Document doc;
  doc.config.emplace_back("subcommand", "sample");
  echo_ensemble(doc, spec);
  finish_config(doc, common, true, false);

  RngStream rng(common.seed, 0);
  if (spec.family == Family::hermite) {
    const TridiagonalSymmetric m = sample_hermite(spec, rng);
    doc.columns = {"i", "diag", "offdiag"};
    for (std::size_t i = 0; i < m.size(); ++i)
      doc.rows.push_back(
          {json(i), json(m.diag[i]), i + 1 < m.size() ? json(m.offdiag[i]) : json()});
  } else {
    const LowerBidiagonal b = sample_laguerre_factor(spec, rng);
    doc.columns = {"i", "diag", "subdiag"};
    for (std::size_t i = 0; i < b.size(); ++i)
      doc.rows.push_back(
          {json(i), json(b.diag[i]), i + 1 < b.size() ? json(b.subdiag[i]) : json()});
  }
  doc.summary.push_back("sample: " + std::to_string(spec.n) + " rows, family=" +
                        eopts.family + " beta=" + cell_text(num_or_inf(spec.beta)) +
                        " seed=" + std::to_string(common.seed));
  return emit(doc, common);
}

// ---------------------------------------------------------------------------
// histogram
// ---------------------------------------------------------------------------

int cmd_histogram(const EnsembleOpts& eopts, unsigned bins, const double* lo_opt,
                  const double* hi_opt, const CommonOpts& common) {
  const EnsembleSpec spec = resolve_ensemble(eopts, true);
  if (bins == 0) throw std::domain_error("--bins must be positive");
  double lo, hi;
  if (spec.family == Family::hermite) {
    lo = lo_opt ? *lo_opt : -1.0;
    hi = hi_opt ? *hi_opt : 1.0;
  } else {
    const double gamma = spec.laguerre_gamma();
    lo = lo_opt ? *lo_opt : theory::mp_lower_edge(gamma);
    hi = hi_opt ? *hi_opt : theory::mp_upper_edge(gamma);
  }
  if (!(lo < hi)) throw std::domain_error("histogram needs --lo < --hi");

  Document doc;
  doc.config.emplace_back("subcommand", "histogram");
  echo_ensemble(doc, spec);
  doc.config.emplace_back("bins", bins);
  doc.config.emplace_back("lo", lo);
  doc.config.emplace_back("hi", hi);
  finish_config(doc, common, true, false);

  RngStream rng(common.seed, 0);
  const TridiagonalSymmetric m = spec.family == Family::hermite
                                     ? sample_hermite(spec, rng)
                                     : gram_tridiagonal(sample_laguerre_factor(spec, rng));
  std::vector<double> edges(bins + 1);
  for (unsigned b = 0; b <= bins; ++b)
    edges[b] = lo + (hi - lo) * static_cast<double>(b) / static_cast<double>(bins);
  const SpectralHistogram hist = histogram(m, std::move(edges));

  doc.columns = {"bin", "lo", "hi", "count", "density"};
  const double n = static_cast<double>(spec.n);
  std::size_t inside = 0;
  for (unsigned b = 0; b < bins; ++b) {
    const double width = hist.edges[b + 1] - hist.edges[b];
    inside += hist.counts[b];
    doc.rows.push_back({json(b), json(hist.edges[b]), json(hist.edges[b + 1]),
                        json(hist.counts[b]),
                        json(static_cast<double>(hist.counts[b]) / (n * width))});
  }
  doc.summary.push_back("histogram: " + std::to_string(inside) + " of " +
                        std::to_string(hist.n) + " eigenvalues in [" + std::to_string(lo) +
                        ", " + std::to_string(hi) + "]; " +
                        std::to_string(hist.below_first) + " below, " +
                        std::to_string(hist.above_last) + " above");
  return emit(doc, common);
}

// ---------------------------------------------------------------------------
// deviation
// ---------------------------------------------------------------------------

int cmd_deviation(std::size_t n_start, std::size_t count, double lo, double hi, double band,
                  const CommonOpts& common) {
  if (count == 0) throw std::domain_error("--count must be positive");
  const DeviationReport report = deviation_experiment(n_start, count, lo, hi, common.workers);

  Document doc;
  doc.config.emplace_back("subcommand", "deviation");
  doc.config.emplace_back("n_start", n_start);
  doc.config.emplace_back("count", count);
  doc.config.emplace_back("lo", lo);
  doc.config.emplace_back("hi", hi);
  doc.config.emplace_back("theoretical", report.theoretical);
  doc.config.emplace_back("mean_deviation", report.mean_deviation);
  doc.config.emplace_back("band", band);
  finish_config(doc, common, false, true);

  doc.columns = {"n", "deviation"};
  for (std::size_t i = 0; i < report.per_n.size(); ++i)
    doc.rows.push_back({json(n_start + i), json(report.per_n[i])});

  doc.summary.push_back("deviation: mean=" + std::to_string(report.mean_deviation) +
                        " theoretical=" + std::to_string(report.theoretical) + " over n=" +
                        std::to_string(n_start) + ".." + std::to_string(n_start + count - 1));
  const int rc = emit(doc, common);
  if (rc != 0) return rc;
  if (common.strict && std::abs(report.mean_deviation - report.theoretical) > band) {
    std::cerr << "strict: |mean - theoretical| exceeds band " << band << '\n';
    return 3;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// fluctuate
// ---------------------------------------------------------------------------

std::vector<std::vector<double>> theory_covariance_table(const EnsembleSpec& spec,
                                                         std::size_t kmax) {
  std::vector<std::vector<double>> table(kmax, std::vector<double>(kmax, 0.0));
  if (spec.family == Family::hermite) {
    for (std::size_t i = 1; i <= kmax; ++i)
      for (std::size_t j = i; j <= kmax; ++j)
        table[i - 1][j - 1] = table[j - 1][i - 1] =
            theory::cov_hermite(static_cast<unsigned>(i), static_cast<unsigned>(j));
  } else {
    // The bidiagonal profile model of the scaled Laguerre factor; scaling by
    // beta/2 makes the table beta-free, matching the Hermite convention.
    const GeneralModelSpec model = laguerre_general_model(spec.beta, spec.laguerre_gamma());
    for (std::size_t i = 1; i <= kmax; ++i)
      for (std::size_t j = i; j <= kmax; ++j)
        table[i - 1][j - 1] = table[j - 1][i - 1] =
            0.5 * spec.beta *
            paths::general_covariance(static_cast<int>(i), static_cast<int>(j), model);
  }
  return table;
}

int cmd_fluctuate(const EnsembleOpts& eopts, std::size_t kmax, std::size_t trials,
                  double zmax, bool want_gauss, const CommonOpts& common) {
  const EnsembleSpec spec = resolve_ensemble(eopts, true);
  if (spec.beta_infinite())
    throw std::domain_error("fluctuate requires finite beta (beta=inf traces are deterministic)");

  const mc::FluctuationReport report =
      mc::run_trials(spec, kmax, trials, common.seed, common.workers);
  const auto theory_table = theory_covariance_table(spec, kmax);
  const auto z = mc::compare_to_theory(report, theory_table, spec.beta);
  const double worst = mc::max_abs_z(z);
  const double scale = 2.0 / spec.beta;

  Document doc;
  doc.config.emplace_back("subcommand", "fluctuate");
  echo_ensemble(doc, spec);
  doc.config.emplace_back("kmax", kmax);
  doc.config.emplace_back("trials", trials);
  doc.config.emplace_back("max_abs_z", worst);
  doc.config.emplace_back("wall_seconds", report.wall_seconds);
  finish_config(doc, common, true, true);

  doc.columns = {"record", "i", "j", "value", "se", "theory", "z"};
  for (std::size_t i = 0; i < kmax; ++i)
    doc.rows.push_back({json("mean"), json(i + 1), json(), json(report.mean[i]),
                        json(report.mean_se[i]), json(0.0),
                        json(report.mean[i] / report.mean_se[i])});
  for (std::size_t i = 0; i < kmax; ++i)
    for (std::size_t j = i; j < kmax; ++j)
      doc.rows.push_back({json("cov"), json(i + 1), json(j + 1), json(report.cov[i][j]),
                          json(report.cov_se[i][j]), json(scale * theory_table[i][j]),
                          json(z[i][j])});

  if (want_gauss) {
    const mc::GaussianityReport gauss = mc::gaussianity(report);
    auto push_moment = [&](const char* record, const std::vector<double>& value,
                           const std::vector<double>& se) {
      for (std::size_t i = 0; i < kmax; ++i)
        doc.rows.push_back({json(record), json(i + 1), json(), json(value[i]), json(se[i]),
                            json(0.0), json(value[i] / se[i])});
    };
    push_moment("skewness", gauss.skewness, gauss.skewness_se);
    push_moment("excess_kurtosis", gauss.excess_kurtosis, gauss.excess_kurtosis_se);
    push_moment("fifth_moment", gauss.fifth_moment, gauss.fifth_moment_se);
    for (std::size_t i = 0; i < kmax; ++i)
      for (std::size_t j = i; j < kmax; ++j)
        doc.rows.push_back(
            {json("wick"), json(i + 1), json(j + 1), json(gauss.wick_fourth[i][j]),
             json(gauss.wick_se[i][j]), json(gauss.wick_expected[i][j]),
             json((gauss.wick_fourth[i][j] - gauss.wick_expected[i][j]) /
                  gauss.wick_se[i][j])});
  }

  doc.summary.push_back("fluctuate: max |z| = " + std::to_string(worst) + " over " +
                        std::to_string(kmax * (kmax + 1) / 2) + " covariance entries (" +
                        std::to_string(trials) + " trials, " +
                        std::to_string(report.wall_seconds) + "s)");
  if (spec.family == Family::laguerre) {
    const double gamma = spec.laguerre_gamma();
    const double printed = scale * theory::cov_laguerre_printed(1, 1, gamma);
    const double exact = scale * theory::cov_laguerre_exact_11(gamma);
    const double se = report.cov_se[0][0];
    doc.summary.push_back(
        "laguerre (1,1): cov=" + std::to_string(report.cov[0][0]) +
        ", exact target=" + std::to_string(exact) +
        " (z=" + std::to_string((report.cov[0][0] - exact) / se) + "), as-printed target=" +
        std::to_string(printed) +
        " (z=" + std::to_string((report.cov[0][0] - printed) / se) + ")");
  }

  const int rc = emit(doc, common);
  if (rc != 0) return rc;
  if (common.strict && !(worst <= zmax)) {
    std::cerr << "strict: max |z| " << worst << " exceeds " << zmax << '\n';
    return 3;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// theory
// ---------------------------------------------------------------------------

int cmd_theory(std::size_t kmax, double gamma, const CommonOpts& common) {
  if (kmax == 0) throw std::domain_error("--kmax must be positive");
  Document doc;
  doc.config.emplace_back("subcommand", "theory");
  doc.config.emplace_back("kmax", kmax);
  doc.config.emplace_back("gamma", gamma);
  finish_config(doc, common, false, false);

  doc.columns = {"table", "i", "j", "value"};
  auto push_row = [&](const char* table, std::size_t i, json j, double value) {
    doc.rows.push_back({json(table), json(i), std::move(j), json(value)});
  };
  for (std::size_t k = 1; k <= kmax; ++k) {
    push_row("moment_semicircle", k, json(), theory::semicircle_moment(static_cast<unsigned>(k)));
    push_row("moment_mp", k, json(), theory::mp_moment(static_cast<unsigned>(k), gamma));
    push_row("dev_hermite", k, json(), theory::dev_moment_hermite(static_cast<unsigned>(k)));
    push_row("dev_laguerre", k, json(),
             theory::dev_moment_laguerre(static_cast<unsigned>(k), gamma));
  }
  // Laguerre covariance in both variants: the bidiagonal profile-model form
  // (consistent with sampling) and the T_D + T_S series as printed, which
  // disagrees already at (1,1).
  const GeneralModelSpec model = laguerre_general_model(2.0, gamma);
  for (std::size_t i = 1; i <= kmax; ++i)
    for (std::size_t j = i; j <= kmax; ++j) {
      push_row("cov_hermite", i, json(j),
               theory::cov_hermite(static_cast<unsigned>(i), static_cast<unsigned>(j)));
      push_row("cov_laguerre_model", i, json(j),
               paths::general_covariance(static_cast<int>(i), static_cast<int>(j), model));
      push_row("cov_laguerre_printed", i, json(j),
               theory::cov_laguerre_printed(static_cast<unsigned>(i),
                                            static_cast<unsigned>(j), gamma));
    }

  doc.summary.push_back(
      "theory: covariance tables are the beta-free factors (multiply by 2/beta); at (1,1) "
      "the exact Laguerre value is gamma = " +
      std::to_string(theory::cov_laguerre_exact_11(gamma)) + ", the as-printed series gives " +
      std::to_string(theory::cov_laguerre_printed(1, 1, gamma)));
  return emit(doc, common);
}

// ---------------------------------------------------------------------------
// paths
// ---------------------------------------------------------------------------

int cmd_paths(int k, bool alternating, const CommonOpts& common) {
  if (k < 0) throw std::domain_error("--k must be nonnegative");
  Document doc;
  doc.config.emplace_back("subcommand", "paths");
  doc.config.emplace_back("k", k);
  doc.config.emplace_back("alternating", alternating);
  finish_config(doc, common, false, false);

  doc.columns = {"k", "r", "i", "count", "family_size"};
  const int r_max = alternating ? k : k / 2;
  std::string sizes;
  long long total = 0;
  for (int r = 0; r <= r_max; ++r) {
    const paths::ClassSums& sums = paths::class_sums(k, r, alternating);
    total += static_cast<long long>(sums.count);
    sizes += (r ? ", " : "") + std::to_string(sums.count);
    for (int i = 0; i <= r; ++i)
      doc.rows.push_back({json(k), json(r), json(i),
                          json(paths::descent_class_count(k, r, i, alternating)),
                          json(sums.count)});
  }
  doc.summary.push_back("paths: " + std::string(alternating ? "alternating" : "plain") +
                        " families at k=" + std::to_string(k) + " have sizes [" + sizes +
                        "], total " + std::to_string(total));
  return emit(doc, common);
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Spectral statistics of tridiagonal beta-ensembles"};
  app.require_subcommand(1);

  CommonOpts common;
  app.add_option("--seed", common.seed, "RNG seed")->capture_default_str();
  app.add_option("--format", common.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", common.out, "output file (default: stdout)");
  app.add_option("--workers", common.workers,
                 "worker threads (0 = SPECTRAL_WORKERS env or hardware)")
      ->capture_default_str();
  app.add_flag("--strict", common.strict, "exit 3 when a statistical band fails");

  auto* sample = app.add_subcommand("sample", "emit one sampled matrix");
  sample->fallthrough();
  EnsembleOpts sample_opts;
  add_ensemble_options(sample, sample_opts);
  bool unscaled = false;
  sample->add_flag("--unscaled", unscaled, "emit the unscaled ensemble");

  auto* hist = app.add_subcommand("histogram", "Sturm-count eigenvalue histogram");
  hist->fallthrough();
  EnsembleOpts hist_opts;
  add_ensemble_options(hist, hist_opts);
  unsigned bins = 25;
  double hist_lo = 0.0, hist_hi = 0.0;
  hist->add_option("--bins", bins, "number of bins")->capture_default_str();
  auto* lo_opt = hist->add_option("--lo", hist_lo, "lowest edge (default: support edge)");
  auto* hi_opt = hist->add_option("--hi", hist_hi, "highest edge (default: support edge)");

  auto* dev = app.add_subcommand("deviation",
                                 "eigenvalue-count deviation sweep (beta=inf Hermite)");
  dev->fallthrough();
  std::size_t n_start = 100000, dev_count = 100;
  double dev_lo = 0.2, dev_hi = 0.8, band = 0.02;
  dev->add_option("--n-start", n_start, "first matrix dimension")->capture_default_str();
  dev->add_option("--count", dev_count, "number of consecutive dimensions")
      ->capture_default_str();
  dev->add_option("--lo", dev_lo, "interval lower end")->capture_default_str();
  dev->add_option("--hi", dev_hi, "interval upper end")->capture_default_str();
  dev->add_option("--band", band, "allowed |mean - theoretical| under --strict")
      ->capture_default_str();

  auto* fluct = app.add_subcommand("fluctuate", "Monte Carlo trace-fluctuation covariance");
  fluct->fallthrough();
  EnsembleOpts fluct_opts;
  add_ensemble_options(fluct, fluct_opts);
  std::size_t kmax = 6, trials = 10000;
  double zmax = 4.0;
  bool want_gauss = false;
  fluct->add_option("--kmax", kmax, "highest trace power")->capture_default_str();
  fluct->add_option("--trials", trials, "Monte Carlo trials")->capture_default_str();
  fluct->add_option("--zmax", zmax, "allowed max |z| under --strict")->capture_default_str();
  fluct->add_flag("--gaussianity", want_gauss, "also report standardized moments");

  auto* theory_cmd = app.add_subcommand("theory", "closed-form moment and covariance tables");
  theory_cmd->fallthrough();
  std::size_t theory_kmax = 6;
  double theory_gamma = 0.5;
  theory_cmd->add_option("--kmax", theory_kmax, "table order")->capture_default_str();
  theory_cmd->add_option("--gamma", theory_gamma, "Laguerre ratio for the tables")
      ->capture_default_str();

  auto* paths_cmd = app.add_subcommand("paths", "descent-class tables of lattice-path families");
  paths_cmd->fallthrough();
  int paths_k = 4;
  bool alternating = false;
  paths_cmd->add_option("--k", paths_k, "path order")->capture_default_str();
  paths_cmd->add_flag("--alternating", alternating, "alternating families (length 2k)");

  try {
    app.parse(argc, argv);
    if (sample->parsed()) return cmd_sample(sample_opts, unscaled, common);
    if (hist->parsed())
      return cmd_histogram(hist_opts, bins, lo_opt->count() ? &hist_lo : nullptr,
                           hi_opt->count() ? &hist_hi : nullptr, common);
    if (dev->parsed()) return cmd_deviation(n_start, dev_count, dev_lo, dev_hi, band, common);
    if (fluct->parsed())
      return cmd_fluctuate(fluct_opts, kmax, trials, zmax, want_gauss, common);
    if (theory_cmd->parsed()) return cmd_theory(theory_kmax, theory_gamma, common);
    if (paths_cmd->parsed()) return cmd_paths(paths_k, alternating, common);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace spectral::cli
