// plfit: power Lindley analysis, fitting and Stieltjes-class verification.
//
// Exit codes: 0 success, 2 usage, 3 domain refusal, 4 numerical failure.

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "plindley/plindley.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitNumerical = 4;
constexpr int kExitInternal = 1;

struct Failure {
  int code;
  std::string message;
};

int exit_code_for(pl_status s) {
  switch (s) {
    case PL_OK:
      return kExitOk;
    case PL_ERR_INVALID_ARGUMENT:
    case PL_ERR_PARSE:
    case PL_ERR_VALIDATION:
    case PL_ERR_IO:
      return kExitUsage;
    case PL_ERR_DOMAIN:
      return kExitDomain;
    case PL_ERR_BRACKET:
    case PL_ERR_ACCURACY:
    case PL_ERR_OPTIMIZATION:
    case PL_ERR_NORMALIZATION:
    case PL_ERR_OVERFLOW:
      return kExitNumerical;
    case PL_ERR_INTERNAL:
      break;
  }
  return kExitInternal;
}

void check(pl_status s) {
  if (s != PL_OK) {
    throw Failure{exit_code_for(s), std::string(pl_status_name(s)) + ": " + pl_last_error()};
  }
}

[[noreturn]] void usage(const std::string& message) { throw Failure{kExitUsage, message}; }

struct TableDeleter {
  void operator()(pl_table* t) const { pl_table_destroy(t); }
};
using TablePtr = std::unique_ptr<pl_table, TableDeleter>;

struct PerturbationDeleter {
  void operator()(pl_perturbation* h) const { pl_perturbation_destroy(h); }
};

struct RngDeleter {
  void operator()(pl_rng* r) const { pl_rng_destroy(r); }
};

std::string fmt(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string fmt_bound(double v) {
  if (std::isinf(v)) {
    return v < 0 ? "-inf" : "inf";
  }
  return fmt(v);
}

TablePtr load_table(const std::string& data, bool proportions) {
  pl_table* raw = nullptr;
  check(pl_table_load(data.c_str(), &raw));
  TablePtr t(raw);
  if (proportions) {
    check(pl_table_set_units(t.get(), PL_UNITS_PROPORTION));
  }
  return t;
}

std::pair<double, double> parse_pair(const std::string& text, char sep, const char* what) {
  const auto pos = text.find(sep);
  if (pos == std::string::npos) {
    usage(std::string(what) + " must look like A" + sep + "B");
  }
  try {
    std::size_t used_a = 0;
    std::size_t used_b = 0;
    const std::string sa = text.substr(0, pos);
    const std::string sb = text.substr(pos + 1);
    const double a = std::stod(sa, &used_a);
    const double b = std::stod(sb, &used_b);
    if (used_a != sa.size() || used_b != sb.size()) {
      throw std::invalid_argument("trailing characters");
    }
    return {a, b};
  } catch (const std::exception&) {
    usage(std::string("cannot parse ") + what + " '" + text + "'");
  }
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
  double alpha = 0.0;
  double beta = 0.0;
};

std::string determinacy(const pl_analyticity_report& r) {
  return r.determinate ? "moment-determinate" : "moment-indeterminate";
}

const char* cf_class_name(pl_cf_class c) {
  switch (c) {
    case PL_CF_ENTIRE:
      return "entire";
    case PL_CF_ANALYTIC_ON_INTERVAL:
      return "analytic-on-interval";
    case PL_CF_NOT_ANALYTIC_AT_ZERO:
      return "not-analytic-at-0";
  }
  return "unknown";
}

int run_analyze(const AnalyzeArgs& a) {
  if (!(a.alpha > 0.0) || !(a.beta > 0.0)) {
    usage("--alpha and --beta must be positive");
  }
  pl_analyticity_report r{};
  check(pl_analyze(a.alpha, a.beta, &r));

  std::string summary = cf_class_name(r.cf_class);
  if (r.has_order) {
    summary += ", order " + fmt(r.order) + ", type " + fmt(r.type);
  }
  summary += ", " + determinacy(r);
  std::cout << summary << "\n";
  std::cout << "distribution: PL(" << fmt(a.alpha) << ", " << fmt(a.beta) << ")\n";
  if (r.mgf_empty) {
    std::cout << "mgf: none (E[exp(tX)] is infinite for every t > 0)\n";
  } else {
    std::cout << "mgf: (" << fmt_bound(r.mgf_lo) << ", " << fmt_bound(r.mgf_hi) << ")\n";
  }
  std::cout << "heavy-tailed: " << (r.heavy_tailed ? "yes" : "no") << "\n";
  if (!r.determinate) {
    std::cout << "note: alpha < 1/2; Stieltjes classes exist (see `plfit stieltjes`)\n";
  }
  return kExitOk;
}

// -------------------------------------------------------------------- fit

struct ObjectiveArgs {
  std::string kind = "binned";
  double shift = 0.5;
  std::string zero_handling = "include";
  std::optional<double> zero_point;
};

pl_objective make_objective(const ObjectiveArgs& a) {
  pl_objective o{};
  pl_objective_default(&o);
  if (a.kind == "binned") {
    o.kind = PL_OBJ_BINNED;
  } else if (a.kind == "pdf") {
    o.kind = PL_OBJ_PDF;
  } else if (a.kind == "pdf-shifted") {
    o.kind = PL_OBJ_PDF_SHIFTED;
  } else {
    usage("unknown objective '" + a.kind + "' (binned, pdf, pdf-shifted)");
  }
  o.shift = a.shift;
  if (a.zero_handling == "include") {
    o.zero_handling = PL_ZERO_INCLUDE;
  } else if (a.zero_handling == "exclude") {
    o.zero_handling = PL_ZERO_EXCLUDE;
  } else if (a.zero_handling == "substitute") {
    o.zero_handling = PL_ZERO_SUBSTITUTE;
  } else {
    usage("unknown zero handling '" + a.zero_handling + "' (include, exclude, substitute)");
  }
  if (a.zero_point) {
    o.zero_handling = PL_ZERO_SUBSTITUTE;
    o.zero_point = *a.zero_point;
  }
  if (o.kind == PL_OBJ_PDF_SHIFTED && !(o.shift > 0.0)) {
    usage("--shift must be positive");
  }
  if (o.zero_handling == PL_ZERO_SUBSTITUTE && !(o.zero_point > 0.0)) {
    usage("--zero-point must be positive");
  }
  return o;
}

std::string describe_objective(const pl_objective& o) {
  switch (o.kind) {
    case PL_OBJ_BINNED:
      return "binned";
    case PL_OBJ_PDF_SHIFTED:
      return "pdf-shifted(shift=" + fmt(o.shift) + ")";
    case PL_OBJ_PDF:
      switch (o.zero_handling) {
        case PL_ZERO_INCLUDE:
          return "pdf(zero=include)";
        case PL_ZERO_EXCLUDE:
          return "pdf(zero=exclude)";
        case PL_ZERO_SUBSTITUTE:
          return "pdf(zero->" + fmt(o.zero_point) + ")";
      }
  }
  return "unknown";
}

struct FitArgs {
  std::string data;
  std::string model = "pl";
  ObjectiveArgs objective;
  std::string format = "table";
  bool proportions = false;
  std::vector<std::string> pl_at;
  std::vector<std::string> weibull_at;
};

struct Row {
  std::string label;
  pl_fit_report report{};
  std::string annotation;
};

std::string model_name(pl_model m) {
  return m == PL_MODEL_POWER_LINDLEY ? "power-lindley" : "weibull";
}

std::string annotation_for(const pl_fit_report& r) {
  if (r.model != PL_MODEL_POWER_LINDLEY) {
    return "";
  }
  pl_analyticity_report a{};
  check(pl_analyze(r.shape, r.second, &a));
  return a.determinate ? "" : "moment-indeterminate (α<1/2)";
}

void print_table(const std::string& table_name, const pl_objective& o,
                 const std::vector<Row>& rows) {
  std::cout << "data: " << table_name << "\n";
  std::cout << "objective: " << describe_objective(o) << "\n";
  std::printf("%-22s %-28s %12s %10s %10s %10s %12s\n", "model", "parameters", "error", "mean",
              "median", "x_bar", "|x_bar-mean|");
  for (const auto& row : rows) {
    const auto& r = row.report;
    const std::string params = r.model == PL_MODEL_POWER_LINDLEY
                                   ? "alpha=" + fmt(r.shape, 5) + " beta=" + fmt(r.second, 5)
                                   : "shape=" + fmt(r.shape, 5) + " scale=" + fmt(r.second, 5);
    std::printf("%-22s %-28s %12.4e %10.4f %10.4f %10.4f %12.4f", row.label.c_str(),
                params.c_str(), r.error, r.mean, r.median, r.sample_mean, r.mean_gap);
    if (!r.converged) {
      std::printf("  [not converged]");
    }
    if (!row.annotation.empty()) {
      std::printf("  %s", row.annotation.c_str());
    }
    std::printf("\n");
  }
}

void print_csv(const pl_objective& o, const std::vector<Row>& rows) {
  std::cout << "model,param1,param2,error,mean,median,sample_mean,mean_gap,converged,objective,"
               "annotation\n";
  for (const auto& row : rows) {
    const auto& r = row.report;
    std::cout << row.label << ',' << fmt(r.shape, 17) << ',' << fmt(r.second, 17) << ','
              << fmt(r.error, 17) << ',' << fmt(r.mean, 17) << ',' << fmt(r.median, 17) << ','
              << fmt(r.sample_mean, 17) << ',' << fmt(r.mean_gap, 17) << ',' << r.converged
              << ',' << describe_objective(o) << ',' << row.annotation << "\n";
  }
}

nlohmann::json to_json(const Row& row) {
  const auto& r = row.report;
  nlohmann::json j;
  j["model"] = row.label;
  if (r.model == PL_MODEL_POWER_LINDLEY) {
    j["params"] = {{"alpha", r.shape}, {"beta", r.second}};
  } else {
    j["params"] = {{"shape", r.shape}, {"scale", r.second}};
  }
  j["error"] = r.error;
  j["mean"] = r.mean;
  j["median"] = r.median;
  j["sample_mean"] = r.sample_mean;
  j["mean_gap"] = r.mean_gap;
  j["converged"] = r.converged != 0;
  if (!row.annotation.empty()) {
    j["annotation"] = row.annotation;
  }
  return j;
}

std::vector<double> parse_param_list(const std::vector<std::string>& v, const char* what) {
  if (v.empty()) {
    return {};
  }
  if (v.size() != 2) {
    usage(std::string(what) + " takes two values");
  }
  std::vector<double> out;
  for (const auto& s : v) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(s, &used));
      if (used != s.size()) {
        throw std::invalid_argument("trailing");
      }
    } catch (const std::exception&) {
      usage(std::string("cannot parse ") + what + " value '" + s + "'");
    }
  }
  return out;
}

int run_fit(const FitArgs& a) {
  if (a.model != "pl" && a.model != "weibull" && a.model != "both") {
    usage("unknown model '" + a.model + "' (pl, weibull, both)");
  }
  if (a.format != "table" && a.format != "csv" && a.format != "json") {
    usage("unknown format '" + a.format + "' (table, csv, json)");
  }
  const pl_objective o = make_objective(a.objective);
  const auto pl_at = parse_param_list(a.pl_at, "--pl-at");
  const auto weibull_at = parse_param_list(a.weibull_at, "--weibull-at");
  TablePtr table = load_table(a.data, a.proportions);

  std::vector<Row> rows;
  std::optional<double> pl_error;
  std::optional<double> weibull_error;
  for (pl_model m : {PL_MODEL_POWER_LINDLEY, PL_MODEL_WEIBULL}) {
    const bool wanted = a.model == "both" || (a.model == "pl" && m == PL_MODEL_POWER_LINDLEY) ||
                        (a.model == "weibull" && m == PL_MODEL_WEIBULL);
    if (!wanted) {
      continue;
    }
    Row row;
    row.label = model_name(m);
    check(pl_fit(table.get(), m, &o, nullptr, &row.report));
    row.annotation = annotation_for(row.report);
    (m == PL_MODEL_POWER_LINDLEY ? pl_error : weibull_error) = row.report.error;
    rows.push_back(std::move(row));
  }
  const auto add_fixed = [&](pl_model m, const std::vector<double>& p) {
    if (p.empty()) {
      return;
    }
    Row row;
    row.label = model_name(m) + "@fixed";
    check(pl_fit_report_at(table.get(), m, p[0], p[1], &o, &row.report));
    row.annotation = annotation_for(row.report);
    rows.push_back(std::move(row));
  };
  add_fixed(PL_MODEL_POWER_LINDLEY, pl_at);
  add_fixed(PL_MODEL_WEIBULL, weibull_at);

  std::string verdict;
  if (pl_error && weibull_error) {
    verdict = *pl_error < *weibull_error
                  ? "power-lindley error < weibull error: power-lindley fits better"
                  : "power-lindley error >= weibull error: weibull fits at least as well";
  }

  if (a.format == "table") {
    print_table(pl_table_name(table.get()), o, rows);
    if (!verdict.empty()) {
      std::cout << "verdict: " << verdict << "\n";
    }
  } else if (a.format == "csv") {
    print_csv(o, rows);
    if (!verdict.empty()) {
      std::cout << "# verdict: " << verdict << "\n";
    }
  } else {
    nlohmann::json j;
    j["data"] = pl_table_name(table.get());
    j["objective"] = describe_objective(o);
    j["rows"] = nlohmann::json::array();
    for (const auto& row : rows) {
      j["rows"].push_back(to_json(row));
    }
    if (!verdict.empty()) {
      j["verdict"] = verdict;
    }
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

// -------------------------------------------------------------- stieltjes

struct StieltjesArgs {
  double alpha = 0.0;
  double beta = 0.0;
  int which = 1;
  double b = 1.0;
  double gamma = 0.0;
  int kmax = 10;
  double epsilon = 1.0;
  std::string emit_density;
  std::string range = "0:10";
  int points = 200;
};

double quad_rtol_from_env() {
  const char* env = std::getenv("PLFIT_QUAD_RTOL");
  if (env == nullptr || *env == '\0') {
    return 0.0;
  }
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(env, &end);
  if (errno != 0 || end == env || *end != '\0' || !(v > 0.0) || !(v < 1.0)) {
    usage(std::string("PLFIT_QUAD_RTOL must be a number in (0, 1), got '") + env + "'");
  }
  return v;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    x[static_cast<std::size_t>(i)] = i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1);
  }
  return x;
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto [lo, hi] = parse_pair(text, ':', "--range");
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi) || lo < 0.0) {
    usage("--range needs 0 <= LO < HI, got '" + text + "'");
  }
  return {lo, hi};
}

int run_stieltjes(const StieltjesArgs& a) {
  if (!(a.alpha > 0.0) || !(a.beta > 0.0)) {
    usage("--alpha and --beta must be positive");
  }
  if (a.which < 1 || a.which > 3) {
    usage("--which must be 1, 2 or 3");
  }
  if (a.kmax < 0) {
    usage("--kmax must be >= 0");
  }
  if (!(std::fabs(a.epsilon) <= 1.0)) {
    usage("--epsilon must lie in [-1, 1]");
  }
  if (!a.emit_density.empty() && a.points < 2) {
    usage("--points must be >= 2");
  }
  const double rtol = quad_rtol_from_env();
  if (!(a.alpha < 0.5)) {
    throw Failure{kExitDomain,
                  "refusing alpha = " + fmt(a.alpha) +
                      ": PL(alpha, beta) is moment-determinate for alpha >= 1/2, so no "
                      "Stieltjes class exists (the determinacy boundary is alpha = 1/2)"};
  }
  std::optional<std::pair<double, double>> range;
  if (!a.emit_density.empty()) {
    range = parse_range(a.range);
  }

  pl_perturbation* raw = nullptr;
  check(pl_perturbation_create(static_cast<pl_family>(a.which), a.alpha, a.beta, a.b, a.gamma,
                               &raw));
  std::unique_ptr<pl_perturbation, PerturbationDeleter> h(raw);
  pl_perturbation_info info{};
  check(pl_perturbation_info_get(h.get(), &info));

  std::cout << "perturbation: H" << a.which << " for PL(" << fmt(a.alpha) << ", " << fmt(a.beta)
            << ")";
  if (a.which == 2) {
    std::cout << ", b = " << fmt(info.b) << ", gamma = " << fmt(info.gamma);
  }
  std::cout << "\nnormalization M: " << fmt(info.constant, 10) << "\n";

  std::vector<pl_moment_residual> res(static_cast<std::size_t>(a.kmax) + 1);
  check(pl_verify_vanishing_moments(h.get(), a.kmax, rtol, res.data()));
  std::printf("%4s %14s %14s %10s\n", "k", "residual", "error_bound", "converged");
  bool all_converged = true;
  for (const auto& r : res) {
    std::printf("%4d %14.4e %14.4e %10s\n", r.k, r.residual, r.error_bound,
                r.converged ? "yes" : "no");
    all_converged = all_converged && r.converged;
  }

  if (range) {
    std::ofstream out(a.emit_density);
    if (!out) {
      usage("cannot write '" + a.emit_density + "'");
    }
    out << "series,x,y\n";
    const std::string label = "f_eps=" + fmt(a.epsilon);
    for (double x : linspace(range->first, range->second, a.points)) {
      double y = 0.0;
      check(pl_stieltjes_density(h.get(), a.epsilon, x, &y));
      out << label << ',' << fmt(x, 17) << ',' << fmt(y, 17) << "\n";
    }
    if (!out) {
      usage("error writing '" + a.emit_density + "'");
    }
  }

  if (!all_converged) {
    throw Failure{kExitNumerical, "quadrature did not converge for every k"};
  }
  return kExitOk;
}

// -------------------------------------------------------------- plot-data

struct PlotArgs {
  std::string data;
  std::vector<std::string> overlay;
  std::string range = "0:10";
  int points = 200;
  ObjectiveArgs objective;
  bool proportions = false;
};

int run_plot(const PlotArgs& a) {
  if (a.points < 2) {
    usage("--points must be >= 2");
  }
  const auto [lo, hi] = parse_range(a.range);
  bool want_pl = false;
  bool want_weibull = false;
  for (const auto& s : a.overlay) {
    if (s == "fitted-pl") {
      want_pl = true;
    } else if (s == "fitted-weibull") {
      want_weibull = true;
    } else {
      usage("unknown overlay '" + s + "' (fitted-pl, fitted-weibull)");
    }
  }
  const pl_objective o = make_objective(a.objective);
  TablePtr table = load_table(a.data, a.proportions);

  const std::size_t n = pl_table_size(table.get());
  std::vector<double> weights(n);
  check(pl_table_weights(table.get(), weights.data()));

  std::ostringstream out;
  out << "series,x,y\n";
  for (std::size_t i = 0; i < n; ++i) {
    double v = 0.0;
    double f = 0.0;
    check(pl_table_row(table.get(), i, &v, &f));
    if (v >= lo && v <= hi) {
      out << "data," << fmt(v, 17) << ',' << fmt(weights[i], 17) << "\n";
    }
  }
  const auto curve = [&](pl_model m, const char* label) {
    pl_fit_report r{};
    check(pl_fit(table.get(), m, &o, nullptr, &r));
    for (double x : linspace(lo, hi, a.points)) {
      double y = 0.0;
      check(m == PL_MODEL_POWER_LINDLEY ? pl_pdf(r.shape, r.second, x, &y)
                                        : pl_weibull_pdf(r.shape, r.second, x, &y));
      out << label << ',' << fmt(x, 17) << ',' << fmt(y, 17) << "\n";
    }
  };
  if (want_pl) {
    curve(PL_MODEL_POWER_LINDLEY, "fitted-pl");
  }
  if (want_weibull) {
    curve(PL_MODEL_WEIBULL, "fitted-weibull");
  }
  std::cout << out.str();
  return kExitOk;
}

// ----------------------------------------------------------------- sample

struct SampleArgs {
  double alpha = 0.0;
  double beta = 0.0;
  long long n = 0;
  std::uint64_t seed = 1;
};

int run_sample(const SampleArgs& a) {
  if (!(a.alpha > 0.0) || !(a.beta > 0.0)) {
    usage("--alpha and --beta must be positive");
  }
  if (a.n < 1) {
    usage("--n must be >= 1");
  }
  pl_rng* raw = nullptr;
  check(pl_rng_create(a.seed, &raw));
  std::unique_ptr<pl_rng, RngDeleter> rng(raw);
  std::vector<double> draws(static_cast<std::size_t>(a.n));
  check(pl_sample(a.alpha, a.beta, rng.get(), draws.size(), draws.data()));
  std::string out;
  out.reserve(draws.size() * 24);
  for (double d : draws) {
    out += fmt(d, 17);
    out += '\n';
  }
  std::fwrite(out.data(), 1, out.size(), stdout);
  return kExitOk;
}

void add_objective_options(CLI::App* cmd, ObjectiveArgs& o) {
  cmd->add_option("--objective", o.kind, "binned | pdf | pdf-shifted")->capture_default_str();
  cmd->add_option("--shift", o.shift, "evaluation shift for pdf-shifted")->capture_default_str();
  cmd->add_option("--zero-handling", o.zero_handling,
                  "pdf at value 0: include | exclude | substitute")
      ->capture_default_str();
  cmd->add_option("--zero-point", o.zero_point,
                  "evaluate the pdf objective at this point instead of 0 (implies substitute)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Power Lindley distribution toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(pl_version()));

  AnalyzeArgs analyze;
  auto* c_analyze = app.add_subcommand("analyze", "characteristic function and moment determinacy");
  c_analyze->add_option("--alpha", analyze.alpha, "shape alpha > 0")->required();
  c_analyze->add_option("--beta", analyze.beta, "rate beta > 0")->required();

  FitArgs fit;
  auto* c_fit = app.add_subcommand("fit", "least-squares fit to a frequency table");
  c_fit->add_option("--data", fit.data, "embedded table name or CSV path")->required();
  c_fit->add_option("--model", fit.model, "pl | weibull | both")->capture_default_str();
  add_objective_options(c_fit, fit.objective);
  c_fit->add_option("--format", fit.format, "table | csv | json")->capture_default_str();
  c_fit->add_flag("--weights-are-proportions", fit.proportions,
                  "treat frequencies as proportions instead of auto-detecting");
  c_fit->add_option("--pl-at", fit.pl_at, "also report PL at fixed ALPHA BETA")
      ->expected(2)
      ->delimiter(',');
  c_fit->add_option("--weibull-at", fit.weibull_at, "also report Weibull at fixed SHAPE SCALE")
      ->expected(2)
      ->delimiter(',');

  StieltjesArgs st;
  auto* c_st = app.add_subcommand("stieltjes", "verify vanishing moments of a perturbation");
  c_st->add_option("--alpha", st.alpha, "shape alpha < 1/2")->required();
  c_st->add_option("--beta", st.beta, "rate beta > 0")->required();
  c_st->add_option("--which", st.which, "perturbation 1 | 2 | 3")->capture_default_str();
  c_st->add_option("--b", st.b, "H2 scale b > 0")->capture_default_str();
  c_st->add_option("--gamma", st.gamma, "H2 exponent, alpha < gamma < 1/2 (default midpoint)");
  c_st->add_option("--kmax", st.kmax, "highest moment order")->capture_default_str();
  c_st->add_option("--epsilon", st.epsilon, "class member f(1 + eps H), |eps| <= 1")
      ->capture_default_str();
  c_st->add_option("--emit-density", st.emit_density, "write the f_eps curve as CSV");
  c_st->add_option("--range", st.range, "LO:HI for --emit-density")->capture_default_str();
  c_st->add_option("--points", st.points, "curve samples for --emit-density")
      ->capture_default_str();

  PlotArgs plot;
  auto* c_plot = app.add_subcommand("plot-data", "data and fitted curves as series,x,y CSV");
  c_plot->add_option("--data", plot.data, "embedded table name or CSV path")->required();
  c_plot->add_option("--overlay", plot.overlay, "fitted-pl,fitted-weibull")->delimiter(',');
  c_plot->add_option("--range", plot.range, "LO:HI")->capture_default_str();
  c_plot->add_option("--points", plot.points, "curve samples")->capture_default_str();
  add_objective_options(c_plot, plot.objective);
  c_plot->add_flag("--weights-are-proportions", plot.proportions,
                   "treat frequencies as proportions instead of auto-detecting");

  SampleArgs sample;
  auto* c_sample = app.add_subcommand("sample", "draw from PL(alpha, beta)");
  c_sample->add_option("--alpha", sample.alpha, "shape alpha > 0")->required();
  c_sample->add_option("--beta", sample.beta, "rate beta > 0")->required();
  c_sample->add_option("--n", sample.n, "number of draws")->required();
  c_sample->add_option("--seed", sample.seed, "generator seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c_analyze) {
      return run_analyze(analyze);
    }
    if (*c_fit) {
      return run_fit(fit);
    }
    if (*c_st) {
      return run_stieltjes(st);
    }
    if (*c_plot) {
      return run_plot(plot);
    }
    if (*c_sample) {
      return run_sample(sample);
    }
  } catch (const Failure& f) {
    std::cerr << "plfit: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "plfit: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
