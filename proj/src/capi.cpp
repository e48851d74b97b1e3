#include "plindley/plindley.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "plindley/distribution.hpp"
#include "plindley/errors.hpp"
#include "plindley/fitting.hpp"
#include "plindley/moment_analysis.hpp"
#include "plindley/stieltjes.hpp"
#include "plindley/table_io.hpp"

struct pl_rng {
  plindley::RandomSource source;
};

struct pl_perturbation {
  plindley::stieltjes::Perturbation h;
};

struct pl_table {
  plindley::fitting::FrequencyTable table;
};

namespace {

thread_local std::string g_last_error;

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <typename F>
pl_status guarded(F&& body) noexcept {
  using namespace plindley;
  try {
    body();
    return PL_OK;
  } catch (const InvalidArgument& e) {
    g_last_error = e.what();
    return PL_ERR_INVALID_ARGUMENT;
  } catch (const DomainError& e) {
    g_last_error = e.what();
    return PL_ERR_DOMAIN;
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return PL_ERR_PARSE;
  } catch (const ValidationError& e) {
    g_last_error = e.what();
    return PL_ERR_VALIDATION;
  } catch (const IoError& e) {
    g_last_error = e.what();
    return PL_ERR_IO;
  } catch (const BracketError& e) {
    g_last_error = e.what();
    return PL_ERR_BRACKET;
  } catch (const AccuracyError& e) {
    g_last_error = e.what();
    return PL_ERR_ACCURACY;
  } catch (const OptimizationError& e) {
    g_last_error = e.what();
    return PL_ERR_OPTIMIZATION;
  } catch (const NormalizationError& e) {
    g_last_error = e.what();
    return PL_ERR_NORMALIZATION;
  } catch (const OverflowError& e) {
    g_last_error = e.what();
    return PL_ERR_OVERFLOW;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PL_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return PL_ERR_INTERNAL;
  }
}

template <typename T>
T& require(T* p, const char* what) {
  if (p == nullptr) {
    throw InvalidArgument(std::string(what) + " must not be NULL");
  }
  return *p;
}

plindley::fitting::Model to_model(pl_model m) {
  switch (m) {
    case PL_MODEL_POWER_LINDLEY:
      return plindley::fitting::Model::PowerLindley;
    case PL_MODEL_WEIBULL:
      return plindley::fitting::Model::Weibull;
  }
  throw InvalidArgument("unknown model");
}

plindley::fitting::FitObjective to_objective(const pl_objective* o) {
  using namespace plindley::fitting;
  FitObjective obj;
  if (o == nullptr) {
    return obj;
  }
  switch (o->kind) {
    case PL_OBJ_BINNED:
      obj.kind = ObjectiveKind::BinnedMass;
      break;
    case PL_OBJ_PDF:
      obj.kind = ObjectiveKind::PdfAtValues;
      break;
    case PL_OBJ_PDF_SHIFTED:
      obj.kind = ObjectiveKind::PdfAtShifted;
      break;
    default:
      throw InvalidArgument("unknown objective kind");
  }
  switch (o->zero_handling) {
    case PL_ZERO_INCLUDE:
      obj.zero_handling = ZeroHandling::Include;
      break;
    case PL_ZERO_EXCLUDE:
      obj.zero_handling = ZeroHandling::Exclude;
      break;
    case PL_ZERO_SUBSTITUTE:
      obj.zero_handling = ZeroHandling::Substitute;
      break;
    default:
      throw InvalidArgument("unknown zero handling");
  }
  obj.shift = o->shift;
  obj.zero_point = o->zero_point;
  obj.validate();
  return obj;
}

plindley::fitting::ModelParams to_params(pl_model model, double shape, double second) {
  if (to_model(model) == plindley::fitting::Model::PowerLindley) {
    return plindley::PLParams(shape, second);
  }
  return plindley::WeibullParams(shape, second);
}

void fill_report(const plindley::fitting::FitReport& r, pl_fit_report& out) {
  using namespace plindley;
  if (const auto* pl = std::get_if<PLParams>(&r.params)) {
    out.model = PL_MODEL_POWER_LINDLEY;
    out.shape = pl->alpha();
    out.second = pl->beta();
  } else {
    const auto& w = std::get<WeibullParams>(r.params);
    out.model = PL_MODEL_WEIBULL;
    out.shape = w.shape();
    out.second = w.scale();
  }
  out.error = r.error;
  out.mean = r.mean;
  out.median = r.median;
  out.sample_mean = r.sample_mean;
  out.mean_gap = r.mean_gap;
  out.converged = r.converged ? 1 : 0;
}

template <typename F>
pl_status pl_eval(double alpha, double beta, double* out, F&& f) {
  return guarded([&] { require(out, "out") = f(plindley::PLParams(alpha, beta)); });
}

}  // namespace

extern "C" {

const char* pl_status_name(pl_status status) {
  switch (status) {
    case PL_OK:
      return "ok";
    case PL_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case PL_ERR_DOMAIN:
      return "domain error";
    case PL_ERR_PARSE:
      return "parse error";
    case PL_ERR_VALIDATION:
      return "validation error";
    case PL_ERR_IO:
      return "i/o error";
    case PL_ERR_BRACKET:
      return "bracket error";
    case PL_ERR_ACCURACY:
      return "accuracy error";
    case PL_ERR_OPTIMIZATION:
      return "optimization error";
    case PL_ERR_NORMALIZATION:
      return "normalization error";
    case PL_ERR_OVERFLOW:
      return "overflow";
    case PL_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* pl_last_error(void) { return g_last_error.c_str(); }

const char* pl_version(void) { return "1.0.0"; }

pl_status pl_pdf(double alpha, double beta, double x, double* out) {
  return pl_eval(alpha, beta, out, [x](const auto& p) { return plindley::pdf(p, x); });
}

pl_status pl_log_pdf(double alpha, double beta, double x, double* out) {
  return pl_eval(alpha, beta, out, [x](const auto& p) { return plindley::log_pdf(p, x); });
}

pl_status pl_survival(double alpha, double beta, double x, double* out) {
  return pl_eval(alpha, beta, out, [x](const auto& p) { return plindley::survival(p, x); });
}

pl_status pl_cdf(double alpha, double beta, double x, double* out) {
  return pl_eval(alpha, beta, out, [x](const auto& p) { return plindley::cdf(p, x); });
}

pl_status pl_hazard(double alpha, double beta, double x, double* out) {
  return pl_eval(alpha, beta, out, [x](const auto& p) { return plindley::hazard(p, x); });
}

pl_status pl_quantile(double alpha, double beta, double u, double* out) {
  return pl_eval(alpha, beta, out, [u](const auto& p) { return plindley::quantile(p, u); });
}

pl_status pl_moment(double alpha, double beta, int k, double* out) {
  return pl_eval(alpha, beta, out, [k](const auto& p) { return plindley::moment(p, k); });
}

pl_status pl_log_moment(double alpha, double beta, int k, double* out) {
  return pl_eval(alpha, beta, out, [k](const auto& p) { return plindley::log_moment(p, k); });
}

pl_status pl_mean(double alpha, double beta, double* out) {
  return pl_eval(alpha, beta, out, [](const auto& p) { return plindley::mean(p); });
}

pl_status pl_variance(double alpha, double beta, double* out) {
  return pl_eval(alpha, beta, out, [](const auto& p) { return plindley::variance(p); });
}

pl_status pl_weibull_pdf(double shape, double scale, double x, double* out) {
  return guarded(
      [&] { require(out, "out") = plindley::pdf(plindley::WeibullParams(shape, scale), x); });
}

pl_status pl_weibull_cdf(double shape, double scale, double x, double* out) {
  return guarded(
      [&] { require(out, "out") = plindley::cdf(plindley::WeibullParams(shape, scale), x); });
}

pl_status pl_weibull_mean(double shape, double scale, double* out) {
  return guarded(
      [&] { require(out, "out") = plindley::mean(plindley::WeibullParams(shape, scale)); });
}

pl_status pl_weibull_median(double shape, double scale, double* out) {
  return guarded(
      [&] { require(out, "out") = plindley::median(plindley::WeibullParams(shape, scale)); });
}

pl_status pl_rng_create(uint64_t seed, pl_rng** out) {
  return guarded([&] { require(out, "out") = new pl_rng{plindley::RandomSource(seed)}; });
}

void pl_rng_destroy(pl_rng* rng) { delete rng; }

pl_status pl_sample(double alpha, double beta, pl_rng* rng, size_t n, double* out) {
  return guarded([&] {
    auto& source = require(rng, "rng").source;
    require(out, "out");
    const plindley::PLParams p(alpha, beta);
    if (n == 0) {
      throw plindley::DomainError("sample size must be >= 1");
    }
    for (size_t i = 0; i < n; ++i) {
      out[i] = plindley::sample_one(p, source);
    }
  });
}

pl_status pl_analyze(double alpha, double beta, pl_analyticity_report* out) {
  return guarded([&] {
    auto& dst = require(out, "out");
    const auto r = plindley::analysis::analyze(plindley::PLParams(alpha, beta));
    using plindley::analysis::CfClass;
    dst.cf_class = r.cf_class == CfClass::Entire               ? PL_CF_ENTIRE
                   : r.cf_class == CfClass::AnalyticOnInterval ? PL_CF_ANALYTIC_ON_INTERVAL
                                                               : PL_CF_NOT_ANALYTIC_AT_ZERO;
    dst.has_order = r.order.has_value() ? 1 : 0;
    dst.order = r.order.value_or(NAN);
    dst.type = r.type.value_or(NAN);
    dst.mgf_empty = r.mgf.empty ? 1 : 0;
    dst.mgf_lo = r.mgf.lo;
    dst.mgf_hi = r.mgf.hi;
    dst.determinate = r.determinate ? 1 : 0;
    dst.heavy_tailed = r.heavy_tailed ? 1 : 0;
  });
}

pl_status pl_lindley_cf(double beta, double t, double* re, double* im) {
  return guarded([&] {
    const auto v = plindley::analysis::lindley_cf(beta, t);
    require(re, "re") = v.real();
    require(im, "im") = v.imag();
  });
}

pl_status pl_lin_function(double alpha, double beta, double x, double* out) {
  return pl_eval(alpha, beta, out,
                 [x](const auto& p) { return plindley::analysis::lin_function(p, x); });
}

pl_status pl_lin_derivative(double alpha, double beta, double x, double* out) {
  return pl_eval(alpha, beta, out,
                 [x](const auto& p) { return plindley::analysis::lin_derivative(p, x); });
}

pl_status pl_moment_growth_exponent(double alpha, double beta, int max_order, double* out) {
  return pl_eval(alpha, beta, out, [max_order](const auto& p) {
    return plindley::analysis::moment_growth_exponent(p, max_order);
  });
}

pl_status pl_perturbation_create(pl_family which, double alpha, double beta, double b,
                                 double gamma, pl_perturbation** out) {
  return guarded([&] {
    auto& dst = require(out, "out");
    using plindley::stieltjes::Family;
    Family family;
    switch (which) {
      case PL_H1:
        family = Family::H1;
        break;
      case PL_H2:
        family = Family::H2;
        break;
      case PL_H3:
        family = Family::H3;
        break;
      default:
        throw InvalidArgument("unknown perturbation family");
    }
    const plindley::stieltjes::PerturbationSpec spec(
        family, plindley::PLParams(alpha, beta), b > 0.0 ? b : 1.0, gamma);
    dst = new pl_perturbation{plindley::stieltjes::normalize(spec)};
  });
}

void pl_perturbation_destroy(pl_perturbation* h) { delete h; }

pl_status pl_perturbation_info_get(const pl_perturbation* h, pl_perturbation_info* out) {
  return guarded([&] {
    const auto& spec = require(h, "h").h.spec();
    auto& dst = require(out, "out");
    using plindley::stieltjes::Family;
    dst.which = spec.which() == Family::H1 ? PL_H1 : spec.which() == Family::H2 ? PL_H2 : PL_H3;
    dst.alpha = spec.params().alpha();
    dst.beta = spec.params().beta();
    dst.b = spec.b();
    dst.gamma = spec.gamma();
    dst.constant = h->h.constant();
  });
}

pl_status pl_perturbation_value(const pl_perturbation* h, double x, double* out) {
  return guarded([&] { require(out, "out") = require(h, "h").h(x); });
}

pl_status pl_stieltjes_density(const pl_perturbation* h, double epsilon, double x, double* out) {
  return guarded([&] {
    const plindley::stieltjes::StieltjesMember member(require(h, "h").h, epsilon);
    require(out, "out") = member.density(x);
  });
}

pl_status pl_verify_vanishing_moments(const pl_perturbation* h, int k_max, double rel_tol,
                                      pl_moment_residual* out) {
  return guarded([&] {
    const auto& pert = require(h, "h").h;
    require(out, "out");
    plindley::numerics::QuadratureSpec spec;
    if (rel_tol > 0.0) {
      spec.rel_tol = rel_tol;
    }
    const auto residuals = plindley::stieltjes::verify_vanishing_moments(pert, k_max, spec);
    for (std::size_t i = 0; i < residuals.size(); ++i) {
      out[i] = {residuals[i].k, residuals[i].residual, residuals[i].error_bound,
                residuals[i].converged ? 1 : 0};
    }
  });
}

pl_status pl_gr_sine_integral(double p, double q, double t, double* out) {
  return guarded([&] { require(out, "out") = plindley::stieltjes::gr_sine_integral(p, q, t); });
}

pl_status pl_gr_cosine_integral(double p, double q, double t, double* out) {
  return guarded([&] { require(out, "out") = plindley::stieltjes::gr_cosine_integral(p, q, t); });
}

size_t pl_embedded_table_count(void) { return plindley::io::embedded_table_names().size(); }

const char* pl_embedded_table_name(size_t index) {
  static const auto names = plindley::io::embedded_table_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

pl_status pl_table_load(const char* path_or_name, pl_table** out) {
  return guarded([&] {
    auto& dst = require(out, "out");
    require(path_or_name, "path_or_name");
    dst = new pl_table{plindley::io::read_table(path_or_name)};
  });
}

pl_status pl_table_parse(const char* csv_text, const char* name, pl_table** out) {
  return guarded([&] {
    auto& dst = require(out, "out");
    require(csv_text, "csv_text");
    dst = new pl_table{plindley::io::parse_table_csv(csv_text, name ? name : "table")};
  });
}

pl_status pl_table_from_rows(const char* name, const double* values, const double* frequencies,
                             size_t n, pl_table** out) {
  return guarded([&] {
    auto& dst = require(out, "out");
    require(values, "values");
    require(frequencies, "frequencies");
    std::vector<plindley::fitting::Row> rows;
    rows.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      rows.push_back({values[i], frequencies[i]});
    }
    dst = new pl_table{plindley::fitting::FrequencyTable(name ? name : "table", std::move(rows))};
  });
}

void pl_table_destroy(pl_table* t) { delete t; }

size_t pl_table_size(const pl_table* t) { return t ? t->table.size() : 0; }

const char* pl_table_name(const pl_table* t) { return t ? t->table.name().c_str() : nullptr; }

pl_status pl_table_row(const pl_table* t, size_t index, double* value, double* frequency) {
  return guarded([&] {
    const auto& rows = require(t, "t").table.rows();
    if (index >= rows.size()) {
      throw InvalidArgument("row index out of range");
    }
    require(value, "value") = rows[index].value;
    require(frequency, "frequency") = rows[index].frequency;
  });
}

pl_status pl_table_weights(const pl_table* t, double* out) {
  return guarded([&] {
    require(out, "out");
    const auto w = plindley::fitting::normalize_table(require(t, "t").table);
    std::copy(w.begin(), w.end(), out);
  });
}

pl_status pl_table_proportions(const pl_table* t, double* out) {
  return guarded([&] {
    require(out, "out");
    const auto w = require(t, "t").table.proportions();
    std::copy(w.begin(), w.end(), out);
  });
}

pl_units pl_table_units(const pl_table* t) {
  if (t == nullptr) {
    return PL_UNITS_COUNTS;
  }
  switch (t->table.units()) {
    case plindley::fitting::Units::Percent:
      return PL_UNITS_PERCENT;
    case plindley::fitting::Units::Proportion:
      return PL_UNITS_PROPORTION;
    case plindley::fitting::Units::Counts:
      return PL_UNITS_COUNTS;
  }
  return PL_UNITS_COUNTS;
}

pl_status pl_table_set_units(pl_table* t, pl_units units) {
  return guarded([&] {
    auto& table = require(t, "t").table;
    using plindley::fitting::Units;
    switch (units) {
      case PL_UNITS_PERCENT:
        table.set_units(Units::Percent);
        break;
      case PL_UNITS_PROPORTION:
        table.set_units(Units::Proportion);
        break;
      case PL_UNITS_COUNTS:
        table.set_units(Units::Counts);
        break;
      default:
        throw InvalidArgument("unknown units");
    }
  });
}

pl_status pl_table_sample_mean(const pl_table* t, double* out) {
  return guarded(
      [&] { require(out, "out") = plindley::fitting::sample_mean(require(t, "t").table); });
}

void pl_objective_default(pl_objective* out) {
  if (out == nullptr) {
    return;
  }
  const plindley::fitting::FitObjective d;
  out->kind = PL_OBJ_BINNED;
  out->shift = d.shift;
  out->zero_handling = PL_ZERO_INCLUDE;
  out->zero_point = d.zero_point;
}

pl_status pl_objective_error(const pl_table* t, pl_model model, double shape, double second,
                             const pl_objective* objective, double* out) {
  return guarded([&] {
    require(out, "out") = plindley::fitting::objective_error(
        to_params(model, shape, second), require(t, "t").table, to_objective(objective));
  });
}

pl_status pl_fit(const pl_table* t, pl_model model, const pl_objective* objective,
                 const double* start, pl_fit_report* out) {
  return guarded([&] {
    auto& dst = require(out, "out");
    std::optional<std::array<double, 2>> s;
    if (start != nullptr) {
      s = std::array<double, 2>{start[0], start[1]};
    }
    const auto r = plindley::fitting::fit(require(t, "t").table, to_model(model),
                                          to_objective(objective), s);
    fill_report(r, dst);
  });
}

pl_status pl_fit_report_at(const pl_table* t, pl_model model, double shape, double second,
                           const pl_objective* objective, pl_fit_report* out) {
  return guarded([&] {
    auto& dst = require(out, "out");
    const auto r = plindley::fitting::make_report(to_params(model, shape, second),
                                                  require(t, "t").table, to_objective(objective));
    fill_report(r, dst);
    dst.converged = 1;
  });
}

}  // extern "C"
