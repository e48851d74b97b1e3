#include "plindley/fitting.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "plindley/errors.hpp"
#include "plindley/numerics.hpp"

namespace plindley::fitting {

std::string to_string(Units u) {
  switch (u) {
    case Units::Percent:
      return "percent";
    case Units::Proportion:
      return "proportion";
    case Units::Counts:
      return "counts";
  }
  return "unknown";
}

std::string to_string(ObjectiveKind k) {
  switch (k) {
    case ObjectiveKind::BinnedMass:
      return "binned";
    case ObjectiveKind::PdfAtValues:
      return "pdf";
    case ObjectiveKind::PdfAtShifted:
      return "pdf-shifted";
  }
  return "unknown";
}

std::string to_string(Model m) {
  return m == Model::PowerLindley ? "power-lindley" : "weibull";
}

FrequencyTable::FrequencyTable(std::string name, std::vector<Row> rows)
    : name_(std::move(name)), rows_(std::move(rows)) {
  if (rows_.size() < 2) {
    throw ValidationError("frequency table needs at least two rows");
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Row& r = rows_[i];
    if (!std::isfinite(r.value) || r.value < 0.0) {
      throw ValidationError("row " + std::to_string(i + 1) + ": value must be finite and >= 0");
    }
    if (!std::isfinite(r.frequency) || r.frequency < 0.0) {
      throw ValidationError("row " + std::to_string(i + 1) +
                            ": frequency must be finite and >= 0");
    }
    if (i > 0 && !(r.value > rows_[i - 1].value)) {
      throw ValidationError("row " + std::to_string(i + 1) +
                            ": values must be strictly increasing");
    }
    total_ += r.frequency;
  }
  if (!(total_ > 0.0)) {
    throw ValidationError("frequency table total must be positive");
  }
  if (std::fabs(total_ - 100.0) <= 1.0) {
    units_ = Units::Percent;
  } else if (std::fabs(total_ - 1.0) <= 0.01) {
    units_ = Units::Proportion;
  }
}

std::vector<double> FrequencyTable::proportions() const {
  const double divisor = units_ == Units::Percent      ? 100.0
                         : units_ == Units::Proportion ? 1.0
                                                       : total_;
  std::vector<double> out;
  out.reserve(rows_.size());
  for (const Row& r : rows_) {
    out.push_back(r.frequency / divisor);
  }
  return out;
}

std::vector<double> normalize_table(const FrequencyTable& t) {
  std::vector<double> w;
  w.reserve(t.size());
  for (const Row& r : t.rows()) {
    w.push_back(r.frequency / t.total());
  }
  return w;
}

double sample_mean(const FrequencyTable& t) {
  const auto w = normalize_table(t);
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    s += w[i] * t.rows()[i].value;
  }
  return s;
}

void FitObjective::validate() const {
  if (kind == ObjectiveKind::PdfAtShifted && !(shift > 0.0 && std::isfinite(shift))) {
    throw DomainError("pdf-at-shifted objective requires shift > 0");
  }
  if (kind == ObjectiveKind::PdfAtValues && zero_handling == ZeroHandling::Substitute &&
      !(zero_point > 0.0 && std::isfinite(zero_point))) {
    throw DomainError("zero substitution point must be > 0");
  }
}

std::string FitObjective::describe() const {
  std::ostringstream os;
  os << to_string(kind);
  if (kind == ObjectiveKind::PdfAtShifted) {
    os << "(shift=" << shift << ")";
  } else if (kind == ObjectiveKind::PdfAtValues) {
    switch (zero_handling) {
      case ZeroHandling::Include:
        os << "(zero=include)";
        break;
      case ZeroHandling::Exclude:
        os << "(zero=exclude)";
        break;
      case ZeroHandling::Substitute:
        os << "(zero->" << zero_point << ")";
        break;
    }
  }
  return os.str();
}

namespace {

template <typename Params>
double squared_residuals(const Params& p, const FrequencyTable& t, const FitObjective& obj) {
  const auto w = normalize_table(t);
  const auto& rows = t.rows();
  const std::size_t n = rows.size();
  double sum = 0.0;
  switch (obj.kind) {
    case ObjectiveKind::BinnedMass: {
      double upper_survival = 1.0;  // S at the lower edge 0
      for (std::size_t i = 0; i < n; ++i) {
        const double s_next =
            i + 1 < n ? survival(p, 0.5 * (rows[i].value + rows[i + 1].value)) : 0.0;
        const double mass = upper_survival - s_next;
        sum += (w[i] - mass) * (w[i] - mass);
        upper_survival = s_next;
      }
      break;
    }
    case ObjectiveKind::PdfAtValues:
      for (std::size_t i = 0; i < n; ++i) {
        double x = rows[i].value;
        if (x == 0.0) {
          if (obj.zero_handling == ZeroHandling::Exclude) {
            continue;
          }
          if (obj.zero_handling == ZeroHandling::Substitute) {
            x = obj.zero_point;
          }
        }
        const double r = w[i] - pdf(p, x);
        sum += r * r;
      }
      break;
    case ObjectiveKind::PdfAtShifted:
      for (std::size_t i = 0; i < n; ++i) {
        const double r = w[i] - pdf(p, rows[i].value + obj.shift);
        sum += r * r;
      }
      break;
  }
  return sum;
}

ModelParams make_params(Model model, double first, double second) {
  if (model == Model::PowerLindley) {
    return PLParams(first, second);
  }
  return WeibullParams(first, second);
}

}  // namespace

double objective_error(const ModelParams& params, const FrequencyTable& t,
                       const FitObjective& obj) {
  obj.validate();
  return std::visit([&](const auto& p) { return squared_residuals(p, t, obj); }, params);
}

FitReport make_report(const ModelParams& params, const FrequencyTable& t, const FitObjective& obj) {
  FitReport r;
  r.params = params;
  r.objective = obj;
  r.error = objective_error(params, t, obj);
  if (const auto* pl = std::get_if<PLParams>(&params)) {
    r.model = Model::PowerLindley;
    r.mean = mean(*pl);
    r.median = quantile(*pl, 0.5);
  } else {
    const auto& w = std::get<WeibullParams>(params);
    r.model = Model::Weibull;
    r.mean = mean(w);
    r.median = median(w);
  }
  r.sample_mean = sample_mean(t);
  r.mean_gap = std::fabs(r.sample_mean - r.mean);
  return r;
}

FitReport fit(const FrequencyTable& t, Model model, const FitObjective& obj,
              std::optional<std::array<double, 2>> start) {
  obj.validate();
  std::vector<std::array<double, 2>> starts;
  if (start) {
    if (!((*start)[0] > 0.0) || !((*start)[1] > 0.0) || !std::isfinite((*start)[0]) ||
        !std::isfinite((*start)[1])) {
      throw DomainError("fit start must be a pair of positive reals");
    }
    starts.push_back(*start);
  } else {
    starts = {{0.5, 1.0}, {1.0, 1.0}, {2.0, 1.0}, {1.0, 3.0}};
  }

  auto objective = [&](double a, double b) {
    try {
      return objective_error(make_params(model, a, b), t, obj);
    } catch (const DomainError&) {
      return std::numeric_limits<double>::infinity();
    }
  };

  std::optional<numerics::MinimizeResult> best;
  std::string failures;
  for (const auto& s : starts) {
    try {
      auto r = numerics::minimize_2d(objective, s);
      // A fresh simplex at the optimum guards against premature collapse.
      const auto polished = numerics::minimize_2d(objective, r.point);
      if (polished.value <= r.value) {
        r.point = polished.point;
        r.value = polished.value;
        r.converged = polished.converged;
      }
      if (!best || r.value < best->value) {
        best = r;
      }
    } catch (const std::exception& e) {
      failures += "\n  start (" + std::to_string(s[0]) + ", " + std::to_string(s[1]) +
                  "): " + e.what();
    }
  }
  if (!best) {
    throw OptimizationError("all fitting starts failed:" + failures);
  }

  FitReport report = make_report(make_params(model, best->point[0], best->point[1]), t, obj);
  report.converged = best->converged;
  return report;
}

}  // namespace plindley::fitting
