#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "plindley/distribution.hpp"

namespace plindley::fitting {

struct Row {
  double value = 0.0;
  double frequency = 0.0;
};

/// How the raw frequencies are scaled. Detected from the total unless set.
enum class Units { Percent, Proportion, Counts };

std::string to_string(Units u);

/// Observed (value, frequency) pairs of one metric. Values strictly
/// increasing and nonnegative, frequencies nonnegative, at least two rows,
/// positive total.
class FrequencyTable {
 public:
  FrequencyTable(std::string name, std::vector<Row> rows);

  const std::string& name() const noexcept { return name_; }
  const std::vector<Row>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }
  double total() const noexcept { return total_; }

  Units units() const noexcept { return units_; }
  void set_units(Units u) noexcept { units_ = u; }
  /// Frequencies as proportions according to units(): f/100, f, or f/total.
  std::vector<double> proportions() const;

 private:
  std::string name_;
  std::vector<Row> rows_;
  double total_ = 0.0;
  Units units_ = Units::Counts;
};

/// w_i = f_i / Σ f_j.
std::vector<double> normalize_table(const FrequencyTable& t);
/// Σ w_i value_i.
double sample_mean(const FrequencyTable& t);

enum class ObjectiveKind { BinnedMass, PdfAtValues, PdfAtShifted };
enum class ZeroHandling { Include, Exclude, Substitute };

std::string to_string(ObjectiveKind k);

/// Residual definition for the least-squares fit.
///  - BinnedMass: w_i vs model mass between midpoints of consecutive values
///    (first edge 0, last edge +inf).
///  - PdfAtValues: w_i vs pdf(value_i); a zero value is kept, dropped, or
///    replaced by zero_point according to zero_handling.
///  - PdfAtShifted: w_i vs pdf(value_i + shift).
struct FitObjective {
  ObjectiveKind kind = ObjectiveKind::BinnedMass;
  double shift = 0.5;
  ZeroHandling zero_handling = ZeroHandling::Include;
  double zero_point = 1e-3;

  void validate() const;
  std::string describe() const;
};

enum class Model { PowerLindley, Weibull };

std::string to_string(Model m);

using ModelParams = std::variant<PLParams, WeibullParams>;

/// Sum of squared residuals of the model against the normalized table.
double objective_error(const ModelParams& params, const FrequencyTable& t,
                       const FitObjective& obj);

struct FitReport {
  Model model = Model::PowerLindley;
  ModelParams params = PLParams(1.0, 1.0);
  FitObjective objective;
  double error = 0.0;
  double mean = 0.0;
  double median = 0.0;
  double sample_mean = 0.0;
  double mean_gap = 0.0;  // |sample_mean - mean|
  bool converged = false;
};

/// Fills mean, median, sample mean and gap from closed forms.
FitReport make_report(const ModelParams& params, const FrequencyTable& t, const FitObjective& obj);

/// Least-squares fit by Nelder–Mead in log-parameter space. Without a start
/// the multi-start set {(0.5,1), (1,1), (2,1), (1,3)} in (shape, rate|scale)
/// is used and the best local optimum returned. Throws OptimizationError
/// when every start fails.
FitReport fit(const FrequencyTable& t, Model model, const FitObjective& obj,
              std::optional<std::array<double, 2>> start = std::nullopt);

}  // namespace plindley::fitting
