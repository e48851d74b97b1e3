#include "plindley/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "plindley/errors.hpp"

namespace plindley::numerics {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();
constexpr double kInf = std::numeric_limits<double>::infinity();

// Neumaier-compensated running sum.
class Accumulator {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Kronrod abscissae and weights; Gauss nodes are the odd entries.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
  double abs_value = 0.0;
};

double checked_eval(const Integrand& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw AccuracyError("integrand is not finite at x = " + std::to_string(x), 0.0, kInf);
  }
  return y;
}

Panel gauss_kronrod15(const Integrand& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double abs_half = std::fabs(half);

  std::array<double, 7> fv1{};
  std::array<double, 7> fv2{};
  const double fc = checked_eval(f, centre);
  double res_g = fc * kWg[3];
  double res_k = fc * kWgk[7];
  double res_abs = std::fabs(res_k);

  for (int j = 0; j < 3; ++j) {
    const int jtw = 2 * j + 1;
    const double dx = half * kXgk[jtw];
    const double f1 = checked_eval(f, centre - dx);
    const double f2 = checked_eval(f, centre + dx);
    fv1[jtw] = f1;
    fv2[jtw] = f2;
    res_g += kWg[j] * (f1 + f2);
    res_k += kWgk[jtw] * (f1 + f2);
    res_abs += kWgk[jtw] * (std::fabs(f1) + std::fabs(f2));
  }
  for (int j = 0; j < 4; ++j) {
    const int jtwm1 = 2 * j;
    const double dx = half * kXgk[jtwm1];
    const double f1 = checked_eval(f, centre - dx);
    const double f2 = checked_eval(f, centre + dx);
    fv1[jtwm1] = f1;
    fv2[jtwm1] = f2;
    res_k += kWgk[jtwm1] * (f1 + f2);
    res_abs += kWgk[jtwm1] * (std::fabs(f1) + std::fabs(f2));
  }

  const double mean = 0.5 * res_k;
  double res_asc = kWgk[7] * std::fabs(fc - mean);
  for (int j = 0; j < 7; ++j) {
    res_asc += kWgk[j] * (std::fabs(fv1[j] - mean) + std::fabs(fv2[j] - mean));
  }

  Panel p{a, b, res_k * half, std::fabs((res_k - res_g) * half), res_abs * abs_half};
  res_asc *= abs_half;
  if (res_asc != 0.0 && p.error != 0.0) {
    p.error = res_asc * std::min(1.0, std::pow(200.0 * p.error / res_asc, 1.5));
  }
  if (p.abs_value > kTiny / (50.0 * kEps)) {
    p.error = std::max(50.0 * kEps * p.abs_value, p.error);
  }
  return p;
}

struct PanelOrder {
  bool operator()(const Panel& lhs, const Panel& rhs) const { return lhs.error < rhs.error; }
};

// Bisects the worst subinterval until the summed error meets
// max(abs_tol, rel_tol * ∫|f|). `budget` counts remaining bisections.
QuadratureResult adaptive(const Integrand& f, double a, double b, double rel_tol,
                          double abs_tol, int& budget) {
  std::priority_queue<Panel, std::vector<Panel>, PanelOrder> heap;
  Panel first = gauss_kronrod15(f, a, b);
  heap.push(first);
  double total_err = first.error;
  double total_abs = first.abs_value;
  double total = first.value;
  int subdivisions = 0;
  bool roundoff_limited = false;

  while (total_err > std::max(abs_tol, rel_tol * total_abs)) {
    Panel worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) ||
        (worst.b - worst.a) <= 4.0 * kEps * std::max(std::fabs(worst.a), std::fabs(worst.b))) {
      roundoff_limited = true;
      break;
    }
    if (budget <= 0) {
      throw AccuracyError("subdivision limit reached on [" + std::to_string(a) + ", " +
                              std::to_string(b) + "]",
                          total, total_err);
    }
    heap.pop();
    --budget;
    ++subdivisions;
    const Panel left = gauss_kronrod15(f, worst.a, mid);
    const Panel right = gauss_kronrod15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    total_abs += left.abs_value + right.abs_value - worst.abs_value;
    heap.push(left);
    heap.push(right);
  }

  // Resum from scratch to drop the drift of the incremental updates.
  Accumulator value;
  Accumulator err;
  Accumulator abs_value;
  while (!heap.empty()) {
    value.add(heap.top().value);
    err.add(heap.top().error);
    abs_value.add(heap.top().abs_value);
    heap.pop();
  }
  QuadratureResult r;
  r.value = value.value();
  r.error = err.value();
  r.abs_integral = abs_value.value();
  r.panels = 1;
  r.subdivisions = subdivisions;
  if (roundoff_limited && r.error > std::max(abs_tol, rel_tol * r.abs_integral)) {
    throw AccuracyError("roundoff limits the attainable accuracy", r.value, r.error);
  }
  return r;
}

// Wynn's ε-algorithm on a sequence of partial sums. Returns the latest
// even-column estimate and the spread of the last three estimates.
std::pair<double, double> wynn_epsilon(const std::vector<double>& sums) {
  const std::size_t n = sums.size();
  if (n < 3) {
    return {sums.back(), kInf};
  }
  std::vector<double> estimates;
  // One table per truncation point keeps the spread meaningful.
  for (std::size_t end = n >= 3 ? n - 2 : 1; end <= n; ++end) {
    std::vector<double> prev(end, 0.0);
    std::vector<double> cur(sums.begin(), sums.begin() + static_cast<std::ptrdiff_t>(end));
    double best = cur.back();
    for (std::size_t col = 1; cur.size() > 1; ++col) {
      std::vector<double> next(cur.size() - 1);
      bool ok = true;
      for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
        const double diff = cur[i + 1] - cur[i];
        if (diff == 0.0 || !std::isfinite(diff)) {
          ok = false;
          break;
        }
        next[i] = prev[i + 1] + 1.0 / diff;
      }
      if (!ok) {
        break;
      }
      prev = std::move(cur);
      cur = std::move(next);
      if (col % 2 == 0) {
        best = cur.back();
      }
    }
    estimates.push_back(best);
  }
  const double last = estimates.back();
  double spread = 0.0;
  for (double e : estimates) {
    spread = std::max(spread, std::fabs(e - last));
  }
  return {last, spread};
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_gamma requires a finite positive argument");
  }
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || max_subdivisions < 1 || !(tail_cutoff > 0.0)) {
    throw DomainError("invalid quadrature settings");
  }
}

QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
  spec.validate();
  if (!std::isfinite(a) || !std::isfinite(b) || !(a <= b)) {
    throw DomainError("integrate requires finite a <= b");
  }
  if (a == b) {
    return {};
  }
  int budget = spec.max_subdivisions;
  return adaptive(f, a, b, spec.rel_tol, spec.abs_tol, budget);
}

QuadratureResult integrate_semi_infinite(const Integrand& f, const QuadratureSpec& spec,
                                         std::optional<Oscillation> oscillation) {
  spec.validate();
  double half_period = 0.0;
  double next_edge = 1.0;
  if (oscillation) {
    if (!(oscillation->period > 0.0) || !std::isfinite(oscillation->period)) {
      throw DomainError("oscillation period must be positive");
    }
    half_period = 0.5 * oscillation->period;
    double offset = std::fmod(oscillation->offset, half_period);
    if (offset < 0.0) {
      offset += half_period;
    }
    next_edge = offset > 0.0 ? offset : half_period;
  }

  // Past this many panels the partial sums are handed to the ε-algorithm.
  constexpr int kMaxOscillatoryPanels = 4000;
  constexpr double kEdgeLimit = 1e300;
  constexpr int kTailRun = 3;

  int budget = spec.max_subdivisions;
  Accumulator value;
  Accumulator error;
  Accumulator abs_value;
  std::vector<double> partial_sums;
  double max_panel = 0.0;
  int tail_run = 0;
  bool tail_reached = false;
  int panels = 0;
  int subdivisions = 0;

  double left = 0.0;
  while (true) {
    const double right = next_edge;
    const double panel_tol = spec.abs_tol / 1024.0;
    const QuadratureResult piece = adaptive(f, left, right, spec.rel_tol, panel_tol, budget);
    value.add(piece.value);
    error.add(piece.error);
    abs_value.add(piece.abs_integral);
    partial_sums.push_back(value.value());
    subdivisions += piece.subdivisions;
    ++panels;

    max_panel = std::max(max_panel, piece.abs_integral);
    const bool negligible =
        max_panel > 0.0 &&
        (piece.abs_integral <= spec.tail_cutoff * max_panel || piece.abs_integral == 0.0);
    tail_run = negligible ? tail_run + 1 : 0;
    if (tail_run >= kTailRun) {
      tail_reached = true;
      break;
    }

    left = right;
    next_edge = oscillation ? left + half_period : 2.0 * left;
    if (next_edge > kEdgeLimit || (oscillation && panels >= kMaxOscillatoryPanels)) {
      break;
    }
  }

  QuadratureResult r;
  r.abs_integral = abs_value.value();
  r.panels = panels;
  r.subdivisions = subdivisions;
  r.value = value.value();
  r.error = error.value();
  if (!tail_reached && max_panel > 0.0) {
    const std::size_t keep = std::min<std::size_t>(partial_sums.size(), 40);
    const std::vector<double> tail(partial_sums.end() - static_cast<std::ptrdiff_t>(keep),
                                   partial_sums.end());
    const auto [limit, spread] = wynn_epsilon(tail);
    r.value = limit;
    r.error += spread;
    r.extrapolated = true;
  }
  const double target = std::max(spec.abs_tol, spec.rel_tol * r.abs_integral);
  if (!(r.error <= target)) {
    throw AccuracyError("semi-infinite quadrature did not converge", r.value, r.error);
  }
  return r;
}

double find_root(const std::function<double(double)>& f, RootBracket bracket) {
  double a = bracket.lo;
  double b = bracket.hi;
  if (!(a < b) || !(bracket.tol > 0.0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("root bracket requires finite lo < hi and tol > 0");
  }
  double fa = f(a);
  double fb = f(b);
  if (std::isnan(fa) || std::isnan(fb)) {
    throw DomainError("root function is NaN at a bracket end");
  }
  if (fa == 0.0) {
    return a;
  }
  if (fb == 0.0) {
    return b;
  }
  if (std::signbit(fa) == std::signbit(fb)) {
    throw BracketError("no sign change on [" + std::to_string(a) + ", " + std::to_string(b) + "]");
  }

  const double tol = bracket.tol;
  double reference_width = b - a;
  int steps_since_halving = 0;
  for (int iter = 0; iter < 2000 && (b - a) > tol; ++iter) {
    double x = 0.5 * (a + b);
    if (steps_since_halving < 2) {
      // Secant through the bracket ends, kept at least tol/4 inside.
      const double s = b - fb * (b - a) / (fb - fa);
      const double margin = 0.25 * tol;
      if (std::isfinite(s)) {
        x = std::clamp(s, a + margin, b - margin);
      }
    }
    const double fx = f(x);
    if (std::isnan(fx)) {
      throw DomainError("root function is NaN inside the bracket");
    }
    if (fx == 0.0) {
      return x;
    }
    if (std::signbit(fx) == std::signbit(fa)) {
      a = x;
      fa = fx;
    } else {
      b = x;
      fb = fx;
    }
    ++steps_since_halving;
    if (b - a <= 0.5 * reference_width) {
      reference_width = b - a;
      steps_since_halving = 0;
    }
  }
  return 0.5 * (a + b);
}

MinimizeResult minimize_2d(const std::function<double(double, double)>& objective,
                           std::array<double, 2> start, const MinimizeOptions& options) {
  if (!(start[0] > 0.0) || !(start[1] > 0.0)) {
    throw DomainError("minimize_2d start must be a pair of positive reals");
  }
  using Point = std::array<double, 2>;
  constexpr int kMaxRejectedRun = 200;

  MinimizeResult result;
  int rejected_run = 0;
  auto eval = [&](const Point& lp) {
    ++result.evaluations;
    const double v = objective(std::exp(lp[0]), std::exp(lp[1]));
    if (std::isfinite(v)) {
      rejected_run = 0;
      return v;
    }
    if (++rejected_run > kMaxRejectedRun) {
      throw OptimizationError("objective persistently non-finite during search");
    }
    return kInf;
  };

  const Point origin{std::log(start[0]), std::log(start[1])};
  const double start_value = eval(origin);
  if (!std::isfinite(start_value)) {
    throw OptimizationError("objective is not finite at the start point");
  }

  std::array<Point, 3> simplex{origin, origin, origin};
  simplex[1][0] += options.initial_step;
  simplex[2][1] += options.initial_step;
  std::array<double, 3> values{start_value, eval(simplex[1]), eval(simplex[2])};

  auto diameter = [&] {
    double d = 0.0;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        d = std::max({d, std::fabs(simplex[i][0] - simplex[j][0]),
                      std::fabs(simplex[i][1] - simplex[j][1])});
      }
    }
    return d;
  };
  auto along = [](const Point& from, const Point& to, double t) {
    return Point{from[0] + t * (to[0] - from[0]), from[1] + t * (to[1] - from[1])};
  };

  int iter = 0;
  for (; iter < options.max_iterations; ++iter) {
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int l, int r) { return values[l] < values[r]; });
    const int best = order[0];
    const int second = order[1];
    const int worst = order[2];
    if (diameter() < options.log_diameter_tol) {
      result.converged = true;
      break;
    }

    const Point centroid{0.5 * (simplex[best][0] + simplex[second][0]),
                         0.5 * (simplex[best][1] + simplex[second][1])};
    const Point reflected = along(simplex[worst], centroid, 2.0);
    const double fr = eval(reflected);
    if (fr < values[best]) {
      const Point expanded = along(simplex[worst], centroid, 3.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        simplex[worst] = expanded;
        values[worst] = fe;
      } else {
        simplex[worst] = reflected;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[worst] = reflected;
      values[worst] = fr;
      continue;
    }
    const bool outside = fr < values[worst];
    const Point contracted =
        outside ? along(simplex[worst], centroid, 1.5) : along(simplex[worst], centroid, 0.5);
    const double fc = eval(contracted);
    if (fc < (outside ? fr : values[worst])) {
      simplex[worst] = contracted;
      values[worst] = fc;
      continue;
    }
    for (int i : {second, worst}) {
      simplex[i] = along(simplex[best], simplex[i], 0.5);
      values[i] = eval(simplex[i]);
    }
  }

  const auto best_it = std::min_element(values.begin(), values.end());
  const auto best = static_cast<std::size_t>(best_it - values.begin());
  result.point = {std::exp(simplex[best][0]), std::exp(simplex[best][1])};
  result.value = values[best];
  result.iterations = iter;
  result.improved = result.value < start_value;
  return result;
}

}  // namespace plindley::numerics
