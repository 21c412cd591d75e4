#include "fme/fit.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fme/errors.hpp"

namespace fme {

double r_squared(std::span<const double> observed, std::span<const double> predicted) {
  if (observed.size() != predicted.size() || observed.empty()) {
    throw DegenerateFit("r_squared needs matching non-empty samples");
  }
  double mean = 0;
  for (double y : observed) mean += y;
  mean /= static_cast<double>(observed.size());
  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    ss_res += (observed[i] - predicted[i]) * (observed[i] - predicted[i]);
    ss_tot += (observed[i] - mean) * (observed[i] - mean);
  }
  if (ss_res == 0) return 1.0;
  if (ss_tot == 0) return 0.0;
  return std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
}

std::vector<double> least_squares(std::span<const double> design, std::size_t cols,
                                  std::span<const double> y) {
  if (cols == 0 || design.size() != cols * y.size()) {
    throw DegenerateFit("design matrix shape does not match observations");
  }
  if (y.size() < cols) throw DegenerateFit("fewer observations than unknowns");

  // Augmented normal system [X^T X | X^T y].
  const std::size_t width = cols + 1;
  std::vector<double> sys(cols * width, 0.0);
  for (std::size_t r = 0; r < y.size(); ++r) {
    const double* row = design.data() + r * cols;
    for (std::size_t i = 0; i < cols; ++i) {
      for (std::size_t j = 0; j < cols; ++j) sys[i * width + j] += row[i] * row[j];
      sys[i * width + cols] += row[i] * y[r];
    }
  }

  double scale = 0;
  for (std::size_t i = 0; i < cols; ++i) scale = std::max(scale, std::abs(sys[i * width + i]));
  if (scale == 0) throw DegenerateFit("normal equations are singular");

  for (std::size_t k = 0; k < cols; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < cols; ++i) {
      if (std::abs(sys[i * width + k]) > std::abs(sys[pivot * width + k])) pivot = i;
    }
    if (std::abs(sys[pivot * width + k]) <= 1e-12 * scale) {
      throw DegenerateFit("normal equations are singular");
    }
    if (pivot != k) {
      for (std::size_t j = 0; j < width; ++j) std::swap(sys[k * width + j], sys[pivot * width + j]);
    }
    for (std::size_t i = k + 1; i < cols; ++i) {
      const double f = sys[i * width + k] / sys[k * width + k];
      for (std::size_t j = k; j < width; ++j) sys[i * width + j] -= f * sys[k * width + j];
    }
  }
  std::vector<double> coef(cols);
  for (std::size_t k = cols; k-- > 0;) {
    double acc = sys[k * width + cols];
    for (std::size_t j = k + 1; j < cols; ++j) acc -= sys[k * width + j] * coef[j];
    coef[k] = acc / sys[k * width + k];
  }
  return coef;
}

FitResult fit_sqrt_curve(std::span<const Point2> points) {
  if (points.size() < 2) throw DegenerateFit("sqrt fit needs at least 2 points");
  double num = 0, den = 0;
  for (const auto& [x, y] : points) {
    if (x < 0) throw DegenerateFit("sqrt fit needs x >= 0");
    num += y * std::sqrt(x);
    den += x;
  }
  if (den == 0) throw DegenerateFit("sqrt fit with all x = 0");
  const double c = num / den;
  std::vector<double> obs, pred;
  for (const auto& [x, y] : points) {
    obs.push_back(y);
    pred.push_back(c * std::sqrt(x));
  }
  return {{c}, r_squared(obs, pred)};
}

FitResult fit_t_curve(std::span<const Point2> points) {
  if (points.size() < 2) throw DegenerateFit("a*t + b/t fit needs at least 2 points");
  std::vector<double> design, obs;
  for (const auto& [t, y] : points) {
    if (t < 1) throw DegenerateFit("a*t + b/t fit needs t >= 1");
    design.push_back(t);
    design.push_back(1.0 / t);
    obs.push_back(y);
  }
  std::vector<double> coef = least_squares(design, 2, obs);
  std::vector<double> pred;
  for (const auto& p : points) pred.push_back(coef[0] * p.x + coef[1] / p.x);
  return {std::move(coef), r_squared(obs, pred)};
}

}  // namespace fme
