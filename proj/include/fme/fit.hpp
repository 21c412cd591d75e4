#pragma once

#include <span>
#include <vector>

namespace fme {

struct Point2 {
  double x = 0;
  double y = 0;
};

struct FitResult {
  std::vector<double> coefficients;
  double r_squared = 0;  // clamped to [0, 1]
};

// 1 - SS_res / SS_tot, clamped to [0, 1]. A zero-residual fit scores 1 even
// when SS_tot = 0.
double r_squared(std::span<const double> observed, std::span<const double> predicted);

// Ordinary least squares: minimise |X b - y|^2 for a row-major design X with
// `cols` columns. Throws DegenerateFit when X^T X is singular.
std::vector<double> least_squares(std::span<const double> design, std::size_t cols,
                                  std::span<const double> y);

// y = c * sqrt(x); c = sum(y sqrt x) / sum(x). Needs >= 2 points with x >= 0
// and not all x zero.
FitResult fit_sqrt_curve(std::span<const Point2> points);

// y = a*t + b/t via the 2x2 normal equations; coefficients {a, b}.
// Needs >= 2 points with t >= 1.
FitResult fit_t_curve(std::span<const Point2> points);

}  // namespace fme
