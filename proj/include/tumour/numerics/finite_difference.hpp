#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace tumour {

/// Central-difference first (order=1) or second (order=2) derivative with
/// truncation error O(h^scheme_order), scheme_order ∈ {2, 4}.
inline double fd_derivative(const std::function<double(double)>& f, double x, int order,
                            int scheme_order, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("fd_derivative: h must be positive");
  if (order == 1 && scheme_order == 2) return (f(x + h) - f(x - h)) / (2.0 * h);
  if (order == 1 && scheme_order == 4) {
    return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
  }
  if (order == 2 && scheme_order == 2) return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
  if (order == 2 && scheme_order == 4) {
    return (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2 * h)) /
           (12.0 * h * h);
  }
  throw std::invalid_argument("fd_derivative: order must be 1|2 and scheme_order 2|4");
}

/// Observed convergence order from errors measured on successively halved
/// steps: least-squares slope of log(error) against log(h), h_k = 2^{-k}.
inline double richardson_order(std::span<const double> errors) {
  if (errors.size() < 3) throw std::invalid_argument("richardson_order: need at least 3 samples");
  const std::size_t n = errors.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const double e = errors[k];
    if (!std::isfinite(e) || e == 0.0) {
      throw std::domain_error("richardson_order: errors must be finite and nonzero");
    }
    const double lx = -static_cast<double>(k) * std::log(2.0);
    const double ly = std::log(std::abs(e));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double dn = static_cast<double>(n);
  return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

}  // namespace tumour
