#pragma once

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace tumour {

using OdeState = std::vector<double>;
using OdeRhs = std::function<void(const OdeState& y, OdeState& dydr, double r)>;

struct OdeSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double initial_step = 1e-3;
  long max_steps = 200000;
};

/// Accepted steps of an integration, with cubic Hermite interpolation between
/// them (uses the stored end-point derivatives).
class Trajectory {
 public:
  void push(double r, OdeState y, OdeState dy) {
    r_.push_back(r);
    y_.push_back(std::move(y));
    dy_.push_back(std::move(dy));
  }

  std::size_t size() const { return r_.size(); }
  bool empty() const { return r_.empty(); }
  const std::vector<double>& nodes() const { return r_; }
  const OdeState& state(std::size_t i) const { return y_[i]; }
  double front() const { return r_.front(); }
  double back() const { return r_.back(); }

  OdeState operator()(double r) const {
    if (r_.empty()) throw std::out_of_range("Trajectory: empty");
    const bool forward = r_.back() >= r_.front();
    const double lo = forward ? r_.front() : r_.back();
    const double hi = forward ? r_.back() : r_.front();
    if (r < lo - 1e-14 * std::abs(lo) || r > hi + 1e-14 * std::abs(hi)) {
      throw std::out_of_range("Trajectory: r=" + std::to_string(r) + " outside integrated range");
    }
    // Index of the first node at or past r along the integration direction.
    if (r_.size() == 1) return y_.front();
    const auto it = std::partition_point(r_.begin() + 1, r_.end() - 1,
                                         [&](double node) { return forward ? node < r : node > r; });
    const auto k = static_cast<std::size_t>(it - r_.begin());
    const double r0 = r_[k - 1];
    const double h = r_[k] - r0;
    const double s = (r - r0) / h;
    const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
    const double h10 = s * (1 - s) * (1 - s);
    const double h01 = s * s * (3 - 2 * s);
    const double h11 = s * s * (s - 1);
    OdeState out(y_[k].size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = h00 * y_[k - 1][i] + h10 * h * dy_[k - 1][i] + h01 * y_[k][i] + h11 * h * dy_[k][i];
    }
    return out;
  }

 private:
  std::vector<double> r_;
  std::vector<OdeState> y_;
  std::vector<OdeState> dy_;
};

class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double location, Trajectory partial)
      : std::runtime_error(what), location_(location), partial_(std::move(partial)) {}
  double location() const noexcept { return location_; }
  const Trajectory& partial() const noexcept { return partial_; }

 private:
  double location_;
  Trajectory partial_;
};

/// Adaptive Dormand–Prince 5(4) from r0 to r1 (either direction). Each
/// accepted step is resampled at quarter points from the stepper's continuous
/// extension, so the stored Hermite interpolant stays within the tolerances.
inline Trajectory ode_integrate(const OdeRhs& rhs, OdeState y0, double r0, double r1,
                                const OdeSpec& spec = {}) {
  namespace odeint = boost::numeric::odeint;
  if (!(spec.rel_tol > 0.0) || !(spec.abs_tol > 0.0)) {
    throw std::invalid_argument("ode_integrate: tolerances must be positive");
  }
  // Integrate in s = |r − r0| so the stepper always runs forward.
  const double dir = r1 >= r0 ? 1.0 : -1.0;
  const double span = std::abs(r1 - r0);
  Trajectory traj;
  auto eval = [&](const OdeState& y, OdeState& dyds, double s) {
    const double r = r0 + dir * s;
    try {
      rhs(y, dyds, r);
    } catch (const IntegrationError&) {
      throw;
    } catch (const std::exception& e) {
      throw IntegrationError(std::string("ode_integrate: ") + e.what(), r, traj);
    }
    for (double& v : dyds) v *= dir;
  };
  auto store = [&](double s, const OdeState& y) {
    for (double v : y) {
      if (!std::isfinite(v)) throw IntegrationError("ode_integrate: non-finite state", r0 + dir * s, traj);
    }
    OdeState d(y.size());
    eval(y, d, s);
    for (double& v : d) v *= dir;
    traj.push(r0 + dir * s, y, std::move(d));
  };
  store(0.0, y0);
  if (span == 0.0) return traj;

  auto stepper = odeint::make_dense_output(spec.abs_tol, spec.rel_tol, odeint::runge_kutta_dopri5<OdeState>());
  stepper.initialize(y0, 0.0, std::min(std::abs(spec.initial_step), span));
  const auto sys = [&](const OdeState& y, OdeState& d, double s) { eval(y, d, s); };
  long steps = 0;
  while (stepper.current_time() < span) {
    if (++steps > spec.max_steps) {
      throw IntegrationError("ode_integrate: max_steps exceeded", r0 + dir * stepper.current_time(), traj);
    }
    const double s0 = stepper.current_time();
    if (s0 + stepper.current_time_step() > span) {
      // Never evaluate the right side beyond r1.
      const OdeState y = stepper.current_state();
      stepper.initialize(y, s0, span - s0);
    }
    const double min_step = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(r0 + dir * s0));
    try {
      stepper.do_step(sys);
    } catch (const odeint::step_adjustment_error&) {
      throw IntegrationError("ode_integrate: step size underflow", r0 + dir * s0, traj);
    }
    const double s1 = std::min(stepper.current_time(), span);
    if (s1 - s0 < min_step && s1 < span) {
      throw IntegrationError("ode_integrate: step size underflow", r0 + dir * s0, traj);
    }
    OdeState y(y0.size());
    for (int k = 1; k <= 3; ++k) {
      const double s = s0 + (s1 - s0) * k / 4.0;
      stepper.calc_state(s, y);
      store(s, y);
    }
    store(s1, stepper.current_state());
  }
  return traj;
}

}  // namespace tumour
