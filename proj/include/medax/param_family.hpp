#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "medax/errors.hpp"
#include "medax/set_oracle.hpp"

namespace medax {

/// One-parameter family of closed sets t -> X_t with a finite schedule of
/// parameter values standing in for t -> 0, plus the limit section X_0.
/// Schedules may carry signs (alternating deformations); they are ordered
/// by strictly decreasing |t| and never contain 0.
class ParamFamily {
 public:
  ParamFamily(std::vector<double> schedule, std::function<SetOracle(double)> at,
              std::optional<SetOracle> limit)
      : schedule_(std::move(schedule)), at_(std::move(at)), limit_(std::move(limit)) {
    if (schedule_.empty()) throw std::invalid_argument("family: empty schedule");
    for (std::size_t i = 0; i < schedule_.size(); ++i) {
      double t = schedule_[i];
      if (!std::isfinite(t) || t == 0.0)
        throw std::invalid_argument("family: schedule values must be finite and nonzero");
      if (i > 0 && !(std::fabs(t) < std::fabs(schedule_[i - 1])))
        throw std::invalid_argument("family: schedule must strictly decrease in |t|");
    }
    if (!at_) throw std::invalid_argument("family: missing section map");
  }

  const std::vector<double>& schedule() const { return schedule_; }
  SetOracle at(double t) const { return at_(t); }
  bool has_limit() const { return limit_.has_value(); }
  const SetOracle& limit() const {
    if (!limit_) throw Error("family has no limit section");
    return *limit_;
  }

  /// The |t|-smallest k entries, schedule order (largest |t| first).
  std::vector<double> tail(int k) const {
    if (k <= 0 || static_cast<std::size_t>(k) > schedule_.size())
      throw ScheduleTooShortError("schedule shorter than requested tail");
    return {schedule_.end() - k, schedule_.end()};
  }

 private:
  std::vector<double> schedule_;
  std::function<SetOracle(double)> at_;
  std::optional<SetOracle> limit_;
};

/// Geometric schedule t_i = first * rho^(i-1), i = 1..steps; when `signed_`
/// the signs alternate +,-,+,... starting positive.
inline std::vector<double> geometric_schedule(double first, double rho, int steps,
                                              bool signed_ = false) {
  if (!(first > 0.0) || !(rho > 0.0) || !(rho < 1.0) || steps < 1)
    throw std::invalid_argument("geometric_schedule: need first>0, 0<rho<1, steps>=1");
  std::vector<double> s;
  s.reserve(steps);
  double t = first;
  for (int i = 0; i < steps; ++i) {
    s.push_back(signed_ && (i % 2 == 1) ? -t : t);
    t *= rho;
  }
  return s;
}

}  // namespace medax
