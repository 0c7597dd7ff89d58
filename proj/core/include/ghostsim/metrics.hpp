#ifndef GHOSTSIM_METRICS_HPP
#define GHOSTSIM_METRICS_HPP

#include <string>
#include <vector>

#include "ghostsim/correlator.hpp"

namespace ghostsim {

/// Relative L2 distance after peak normalisation:
///   eps = || a / max(a) - b / max(b) || / || b / max(b) ||.
/// b is the reference.
double epsilon(const CorrelationMap& a, const CorrelationMap& b);

/// eps recorded at increasing shot counts during a run.
struct ErrorSeries {
    std::vector<long> shots;
    std::vector<double> eps;
};

/// Parameters of the eps(n) = (d0 n)^{-1/2} + d1 model.
struct ConvergenceFit {
    double d0 = 0.0;        // convergence rate, 1/shots
    double d1 = 0.0;        // error floor
    double residual = 0.0;  // rms misfit over the series
};

/// Least-squares fit of the two-parameter model. The floor d1 is located by
/// golden-section search; d0 follows in closed form. Throws FitError on
/// fewer than 3 points or a degenerate series.
ConvergenceFit fit_convergence(const ErrorSeries& series);

/// Predicted SA speed-up factor rho = delta q_PDC / delta q_p.
double speedup_estimate(double bandwidth_pdc, double pump_waist);

void save_error_series_csv(const ErrorSeries& series, const std::string& path);
ErrorSeries load_error_series_csv(const std::string& path);

}  // namespace ghostsim

#endif
