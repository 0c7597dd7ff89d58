#include "ghostsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace ghostsim {

double epsilon(const CorrelationMap& a, const CorrelationMap& b)
{
    if (a.nx != b.nx || a.ny != b.ny || a.g.size() != b.g.size())
        throw ContractViolation("epsilon: map shapes differ");
    const double ma = a.max();
    const double mb = b.max();
    if (!(ma > 0.0) || !(mb > 0.0))
        throw ContractViolation("epsilon: map maxima must be positive");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.g.size(); ++i) {
        const double d = a.g[i] / ma - b.g[i] / mb;
        num += d * d;
        den += (b.g[i] / mb) * (b.g[i] / mb);
    }
    return std::sqrt(num / den);
}

namespace {

// Through-origin regression of (eps - d1) on n^{-1/2} gives the best d0 for
// a fixed floor; returns the rms residual.
double fit_d0(const ErrorSeries& s, double d1, double& d0_out)
{
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < s.shots.size(); ++i) {
        const double x = 1.0 / std::sqrt(static_cast<double>(s.shots[i]));
        sxy += x * (s.eps[i] - d1);
        sxx += x * x;
    }
    const double slope = sxy / sxx;  // = d0^{-1/2}
    if (!(slope > 0.0)) {
        d0_out = 0.0;
        return std::numeric_limits<double>::infinity();
    }
    d0_out = 1.0 / (slope * slope);
    double r2 = 0.0;
    for (std::size_t i = 0; i < s.shots.size(); ++i) {
        const double model = slope / std::sqrt(static_cast<double>(s.shots[i])) + d1;
        r2 += (s.eps[i] - model) * (s.eps[i] - model);
    }
    return std::sqrt(r2 / s.shots.size());
}

}  // namespace

ConvergenceFit fit_convergence(const ErrorSeries& series)
{
    if (series.shots.size() != series.eps.size() || series.shots.size() < 3)
        throw FitError("fit_convergence: need at least 3 (shots, eps) points");
    for (std::size_t i = 0; i < series.shots.size(); ++i)
        if (series.shots[i] < 1 || !(series.eps[i] >= 0.0) || !std::isfinite(series.eps[i]))
            throw FitError("fit_convergence: invalid series entry");

    const double hi = *std::min_element(series.eps.begin(), series.eps.end());
    double a = 0.0, b = hi;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double d0 = 0.0;
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    double fc = fit_d0(series, c, d0);
    double fd = fit_d0(series, d, d0);
    for (int iter = 0; iter < 80; ++iter) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = fit_d0(series, c, d0);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = fit_d0(series, d, d0);
        }
    }
    ConvergenceFit fit;
    fit.d1 = 0.5 * (a + b);
    fit.residual = fit_d0(series, fit.d1, fit.d0);
    if (!(fit.d0 > 0.0) || !std::isfinite(fit.residual))
        throw FitError("fit_convergence: degenerate fit");
    return fit;
}

double speedup_estimate(double bandwidth_pdc, double pump_waist)
{
    if (!(bandwidth_pdc > 0.0) || !(pump_waist > 0.0))
        throw ContractViolation("speedup_estimate: arguments must be positive");
    return bandwidth_pdc / (2.0 / pump_waist);
}

void save_error_series_csv(const ErrorSeries& series, const std::string& path)
{
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path);
    out << "shots,eps\n";
    out.precision(17);
    for (std::size_t i = 0; i < series.shots.size(); ++i)
        out << series.shots[i] << ',' << series.eps[i] << '\n';
}

ErrorSeries load_error_series_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open " + path);
    ErrorSeries s;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        long n = 0;
        double e = 0.0;
        char comma = 0;
        if (!(ls >> n >> comma >> e) || comma != ',')
            throw ConfigError("malformed error-series row in " + path);
        s.shots.push_back(n);
        s.eps.push_back(e);
    }
    return s;
}

}  // namespace ghostsim
