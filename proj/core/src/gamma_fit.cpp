#include "rirforge/gamma_fit.hpp"

#include <cmath>
#include <cstddef>

#include "rirforge/errors.hpp"

namespace rirforge {

// Recurrence up to x >= 6, then the asymptotic expansion.
double digamma(double x) {
    double result = 0.0;
    while (x < 6.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x, inv2 = inv * inv;
    result += std::log(x) - 0.5 * inv -
              inv2 * (1.0 / 12.0 - inv2 * (1.0 / 120.0 - inv2 * (1.0 / 252.0 - inv2 / 240.0)));
    return result;
}

double trigamma(double x) {
    double result = 0.0;
    while (x < 6.0) {
        result += 1.0 / (x * x);
        x += 1.0;
    }
    const double inv = 1.0 / x, inv2 = inv * inv;
    result += inv * (1.0 + 0.5 * inv +
                     inv * (1.0 / 6.0 - inv2 * (1.0 / 30.0 - inv2 * (1.0 / 42.0 - inv2 / 30.0))));
    return result;
}

double gamma_nll(double shape, double scale, std::span<const double> samples) {
    double sum = 0.0, log_sum = 0.0;
    for (double v : samples) {
        sum += v;
        log_sum += std::log(v);
    }
    const double n = static_cast<double>(samples.size());
    return shape * std::log(scale) + std::lgamma(shape) -
           (shape - 1.0) * (log_sum / n) + (sum / n) / scale;
}

GammaFit fit_gamma(std::span<const double> samples) {
    if (samples.size() < 30)
        throw DegenerateData("gamma fit needs at least 30 samples");
    double sum = 0.0, log_sum = 0.0, sq_sum = 0.0;
    for (double v : samples) {
        if (!(v > 0.0)) throw DegenerateData("gamma fit needs strictly positive samples");
        sum += v;
        log_sum += std::log(v);
        sq_sum += v * v;
    }
    const double n = static_cast<double>(samples.size());
    const double mean = sum / n;
    const double var = sq_sum / n - mean * mean;
    if (!(var > 0.0)) throw DegenerateData("gamma fit needs non-constant samples");

    // s = log(mean) - mean(log x) > 0 for non-degenerate data (Jensen).
    const double s = std::log(mean) - log_sum / n;
    if (!(s > 0.0)) throw DegenerateData("gamma fit: degenerate log-moment gap");

    const double shape_mm = mean * mean / var;  // moment-matching start
    const double nll_mm = gamma_nll(shape_mm, mean / shape_mm, samples);

    GammaFit fit;
    double shape = shape_mm;
    for (fit.iterations = 0; fit.iterations < 500; ++fit.iterations) {
        const double g = digamma(shape) - std::log(shape) + s;
        if (std::abs(g) < 1e-8) {
            fit.converged = true;
            break;
        }
        const double dg = trigamma(shape) - 1.0 / shape;
        double step = g / dg;
        if (shape - step <= 0.0) step = shape * 0.5;  // keep the iterate positive
        shape -= step;
    }
    fit.shape = shape;
    fit.scale = mean / shape;
    fit.nll = gamma_nll(fit.shape, fit.scale, samples);
    if (fit.nll > nll_mm) {  // never return anything worse than the start
        fit.shape = shape_mm;
        fit.scale = mean / shape_mm;
        fit.nll = nll_mm;
    }
    return fit;
}

}  // namespace rirforge
