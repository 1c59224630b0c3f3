#pragma once

#include <span>

namespace rirforge {

struct GammaFit {
    double shape = 0.0;
    double scale = 0.0;
    double nll = 0.0;  // mean negative log-likelihood at the fit
    int iterations = 0;
    bool converged = false;
};

// Maximum-likelihood shape/scale fit via Newton steps on the profiled
// likelihood, started from the moment-matching estimate. Requires >= 30
// strictly positive, non-constant samples.
GammaFit fit_gamma(std::span<const double> samples);

// Mean negative log-likelihood of Gamma(shape, scale) for the given samples.
double gamma_nll(double shape, double scale, std::span<const double> samples);

double digamma(double x);
double trigamma(double x);

}  // namespace rirforge
