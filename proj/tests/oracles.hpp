// Independent reference computations used only by the tests. Nothing here
// calls into the library code paths it is used to check.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace oracle {

using complex = std::complex<double>;

// O(N^2) continuum-normalised DFT on x_j = (j - N/2) dx, p_k = (k - N/2) dp.
inline std::vector<complex> direct_centred_dft(std::span<const complex> psi, double dx)
{
    const std::size_t n = psi.size();
    const auto half = static_cast<double>(n / 2);
    const double dp = 2.0 * std::numbers::pi / (static_cast<double>(n) * dx);
    std::vector<complex> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double p = (static_cast<double>(k) - half) * dp;
        complex acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
            const double x = (static_cast<double>(j) - half) * dx;
            acc += psi[j] * std::polar(1.0, -p * x);
        }
        out[k] = acc * dx / std::sqrt(2.0 * std::numbers::pi);
    }
    return out;
}

/// Cat wavefunction in position space for real amplitudes, written as the
/// cosh closed form with the constant fixed by the explicit state normalisation:
///   psi = sqrt2 C pi^(-n/4) exp(-sum x^2 / 2) cosh(sqrt2 sum alpha x),
///   C = (exp(2 sum alpha^2) + 1)^(-1/2).
inline double cosh_form_x(std::span<const double> alphas, std::span<const double> xs)
{
    double s2 = 0.0, sx2 = 0.0, sax = 0.0;
    for (std::size_t j = 0; j < alphas.size(); ++j) {
        s2 += alphas[j] * alphas[j];
        sx2 += xs[j] * xs[j];
        sax += alphas[j] * xs[j];
    }
    const double c = 1.0 / std::sqrt(std::exp(2.0 * s2) + 1.0);
    return std::numbers::sqrt2 * c * std::pow(std::numbers::pi, -0.25 * alphas.size()) * std::exp(-0.5 * sx2) *
           std::cosh(std::numbers::sqrt2 * sax);
}

// The same with the constant exactly as typeset in the source derivation,
// (exp(2 sum alpha^2) + exp(-2 sum alpha^2))^(-1/2). Used to show it does not normalise.
inline double cosh_form_x_printed_constant(std::span<const double> alphas, std::span<const double> xs)
{
    double s2 = 0.0;
    for (double a : alphas) {
        s2 += a * a;
    }
    const double derived = 1.0 / std::sqrt(std::exp(2.0 * s2) + 1.0);
    const double printed = 1.0 / std::sqrt(std::exp(2.0 * s2) + std::exp(-2.0 * s2));
    return cosh_form_x(alphas, xs) * printed / derived;
}

// Momentum counterpart for real amplitudes: sqrt2 C pi^(-n/4) exp(-sum p^2/2) cos(sqrt2 sum alpha p),
// C = (1 + exp(-2 sum alpha^2))^(-1/2), up to a global phase of 1.
inline double cos_form_p(std::span<const double> alphas, std::span<const double> ps)
{
    double s2 = 0.0, sp2 = 0.0, sap = 0.0;
    for (std::size_t j = 0; j < alphas.size(); ++j) {
        s2 += alphas[j] * alphas[j];
        sp2 += ps[j] * ps[j];
        sap += alphas[j] * ps[j];
    }
    const double c = 1.0 / std::sqrt(1.0 + std::exp(-2.0 * s2));
    return std::numbers::sqrt2 * c * std::pow(std::numbers::pi, -0.25 * alphas.size()) * std::exp(-0.5 * sp2) *
           std::cos(std::numbers::sqrt2 * sap);
}

// Simple trapezoid, kept separate from the library routine.
inline double trapezoid(std::span<const double> v, double h)
{
    double s = 0.5 * (v.front() + v.back());
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        s += v[i];
    }
    return s * h;
}

// Health from the closed form -4 alpha sqrt2 * running sum of y.
inline std::vector<double> health_from_sum(double alpha, std::span<const double> ys)
{
    std::vector<double> h{0.0};
    double sum = 0.0;
    for (double y : ys) {
        sum += y;
        h.push_back(-4.0 * alpha * std::numbers::sqrt2 * sum);
    }
    return h;
}

// p+ after the measured coordinates ys by direct (non-log) Bayes with a rescale each step.
inline double p_plus_direct(double alpha, std::span<const double> ys)
{
    const double c = alpha * std::numbers::sqrt2;
    double plus = 0.5, minus = 0.5;
    for (double y : ys) {
        plus *= std::exp(-(y + c) * (y + c));
        minus *= std::exp(-(y - c) * (y - c));
        const double total = plus + minus;
        plus /= total;
        minus /= total;
    }
    return plus;
}

}  // namespace oracle
