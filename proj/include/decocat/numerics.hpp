#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace decocat::numerics {

using complex = std::complex<double>;

// Uniform 1-D grid: `points` samples from grid_min to grid_max inclusive.
struct GridSpec {
    double grid_min = -6.0;
    double grid_max = 6.0;
    std::size_t points = 2401;

    double spacing() const { return (grid_max - grid_min) / static_cast<double>(points - 1); }
    double at(std::size_t i) const { return grid_min + static_cast<double>(i) * spacing(); }

    // Throws std::invalid_argument unless grid_max > grid_min and points >= 16.
    void validate() const;
};

inline constexpr std::size_t kMinGridPoints = 16;

/// Builds a symmetric grid wide enough for Gaussian wavepackets centred no
/// further than `max_abs_mean` from the origin: range +-(max_abs_mean + 10)
/// with at least `points_per_unit` samples per unit length.
GridSpec wavepacket_grid(double max_abs_mean, double points_per_unit = 250.0);

// Composite trapezoid rule on uniformly spaced samples.
double trapezoid_integral(std::span<const double> values, double spacing);

// Trapezoid rule over a row-major ny x nx grid (x varies fastest).
double trapezoid_integral_2d(std::span<const double> values, std::size_t nx, std::size_t ny,
                             double dx, double dy);

/// Continuum-normalised Fourier transform
///
///   out(p) = (2 pi)^(-1/2) * integral psi(x) exp(-i p x) dx
///
/// for samples on x_j = (j - N/2) * spacing, j = 0..N-1. The result lives on
/// the dual grid p_k = (k - N/2) * dual_spacing(N, spacing).
std::vector<complex> dft_unitary(std::span<const complex> samples, double spacing);

// Inverse of dft_unitary; `spacing` is the x-grid spacing of the original samples.
std::vector<complex> idft_unitary(std::span<const complex> spectrum, double spacing);

// Two-dimensional version over a row-major n x n grid with equal spacing per axis.
std::vector<complex> dft_unitary_2d(std::span<const complex> samples, std::size_t n, double spacing);

double dual_spacing(std::size_t n, double spacing);

// log(exp(a) + exp(b)) without overflow; exact when either argument is -inf.
double log_sum_exp(double a, double b);

// ---------------------------------------------------------------------------
// Random streams
// ---------------------------------------------------------------------------

/// Engine used for every stochastic quantity. std::mt19937_64 has a fully
/// specified output sequence, so streams are identical across platforms.
using RngEngine = std::mt19937_64;

inline constexpr std::string_view kRngAlgorithm =
    "mt19937_64; stream seed = splitmix64(splitmix64(seed) + index); "
    "boost::random normal (ziggurat) and uniform_01";

std::uint64_t splitmix64(std::uint64_t x);

// Seed for the index-th independent stream derived from a master seed.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

RngEngine make_stream(std::uint64_t seed, std::uint64_t index);

// Normal(mean, variance). Throws std::invalid_argument when variance <= 0.
double gaussian_sample(RngEngine& rng, double mean, double variance);

// Uniform on [0, 1).
double uniform_sample(RngEngine& rng);

}  // namespace decocat::numerics
