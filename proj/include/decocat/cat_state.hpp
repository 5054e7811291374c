#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "decocat/interference.hpp"
#include "decocat/numerics.hpp"

namespace decocat {

using numerics::GridSpec;

/// n-mode cat N (|alpha_1..alpha_n> + |-alpha_1..-alpha_n>). The last m modes
/// form the environment, the first n - m the system.
class MultimodeCat {
public:
    // Throws std::invalid_argument unless alphas is non-empty and m < alphas.size().
    MultimodeCat(std::vector<ComplexAmplitude> alphas, std::size_t environment_modes = 0);

    static MultimodeCat identical(ComplexAmplitude alpha, std::size_t modes, std::size_t environment_modes = 0);

    std::span<const ComplexAmplitude> alphas() const { return alphas_; }
    std::size_t modes() const { return alphas_.size(); }
    std::size_t environment_modes() const { return m_; }
    std::size_t system_modes() const { return alphas_.size() - m_; }

    // Sum of |alpha_j|^2 over all modes (mean photon number of one branch).
    double total_norm2() const;

    /// (2 + 2 prod_j q_{alpha_j})^(-1/2).
    double normalization() const;

    // True when every amplitude is real and equal to the first one.
    bool identical_real() const;

private:
    std::vector<ComplexAmplitude> alphas_;
    std::size_t m_;
};

struct EffectiveCat {
    double a = 0.0;  // system coherence parameter
    double b = 0.0;  // environment coherence parameter
};

/// A sampled one-dimensional probability density on a uniform grid.
/// `normalization_residual` is trapezoid(analytic density) - 1, measured before
/// the values were rescaled to unit trapezoid mass.
struct GridDensity {
    double grid_min = 0.0;
    double grid_max = 0.0;
    std::vector<double> values;
    double normalization_residual = 0.0;

    std::size_t size() const { return values.size(); }
    double spacing() const { return (grid_max - grid_min) / static_cast<double>(values.size() - 1); }
    double at(std::size_t i) const { return grid_min + static_cast<double>(i) * spacing(); }
};

namespace cat {

// pi^(-1/4) exp(-(x - sqrt2 re)^2 / 2 + i sqrt2 im x - i re im)
complex coherent_wavefunction_x(ComplexAmplitude alpha, double x);

// pi^(-1/4) exp(-(p - sqrt2 im)^2 / 2 - i sqrt2 re p + i re im)
complex coherent_wavefunction_p(ComplexAmplitude alpha, double p);

/// Coordinate wavefunction of the cat at the point xs (one coordinate per mode).
/// Throws std::invalid_argument on a length mismatch.
complex cat_wavefunction_x(const MultimodeCat& cat, std::span<const double> xs);

// Momentum counterpart of cat_wavefunction_x.
complex cat_wavefunction_p(const MultimodeCat& cat, std::span<const double> ps);

/// Marginal momentum density of one mode with real amplitude alpha whose
/// partner modes have total overlap q_env:
///
///   P(p) ~ exp(-p^2) (1 + q_env cos(2 sqrt2 alpha p))
///
/// rescaled to unit trapezoid mass on `grid`.
GridDensity fringe_marginal(double alpha, double q_env, const GridSpec& grid);

/// Joint momentum density of the n - m system modes with the environment
/// traced out, for arbitrary complex amplitudes:
///
///   P = 2 N^2 pi^(-(n-m)/2) exp(-sum p^2 - 2 sum Im(a)^2)
///         * [cosh(2 sqrt2 sum Im(a_j) p_j) + q_env cos(2 sqrt2 sum Re(a_j) p_j)]
///
/// with sums over system modes and q_env = exp(-2 sum_env |a|^2).
/// Throws std::invalid_argument unless ps.size() == n - m.
double system_momentum_density(const MultimodeCat& cat, std::span<const double> ps);

/// Visibility (I_max - I_min) / (I_max + I_min) of the central fringe and its
/// neighbouring minimum, read off the density after dividing out the Gaussian
/// envelope exp(-(p / envelope_scale)^2). Extrema are located on the grid and
/// refined by three-point parabolic interpolation.
double fringe_visibility(const GridDensity& density, double envelope_scale = 1.0);

EffectiveCat effective_params(const MultimodeCat& cat);

/// Schmidt summary of the effective two-mode cat with q_a = exp(-2a^2), q_b = exp(-2b^2).
interference::SchmidtSummary effective_summary(const EffectiveCat& eff);

// exp(-2 m alpha^2): visibility left after m identical environment modes.
double env_visibility_identical(std::size_t m, double alpha);

/// Density of the total system momentum p = p_1 + ... + p_{n_sys} for
/// identical real amplitudes. The collective mode sum(p_j)/sqrt(n_sys) carries
/// the cat with amplitude a; the orthogonal combinations are vacuum.
GridDensity total_momentum_marginal(const EffectiveCat& eff, std::size_t n_sys, const GridSpec& grid);

// Same, derived from the cat itself. Throws std::invalid_argument unless
// the amplitudes are identical and real.
GridDensity total_momentum_marginal(const MultimodeCat& cat, const GridSpec& grid);

}  // namespace cat
}  // namespace decocat
