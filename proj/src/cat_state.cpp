#include "decocat/cat_state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace decocat {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kLogPi = 1.1447298858494002;  // ln(pi)

}  // namespace

MultimodeCat::MultimodeCat(std::vector<ComplexAmplitude> alphas, std::size_t environment_modes)
    : alphas_(std::move(alphas)), m_(environment_modes)
{
    if (alphas_.empty()) {
        throw std::invalid_argument("a cat needs at least one mode");
    }
    if (m_ >= alphas_.size()) {
        throw std::invalid_argument("environment mode count " + std::to_string(m_) +
                                    " must be below the mode count " + std::to_string(alphas_.size()));
    }
    for (const auto& a : alphas_) {
        if (!std::isfinite(a.re) || !std::isfinite(a.im)) {
            throw std::invalid_argument("cat amplitudes must be finite");
        }
    }
}

MultimodeCat MultimodeCat::identical(ComplexAmplitude alpha, std::size_t modes, std::size_t environment_modes)
{
    return MultimodeCat(std::vector<ComplexAmplitude>(modes, alpha), environment_modes);
}

double MultimodeCat::total_norm2() const
{
    return std::accumulate(alphas_.begin(), alphas_.end(), 0.0,
                           [](double acc, const ComplexAmplitude& a) { return acc + a.norm2(); });
}

double MultimodeCat::normalization() const
{
    // prod_j exp(-2|alpha_j|^2) is real and positive.
    return 1.0 / std::sqrt(2.0 + 2.0 * std::exp(-2.0 * total_norm2()));
}

bool MultimodeCat::identical_real() const
{
    const auto first = alphas_.front();
    return std::all_of(alphas_.begin(), alphas_.end(),
                       [&](const ComplexAmplitude& a) { return a.im == 0.0 && a == first; });
}

namespace cat {

namespace {

// Exponent of the coherent wavefunction without the pi^(-1/4) prefactor.
complex log_coherent_x(ComplexAmplitude alpha, double x)
{
    const double shift = x - kSqrt2 * alpha.re;
    return {-0.5 * shift * shift, kSqrt2 * alpha.im * x - alpha.re * alpha.im};
}

complex log_coherent_p(ComplexAmplitude alpha, double p)
{
    const double shift = p - kSqrt2 * alpha.im;
    return {-0.5 * shift * shift, -kSqrt2 * alpha.re * p + alpha.re * alpha.im};
}

template <typename LogKernel>
complex cat_wavefunction(const MultimodeCat& cat, std::span<const double> coords, LogKernel log_kernel)
{
    if (coords.size() != cat.modes()) {
        throw std::invalid_argument("expected " + std::to_string(cat.modes()) + " coordinates, got " +
                                    std::to_string(coords.size()));
    }
    complex plus{0.0, 0.0};
    complex minus{0.0, 0.0};
    const auto alphas = cat.alphas();
    for (std::size_t j = 0; j < coords.size(); ++j) {
        plus += log_kernel(alphas[j], coords[j]);
        minus += log_kernel(-alphas[j], coords[j]);
    }
    const double prefactor = -0.25 * static_cast<double>(coords.size()) * kLogPi;
    return cat.normalization() * (std::exp(plus + prefactor) + std::exp(minus + prefactor));
}

void check_overlap(double q, const char* what)
{
    if (!(q >= 0.0 && q <= 1.0)) {
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1], got " + std::to_string(q));
    }
}

// Samples C exp(-u^2) (1 + q_env cos(2 sqrt2 a u)) with u = p / scale, C being the
// analytic normalisation of the density in p, then rescales to unit trapezoid mass.
GridDensity sampled_fringe(double a, double q_env, double scale, const GridSpec& grid)
{
    grid.validate();
    const double q_sys = std::exp(-2.0 * a * a);
    const double analytic_norm = 1.0 / (scale * std::sqrt(std::numbers::pi) * (1.0 + q_env * q_sys));
    const double k = 2.0 * kSqrt2 * a;

    GridDensity out{grid.grid_min, grid.grid_max, std::vector<double>(grid.points), 0.0};
    for (std::size_t i = 0; i < grid.points; ++i) {
        const double u = grid.at(i) / scale;
        out.values[i] = analytic_norm * std::exp(-u * u) * (1.0 + q_env * std::cos(k * u));
    }
    const double mass = numerics::trapezoid_integral(out.values, grid.spacing());
    out.normalization_residual = mass - 1.0;
    for (auto& v : out.values) {
        v /= mass;
    }
    return out;
}

struct Extremum {
    std::size_t index;
    double value;
};

// Value at the vertex of the parabola through (i-1, i, i+1).
double parabolic_peak(std::span<const double> f, std::size_t i)
{
    if (i == 0 || i + 1 >= f.size()) {
        return f[i];
    }
    const double curvature = f[i + 1] - 2.0 * f[i] + f[i - 1];
    if (curvature == 0.0) {
        return f[i];
    }
    const double slope = f[i + 1] - f[i - 1];
    return f[i] - slope * slope / (8.0 * curvature);
}

}  // namespace

complex coherent_wavefunction_x(ComplexAmplitude alpha, double x)
{
    return std::exp(log_coherent_x(alpha, x) - 0.25 * kLogPi);
}

complex coherent_wavefunction_p(ComplexAmplitude alpha, double p)
{
    return std::exp(log_coherent_p(alpha, p) - 0.25 * kLogPi);
}

complex cat_wavefunction_x(const MultimodeCat& cat, std::span<const double> xs)
{
    return cat_wavefunction(cat, xs, log_coherent_x);
}

complex cat_wavefunction_p(const MultimodeCat& cat, std::span<const double> ps)
{
    return cat_wavefunction(cat, ps, log_coherent_p);
}

GridDensity fringe_marginal(double alpha, double q_env, const GridSpec& grid)
{
    if (!(alpha > 0.0)) {
        throw std::invalid_argument("fringe_marginal needs alpha > 0");
    }
    check_overlap(q_env, "q_env");
    return sampled_fringe(alpha, q_env, 1.0, grid);
}

double system_momentum_density(const MultimodeCat& cat, std::span<const double> ps)
{
    const std::size_t n_sys = cat.system_modes();
    if (ps.size() != n_sys) {
        throw std::invalid_argument("expected " + std::to_string(n_sys) + " system momenta, got " +
                                    std::to_string(ps.size()));
    }
    const auto alphas = cat.alphas();
    double log_envelope = -0.5 * static_cast<double>(n_sys) * kLogPi;
    double im_phase = 0.0;
    double re_phase = 0.0;
    for (std::size_t j = 0; j < n_sys; ++j) {
        log_envelope -= ps[j] * ps[j] + 2.0 * alphas[j].im * alphas[j].im;
        im_phase += 2.0 * kSqrt2 * alphas[j].im * ps[j];
        re_phase += 2.0 * kSqrt2 * alphas[j].re * ps[j];
    }
    double env_norm2 = 0.0;
    for (std::size_t j = n_sys; j < alphas.size(); ++j) {
        env_norm2 += alphas[j].norm2();
    }
    const double q_env = std::exp(-2.0 * env_norm2);
    const double n2 = cat.normalization() * cat.normalization();
    // 2 cosh(z) e^c = e^{c+z} + e^{c-z}, kept apart so neither factor overflows.
    const double hyperbolic = std::exp(log_envelope + im_phase) + std::exp(log_envelope - im_phase);
    return n2 * (hyperbolic + 2.0 * q_env * std::exp(log_envelope) * std::cos(re_phase));
}

double fringe_visibility(const GridDensity& density, double envelope_scale)
{
    if (density.size() < numerics::kMinGridPoints) {
        throw std::invalid_argument("fringe_visibility needs a grid of at least 16 points");
    }
    if (!(envelope_scale > 0.0)) {
        throw std::invalid_argument("envelope_scale must be positive");
    }
    // Restrict to the core where the envelope is above e^-4.
    std::vector<double> fringe;
    const double limit = 2.0 * envelope_scale;
    for (std::size_t i = 0; i < density.size(); ++i) {
        const double u = density.at(i) / envelope_scale;
        if (std::abs(density.at(i)) <= limit) {
            fringe.push_back(density.values[i] * std::exp(u * u));
        }
    }
    if (fringe.size() < 3) {
        throw std::invalid_argument("grid does not resolve the central fringe");
    }

    const auto top = std::max_element(fringe.begin(), fringe.end());
    const auto top_index = static_cast<std::size_t>(top - fringe.begin());
    const double i_max = parabolic_peak(fringe, top_index);

    // Nearest local minimum on either side of the central maximum.
    std::optional<Extremum> nearest;
    auto consider = [&](std::size_t i) {
        if (i == 0 || i + 1 >= fringe.size()) {
            return false;
        }
        if (fringe[i] <= fringe[i - 1] && fringe[i] <= fringe[i + 1] && fringe[i] < *top) {
            const std::size_t dist = i > top_index ? i - top_index : top_index - i;
            const std::size_t best = nearest ? (nearest->index > top_index ? nearest->index - top_index
                                                                          : top_index - nearest->index)
                                             : fringe.size();
            if (dist < best) {
                nearest = Extremum{i, parabolic_peak(fringe, i)};
            }
            return true;
        }
        return false;
    };
    for (std::size_t i = top_index + 1; i + 1 < fringe.size(); ++i) {
        if (consider(i)) {
            break;
        }
    }
    for (std::size_t i = top_index; i-- > 1;) {
        if (consider(i)) {
            break;
        }
    }
    const double i_min = nearest ? nearest->value : *std::min_element(fringe.begin(), fringe.end());
    const double v = (i_max - i_min) / (i_max + i_min);
    return std::clamp(v, 0.0, 1.0);
}

EffectiveCat effective_params(const MultimodeCat& cat)
{
    const auto alphas = cat.alphas();
    const std::size_t n_sys = cat.system_modes();
    double sys = 0.0;
    double env = 0.0;
    for (std::size_t j = 0; j < alphas.size(); ++j) {
        (j < n_sys ? sys : env) += alphas[j].norm2();
    }
    return {std::sqrt(sys), std::sqrt(env)};
}

interference::SchmidtSummary effective_summary(const EffectiveCat& eff)
{
    const interference::OverlapPair pair{interference::coherent_overlap(eff.a),
                                         interference::coherent_overlap(eff.b)};
    return interference::schmidt_summary(interference::delta(pair));
}

double env_visibility_identical(std::size_t m, double alpha)
{
    return std::exp(-2.0 * static_cast<double>(m) * alpha * alpha);
}

GridDensity total_momentum_marginal(const EffectiveCat& eff, std::size_t n_sys, const GridSpec& grid)
{
    if (n_sys < 1) {
        throw std::invalid_argument("total_momentum_marginal needs at least one system mode");
    }
    const double q_env = std::exp(-2.0 * eff.b * eff.b);
    return sampled_fringe(eff.a, q_env, std::sqrt(static_cast<double>(n_sys)), grid);
}

GridDensity total_momentum_marginal(const MultimodeCat& cat, const GridSpec& grid)
{
    if (!cat.identical_real()) {
        throw std::invalid_argument("total_momentum_marginal supports identical real amplitudes only");
    }
    return total_momentum_marginal(effective_params(cat), cat.system_modes(), grid);
}

}  // namespace cat
}  // namespace decocat
