#include "decocat/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_01.hpp>
#include <fftw3.h>

namespace decocat::numerics {

void GridSpec::validate() const
{
    if (!(grid_max > grid_min)) {
        throw std::invalid_argument("grid_max must exceed grid_min");
    }
    if (points < kMinGridPoints) {
        throw std::invalid_argument("grid needs at least " + std::to_string(kMinGridPoints) +
                                    " points, got " + std::to_string(points));
    }
}

GridSpec wavepacket_grid(double max_abs_mean, double points_per_unit)
{
    const double half = std::abs(max_abs_mean) + 10.0;
    const auto intervals = static_cast<std::size_t>(std::ceil(2.0 * half * points_per_unit));
    return GridSpec{-half, half, std::max(intervals + 1, kMinGridPoints)};
}

double trapezoid_integral(std::span<const double> values, double spacing)
{
    if (values.size() < 2) {
        throw std::invalid_argument("trapezoid_integral needs at least 2 samples");
    }
    if (!(spacing > 0.0)) {
        throw std::invalid_argument("trapezoid_integral needs positive spacing");
    }
    double interior = 0.0;
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
        interior += values[i];
    }
    return spacing * (interior + 0.5 * (values.front() + values.back()));
}

double trapezoid_integral_2d(std::span<const double> values, std::size_t nx, std::size_t ny,
                             double dx, double dy)
{
    if (nx < 2 || ny < 2 || values.size() != nx * ny) {
        throw std::invalid_argument("trapezoid_integral_2d: shape mismatch");
    }
    std::vector<double> rows(ny);
    for (std::size_t j = 0; j < ny; ++j) {
        rows[j] = trapezoid_integral(values.subspan(j * nx, nx), dx);
    }
    return trapezoid_integral(rows, dy);
}

namespace {

struct PlanDeleter {
    void operator()(fftw_plan_s* plan) const { fftw_destroy_plan(plan); }
};
using Plan = std::unique_ptr<fftw_plan_s, PlanDeleter>;

// The FFTW planner is not re-entrant.
std::mutex& planner_mutex()
{
    static std::mutex m;
    return m;
}

enum class Direction { forward, backward };

std::vector<complex> raw_fft(std::vector<complex> data, std::size_t n0, std::size_t n1, Direction dir)
{
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    const int sign = dir == Direction::forward ? FFTW_FORWARD : FFTW_BACKWARD;
    Plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan.reset(n1 == 1 ? fftw_plan_dft_1d(static_cast<int>(n0), buf, buf, sign, FFTW_ESTIMATE)
                           : fftw_plan_dft_2d(static_cast<int>(n0), static_cast<int>(n1), buf, buf,
                                              sign, FFTW_ESTIMATE));
    }
    if (!plan) {
        throw std::runtime_error("FFTW failed to create a plan");
    }
    fftw_execute(plan.get());
    return data;
}

// exp(2 pi i * num / n), with num reduced mod n first to keep the argument small.
complex root_of_unity(long long num, std::size_t n)
{
    const auto nn = static_cast<long long>(n);
    num %= nn;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(n);
    return {std::cos(angle), std::sin(angle)};
}

// Per-index factors that turn a plain DFT into the centred, continuum-normalised one.
// forward: exp(-i p_k x_j) = e^{-2pi i kj/N} * e^{2pi i h j/N} * e^{2pi i h k/N} * e^{-2pi i h^2/N}
struct CentredFactors {
    std::vector<complex> pre;   // applied to input index
    std::vector<complex> post;  // applied to output index, includes the constant phase
};

CentredFactors centred_factors(std::size_t n, Direction dir)
{
    const auto h = static_cast<long long>(n / 2);
    const long long s = dir == Direction::forward ? 1 : -1;
    CentredFactors f{std::vector<complex>(n), std::vector<complex>(n)};
    const complex constant = root_of_unity(-s * h * h, n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto ii = static_cast<long long>(i);
        f.pre[i] = root_of_unity(s * h * ii, n);
        f.post[i] = root_of_unity(s * h * ii, n) * constant;
    }
    return f;
}

void check_length(std::size_t n)
{
    if (n < kMinGridPoints) {
        throw std::invalid_argument("dft needs at least " + std::to_string(kMinGridPoints) + " samples");
    }
}

std::vector<complex> centred_transform_1d(std::span<const complex> in, double scale, Direction dir)
{
    const std::size_t n = in.size();
    check_length(n);
    const auto f = centred_factors(n, dir);
    std::vector<complex> data(n);
    for (std::size_t j = 0; j < n; ++j) {
        data[j] = in[j] * f.pre[j];
    }
    data = raw_fft(std::move(data), n, 1, dir);
    for (std::size_t k = 0; k < n; ++k) {
        data[k] *= f.post[k] * scale;
    }
    return data;
}

}  // namespace

double dual_spacing(std::size_t n, double spacing)
{
    return 2.0 * std::numbers::pi / (static_cast<double>(n) * spacing);
}

std::vector<complex> dft_unitary(std::span<const complex> samples, double spacing)
{
    return centred_transform_1d(samples, spacing / std::sqrt(2.0 * std::numbers::pi), Direction::forward);
}

std::vector<complex> idft_unitary(std::span<const complex> spectrum, double spacing)
{
    const double dp = dual_spacing(spectrum.size(), spacing);
    return centred_transform_1d(spectrum, dp / std::sqrt(2.0 * std::numbers::pi), Direction::backward);
}

std::vector<complex> dft_unitary_2d(std::span<const complex> samples, std::size_t n, double spacing)
{
    check_length(n);
    if (samples.size() != n * n) {
        throw std::invalid_argument("dft_unitary_2d: expected n*n samples");
    }
    const auto f = centred_factors(n, Direction::forward);
    std::vector<complex> data(samples.begin(), samples.end());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            data[r * n + c] *= f.pre[r] * f.pre[c];
        }
    }
    data = raw_fft(std::move(data), n, n, Direction::forward);
    const double scale = spacing * spacing / (2.0 * std::numbers::pi);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            data[r * n + c] *= f.post[r] * f.post[c] * scale;
        }
    }
    return data;
}

double log_sum_exp(double a, double b)
{
    if (a == -std::numeric_limits<double>::infinity()) {
        return b;
    }
    if (b == -std::numeric_limits<double>::infinity()) {
        return a;
    }
    const double hi = std::max(a, b);
    return hi + std::log1p(std::exp(-std::abs(a - b)));
}

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index)
{
    return splitmix64(splitmix64(seed) + index);
}

RngEngine make_stream(std::uint64_t seed, std::uint64_t index)
{
    return RngEngine{stream_seed(seed, index)};
}

double gaussian_sample(RngEngine& rng, double mean, double variance)
{
    if (!(variance > 0.0)) {
        throw std::invalid_argument("gaussian_sample needs positive variance");
    }
    boost::random::normal_distribution<double> dist(mean, std::sqrt(variance));
    return dist(rng);
}

double uniform_sample(RngEngine& rng)
{
    boost::random::uniform_01<double> dist;
    return dist(rng);
}

}  // namespace decocat::numerics
