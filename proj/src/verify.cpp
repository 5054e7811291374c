// Built-in self checks behind `decocat verify`.

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "decocat/cat_state.hpp"
#include "decocat/commands.hpp"
#include "decocat/interference.hpp"
#include "decocat/measurement.hpp"

namespace decocat::cli {

namespace {

struct CheckResult {
    bool pass = false;
    std::string detail;
};

struct Check {
    std::string name;
    std::function<CheckResult()> run;
};

const std::vector<ComplexAmplitude> kProbeAmplitudes{{0.5, 0.0}, {1.0, 0.0}, {3.4, 0.0}, {0.0, 1.0}, {1.0, 1.0}};

std::string sci(double v)
{
    std::ostringstream os;
    os << std::scientific << std::setprecision(2) << v;
    return os.str();
}

double max_extent(ComplexAmplitude a)
{
    return std::numbers::sqrt2 * std::max(std::abs(a.re), std::abs(a.im));
}

enum class Representation { position, momentum };

complex evaluate(const MultimodeCat& c, std::span<const double> coords, Representation rep)
{
    return rep == Representation::position ? cat::cat_wavefunction_x(c, coords) : cat::cat_wavefunction_p(c, coords);
}

// Worst |norm - 1| over the probe amplitudes for one- and two-mode cats.
double worst_norm_error(Representation rep, double scale)
{
    double worst = 0.0;
    for (const auto& alpha : kProbeAmplitudes) {
        const auto grid1 = numerics::wavepacket_grid(max_extent(alpha));
        const auto single = MultimodeCat::identical(alpha, 1);
        std::vector<double> dens(grid1.points);
        for (std::size_t i = 0; i < grid1.points; ++i) {
            const double x = grid1.at(i);
            dens[i] = std::norm(scale * evaluate(single, std::span(&x, 1), rep));
        }
        worst = std::max(worst, std::abs(numerics::trapezoid_integral(dens, grid1.spacing()) - 1.0));

        const auto grid2 = numerics::wavepacket_grid(max_extent(alpha), 20.0);
        const auto pair = MultimodeCat::identical(alpha, 2);
        std::vector<double> dens2(grid2.points * grid2.points);
        for (std::size_t r = 0; r < grid2.points; ++r) {
            for (std::size_t c = 0; c < grid2.points; ++c) {
                const std::array<double, 2> xy{grid2.at(c), grid2.at(r)};
                dens2[r * grid2.points + c] = std::norm(scale * evaluate(pair, xy, rep));
            }
        }
        const double mass =
            numerics::trapezoid_integral_2d(dens2, grid2.points, grid2.points, grid2.spacing(), grid2.spacing());
        worst = std::max(worst, std::abs(mass - 1.0));
    }
    return worst;
}

CheckResult normalization(Representation rep, double scale)
{
    const double err = worst_norm_error(rep, scale);
    return {err <= 1e-6, "max |norm - 1| = " + sci(err)};
}

CheckResult fourier_duality()
{
    constexpr std::size_t n = 4096;
    constexpr double half_width = 16.0;
    const double dx = 2.0 * half_width / static_cast<double>(n);
    const double dp = numerics::dual_spacing(n, dx);
    double worst = 0.0;
    for (const auto& alpha : kProbeAmplitudes) {
        const auto single = MultimodeCat::identical(alpha, 1);
        std::vector<complex> samples(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double x = (static_cast<double>(j) - static_cast<double>(n / 2)) * dx;
            samples[j] = cat::cat_wavefunction_x(single, std::span(&x, 1));
        }
        const auto spectrum = numerics::dft_unitary(samples, dx);
        for (std::size_t k = 0; k < n; ++k) {
            const double p = (static_cast<double>(k) - static_cast<double>(n / 2)) * dp;
            worst = std::max(worst, std::abs(spectrum[k] - cat::cat_wavefunction_p(single, std::span(&p, 1))));
        }
    }

    constexpr std::size_t n2 = 256;
    const double dx2 = 2.0 * half_width / static_cast<double>(n2);
    const double dp2 = numerics::dual_spacing(n2, dx2);
    const auto pair = MultimodeCat::identical(ComplexAmplitude{1.0, 1.0}, 2);
    auto coord = [&](std::size_t i, double step) { return (static_cast<double>(i) - static_cast<double>(n2 / 2)) * step; };
    std::vector<complex> samples(n2 * n2);
    for (std::size_t r = 0; r < n2; ++r) {
        for (std::size_t c = 0; c < n2; ++c) {
            const std::array<double, 2> xs{coord(r, dx2), coord(c, dx2)};
            samples[r * n2 + c] = cat::cat_wavefunction_x(pair, xs);
        }
    }
    const auto spectrum = numerics::dft_unitary_2d(samples, n2, dx2);
    for (std::size_t r = 0; r < n2; ++r) {
        for (std::size_t c = 0; c < n2; ++c) {
            const std::array<double, 2> ps{coord(r, dp2), coord(c, dp2)};
            worst = std::max(worst, std::abs(spectrum[r * n2 + c] - cat::cat_wavefunction_p(pair, ps)));
        }
    }
    return {worst <= 1e-6, "max pointwise |FFT - analytic| = " + sci(worst)};
}

CheckResult visibility_routes()
{
    constexpr double alpha = 0.01;
    constexpr std::size_t n = 100000;
    double worst = 0.0;
    for (std::size_t m = 0; m <= 20000; m += 1000) {
        const auto eff = cat::effective_params(MultimodeCat::identical(alpha, n, m));
        const double v = cat::effective_summary(eff).V;
        worst = std::max(worst, std::abs(v - cat::env_visibility_identical(m, alpha)));
    }
    return {worst <= 1e-6, "max |V_schmidt - exp(-2 m alpha^2)| = " + sci(worst)};
}

CheckResult fringe_contrast()
{
    double worst = 0.0;
    for (int i = 0; i <= 10; ++i) {
        const double q = 0.1 * i;
        const auto density = cat::fringe_marginal(3.4, q, numerics::GridSpec{-6.0, 6.0, 2401});
        worst = std::max(worst, std::abs(cat::fringe_visibility(density) - q));
    }
    return {worst <= 1e-6, "max |V_fringe - q_env| = " + sci(worst)};
}

CheckResult schmidt_identities()
{
    auto rng = numerics::make_stream(2024, 0);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        auto disk = [&] {
            return std::polar(std::sqrt(numerics::uniform_sample(rng)),
                              2.0 * std::numbers::pi * numerics::uniform_sample(rng));
        };
        const interference::OverlapPair pair{disk(), disk()};
        if (2.0 + 2.0 * (pair.q1 * pair.q2).real() < 1e-3) {
            continue;
        }
        const auto c = interference::two_qubit_coefficients(pair);
        const auto s = interference::schmidt_summary(interference::delta(pair));
        const double coeff_norm = std::norm(c.c00) + std::norm(c.c01) + std::norm(c.c10) + c.c11 * c.c11;
        worst = std::max({worst, std::abs(coeff_norm - c.norm2), std::abs(s.lambda0 + s.lambda1 - 1.0),
                          std::abs(1.0 / (s.lambda0 * s.lambda0 + s.lambda1 * s.lambda1) - s.K),
                          std::abs(s.lambda0 - s.lambda1 - std::sqrt(1.0 - 4.0 * s.delta))});
    }
    return {worst <= 1e-12, "max identity residual = " + sci(worst)};
}

CheckResult health_equivalence()
{
    const auto runs = measurement::ensemble(0.01, 20000, 8, 7);
    double worst = 0.0;
    for (const auto& t : runs) {
        double sum = 0.0;
        for (std::size_t m = 1; m < t.h_series.size(); ++m) {
            sum += t.ys[m - 1];
            worst = std::max(worst, std::abs(t.h_series[m] - (-4.0 * 0.01 * std::numbers::sqrt2 * sum)));
        }
    }
    return {worst <= 1e-9, "max |H_recurrence - H_closed| = " + sci(worst)};
}

CheckResult martingale()
{
    auto state = measurement::initial_state(0.3);
    state = measurement::bayes_update(state, -0.4);  // move away from the symmetric point
    auto rng = numerics::make_stream(99, 0);
    constexpr int draws = 10000;
    double sum = 0.0;
    double sum2 = 0.0;
    for (int i = 0; i < draws; ++i) {
        const double p = measurement::bayes_update(state, measurement::sample_next(state, rng)).p_plus();
        sum += p;
        sum2 += p * p;
    }
    const double mean = sum / draws;
    const double se = std::sqrt((sum2 / draws - mean * mean) / (draws - 1));
    const double z = std::abs(mean - state.p_plus()) / se;
    return {z <= 3.0, "|mean - p+| / SE = " + sci(z)};
}

}  // namespace

int cmd_verify(const VerifyOptions& opts, std::ostream& report)
{
    const std::vector<Check> checks{
        {"normalization_position", [&] { return normalization(Representation::position, opts.wavefunction_scale); }},
        {"normalization_momentum", [&] { return normalization(Representation::momentum, opts.wavefunction_scale); }},
        {"fourier_duality", fourier_duality},
        {"visibility_routes", visibility_routes},
        {"fringe_contrast", fringe_contrast},
        {"schmidt_identities", schmidt_identities},
        {"health_equivalence", health_equivalence},
        {"martingale", martingale},
    };

    std::ostringstream table;
    bool all = true;
    for (const auto& check : checks) {
        CheckResult r;
        try {
            r = check.run();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        all = all && r.pass;
        table << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(24) << check.name << r.detail << '\n';
    }
    table << (all ? "all checks passed" : "verification FAILED") << '\n';
    report << table.str();

    if (opts.out) {
        std::ofstream os(*opts.out);
        if (!(os << table.str())) {
            report << "error: cannot write " << opts.out->string() << '\n';
            return kIoFailure;
        }
    }
    return all ? kSuccess : kVerificationFailure;
}

}  // namespace decocat::cli
