#include "decocat/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "decocat/parallel.hpp"

namespace decocat::measurement {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

}  // namespace

double CollapseState::p_plus() const
{
    return std::exp(log_p_plus);
}

double CollapseState::p_minus() const
{
    return std::exp(log_p_minus);
}

CollapseState initial_state(double alpha)
{
    if (!(alpha > 0.0)) {
        throw std::invalid_argument("measurement simulation needs alpha > 0");
    }
    CollapseState s;
    s.alpha = alpha;
    return s;
}

double sample_next(const CollapseState& state, numerics::RngEngine& rng)
{
    const double centre = state.alpha * kSqrt2;
    const bool alive = numerics::uniform_sample(rng) < state.p_plus();
    return numerics::gaussian_sample(rng, alive ? -centre : centre, 0.5);
}

CollapseState bayes_update(const CollapseState& state, double y)
{
    const double centre = state.alpha * kSqrt2;
    const double plus = state.log_p_plus - (y + centre) * (y + centre);
    const double minus = state.log_p_minus - (y - centre) * (y - centre);
    const double log_norm = numerics::log_sum_exp(plus, minus);

    CollapseState next = state;
    next.log_p_plus = plus - log_norm;
    next.log_p_minus = minus - log_norm;
    next.k = state.k + 1;
    next.sum_y = state.sum_y + y;
    return next;
}

double health(const CollapseState& state)
{
    return state.log_p_plus - state.log_p_minus;
}

double health_closed_form(const CollapseState& state)
{
    return -4.0 * state.alpha * kSqrt2 * state.sum_y;
}

namespace {

Trajectory start_record(std::uint64_t seed, std::size_t steps)
{
    Trajectory t;
    t.seed = seed;
    t.ys.reserve(steps);
    t.p_plus_series.reserve(steps + 1);
    t.h_series.reserve(steps + 1);
    t.p_plus_series.push_back(0.5);
    t.h_series.push_back(0.0);
    return t;
}

void record(Trajectory& t, const CollapseState& s, double y)
{
    t.ys.push_back(y);
    t.p_plus_series.push_back(s.p_plus());
    t.h_series.push_back(health(s));
}

}  // namespace

Trajectory replay(double alpha, std::span<const double> ys)
{
    auto state = initial_state(alpha);
    auto t = start_record(0, ys.size());
    for (double y : ys) {
        state = bayes_update(state, y);
        record(t, state, y);
    }
    return t;
}

Trajectory run_trajectory(double alpha, std::size_t m_max, std::uint64_t seed)
{
    auto state = initial_state(alpha);
    numerics::RngEngine rng{seed};
    auto t = start_record(seed, m_max);
    for (std::size_t i = 0; i < m_max; ++i) {
        const double y = sample_next(state, rng);
        state = bayes_update(state, y);
        record(t, state, y);
    }
    return t;
}

std::vector<Trajectory> ensemble(double alpha, std::size_t m_max, std::size_t count, std::uint64_t seed,
                                 std::size_t threads)
{
    if (count < 1) {
        throw std::invalid_argument("ensemble needs at least one trajectory");
    }
    initial_state(alpha);  // validates alpha before any worker starts
    std::vector<Trajectory> out(count);
    parallel_for(count, threads, [&](std::size_t i) {
        out[i] = run_trajectory(alpha, m_max, numerics::stream_seed(seed, i));
    });
    return out;
}

std::optional<std::size_t> first_collapse(const Trajectory& t, double threshold)
{
    for (std::size_t m = 0; m < t.p_plus_series.size(); ++m) {
        const double p = t.p_plus_series[m];
        if (std::max(p, 1.0 - p) >= threshold) {
            return m;
        }
    }
    return std::nullopt;
}

bool identical_mode_limit_holds(std::size_t n, double alpha)
{
    return static_cast<double>(n) * alpha * alpha >= kMinModePhotons;
}

}  // namespace decocat::measurement
