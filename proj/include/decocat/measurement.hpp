#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "decocat/numerics.hpp"

namespace decocat::measurement {

/// Branch probabilities after k environment modes have had their coordinates
/// measured. "+" is the branch whose kernel exp(-(y + alpha sqrt2)^2) is
/// centred at -alpha sqrt2 ("alive"), "-" the mirror branch.
struct CollapseState {
    std::size_t k = 0;
    double log_p_plus = -0.6931471805599453;
    double log_p_minus = -0.6931471805599453;
    double alpha = 0.0;
    double sum_y = 0.0;

    double p_plus() const;
    double p_minus() const;
};

struct Trajectory {
    std::uint64_t seed = 0;
    std::vector<double> ys;
    std::vector<double> p_plus_series;  // size ys.size() + 1, starting at 1/2
    std::vector<double> h_series;       // size ys.size() + 1, starting at 0
};

// Throws std::invalid_argument unless alpha > 0.
CollapseState initial_state(double alpha);

/// Draws the next coordinate from the predictive mixture
/// p+ Normal(-alpha sqrt2, 1/2) + p- Normal(+alpha sqrt2, 1/2).
double sample_next(const CollapseState& state, numerics::RngEngine& rng);

/// Multiplies each branch by its Gaussian kernel evaluated at y and
/// renormalises in log space.
CollapseState bayes_update(const CollapseState& state, double y);

// ln(p+ / p-) as carried by the recurrence.
double health(const CollapseState& state);

// Closed form -4 alpha sqrt2 sum_y for the same state.
double health_closed_form(const CollapseState& state);

// Replays a fixed sequence of measured coordinates.
Trajectory replay(double alpha, std::span<const double> ys);

/// One simulated measurement record of m_max environment modes, seeded with
/// `seed` directly (no stream mixing).
Trajectory run_trajectory(double alpha, std::size_t m_max, std::uint64_t seed);

/// `count` independent trajectories; trajectory i uses
/// numerics::stream_seed(seed, i). Runs on up to `threads` workers (0 picks
/// the configured default); the result does not depend on the thread count.
std::vector<Trajectory> ensemble(double alpha, std::size_t m_max, std::size_t count, std::uint64_t seed,
                                 std::size_t threads = 0);

/// Collapse onset: first m at which max(p+, p-) >= threshold, if any.
std::optional<std::size_t> first_collapse(const Trajectory& t, double threshold = 0.99);

// The measurement model assumes n alpha^2 >> 1; callers that know n check it with this.
inline constexpr double kMinModePhotons = 10.0;
bool identical_mode_limit_holds(std::size_t n, double alpha);

}  // namespace decocat::measurement
