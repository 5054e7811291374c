#include "decocat/interference.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace decocat::interference {

complex coherent_overlap(ComplexAmplitude alpha)
{
    return {std::exp(-2.0 * alpha.norm2()), 0.0};
}

void validate(const OverlapPair& pair)
{
    if (!(std::abs(pair.q1) <= 1.0 + kOverlapSlack) || !(std::abs(pair.q2) <= 1.0 + kOverlapSlack)) {
        throw std::invalid_argument("overlap amplitude outside the unit disk (|q1| = " +
                                    std::to_string(std::abs(pair.q1)) +
                                    ", |q2| = " + std::to_string(std::abs(pair.q2)) + ")");
    }
}

namespace {

// 1 - |q|^2, floored at zero for overlaps within the slack of the unit circle.
double orthogonal_weight(complex q)
{
    return std::max(0.0, 1.0 - std::norm(q));
}

}  // namespace

TwoQubitCoefficients two_qubit_coefficients(const OverlapPair& pair)
{
    validate(pair);
    const double w1 = orthogonal_weight(pair.q1);
    const double w2 = orthogonal_weight(pair.q2);
    const complex q12 = pair.q1 * pair.q2;
    TwoQubitCoefficients c;
    c.c00 = 1.0 + q12;
    c.c01 = pair.q1 * std::sqrt(w2);
    c.c10 = pair.q2 * std::sqrt(w1);
    c.c11 = std::sqrt(w1 * w2);
    c.norm2 = 2.0 + 2.0 * q12.real();
    return c;
}

double delta(const OverlapPair& pair)
{
    validate(pair);
    const double norm2 = 2.0 + 2.0 * (pair.q1 * pair.q2).real();
    if (!(norm2 > kMinNorm2)) {
        throw DegenerateStateError("destructively interfering alternatives: 2 + 2 Re(q1 q2) = " +
                                   std::to_string(norm2));
    }
    const double d = orthogonal_weight(pair.q1) * orthogonal_weight(pair.q2) / (norm2 * norm2);
    return std::clamp(d, 0.0, 0.25);
}

SchmidtSummary schmidt_summary(double delta)
{
    if (!(delta >= -kDeltaSlack && delta <= 0.25 + kDeltaSlack)) {
        throw std::domain_error("Delta outside [0, 1/4]: " + std::to_string(delta));
    }
    SchmidtSummary s;
    s.delta = std::clamp(delta, 0.0, 0.25);
    s.V = std::sqrt(std::max(0.0, 1.0 - 4.0 * s.delta));
    s.lambda0 = 0.5 * (1.0 + s.V);
    s.lambda1 = 0.5 * (1.0 - s.V);
    s.K = 1.0 / (1.0 - 2.0 * s.delta);
    return s;
}

double environment_visibility(complex q2)
{
    return std::abs(q2);
}

}  // namespace decocat::interference
