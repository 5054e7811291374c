#pragma once

#include <complex>
#include <stdexcept>

namespace decocat {

using complex = std::complex<double>;

/// Coherent-state amplitude alpha = re + i*im.
struct ComplexAmplitude {
    double re = 0.0;
    double im = 0.0;

    constexpr ComplexAmplitude() = default;
    constexpr ComplexAmplitude(double re_, double im_ = 0.0) : re(re_), im(im_) {}

    complex value() const { return {re, im}; }
    double norm2() const { return re * re + im * im; }
    ComplexAmplitude operator-() const { return {-re, -im}; }
    friend bool operator==(const ComplexAmplitude&, const ComplexAmplitude&) = default;
};

// Raised when 2 + 2 Re(q1 q2) vanishes, i.e. the two alternatives cancel exactly.
class DegenerateStateError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

namespace interference {

inline constexpr double kOverlapSlack = 1e-12;
inline constexpr double kDeltaSlack = 1e-12;
inline constexpr double kMinNorm2 = 1e-300;

/// Overlaps of the two alternatives: q1 = <phi1|phi2> on the system,
/// q2 = <psi1|psi2> on the environment. Both must lie in the closed unit disk.
struct OverlapPair {
    complex q1;
    complex q2;
};

/// Expansion coefficients of the unnormalised state |phi1,psi1> + |phi2,psi2>
/// in the orthogonalised two-qubit basis. norm2 is the squared norm of that
/// unnormalised state.
struct TwoQubitCoefficients {
    complex c00;
    complex c01;
    complex c10;
    double c11 = 0.0;
    double norm2 = 0.0;
};

/// Schmidt data of a two-alternative bipartite state. Weights are ordered
/// lambda0 >= lambda1 so that the visibility lambda0 - lambda1 is non-negative.
struct SchmidtSummary {
    double delta = 0.0;
    double lambda0 = 1.0;
    double lambda1 = 0.0;
    double K = 1.0;  // Schmidt number
    double V = 1.0;  // interference visibility
};

// <alpha|-alpha> = exp(-2|alpha|^2).
complex coherent_overlap(ComplexAmplitude alpha);

// Throws std::invalid_argument if |q1| or |q2| exceeds 1 + kOverlapSlack.
void validate(const OverlapPair& pair);

TwoQubitCoefficients two_qubit_coefficients(const OverlapPair& pair);

/// Delta = (1 - |q1|^2)(1 - |q2|^2) / (2 + 2 Re(q1 q2))^2, in [0, 1/4].
/// Throws DegenerateStateError when 2 + 2 Re(q1 q2) <= kMinNorm2.
double delta(const OverlapPair& pair);

// Throws std::domain_error outside [-kDeltaSlack, 0.25 + kDeltaSlack]; clamps within.
SchmidtSummary schmidt_summary(double delta);

/// Visibility |q2| that survives when the system alternatives are clearly
/// distinguishable (q1 ~ 0).
double environment_visibility(complex q2);

}  // namespace interference
}  // namespace decocat
