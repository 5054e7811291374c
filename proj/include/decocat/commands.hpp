#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <ostream>
#include <string>
#include <vector>

#include "decocat/numerics.hpp"

namespace decocat::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInvalidArguments = 1,
    kIoFailure = 2,
    kVerificationFailure = 3,
};

// Thrown by commands when an output file or directory cannot be written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FringesOptions {
    double alpha = 3.4;
    std::vector<double> q_env;  // empty -> derived from betas, else the default sweep
    std::vector<double> betas;  // environment amplitudes, q_env = exp(-2 beta^2)
    numerics::GridSpec grid{-6.0, 6.0, 2401};
    std::filesystem::path out = "fringes";  // output directory
};

struct DynamicsOptions {
    double alpha = 0.01;
    std::size_t n = 100000;
    std::size_t m_step = 500;
    std::size_t m_max = 20000;
    std::filesystem::path out = "dynamics.csv";
};

struct CollapseOptions {
    double alpha = 0.01;
    std::size_t m_max = 20000;
    std::size_t trajectories = 15;
    std::uint64_t seed = 42;
    std::optional<std::size_t> n;  // total mode count; only checked against the n alpha^2 >> 1 limit
    std::size_t threads = 0;       // 0 -> DECOCAT_THREADS / hardware default
    std::filesystem::path out = "collapse.csv";
};

struct VerifyOptions {
    std::optional<std::filesystem::path> out;  // optional copy of the report
    // Multiplies every wavefunction sample fed to the normalisation checks;
    // anything but 1 is a deliberately broken build for negative-control tests.
    double wavefunction_scale = 1.0;
};

inline const std::vector<double> kDefaultQEnvSweep{1.0, 0.8, 0.6, 0.4, 0.2, 0.0};

// Each command validates its options, writes its outputs and returns an ExitCode.
// Diagnostics go to `log`. `command_line` is recorded in the CSV metadata.
int cmd_fringes(const FringesOptions& opts, const std::string& command_line, std::ostream& log);
int cmd_dynamics(const DynamicsOptions& opts, const std::string& command_line, std::ostream& log);
int cmd_collapse(const CollapseOptions& opts, const std::string& command_line, std::ostream& log);
int cmd_verify(const VerifyOptions& opts, std::ostream& report);

}  // namespace decocat::cli
