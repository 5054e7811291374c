#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace decocat {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// Provenance written as '#'-prefixed lines at the top of every CSV.
struct RunMetadata {
    std::string command_line;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::optional<std::uint64_t> seed;
    std::string rng_algorithm;
    std::string tool_version{kToolVersion};
    std::string timestamp;  // ISO-8601 UTC

    RunMetadata& add(std::string key, std::string value);
    RunMetadata& add(std::string key, double value);

    void write(std::ostream& os) const;
};

std::string iso8601_now();

// Shortest decimal text that round-trips to the same double.
std::string format_double(double value);

}  // namespace decocat
