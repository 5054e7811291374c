#include "decocat/run_metadata.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <ctime>

namespace decocat {

RunMetadata& RunMetadata::add(std::string key, std::string value)
{
    parameters.emplace_back(std::move(key), std::move(value));
    return *this;
}

RunMetadata& RunMetadata::add(std::string key, double value)
{
    return add(std::move(key), format_double(value));
}

void RunMetadata::write(std::ostream& os) const
{
    os << "# tool: decocat " << tool_version << '\n';
    os << "# command: " << command_line << '\n';
    os << "# timestamp: " << timestamp << '\n';
    for (const auto& [key, value] : parameters) {
        os << "# param " << key << ": " << value << '\n';
    }
    if (seed) {
        os << "# seed: " << *seed << '\n';
    }
    if (!rng_algorithm.empty()) {
        os << "# rng: " << rng_algorithm << '\n';
    }
}

std::string iso8601_now()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::array<char, 32> buf{};
    std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf.data();
}

std::string format_double(double value)
{
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), end);
}

}  // namespace decocat
