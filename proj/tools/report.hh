#ifndef CRYSTALS_GUARD_TOOLS_REPORT_HH
#define CRYSTALS_GUARD_TOOLS_REPORT_HH 1

#include <crystals/json_io.hh>

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

namespace crystals::cli
{
    inline constexpr const char * tool_version = "0.1.0";

    struct Claim
    {
        std::string name;
        std::string anchor;
        Json expected;
        Json observed;
        bool pass;
        double wall_time;
    };

    /// Claims are compared exactly: a claim passes iff expected == observed.
    class Report
    {
    private:
        std::string _command;
        std::string _digest;
        std::uint64_t _seed;
        std::vector<Claim> _claims;

    public:
        Report(std::string command, std::string digest, std::uint64_t seed);

        auto add(std::string name, std::string anchor, Json expected, Json observed, double wall_time) -> const Claim &;

        auto claims() const -> const std::vector<Claim> & { return _claims; }
        auto all_pass() const -> bool;
        auto to_json() const -> Json;
    };

    /// Seconds since `start`.
    auto seconds_since(std::chrono::steady_clock::time_point start) -> double;
}

#endif
