#include "report.hh"

#include <algorithm>

using std::string;

namespace crystals::cli
{
    Report::Report(string command, string digest, std::uint64_t seed) :
        _command(std::move(command)),
        _digest(std::move(digest)),
        _seed(seed)
    {
    }

    auto Report::add(string name, string anchor, Json expected, Json observed, double wall_time) -> const Claim &
    {
        bool pass = expected == observed;
        _claims.push_back(Claim{std::move(name), std::move(anchor), std::move(expected), std::move(observed), pass,
            wall_time});
        return _claims.back();
    }

    auto Report::all_pass() const -> bool
    {
        return std::all_of(_claims.begin(), _claims.end(), [](const Claim & c) { return c.pass; });
    }

    auto Report::to_json() const -> Json
    {
        Json claims = Json::array();
        for (auto & c : _claims)
            claims.push_back(Json{{"name", c.name}, {"anchor", c.anchor}, {"expected", c.expected},
                {"observed", c.observed}, {"pass", c.pass}, {"wall_time", c.wall_time}});
        return Json{{"tool", "crystals"}, {"version", tool_version}, {"command", _command},
            {"input_digest", _digest}, {"seed", _seed}, {"claims", claims}};
    }

    auto seconds_since(std::chrono::steady_clock::time_point start) -> double
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
}
