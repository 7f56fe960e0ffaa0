#ifndef CRYSTALS_GUARD_TOOLS_COMMANDS_HH
#define CRYSTALS_GUARD_TOOLS_COMMANDS_HH 1

#include "report.hh"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace crystals::cli
{
    namespace exit_code
    {
        inline constexpr int success = 0;
        inline constexpr int negative = 1;
        inline constexpr int error = 2;
    }

    /// Systems larger than this are refused by the fool command.
    inline constexpr std::size_t fool_variable_limit = 50'000;

    struct GlobalOptions
    {
        std::uint64_t seed = 1;
        std::optional<std::filesystem::path> json_report;
        bool quiet = false;
    };

    /// Where a command writes human-readable text; `out` is silenced by --quiet.
    struct Streams
    {
        std::ostream & out;
        std::ostream & err;
    };

    struct RealizeOptions
    {
        std::filesystem::path album, output;
        std::optional<std::filesystem::path> trace;
    };

    struct CrystalOptions
    {
        std::optional<std::filesystem::path> matrix;
        std::optional<int> fooling;
        int dimension = 2;
        std::filesystem::path output;
    };

    struct VerifyCrystalOptions
    {
        std::filesystem::path crystal, matrix;
    };

    struct AipOptions
    {
        std::string g, h;
        int level = 2;
        std::optional<std::filesystem::path> witness;
    };

    struct FoolOptions
    {
        int c = 3, d = 3, level = 2;
        std::optional<std::filesystem::path> report;
    };

    struct PolymorphismOptions
    {
        std::string check;
        int arity = 3;
    };

    struct CorpusOptions
    {
        std::filesystem::path output;
    };

    auto cmd_realize(const GlobalOptions &, const RealizeOptions &, Streams) -> int;
    auto cmd_crystal(const GlobalOptions &, const CrystalOptions &, Streams) -> int;
    auto cmd_verify_crystal(const GlobalOptions &, const VerifyCrystalOptions &, Streams) -> int;
    auto cmd_aip(const GlobalOptions &, const AipOptions &, Streams) -> int;
    auto cmd_fool(const GlobalOptions &, const FoolOptions &, Streams) -> int;
    auto cmd_polymorphism(const GlobalOptions &, const PolymorphismOptions &, Streams) -> int;
    auto cmd_corpus(const GlobalOptions &, const CorpusOptions &, Streams) -> int;

    /// A JSON digraph file, or a shorthand such as K3 or C5.
    auto load_digraph(const std::string & source) -> Digraph;

    /// Parses argv and dispatches; the process entry point is a thin wrapper.
    auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err) -> int;
}

#endif
