#ifndef CRYSTALS_GUARD_CRYSTALS_JSON_IO_HH
#define CRYSTALS_GUARD_CRYSTALS_JSON_IO_HH 1

#include <crystals/aip.hh>
#include <crystals/album.hh>
#include <crystals/digraph.hh>
#include <crystals/diophantine.hh>
#include <crystals/tensor.hh>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

namespace crystals
{
    using Json = nlohmann::ordered_json;

    /// {"modes":[...],"entries":[...]} with entries in row-major order.
    auto tensor_to_json(const IntTensor & t) -> Json;
    auto tensor_from_json(const Json & j) -> IntTensor;

    /// {"p":2,"modes":[...],"pictures":[{"axes":[1,2],"tensor":{...}}, ...]}
    auto album_to_json(const Album & album) -> Json;
    auto album_from_json(const Json & j) -> Album;

    /// {"vertices":4,"edges":[[1,2],...]}
    auto digraph_to_json(const Digraph & g) -> Json;
    auto digraph_from_json(const Json & j) -> Digraph;

    auto trace_to_json(const RealizationTrace & trace) -> Json;
    auto trace_from_json(const Json & j) -> RealizationTrace;

    /// Integers that fit in 64 bits become numbers, larger ones decimal strings.
    auto big_to_json(const BigInt & x) -> Json;
    auto big_from_json(const Json & j) -> BigInt;

    auto aip_witness_to_json(const AipVerdict & verdict) -> Json;

    auto read_text_file(const std::filesystem::path & path) -> std::string;
    auto parse_json(const std::string & text) -> Json;
    auto read_json_file(const std::filesystem::path & path) -> Json;

    /// Writes to a temporary sibling and renames it over the target.
    auto write_file_atomic(const std::filesystem::path & path, const std::string & content) -> void;
    auto write_json_file(const std::filesystem::path & path, const Json & j) -> void;

    /// 64-bit FNV-1a, as sixteen lowercase hex digits.
    auto fnv1a_digest(const std::string & bytes) -> std::string;
}

#endif
