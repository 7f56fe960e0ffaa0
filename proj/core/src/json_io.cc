#include <crystals/json_io.hh>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

using std::map;
using std::string;
using std::vector;

namespace fs = std::filesystem;

namespace crystals
{
    using std::to_string;

    namespace
    {
        /// Runs a decoder, turning library exceptions about missing keys or wrong types into FormatError.
        template <typename F_>
        auto decoding(const char * what, F_ && f) -> decltype(f())
        {
            try {
                return f();
            }
            catch (const nlohmann::json::exception & e) {
                throw FormatError(string{"malformed "} + what + ": " + e.what());
            }
        }

        auto tuple_from_json(const Json & j) -> IndexTuple
        {
            return IndexTuple{j.get<vector<int>>()};
        }

        auto shape_from_json(const Json & j) -> Shape
        {
            auto sizes = j.get<vector<int>>();
            for (int s : sizes)
                if (s < 1)
                    throw FormatError("mode sizes must be positive, got " + to_string(s));
            return Shape{sizes};
        }

        auto require_object(const Json & j, const char * what) -> void
        {
            if (! j.is_object())
                throw FormatError(string{what} + " must be a JSON object");
        }
    }

    auto tensor_to_json(const IntTensor & t) -> Json
    {
        return Json{{"modes", t.shape().sizes()}, {"entries", t.entry_vector()}};
    }

    auto tensor_from_json(const Json & j) -> IntTensor
    {
        require_object(j, "tensor");
        return decoding("tensor", [&] {
            auto shape = shape_from_json(j.at("modes"));
            for (auto & e : j.at("entries"))
                if (! e.is_number_integer()
                    || (e.is_number_unsigned() && e.get<std::uint64_t>() > std::uint64_t{INT64_MAX}))
                    throw FormatError("tensor entries must be 64-bit integers, got " + e.dump());
            auto entries = j.at("entries").get<vector<Entry>>();
            if (entries.size() != shape.cell_count())
                throw FormatError("tensor of shape " + shape.to_string() + " needs " + to_string(shape.cell_count())
                    + " entries, got " + to_string(entries.size()));
            return IntTensor{shape, std::move(entries)};
        });
    }

    auto album_to_json(const Album & album) -> Json
    {
        Json pictures = Json::array();
        for (auto & [i, c] : album.pictures())
            pictures.push_back(Json{{"axes", i.entries()}, {"tensor", tensor_to_json(c)}});
        return Json{{"p", album.p()}, {"modes", album.modes().sizes()}, {"pictures", pictures}};
    }

    auto album_from_json(const Json & j) -> Album
    {
        require_object(j, "album");
        return decoding("album", [&] {
            int p = j.at("p").get<int>();
            auto modes = shape_from_json(j.at("modes"));
            map<IndexTuple, IntTensor> pictures;
            for (auto & entry : j.at("pictures")) {
                require_object(entry, "album picture");
                auto axes = tuple_from_json(entry.at("axes"));
                if (! pictures.emplace(axes, tensor_from_json(entry.at("tensor"))).second)
                    throw FormatError("album lists axes " + axes.to_string() + " twice");
            }
            try {
                return Album{p, modes, std::move(pictures)};
            }
            catch (const StructureError & e) {
                throw FormatError(e.what());
            }
            catch (const ArgumentError & e) {
                throw FormatError(e.what());
            }
        });
    }

    auto digraph_to_json(const Digraph & g) -> Json
    {
        Json edges = Json::array();
        for (auto [u, v] : g.edges())
            edges.push_back(Json::array({u, v}));
        return Json{{"vertices", g.vertex_count()}, {"edges", edges}};
    }

    auto digraph_from_json(const Json & j) -> Digraph
    {
        require_object(j, "digraph");
        return decoding("digraph", [&] {
            vector<Edge> edges;
            for (auto & e : j.at("edges")) {
                auto pair = e.get<vector<int>>();
                if (pair.size() != 2)
                    throw FormatError("digraph edges must be pairs, got " + e.dump());
                edges.emplace_back(pair[0], pair[1]);
            }
            try {
                return Digraph{j.at("vertices").get<int>(), std::move(edges)};
            }
            catch (const ArgumentError & e) {
                throw FormatError(e.what());
            }
            catch (const BoundsError & e) {
                throw FormatError(e.what());
            }
        });
    }

    auto trace_to_json(const RealizationTrace & trace) -> Json
    {
        Json steps = Json::array();
        for (auto & s : trace.steps)
            steps.push_back(Json{{"op", s.op}, {"modes", s.modes.sizes()}, {"value", s.value},
                {"tuple", s.tuple.entries()}, {"entries", s.entries}});
        return Json{{"steps", steps}};
    }

    auto trace_from_json(const Json & j) -> RealizationTrace
    {
        require_object(j, "trace");
        return decoding("trace", [&] {
            RealizationTrace trace;
            for (auto & s : j.at("steps"))
                trace.steps.push_back(TraceStep{s.at("op").get<string>(), shape_from_json(s.at("modes")),
                    s.at("value").get<Entry>(), tuple_from_json(s.at("tuple")), s.at("entries").get<vector<Entry>>()});
            return trace;
        });
    }

    auto big_to_json(const BigInt & x) -> Json
    {
        if (x.fits_slong_p())
            return Json(static_cast<std::int64_t>(x.get_si()));
        return Json(x.get_str());
    }

    auto big_from_json(const Json & j) -> BigInt
    {
        if (j.is_number_integer())
            return BigInt{j.get<long>()};
        if (j.is_string()) {
            BigInt x;
            if (x.set_str(j.get<string>(), 10) != 0)
                throw FormatError("not a decimal integer: " + j.dump());
            return x;
        }
        throw FormatError("expected an integer, got " + j.dump());
    }

    auto aip_witness_to_json(const AipVerdict & verdict) -> Json
    {
        Json variables = Json::array();
        for (size_t c = 0; c < verdict.system.variables.size() && c < verdict.witness.size(); ++c) {
            auto & v = verdict.system.variables[c];
            Json record{{"kind", v.kind == AipVariable::Kind::subset ? "subset" : "edge"}, {"vertices", v.vertices},
                {"images", v.images}};
            if (v.kind == AipVariable::Kind::edge)
                record["edge"] = verdict.system.variables[c].edge_index + 1;
            record["value"] = big_to_json(verdict.witness[c]);
            variables.push_back(std::move(record));
        }
        return Json{{"level", verdict.system.level}, {"answer", verdict.yes() ? "YES" : "NO"},
            {"variables", variables}};
    }

    auto read_text_file(const fs::path & path) -> string
    {
        std::ifstream in{path, std::ios::binary};
        if (! in)
            throw FormatError("cannot open " + path.string());
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto parse_json(const string & text) -> Json
    {
        try {
            return Json::parse(text);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw FormatError(string{"invalid JSON: "} + e.what());
        }
    }

    auto read_json_file(const fs::path & path) -> Json
    {
        return parse_json(read_text_file(path));
    }

    auto write_file_atomic(const fs::path & path, const string & content) -> void
    {
        auto temporary = path;
        temporary += ".tmp";
        {
            std::ofstream out{temporary, std::ios::binary | std::ios::trunc};
            if (! out)
                throw FormatError("cannot write " + temporary.string());
            out << content;
            out.flush();
            if (! out)
                throw FormatError("short write to " + temporary.string());
        }
        std::error_code ec;
        fs::rename(temporary, path, ec);
        if (ec) {
            fs::remove(temporary);
            throw FormatError("cannot move " + temporary.string() + " to " + path.string() + ": " + ec.message());
        }
    }

    auto write_json_file(const fs::path & path, const Json & j) -> void
    {
        write_file_atomic(path, j.dump() + "\n");
    }

    auto fnv1a_digest(const string & bytes) -> string
    {
        std::uint64_t hash = 0xcbf29ce484222325ULL;
        for (unsigned char c : bytes) {
            hash ^= c;
            hash *= 0x100000001b3ULL;
        }
        char out[17];
        std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(hash));
        return out;
    }
}
