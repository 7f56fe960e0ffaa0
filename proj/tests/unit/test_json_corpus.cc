#include <crystals/corpus.hh>
#include <crystals/json_io.hh>

#include <oracles.hh>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <limits>

using namespace crystals;
namespace fs = std::filesystem;

namespace
{
    struct ScratchDirectory
    {
        fs::path path;

        explicit ScratchDirectory(const std::string & name) :
            path(fs::temp_directory_path() / ("crystals-test-" + name + "-" + std::to_string(Rng{std::random_device{}()}.next())))
        {
            fs::create_directories(path);
        }

        ~ScratchDirectory() { fs::remove_all(path); }
    };
}

TEST_CASE("tensors round-trip")
{
    IntTensor t{Shape{2, 1, 3}, {1, -2, 3, 0, 5, -6}};
    auto j = tensor_to_json(t);
    CHECK(j.dump() == R"({"modes":[2,1,3],"entries":[1,-2,3,0,5,-6]})");
    CHECK(tensor_from_json(j) == t);
    CHECK(tensor_from_json(tensor_to_json(IntTensor::scalar(4))) == IntTensor::scalar(4));

    CHECK_THROWS_AS(tensor_from_json(parse_json(R"({"modes":[2],"entries":[1]})")), FormatError);
    CHECK_THROWS_AS(tensor_from_json(parse_json(R"({"modes":[2]})")), FormatError);
    CHECK_THROWS_AS(tensor_from_json(parse_json(R"({"modes":[0],"entries":[]})")), FormatError);
    CHECK_THROWS_AS(tensor_from_json(parse_json(R"({"modes":[1],"entries":["x"]})")), FormatError);
    CHECK_THROWS_AS(parse_json("{"), FormatError);
}

TEST_CASE("albums, digraphs and traces round-trip")
{
    Rng rng{1};
    for (int trial = 0; trial < 20; ++trial) {
        auto album = random_realistic_album(rng, 2, Shape{2, 3, 2}, -5, 5);
        auto text = album_to_json(album).dump();
        auto back = album_from_json(parse_json(text));
        CHECK(back == album);
        CHECK(album_to_json(back).dump() == text);

        auto r = realize(album);
        auto trace_text = trace_to_json(r.trace).dump();
        CHECK(trace_to_json(trace_from_json(parse_json(trace_text))).dump() == trace_text);
        CHECK(replay(trace_from_json(parse_json(trace_text))) == r.tensor);
    }

    auto g = cycle(5);
    CHECK(digraph_from_json(digraph_to_json(g)) == g);
    CHECK(digraph_to_json(Digraph{2, {{2, 1}}}).dump() == R"({"vertices":2,"edges":[[2,1]]})");
    CHECK_THROWS_AS(digraph_from_json(parse_json(R"({"vertices":2,"edges":[[1,3]]})")), FormatError);
    CHECK_THROWS_AS(digraph_from_json(parse_json(R"({"vertices":2,"edges":[[1]]})")), FormatError);
    CHECK_THROWS_AS(album_from_json(parse_json(R"({"p":1,"modes":[2],"pictures":[{"axes":[2]}]})")), FormatError);
}

TEST_CASE("big integers")
{
    CHECK(big_to_json(BigInt{42}) == Json(42));
    CHECK(big_to_json(BigInt{std::numeric_limits<long>::min()}) == Json(std::numeric_limits<long>::min()));
    BigInt huge{"-98765432109876543210"};
    CHECK(big_to_json(huge) == Json("-98765432109876543210"));
    CHECK(big_from_json(big_to_json(huge)) == huge);
    CHECK(big_from_json(Json(-7)) == -7);
    CHECK_THROWS_AS(big_from_json(Json("12a")), FormatError);
    CHECK_THROWS_AS(big_from_json(Json(1.5)), FormatError);
}

TEST_CASE("files and digests")
{
    ScratchDirectory dir{"files"};
    auto path = dir.path / "t.json";
    write_json_file(path, tensor_to_json(IntTensor::scalar(3)));
    CHECK(read_text_file(path) == "{\"modes\":[],\"entries\":[3]}\n");
    CHECK(tensor_from_json(read_json_file(path)) == IntTensor::scalar(3));
    CHECK_FALSE(fs::exists(dir.path / "t.json.tmp"));
    CHECK_THROWS_AS(read_text_file(dir.path / "missing.json"), FormatError);

    CHECK(fnv1a_digest("") == "cbf29ce484222325");
    CHECK(fnv1a_digest("a") == "af63dc4c8601ec8c");
}

TEST_CASE("the corpus is deterministic")
{
    auto c = generate_corpus(7);
    CHECK(c.digraphs.size() == 238 + 5 + 4);
    CHECK(c.albums.size() == 24);
    CHECK(c.balanced_matrices.size() == 24);

    for (auto & album : c.albums)
        CHECK(is_realistic(album).realistic);
    for (auto & m : c.balanced_matrices)
        CHECK(apply_projection(m, {1}) == apply_projection(m, {2}));

    ScratchDirectory first{"corpus-a"}, second{"corpus-b"};
    auto a = write_corpus(c, first.path);
    auto b = write_corpus(generate_corpus(7), second.path);
    REQUIRE(a.size() == b.size());
    CHECK(a.back().filename() == "manifest.json");
    for (size_t x = 0; x < a.size(); ++x) {
        CHECK(fs::relative(a[x], first.path) == fs::relative(b[x], second.path));
        CHECK(read_text_file(a[x]) == read_text_file(b[x]));
    }

    auto manifest = read_json_file(first.path / "manifest.json");
    CHECK(manifest["seed"] == 7);
    CHECK(manifest["albums"].size() == 24);
    CHECK(digraph_from_json(read_json_file(first.path / manifest["digraphs"][0].get<std::string>())) == c.digraphs[0].graph);

    auto other = generate_corpus(8);
    CHECK(other.albums != c.albums);
}

TEST_CASE("the generator does not depend on the standard library's distributions")
{
    // Frozen from the first run: the stream is defined by mt19937_64 and rejection sampling alone.
    Rng rng{2024};
    std::vector<std::int64_t> draws;
    for (int x = 0; x < 6; ++x)
        draws.push_back(rng.uniform(-5, 5));
    CHECK(draws == std::vector<std::int64_t>{4, 2, 0, 1, -2, 0});
}
