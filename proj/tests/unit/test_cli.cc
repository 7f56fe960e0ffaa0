#include "../../tools/commands.hh"

#include <crystals/fooling.hh>
#include <crystals/json_io.hh>

#include <doctest.h>

#include <filesystem>
#include <sstream>

using namespace crystals;
namespace fs = std::filesystem;
using std::string;
using std::vector;

namespace
{
    struct Outcome
    {
        int status;
        string out, err;
    };

    auto invoke(vector<string> args) -> Outcome
    {
        args.insert(args.begin(), "crystals");
        vector<const char *> argv;
        for (auto & a : args)
            argv.push_back(a.c_str());
        std::ostringstream out, err;
        int status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return {status, out.str(), err.str()};
    }

    struct Scratch
    {
        fs::path path;

        explicit Scratch(const string & name) :
            path(fs::current_path() / ("cli-scratch-" + name))
        {
            fs::remove_all(path);
            fs::create_directories(path);
        }

        ~Scratch() { fs::remove_all(path); }

        auto operator/(const string & file) const -> string { return (path / file).string(); }
    };

    auto all_m_album() -> Album
    {
        std::map<IndexTuple, IntTensor> pictures;
        for (auto & i : increasing_tuples(4, 2))
            pictures.emplace(i, fooling_matrix(3));
        return Album{2, Shape::cubical(3, 4), pictures};
    }
}

TEST_CASE("realize")
{
    Scratch dir{"realize"};
    write_json_file(dir / "album.json", album_to_json(all_m_album()));
    auto r = invoke({"--json-report", dir / "report.json", "realize", "--album", dir / "album.json", "--out",
        dir / "tensor.json", "--trace", dir / "trace.json"});
    CHECK(r.status == 0);
    auto t = tensor_from_json(read_json_file(dir / "tensor.json"));
    CHECK(album_from_tensor(t, 2) == all_m_album());
    CHECK(replay(trace_from_json(read_json_file(dir / "trace.json"))) == t);

    auto report = read_json_file(dir / "report.json");
    CHECK(report["tool"] == "crystals");
    CHECK(report["command"] == "realize");
    CHECK(report["seed"] == 1);
    CHECK(report["input_digest"].get<string>().size() == 16);
    for (auto & claim : report["claims"]) {
        CHECK(claim["pass"] == true);
        CHECK(claim.contains("anchor"));
        CHECK(claim["wall_time"].is_number());
    }

    Album mismatched{1, Shape{1, 1}, {{IndexTuple{1}, IntTensor{Shape{1}, {1}}}, {IndexTuple{2}, IntTensor{Shape{1}, {2}}}}};
    write_json_file(dir / "bad.json", album_to_json(mismatched));
    auto bad = invoke({"realize", "--album", dir / "bad.json", "--out", dir / "never.json"});
    CHECK(bad.status == 1);
    CHECK(bad.err.find("i=(1)") != string::npos);
    CHECK_FALSE(fs::exists(dir / "never.json"));

    write_file_atomic(dir / "broken.json", "{\"p\": 1,");
    CHECK(invoke({"realize", "--album", dir / "broken.json", "--out", dir / "never.json"}).status == 2);
    CHECK(invoke({"realize", "--album", dir / "missing.json", "--out", dir / "never.json"}).status == 2);
}

TEST_CASE("crystal and verify-crystal")
{
    Scratch dir{"crystal"};
    CHECK(invoke({"crystal", "--fooling", "3", "--dim", "4", "--out", dir / "c.json"}).status == 0);
    write_json_file(dir / "m.json", tensor_to_json(fooling_matrix(3)));
    CHECK(invoke({"verify-crystal", "--crystal", dir / "c.json", "--matrix", dir / "m.json"}).status == 0);
    CHECK(invoke({"verify-crystal", "--tensor", dir / "m.json", "--matrix", dir / "m.json"}).status == 0);

    write_json_file(dir / "unbalanced.json", tensor_to_json(IntTensor{Shape{2, 2}, {1, 1, 0, 0}}));
    CHECK(invoke({"crystal", "--matrix", dir / "unbalanced.json", "--dim", "3", "--out", dir / "x.json"}).status == 2);
    CHECK(invoke({"crystal", "--fooling", "2", "--dim", "3", "--out", dir / "x.json"}).status == 2);
    CHECK(invoke({"crystal", "--dim", "3", "--out", dir / "x.json"}).status == 2);

    write_json_file(dir / "other.json", tensor_to_json(IntTensor{Shape{3, 3}, {1, 0, 0, 0, 0, 0, 0, 0, 0}}));
    CHECK(invoke({"verify-crystal", "--crystal", dir / "c.json", "--matrix", dir / "other.json"}).status == 1);
}

TEST_CASE("aip")
{
    Scratch dir{"aip"};
    auto yes = invoke({"aip", "--g", "K4", "--h", "K3", "--level", "2", "--witness", dir / "w.json"});
    CHECK(yes.status == 0);
    CHECK(yes.out.rfind("YES", 0) == 0);
    CHECK(fs::exists(dir / "w.json"));

    auto no = invoke({"aip", "--g", "C5", "--h", "K2", "--level", "2"});
    CHECK(no.status == 1);
    CHECK(no.out.rfind("NO", 0) == 0);

    write_json_file(dir / "g.json", digraph_to_json(cycle(6)));
    CHECK(invoke({"aip", "--g", dir / "g.json", "--h", "K2"}).status == 0);
    CHECK(invoke({"aip", "--g", "Q7", "--h", "K2"}).status == 2);
    CHECK(invoke({"aip", "--g", "C5", "--h", "K2", "--level", "0"}).status == 2);
    CHECK(invoke({"--quiet", "aip", "--g", "C5", "--h", "K2"}).out.empty());
}

TEST_CASE("fool")
{
    Scratch dir{"fool"};
    auto r = invoke({"fool", "--c", "3", "--d", "3", "--level", "2", "--report", dir / "r.json"});
    CHECK(r.status == 0);
    auto report = read_json_file(dir / "r.json");
    REQUIRE(report["claims"].size() == 3);
    for (auto & claim : report["claims"])
        CHECK(claim["pass"] == true);

    CHECK(invoke({"fool", "--c", "3", "--d", "3", "--level", "3"}).status == 0);
    CHECK(invoke({"fool", "--c", "2", "--d", "3"}).status == 2);
    CHECK(invoke({"fool", "--c", "4", "--d", "3"}).status == 2);
    CHECK(invoke({"fool", "--c", "3", "--d", "3", "--level", "1"}).status == 2);

    auto refused = invoke({"fool", "--c", "5", "--d", "9", "--level", "4"});
    CHECK(refused.status == 2);
    CHECK(refused.err.find("limit") != string::npos);
}

TEST_CASE("polymorphism")
{
    CHECK(invoke({"polymorphism", "--check", "parity", "--arity", "5"}).status == 0);
    CHECK(invoke({"polymorphism", "--check", "constant", "--arity", "3"}).status == 0);
    CHECK(invoke({"polymorphism", "--check", "first", "--arity", "3"}).status == 0);
    CHECK(invoke({"polymorphism", "--check", "parity", "--arity", "4"}).status == 2);
    CHECK(invoke({"polymorphism", "--check", "majority"}).status == 2);
}

TEST_CASE("corpus")
{
    Scratch a{"corpus-a"}, b{"corpus-b"};
    CHECK(invoke({"--seed", "5", "corpus", "--out", a.path.string()}).status == 0);
    CHECK(invoke({"--seed", "5", "corpus", "--out", b.path.string()}).status == 0);
    vector<string> files;
    for (auto & entry : fs::recursive_directory_iterator(a.path))
        if (entry.is_regular_file())
            files.push_back(fs::relative(entry.path(), a.path).string());
    CHECK(files.size() == 247 + 24 + 24 + 1);
    for (auto & f : files)
        CHECK(read_text_file(a.path / f) == read_text_file(b.path / f));
}

TEST_CASE("argument errors")
{
    CHECK(invoke({}).status == 2);
    CHECK(invoke({"frobnicate"}).status == 2);
    CHECK(invoke({"aip", "--g", "K3"}).status == 2);
    CHECK(invoke({"--version"}).status == 0);
    CHECK(invoke({"--help"}).status == 0);
}
