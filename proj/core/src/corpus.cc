#include <crystals/corpus.hh>
#include <crystals/json_io.hh>

#include <cstdio>
#include <limits>

using std::int64_t;
using std::string;
using std::uint64_t;
using std::vector;

namespace fs = std::filesystem;

namespace crystals
{
    using std::to_string;

    namespace
    {
        auto numbered(const string & stem, size_t index) -> string
        {
            char buffer[16];
            std::snprintf(buffer, sizeof(buffer), "%03zu", index);
            return stem + "-" + buffer;
        }
    }

    auto Rng::uniform(int64_t lo, int64_t hi) -> int64_t
    {
        if (lo > hi)
            throw ArgumentError("empty range [" + to_string(lo) + ", " + to_string(hi) + "]");
        uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo);
        if (span == std::numeric_limits<uint64_t>::max())
            return static_cast<int64_t>(next());
        uint64_t range = span + 1;
        uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % range;
        uint64_t x;
        do
            x = next();
        while (x >= limit);
        return static_cast<int64_t>(static_cast<uint64_t>(lo) + x % range);
    }

    auto random_tensor(Rng & rng, const Shape & shape, Entry lo, Entry hi) -> IntTensor
    {
        vector<Entry> entries(shape.cell_count());
        for (auto & e : entries)
            e = rng.uniform(lo, hi);
        return IntTensor{shape, std::move(entries)};
    }

    auto random_realistic_album(Rng & rng, int p, const Shape & modes, Entry lo, Entry hi) -> Album
    {
        return album_from_tensor(random_tensor(rng, modes, lo, hi), p);
    }

    auto random_balanced_matrix(Rng & rng, int n, Entry lo, Entry hi) -> IntTensor
    {
        if (n < 1)
            throw ArgumentError("matrix size must be positive, got " + to_string(n));
        vector<Entry> e(static_cast<size_t>(n) * n, 0);
        auto at = [&](int r, int c) -> Entry & { return e[static_cast<size_t>(r) * n + c]; };
        for (int r = 0; r + 1 < n; ++r)
            for (int c = 0; c + 1 < n; ++c)
                at(r, c) = rng.uniform(lo, hi);
        at(n - 1, n - 1) = rng.uniform(lo, hi);

        // Row i and column i must agree; the free choice of the last-column entry fixes the last-row entry.
        for (int i = 0; i + 1 < n; ++i) {
            Entry row = 0, column = 0;
            for (int j = 0; j + 1 < n; ++j) {
                row = checked_add(row, at(i, j));
                column = checked_add(column, at(j, i));
            }
            at(i, n - 1) = rng.uniform(lo, hi);
            at(n - 1, i) = checked_sub(checked_add(row, at(i, n - 1)), column);
        }
        return IntTensor{Shape::cubical(n, 2), std::move(e)};
    }

    auto generate_corpus(uint64_t seed) -> Corpus
    {
        Corpus corpus{seed, {}, {}, {}};
        for (int n = 1; n <= 4; ++n) {
            size_t index = 0;
            for (auto & g : nonisomorphic_loopless_digraphs(n))
                corpus.digraphs.push_back({numbered("loopless-" + to_string(n), index++), g});
        }
        for (int n = 3; n <= 7; ++n)
            corpus.digraphs.push_back({"C" + to_string(n), cycle(n)});
        for (int n = 2; n <= 5; ++n)
            corpus.digraphs.push_back({"K" + to_string(n), clique(n)});

        Rng rng{seed};
        for (int a = 0; a < 24; ++a) {
            int q = static_cast<int>(rng.uniform(1, 4));
            int p = static_cast<int>(rng.uniform(1, q));
            vector<int> sizes(q);
            for (auto & s : sizes)
                s = static_cast<int>(rng.uniform(1, 3));
            corpus.albums.push_back(random_realistic_album(rng, p, Shape{sizes}, -5, 5));
        }
        for (int m = 0; m < 24; ++m)
            corpus.balanced_matrices.push_back(random_balanced_matrix(rng, static_cast<int>(rng.uniform(2, 5)), -5, 5));
        return corpus;
    }

    auto write_corpus(const Corpus & corpus, const fs::path & directory) -> vector<fs::path>
    {
        for (auto sub : {"digraphs", "albums", "matrices"})
            fs::create_directories(directory / sub);

        vector<fs::path> written;
        Json manifest{{"seed", corpus.seed}};
        auto emit = [&](const fs::path & relative, const Json & j, const char * section) {
            write_json_file(directory / relative, j);
            written.push_back(directory / relative);
            manifest[section].push_back(relative.generic_string());
        };

        for (auto & [name, g] : corpus.digraphs)
            emit(fs::path{"digraphs"} / (name + ".json"), digraph_to_json(g), "digraphs");
        for (size_t a = 0; a < corpus.albums.size(); ++a)
            emit(fs::path{"albums"} / (numbered("album", a) + ".json"), album_to_json(corpus.albums[a]), "albums");
        for (size_t m = 0; m < corpus.balanced_matrices.size(); ++m)
            emit(fs::path{"matrices"} / (numbered("balanced", m) + ".json"),
                tensor_to_json(corpus.balanced_matrices[m]), "matrices");

        write_json_file(directory / "manifest.json", manifest);
        written.push_back(directory / "manifest.json");
        return written;
    }
}
