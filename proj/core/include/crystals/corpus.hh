#ifndef CRYSTALS_GUARD_CRYSTALS_CORPUS_HH
#define CRYSTALS_GUARD_CRYSTALS_CORPUS_HH 1

#include <crystals/album.hh>
#include <crystals/digraph.hh>
#include <crystals/tensor.hh>

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace crystals
{
    /**
     * Seeded generator with a fixed sampling rule, so the same seed gives the
     * same stream on every standard library (the std distributions do not).
     */
    class Rng
    {
    private:
        std::mt19937_64 _engine;

    public:
        explicit Rng(std::uint64_t seed) : _engine(seed) {}

        auto next() -> std::uint64_t { return _engine(); }

        /// Uniform on [lo, hi] by rejection.
        auto uniform(std::int64_t lo, std::int64_t hi) -> std::int64_t;
    };

    auto random_tensor(Rng & rng, const Shape & shape, Entry lo, Entry hi) -> IntTensor;

    /// The album of a random tensor, hence realistic.
    auto random_realistic_album(Rng & rng, int p, const Shape & modes, Entry lo, Entry hi) -> Album;

    /// Random square matrix whose last row and column are chosen to make row sums equal column sums.
    auto random_balanced_matrix(Rng & rng, int n, Entry lo, Entry hi) -> IntTensor;

    struct NamedDigraph
    {
        std::string name;
        Digraph graph;
    };

    struct Corpus
    {
        std::uint64_t seed;
        std::vector<NamedDigraph> digraphs;
        std::vector<Album> albums;
        std::vector<IntTensor> balanced_matrices;
    };

    /// Loopless digraphs on 1..4 vertices up to isomorphism, C3..C7, K2..K5, and seeded albums and matrices.
    auto generate_corpus(std::uint64_t seed) -> Corpus;

    /// Writes one JSON file per item plus manifest.json; returns the paths written, manifest last.
    auto write_corpus(const Corpus & corpus, const std::filesystem::path & directory)
        -> std::vector<std::filesystem::path>;
}

#endif
