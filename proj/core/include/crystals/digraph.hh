#ifndef CRYSTALS_GUARD_CRYSTALS_DIGRAPH_HH
#define CRYSTALS_GUARD_CRYSTALS_DIGRAPH_HH 1

#include <crystals/errors.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crystals
{
    using Edge = std::pair<int, int>;

    /// Vertices are 1..vertex_count; edges are ordered pairs kept in input order.
    class Digraph
    {
    private:
        int _vertex_count;
        std::vector<Edge> _edges;
        std::vector<std::vector<bool>> _adjacent;

    public:
        Digraph(int vertex_count, std::vector<Edge> edges);

        auto vertex_count() const -> int { return _vertex_count; }
        auto edges() const -> const std::vector<Edge> & { return _edges; }
        auto edge_count() const -> std::size_t { return _edges.size(); }
        auto has_edge(int u, int v) const -> bool;
        auto is_loopless() const -> bool;
        auto is_weakly_connected() const -> bool;

        auto operator==(const Digraph &) const -> bool = default;
    };

    /// Every ordered pair of distinct vertices, lexicographically.
    auto clique(int n) -> Digraph;

    /// The undirected n-cycle as a symmetric digraph, edges in lexicographic order.
    auto cycle(int n) -> Digraph;

    /// Every ordered pair including loops.
    auto complete_with_loops(int n) -> Digraph;

    /// Parses "K3" or "C5".
    auto parse_shorthand(const std::string & text) -> std::optional<Digraph>;

    using Homomorphism = std::vector<int>;

    /**
     * Backtracking search for a homomorphism. The nominal search space
     * |V(H)|^|V(G)| must not exceed `cap`.
     */
    auto brute_homomorphism(const Digraph & g, const Digraph & h, double cap = 1e9) -> std::optional<Homomorphism>;

    auto is_homomorphism(const Digraph & g, const Digraph & h, const Homomorphism & f) -> bool;

    /// Two-colourability of the underlying undirected graph; a loop rules it out.
    auto is_bipartite(const Digraph & g) -> bool;

    /// Canonical adjacency code under vertex relabelling (exhaustive, small graphs only).
    auto canonical_code(const Digraph & g) -> std::uint64_t;

    /// All loopless digraphs on exactly n vertices up to isomorphism, n <= 4.
    auto nonisomorphic_loopless_digraphs(int n) -> std::vector<Digraph>;
}

#endif
