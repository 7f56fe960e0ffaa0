#ifndef CRYSTALS_GUARD_CRYSTALS_FOOLING_HH
#define CRYSTALS_GUARD_CRYSTALS_FOOLING_HH 1

#include <crystals/digraph.hh>
#include <crystals/tensor.hh>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace crystals
{
    /// An integer vector whose entries sum to one: an element of the affine integer minion.
    class AffineVector
    {
    private:
        std::vector<Entry> _entries;

    public:
        explicit AffineVector(std::vector<Entry> entries);

        auto size() const -> std::size_t { return _entries.size(); }
        auto operator[](std::size_t pos) const -> Entry { return _entries[pos]; }
        auto entries() const -> const std::vector<Entry> & { return _entries; }

        auto operator==(const AffineVector &) const -> bool = default;
    };

    /// A total map [source] -> [target], stored 1-based.
    class MinionMap
    {
    private:
        int _source, _target;
        std::vector<int> _assignment;

    public:
        MinionMap(int target, std::vector<int> assignment);

        static auto identity(int n) -> MinionMap;

        auto source() const -> int { return _source; }
        auto target() const -> int { return _target; }
        auto operator()(int x) const -> int { return _assignment[x - 1]; }
        auto assignment() const -> const std::vector<int> & { return _assignment; }
    };

    /// rho after pi.
    auto compose(const MinionMap & rho, const MinionMap & pi) -> MinionMap;

    /// Entry j of the result is the sum of v over the preimage of j.
    auto zaff_map(const AffineVector & v, const MinionMap & pi) -> AffineVector;

    /// Entry i of the k-th tensor power of an edge h, listed for i in [2]^k lexicographically.
    auto tensor_power_edge(const Edge & h, int k) -> std::vector<IndexTuple>;

    /// The n x n integer matrix with unit row and column sums concentrated at 1, zero diagonal and total 1.
    auto fooling_matrix(int n) -> IntTensor;

    /**
     * The map i -> h_i from E(H) to V(H)^k as a minion map, with edges
     * numbered in the digraph's edge order and k-tuples by their row-major
     * offset in [n]^k.
     */
    auto edge_projection_map(const Digraph & h, const IndexTuple & i) -> MinionMap;

    /// Tensor in T^{2*1_k}(T^{n*1_k}): one block for each i in [2]^k.
    struct BlockEdgeCandidate
    {
        int k;
        std::map<IndexTuple, IntTensor> blocks;
    };

    /**
     * Looks for Q over E(H), summing to one, whose image under each
     * projection h -> h_i is block i. Decided by integer feasibility, then
     * re-checked through zaff_map.
     */
    auto verify_free_edge(const BlockEdgeCandidate & candidate, const Digraph & h) -> std::optional<AffineVector>;

    /// Mines the |V(G)|-dimensional crystal of fooling_matrix(n) and projects it onto every g in V(G)^k.
    auto build_xi(const Digraph & g, int n, int k) -> std::map<IndexTuple, IntTensor>;

    /// The candidate (xi(g_i)) for i in [2]^k.
    auto xi_edge_candidate(const std::map<IndexTuple, IntTensor> & xi, const Edge & e, int k) -> BlockEdgeCandidate;

    /// Q built from M by the involution that sorts the edge, indexed by E(K_n).
    auto explicit_edge_distribution(const IntTensor & m, const Edge & e) -> AffineVector;

    struct WitnessCertificate
    {
        bool sums_to_one = false;
        bool edges_free = false;
        bool matches_explicit = false;
        bool diagonal_vanishes = false;
        bool compatible = false;
        std::vector<AffineVector> edge_distributions;
        std::string failure;

        auto valid() const -> bool
        {
            return sums_to_one && edges_free && matches_explicit && diagonal_vanishes && compatible;
        }
    };

    /**
     * Checks every condition that makes xi a homomorphism from G^{(k)} to the
     * free structure of K_n^{(k)} under the affine minion, and records the
     * per-edge distributions found.
     */
    auto certify_fooling_witness(const Digraph & g, int n, int k) -> WitnessCertificate;

    auto verify_main_theorem_witness(const Digraph & g, int n, int k) -> bool;
}

#endif
