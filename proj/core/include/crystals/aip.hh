#ifndef CRYSTALS_GUARD_CRYSTALS_AIP_HH
#define CRYSTALS_GUARD_CRYSTALS_AIP_HH 1

#include <crystals/digraph.hh>
#include <crystals/diophantine.hh>

#include <cstddef>
#include <string>
#include <vector>

namespace crystals
{
    /**
     * One column of the level-k system: either lambda_S(f) for a vertex set S
     * of G with 1 <= |S| <= k, or lambda_g(f) for an edge g of G. `vertices`
     * is the sorted domain of f and `images` lists f on it in the same order.
     */
    struct AipVariable
    {
        enum class Kind
        {
            subset,
            edge
        };

        Kind kind;
        std::vector<int> vertices;
        std::vector<int> images;
        std::size_t edge_index = 0;

        auto to_string() const -> std::string;
    };

    enum class ConstraintFamily
    {
        aip1,
        aip2,
        aip3
    };

    struct AipSystem
    {
        int level;
        std::vector<AipVariable> variables;
        std::vector<ConstraintFamily> row_families;
        SparseSystem equations;

        /// Edge variables dropped at build time because f(g) is not an edge of H.
        std::size_t eliminated = 0;
    };

    /**
     * Subsets go in size-then-lexicographic order, functions in lexicographic
     * order of their images, edges in input order. Forbidden edge variables
     * are never created.
     */
    auto build_system(const Digraph & g, const Digraph & h, int level) -> AipSystem;

    /// Column count of build_system, computed without building it.
    auto estimate_variable_count(const Digraph & g, const Digraph & h, int level) -> std::size_t;

    enum class AipAnswer
    {
        yes,
        no
    };

    struct AipVerdict
    {
        AipAnswer answer = AipAnswer::no;
        BigVector witness;
        AipSystem system;

        auto yes() const -> bool { return answer == AipAnswer::yes; }
    };

    /// Substitutes an assignment into every constraint family directly from the variable catalogue.
    auto satisfies_constraints(const Digraph & g, const Digraph & h, const AipSystem & system, const BigVector & witness)
        -> bool;

    /// Decides level k over the integers; a YES witness is re-verified before returning.
    auto aip_level_k(const Digraph & g, const Digraph & h, int level) -> AipVerdict;
}

#endif
