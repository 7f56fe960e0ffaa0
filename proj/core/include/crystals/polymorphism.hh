#ifndef CRYSTALS_GUARD_CRYSTALS_POLYMORPHISM_HH
#define CRYSTALS_GUARD_CRYSTALS_POLYMORPHISM_HH 1

#include <crystals/digraph.hh>

#include <cstddef>
#include <vector>

namespace crystals
{
    /**
     * An explicit operation D^L -> D on D = {0, ..., d-1}. Rows are indexed in
     * base d with the first argument most significant. Value v stands for
     * vertex v + 1 when the table is read against a digraph.
     */
    class FunctionTable
    {
    private:
        int _domain, _arity;
        std::vector<int> _values;

    public:
        FunctionTable(int domain, int arity, std::vector<int> values);

        auto domain() const -> int { return _domain; }
        auto arity() const -> int { return _arity; }
        auto row_count() const -> std::size_t { return _values.size(); }

        auto operator()(const std::vector<int> & arguments) const -> int;
        auto value_at(std::size_t row) const -> int { return _values[row]; }
        auto arguments_of(std::size_t row) const -> std::vector<int>;
    };

    /// The alternating sum of the arguments mod 2.
    auto parity_function(int arity) -> FunctionTable;
    auto constant_function(int domain, int arity, int value) -> FunctionTable;
    auto first_coordinate_function(int domain, int arity) -> FunctionTable;

    /// Invariant under permutations fixing parity of positions, and f(a,b,b) = f(a,c,c). Odd arity only.
    auto is_alternating(const FunctionTable & f) -> bool;

    /// f maps every L-tuple of edges of `source` to an edge of `target`.
    auto is_polymorphism(const FunctionTable & f, const Digraph & source, const Digraph & target) -> bool;
    auto is_polymorphism(const FunctionTable & f, const Digraph & h) -> bool;
}

#endif
