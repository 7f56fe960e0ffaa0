#include <crystals/polymorphism.hh>

#include <algorithm>
#include <numeric>

using std::size_t;
using std::vector;

namespace crystals
{
    using std::to_string;

    namespace
    {
        auto table_size(int domain, int arity) -> size_t
        {
            size_t size = 1;
            for (int i = 0; i < arity; ++i) {
                size *= domain;
                if (size > (size_t{1} << 24))
                    throw CapacityError("function table with domain " + to_string(domain) + " and arity "
                        + to_string(arity) + " is too large");
            }
            return size;
        }

        auto decode_row(size_t row, int domain, int arity) -> vector<int>
        {
            vector<int> arguments(arity);
            for (int j = arity - 1; j >= 0; --j) {
                arguments[j] = static_cast<int>(row % domain);
                row /= domain;
            }
            return arguments;
        }

        auto tabulate(int domain, int arity, auto && rule) -> FunctionTable
        {
            if (domain < 1 || arity < 1)
                throw ArgumentError("function tables need positive domain and arity");
            size_t rows = table_size(domain, arity);
            vector<int> values(rows);
            for (size_t r = 0; r < rows; ++r)
                values[r] = rule(decode_row(r, domain, arity));
            return FunctionTable{domain, arity, std::move(values)};
        }

        /// Calls f with every permutation of [0, L) that maps each position to one of the same parity.
        auto for_each_parity_permutation(int arity, auto && f) -> bool
        {
            vector<int> odd, even;
            for (int j = 0; j < arity; ++j)
                (j % 2 == 0 ? odd : even).push_back(j);
            auto odd_perm = odd;
            do {
                auto even_perm = even;
                do {
                    vector<int> sigma(arity);
                    for (size_t x = 0; x < odd.size(); ++x)
                        sigma[odd[x]] = odd_perm[x];
                    for (size_t x = 0; x < even.size(); ++x)
                        sigma[even[x]] = even_perm[x];
                    if (! f(sigma))
                        return false;
                } while (std::next_permutation(even_perm.begin(), even_perm.end()));
            } while (std::next_permutation(odd_perm.begin(), odd_perm.end()));
            return true;
        }

        /// Adjacent transpositions within each parity class; these generate the same group.
        auto for_each_parity_generator(int arity, auto && f) -> bool
        {
            for (int j = 0; j + 2 < arity; ++j) {
                vector<int> sigma(arity);
                std::iota(sigma.begin(), sigma.end(), 0);
                std::swap(sigma[j], sigma[j + 2]);
                if (! f(sigma))
                    return false;
            }
            return true;
        }
    }

    FunctionTable::FunctionTable(int domain, int arity, vector<int> values) :
        _domain(domain),
        _arity(arity),
        _values(std::move(values))
    {
        if (domain < 1 || arity < 1)
            throw ArgumentError("function tables need positive domain and arity");
        if (_values.size() != table_size(domain, arity))
            throw ShapeError("function table has " + to_string(_values.size()) + " rows, expected "
                + to_string(table_size(domain, arity)));
        for (int v : _values)
            if (v < 0 || v >= domain)
                throw BoundsError("function value " + to_string(v) + " outside 0.." + to_string(domain - 1));
    }

    auto FunctionTable::operator()(const vector<int> & arguments) const -> int
    {
        if (static_cast<int>(arguments.size()) != _arity)
            throw ShapeError("expected " + to_string(_arity) + " arguments, got " + to_string(arguments.size()));
        size_t row = 0;
        for (int a : arguments) {
            if (a < 0 || a >= _domain)
                throw BoundsError("argument " + to_string(a) + " outside 0.." + to_string(_domain - 1));
            row = row * _domain + a;
        }
        return _values[row];
    }

    auto FunctionTable::arguments_of(size_t row) const -> vector<int>
    {
        return decode_row(row, _domain, _arity);
    }

    auto parity_function(int arity) -> FunctionTable
    {
        return tabulate(2, arity, [](const vector<int> & h) {
            int total = 0;
            for (size_t i = 0; i < h.size(); ++i)
                total += i % 2 == 0 ? h[i] : -h[i];
            return ((total % 2) + 2) % 2;
        });
    }

    auto constant_function(int domain, int arity, int value) -> FunctionTable
    {
        return tabulate(domain, arity, [value](const vector<int> &) { return value; });
    }

    auto first_coordinate_function(int domain, int arity) -> FunctionTable
    {
        return tabulate(domain, arity, [](const vector<int> & h) { return h[0]; });
    }

    auto is_alternating(const FunctionTable & f) -> bool
    {
        int arity = f.arity();
        if (arity < 3 || arity % 2 == 0)
            throw ArgumentError("alternation is defined for odd arity at least 3, got " + to_string(arity));

        auto invariant_under = [&](const vector<int> & sigma) {
            for (size_t r = 0; r < f.row_count(); ++r) {
                auto h = f.arguments_of(r);
                vector<int> permuted(arity);
                for (int j = 0; j < arity; ++j)
                    permuted[j] = h[sigma[j]];
                if (f(permuted) != f.value_at(r))
                    return false;
            }
            return true;
        };
        bool symmetric = arity <= 7 ? for_each_parity_permutation(arity, invariant_under)
                                    : for_each_parity_generator(arity, invariant_under);
        if (! symmetric)
            return false;

        for (size_t r = 0; r < f.row_count(); ++r) {
            auto h = f.arguments_of(r);
            if (h[arity - 1] != h[arity - 2])
                continue;
            for (int c = 0; c < f.domain(); ++c) {
                auto other = h;
                other[arity - 1] = other[arity - 2] = c;
                if (f(other) != f.value_at(r))
                    return false;
            }
        }
        return true;
    }

    auto is_polymorphism(const FunctionTable & f, const Digraph & source, const Digraph & target) -> bool
    {
        if (f.domain() != source.vertex_count())
            throw ShapeError("function domain " + to_string(f.domain()) + " differs from vertex count "
                + to_string(source.vertex_count()));
        if (f.domain() > target.vertex_count())
            throw ShapeError("function values exceed the target's vertices");

        int arity = f.arity();
        const auto & edges = source.edges();
        if (edges.empty())
            return true;
        vector<size_t> choice(arity, 0);
        vector<int> tail(arity), head(arity);
        while (true) {
            for (int j = 0; j < arity; ++j) {
                tail[j] = edges[choice[j]].first - 1;
                head[j] = edges[choice[j]].second - 1;
            }
            if (! target.has_edge(f(tail) + 1, f(head) + 1))
                return false;

            int j = arity - 1;
            while (j >= 0 && ++choice[j] == edges.size())
                choice[j--] = 0;
            if (j < 0)
                return true;
        }
    }

    auto is_polymorphism(const FunctionTable & f, const Digraph & h) -> bool
    {
        return is_polymorphism(f, h, h);
    }
}
