#include <crystals/aip.hh>
#include <crystals/tensor.hh>

#include <map>
#include <utility>

using std::map;
using std::pair;
using std::size_t;
using std::string;
using std::vector;

namespace crystals
{
    using std::to_string;

    namespace
    {
        using Key = pair<vector<int>, vector<int>>;

        auto edge_domain(const Edge & e) -> vector<int>
        {
            if (e.first == e.second)
                return {e.first};
            return {std::min(e.first, e.second), std::max(e.first, e.second)};
        }

        auto image_of(const vector<int> & domain, const vector<int> & images, int vertex) -> int
        {
            for (size_t i = 0; i < domain.size(); ++i)
                if (domain[i] == vertex)
                    return images[i];
            throw ArgumentError("vertex " + to_string(vertex) + " outside function domain");
        }

        /// All functions from a domain of the given size into [n], lexicographically by image.
        auto all_functions(int n, size_t size) -> vector<vector<int>>
        {
            vector<vector<int>> result;
            for (auto & t : all_tuples(n, static_cast<int>(size)))
                result.emplace_back(t.entries().begin(), t.entries().end());
            return result;
        }

        auto subsets_up_to(int n, int k) -> vector<vector<int>>
        {
            vector<vector<int>> result;
            for (int s = 1; s <= std::min(n, k); ++s)
                for (auto & t : increasing_tuples(n, s))
                    result.emplace_back(t.entries().begin(), t.entries().end());
            return result;
        }

        /// Nonempty sub-tuples of a sorted set selected by bitmask; proper ones only when asked.
        auto nonempty_subsets(const vector<int> & set, bool proper_only) -> vector<vector<int>>
        {
            vector<vector<int>> result;
            unsigned full = (1u << set.size()) - 1;
            for (unsigned mask = 1; mask <= full; ++mask) {
                if (proper_only && mask == full)
                    continue;
                vector<int> r;
                for (size_t i = 0; i < set.size(); ++i)
                    if (mask & (1u << i))
                        r.push_back(set[i]);
                result.push_back(std::move(r));
            }
            return result;
        }

        auto restrict_to(const vector<int> & domain, const vector<int> & images, const vector<int> & sub) -> vector<int>
        {
            vector<int> result;
            for (int v : sub)
                result.push_back(image_of(domain, images, v));
            return result;
        }

        auto binomial(int n, int k) -> size_t
        {
            size_t result = 1;
            for (int i = 1; i <= k; ++i)
                result = result * (n - k + i) / i;
            return result;
        }
    }

    auto AipVariable::to_string() const -> string
    {
        string result = kind == Kind::subset ? "S{" : "g" + std::to_string(edge_index + 1) + "{";
        for (size_t i = 0; i < vertices.size(); ++i)
            result += (i ? "," : "") + std::to_string(vertices[i]) + "->" + std::to_string(images[i]);
        return result + "}";
    }

    auto estimate_variable_count(const Digraph & g, const Digraph & h, int level) -> size_t
    {
        if (level < 1)
            throw ArgumentError("AIP level must be at least 1, got " + to_string(level));
        size_t count = 0;
        size_t nh = h.vertex_count();
        for (int s = 1; s <= std::min(g.vertex_count(), level); ++s) {
            size_t functions = 1;
            for (int i = 0; i < s; ++i)
                functions *= nh;
            count += binomial(g.vertex_count(), s) * functions;
        }
        size_t loops = 0;
        for (auto [a, b] : h.edges())
            if (a == b)
                ++loops;
        for (auto [a, b] : g.edges())
            count += a == b ? loops : h.edge_count();
        return count;
    }

    auto build_system(const Digraph & g, const Digraph & h, int level) -> AipSystem
    {
        if (level < 1)
            throw ArgumentError("AIP level must be at least 1, got " + to_string(level));

        AipSystem system;
        system.level = level;
        auto & eq = system.equations;
        int nh = h.vertex_count();

        map<Key, size_t> subset_column;
        auto subsets = subsets_up_to(g.vertex_count(), level);
        for (auto & s : subsets)
            for (auto & f : all_functions(nh, s.size())) {
                subset_column.emplace(Key{s, f}, system.variables.size());
                system.variables.push_back(AipVariable{AipVariable::Kind::subset, s, f});
            }

        // Edge variables, keeping only those whose image is an edge of H.
        vector<vector<pair<vector<int>, size_t>>> edge_columns(g.edge_count());
        for (size_t e = 0; e < g.edge_count(); ++e) {
            auto domain = edge_domain(g.edges()[e]);
            for (auto & f : all_functions(nh, domain.size())) {
                auto [g1, g2] = g.edges()[e];
                if (! h.has_edge(image_of(domain, f, g1), image_of(domain, f, g2))) {
                    ++system.eliminated;
                    continue;
                }
                edge_columns[e].emplace_back(f, system.variables.size());
                system.variables.push_back(AipVariable{AipVariable::Kind::edge, domain, f, e});
            }
        }

        eq.columns.assign(system.variables.size(), {});
        auto add_row = [&](ConstraintFamily family, long rhs) -> size_t {
            system.row_families.push_back(family);
            eq.rhs.emplace_back(rhs);
            return eq.rows++;
        };
        auto put = [&](size_t row, size_t column, long value) { eq.columns[column].emplace_back(row, value); };

        for (auto & s : subsets) {
            auto row = add_row(ConstraintFamily::aip1, 1);
            for (auto & f : all_functions(nh, s.size()))
                put(row, subset_column.at(Key{s, f}), 1);
        }

        for (auto & s : subsets) {
            if (s.size() < 2)
                continue;
            auto extensions = all_functions(nh, s.size());
            for (auto & r : nonempty_subsets(s, true)) {
                map<vector<int>, size_t> rows;
                for (auto & f : all_functions(nh, r.size())) {
                    auto row = add_row(ConstraintFamily::aip2, 0);
                    rows.emplace(f, row);
                    put(row, subset_column.at(Key{r, f}), 1);
                }
                for (auto & ft : extensions)
                    put(rows.at(restrict_to(s, ft, r)), subset_column.at(Key{s, ft}), -1);
            }
        }

        for (size_t e = 0; e < g.edge_count(); ++e) {
            auto domain = edge_domain(g.edges()[e]);
            for (auto & r : nonempty_subsets(domain, false)) {
                if (static_cast<int>(r.size()) > level)
                    continue;
                map<vector<int>, size_t> rows;
                for (auto & f : all_functions(nh, r.size())) {
                    auto row = add_row(ConstraintFamily::aip3, 0);
                    rows.emplace(f, row);
                    put(row, subset_column.at(Key{r, f}), 1);
                }
                for (auto & [ft, column] : edge_columns[e])
                    put(rows.at(restrict_to(domain, ft, r)), column, -1);
            }
        }

        return system;
    }

    auto satisfies_constraints(const Digraph & g, const Digraph & h, const AipSystem & system, const BigVector & witness)
        -> bool
    {
        if (witness.size() != system.variables.size())
            return false;

        map<Key, BigInt> subset_value;
        vector<map<vector<int>, BigInt>> edge_value(g.edge_count());
        for (size_t c = 0; c < system.variables.size(); ++c) {
            auto & v = system.variables[c];
            if (v.kind == AipVariable::Kind::subset)
                subset_value[Key{v.vertices, v.images}] = witness[c];
            else {
                auto [g1, g2] = g.edges().at(v.edge_index);
                // Forbidden images must never have been given a column.
                if (! h.has_edge(image_of(v.vertices, v.images, g1), image_of(v.vertices, v.images, g2)))
                    return false;
                edge_value[v.edge_index][v.images] = witness[c];
            }
        }

        auto lambda_s = [&](const vector<int> & s, const vector<int> & f) -> BigInt {
            auto it = subset_value.find(Key{s, f});
            return it == subset_value.end() ? BigInt{0} : it->second;
        };

        int nh = h.vertex_count();
        auto subsets = subsets_up_to(g.vertex_count(), system.level);
        for (auto & s : subsets) {
            BigInt total = 0;
            for (auto & f : all_functions(nh, s.size()))
                total += lambda_s(s, f);
            if (total != 1)
                return false;

            for (auto & r : nonempty_subsets(s, true))
                for (auto & f : all_functions(nh, r.size())) {
                    BigInt marginal = 0;
                    for (auto & ft : all_functions(nh, s.size()))
                        if (restrict_to(s, ft, r) == f)
                            marginal += lambda_s(s, ft);
                    if (marginal != lambda_s(r, f))
                        return false;
                }
        }

        for (size_t e = 0; e < g.edge_count(); ++e) {
            auto domain = edge_domain(g.edges()[e]);
            for (auto & r : nonempty_subsets(domain, false)) {
                if (static_cast<int>(r.size()) > system.level)
                    continue;
                for (auto & f : all_functions(nh, r.size())) {
                    BigInt marginal = 0;
                    for (auto & ft : all_functions(nh, domain.size())) {
                        if (restrict_to(domain, ft, r) != f)
                            continue;
                        auto it = edge_value[e].find(ft);
                        if (it != edge_value[e].end())
                            marginal += it->second;
                    }
                    if (marginal != lambda_s(r, f))
                        return false;
                }
            }
        }
        return true;
    }

    auto aip_level_k(const Digraph & g, const Digraph & h, int level) -> AipVerdict
    {
        AipVerdict verdict;
        verdict.system = build_system(g, h, level);
        auto result = solve_diophantine(verdict.system.equations);
        if (! result.feasible())
            return verdict;

        if (! satisfies_constraints(g, h, verdict.system, result.witness))
            throw StructureError("solver witness fails direct substitution into the AIP constraints");
        verdict.answer = AipAnswer::yes;
        verdict.witness = std::move(result.witness);
        return verdict;
    }
}
