#include <crystals/digraph.hh>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

using std::optional;
using std::string;
using std::vector;

namespace crystals
{
    using std::to_string;

    Digraph::Digraph(int vertex_count, vector<Edge> edges) :
        _vertex_count(vertex_count),
        _edges(std::move(edges))
    {
        if (_vertex_count < 1)
            throw ArgumentError("a digraph needs at least one vertex, got " + to_string(_vertex_count));
        _adjacent.assign(_vertex_count + 1, vector<bool>(_vertex_count + 1, false));
        for (auto [u, v] : _edges) {
            if (u < 1 || u > _vertex_count || v < 1 || v > _vertex_count)
                throw BoundsError("edge (" + to_string(u) + "," + to_string(v) + ") outside vertex range 1.."
                    + to_string(_vertex_count));
            if (_adjacent[u][v])
                throw ArgumentError("duplicate edge (" + to_string(u) + "," + to_string(v) + ")");
            _adjacent[u][v] = true;
        }
    }

    auto Digraph::has_edge(int u, int v) const -> bool
    {
        if (u < 1 || u > _vertex_count || v < 1 || v > _vertex_count)
            return false;
        return _adjacent[u][v];
    }

    auto Digraph::is_loopless() const -> bool
    {
        return std::none_of(_edges.begin(), _edges.end(), [](const Edge & e) { return e.first == e.second; });
    }

    auto Digraph::is_weakly_connected() const -> bool
    {
        vector<int> parent(_vertex_count + 1);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        for (auto [u, v] : _edges)
            parent[find(u)] = find(v);
        int root = find(1);
        for (int v = 2; v <= _vertex_count; ++v)
            if (find(v) != root)
                return false;
        return true;
    }

    auto clique(int n) -> Digraph
    {
        vector<Edge> edges;
        for (int u = 1; u <= n; ++u)
            for (int v = 1; v <= n; ++v)
                if (u != v)
                    edges.emplace_back(u, v);
        return Digraph{n, std::move(edges)};
    }

    auto cycle(int n) -> Digraph
    {
        if (n < 3)
            throw ArgumentError("cycles need at least three vertices, got " + to_string(n));
        std::set<Edge> edges;
        for (int u = 1; u <= n; ++u) {
            int v = u % n + 1;
            edges.emplace(u, v);
            edges.emplace(v, u);
        }
        return Digraph{n, vector<Edge>(edges.begin(), edges.end())};
    }

    auto complete_with_loops(int n) -> Digraph
    {
        vector<Edge> edges;
        for (int u = 1; u <= n; ++u)
            for (int v = 1; v <= n; ++v)
                edges.emplace_back(u, v);
        return Digraph{n, std::move(edges)};
    }

    auto parse_shorthand(const string & text) -> optional<Digraph>
    {
        if (text.size() < 2 || (text[0] != 'K' && text[0] != 'C'))
            return std::nullopt;
        if (! std::all_of(text.begin() + 1, text.end(), [](char c) { return c >= '0' && c <= '9'; }))
            return std::nullopt;
        if (text.size() > 4)
            throw ArgumentError("shorthand " + text + " is far beyond desk scale");
        int n = std::stoi(text.substr(1));
        if (text[0] == 'K')
            return clique(n);
        return cycle(n);
    }

    auto is_homomorphism(const Digraph & g, const Digraph & h, const Homomorphism & f) -> bool
    {
        if (f.size() != static_cast<size_t>(g.vertex_count()))
            return false;
        for (auto [u, v] : g.edges())
            if (! h.has_edge(f[u - 1], f[v - 1]))
                return false;
        return true;
    }

    auto brute_homomorphism(const Digraph & g, const Digraph & h, double cap) -> optional<Homomorphism>
    {
        double space = std::pow(static_cast<double>(h.vertex_count()), g.vertex_count());
        if (space > cap)
            throw CapacityError("homomorphism search space " + to_string(space) + " exceeds cap " + to_string(cap));

        int n = g.vertex_count();
        Homomorphism f(n, 0);

        // Assign vertices in order; check every edge whose endpoints are both assigned.
        std::function<bool(int)> extend = [&](int v) -> bool {
            if (v > n)
                return true;
            for (int image = 1; image <= h.vertex_count(); ++image) {
                f[v - 1] = image;
                bool ok = true;
                for (auto [a, b] : g.edges()) {
                    if (std::max(a, b) != v)
                        continue;
                    if (! h.has_edge(f[a - 1], f[b - 1])) {
                        ok = false;
                        break;
                    }
                }
                if (ok && extend(v + 1))
                    return true;
            }
            f[v - 1] = 0;
            return false;
        };

        if (extend(1))
            return f;
        return std::nullopt;
    }

    auto is_bipartite(const Digraph & g) -> bool
    {
        int n = g.vertex_count();
        vector<vector<int>> neighbours(n + 1);
        for (auto [u, v] : g.edges()) {
            if (u == v)
                return false;
            neighbours[u].push_back(v);
            neighbours[v].push_back(u);
        }

        vector<int> colour(n + 1, -1);
        for (int start = 1; start <= n; ++start) {
            if (colour[start] != -1)
                continue;
            colour[start] = 0;
            vector<int> queue{start};
            for (size_t head = 0; head < queue.size(); ++head) {
                int u = queue[head];
                for (int v : neighbours[u]) {
                    if (colour[v] == -1) {
                        colour[v] = 1 - colour[u];
                        queue.push_back(v);
                    }
                    else if (colour[v] == colour[u])
                        return false;
                }
            }
        }
        return true;
    }

    auto canonical_code(const Digraph & g) -> std::uint64_t
    {
        int n = g.vertex_count();
        if (n > 8)
            throw CapacityError("canonical codes are limited to 8 vertices");
        vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        auto best = std::numeric_limits<std::uint64_t>::max();
        do {
            std::uint64_t code = 0;
            for (auto [u, v] : g.edges())
                code |= std::uint64_t{1} << (perm[u - 1] * n + perm[v - 1]);
            best = std::min(best, code);
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }

    auto nonisomorphic_loopless_digraphs(int n) -> vector<Digraph>
    {
        if (n < 1 || n > 4)
            throw CapacityError("exhaustive digraph enumeration is limited to 1..4 vertices");

        vector<Edge> slots;
        for (int u = 1; u <= n; ++u)
            for (int v = 1; v <= n; ++v)
                if (u != v)
                    slots.emplace_back(u, v);

        std::set<std::uint64_t> seen;
        vector<Digraph> result;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
            vector<Edge> edges;
            for (size_t s = 0; s < slots.size(); ++s)
                if (mask & (std::uint64_t{1} << s))
                    edges.push_back(slots[s]);
            Digraph g{n, std::move(edges)};
            if (seen.insert(canonical_code(g)).second)
                result.push_back(std::move(g));
        }
        return result;
    }
}
