#include <crystals/aip.hh>
#include <crystals/corpus.hh>
#include <crystals/fooling.hh>

#include <oracles.hh>

#include <doctest.h>

using namespace crystals;
using std::size_t;
using std::vector;

namespace
{
    auto blocks_of(const AffineVector & q, const Digraph & h, int k) -> BlockEdgeCandidate
    {
        BlockEdgeCandidate candidate{k, {}};
        auto shape = Shape::cubical(h.vertex_count(), k);
        for (auto & i : all_tuples(2, k))
            candidate.blocks.emplace(i, IntTensor{shape, zaff_map(q, edge_projection_map(h, i)).entries()});
        return candidate;
    }
}

TEST_CASE("affine vectors and minion maps")
{
    CHECK_THROWS_AS(AffineVector({1, 1}), ArgumentError);
    AffineVector v{{2, -1, 0}};
    MinionMap pi{2, {1, 2, 1}};
    CHECK(zaff_map(v, pi) == AffineVector{{2, -1}});
    CHECK(zaff_map(v, MinionMap::identity(3)) == v);
    CHECK_THROWS_AS(zaff_map(v, MinionMap{2, {1, 2}}), ShapeError);
    CHECK_THROWS_AS(MinionMap(2, {1, 3}), BoundsError);

    // Functoriality: mapping along rho after pi is mapping along the composite.
    MinionMap rho{1, {1, 1}};
    CHECK(zaff_map(zaff_map(v, pi), rho) == zaff_map(v, compose(rho, pi)));
    CHECK(zaff_map(v, compose(rho, pi)) == AffineVector{{1}});
    CHECK_THROWS_AS(compose(pi, rho), ShapeError);

    Rng rng{6};
    for (int trial = 0; trial < 50; ++trial) {
        int a = static_cast<int>(rng.uniform(1, 5)), b = static_cast<int>(rng.uniform(1, 5)),
            c = static_cast<int>(rng.uniform(1, 5));
        vector<Entry> e(a);
        Entry rest = 1;
        for (int x = 1; x < a; ++x) {
            e[x] = rng.uniform(-4, 4);
            rest -= e[x];
        }
        e[0] = rest;
        AffineVector w{e};
        vector<int> f(a), g(b);
        for (auto & x : f)
            x = static_cast<int>(rng.uniform(1, b));
        for (auto & x : g)
            x = static_cast<int>(rng.uniform(1, c));
        MinionMap first{b, f}, second{c, g};
        CHECK(zaff_map(zaff_map(w, first), second) == zaff_map(w, compose(second, first)));
    }
}

TEST_CASE("tensor powers of an edge")
{
    auto p = tensor_power_edge({1, 3}, 2);
    CHECK(p == vector<IndexTuple>{{1, 1}, {1, 3}, {3, 1}, {3, 3}});
    CHECK(tensor_power_edge({2, 1}, 1) == vector<IndexTuple>{{2}, {1}});
    CHECK(tensor_power_edge({1, 2}, 3).size() == 8);
    CHECK_THROWS_AS(tensor_power_edge({1, 2}, 0), ArgumentError);
}

TEST_CASE("the fooling matrix")
{
    auto m3 = fooling_matrix(3);
    CHECK(m3 == IntTensor{Shape{3, 3}, {0, 0, 1, 1, 0, -1, 0, 0, 0}});
    auto m4 = fooling_matrix(4);
    CHECK(m4.shape() == Shape{4, 4});
    CHECK(sum_entries(m4) == 1);
    for (int a = 1; a <= 4; ++a)
        CHECK(entry(m4, {a, a}) == 0);
    CHECK(apply_projection(m4, {1}) == unit_tensor(Shape{4}, {1}));
    CHECK(apply_projection(m4, {2}) == unit_tensor(Shape{4}, {1}));
    CHECK_THROWS_AS(fooling_matrix(2), UnsupportedError);
}

TEST_CASE("edge projection maps")
{
    auto pi = edge_projection_map(clique(3), {2, 1});
    CHECK(pi.source() == 6);
    CHECK(pi.target() == 9);
    // (1,2) goes to (2,1), offset 3 in [3]^2.
    CHECK(pi(1) == 4);
    auto single = edge_projection_map(clique(3), {1});
    CHECK(single.assignment() == vector<int>{1, 1, 2, 2, 3, 3});
}

TEST_CASE("the witness family")
{
    auto xi = build_xi(clique(4), 3, 3);
    CHECK(xi.size() == 64);
    for (auto & [t, image] : xi)
        CHECK(sum_entries(image) == 1);
    CHECK(xi.at({1, 2, 1}) == apply_projection(fooling_matrix(3), {1, 2, 1}));
    CHECK(xi.at({3, 3, 3}) == apply_projection(fooling_matrix(3), {1, 1, 1}));

    auto candidate = xi_edge_candidate(xi, {1, 2}, 3);
    for (auto & [i, block] : candidate.blocks)
        CHECK(block == apply_projection(fooling_matrix(3), i));

    CHECK_THROWS_AS(build_xi(Digraph{2, {{1, 1}}}, 3, 2), ArgumentError);
    CHECK_THROWS_AS(build_xi(Digraph{1, {}}, 3, 2), ArgumentError);
    CHECK_THROWS_AS(build_xi(clique(3), 3, 1), ArgumentError);
    CHECK_THROWS_AS(build_xi(clique(3), 2, 2), UnsupportedError);
}

TEST_CASE("edge distributions")
{
    auto xi = build_xi(clique(4), 3, 3);
    auto q = verify_free_edge(xi_edge_candidate(xi, {1, 2}, 3), clique(3));
    REQUIRE(q);
    CHECK(*q == AffineVector{{0, 1, 1, -1, 0, 0}});
    CHECK(explicit_edge_distribution(fooling_matrix(3), {1, 2}) == *q);
    CHECK(explicit_edge_distribution(fooling_matrix(3), {2, 1}) == AffineVector{{1, 0, 0, 0, 1, -1}});
    CHECK_THROWS_AS(explicit_edge_distribution(fooling_matrix(3), {2, 2}), ArgumentError);

    BlockEdgeCandidate zero{2, {}};
    for (auto & i : all_tuples(2, 2))
        zero.blocks.emplace(i, IntTensor{Shape{3, 3}});
    CHECK_FALSE(verify_free_edge(zero, clique(3)));

    BlockEdgeCandidate missing{2, {}};
    CHECK_THROWS_AS(verify_free_edge(missing, clique(3)), ShapeError);

    Rng rng{17};
    for (int trial = 0; trial < 40; ++trial) {
        int n = static_cast<int>(rng.uniform(2, 4)), k = static_cast<int>(rng.uniform(2, 3));
        auto h = clique(n);
        vector<Entry> e(h.edge_count());
        Entry rest = 1;
        for (size_t x = 1; x < e.size(); ++x) {
            e[x] = rng.uniform(-3, 3);
            rest -= e[x];
        }
        e[0] = rest;
        AffineVector planted{e};
        auto found = verify_free_edge(blocks_of(planted, h, k), h);
        REQUIRE(found);
        CHECK(*found == planted);

        // Disturbing one block makes the candidate infeasible.
        auto broken = blocks_of(planted, h, k);
        auto & block = broken.blocks.begin()->second;
        auto entries = block.entry_vector();
        entries[0] += 1;
        entries[1] -= 1;
        block = IntTensor{block.shape(), entries};
        CHECK_FALSE(verify_free_edge(broken, h));
    }
}

TEST_CASE("certificates")
{
    auto cert = certify_fooling_witness(clique(4), 3, 3);
    CHECK(cert.valid());
    CHECK(cert.failure.empty());
    CHECK(cert.edge_distributions.size() == 12);
    CHECK(verify_main_theorem_witness(clique(4), 3, 2));
    CHECK(verify_main_theorem_witness(clique(5), 3, 2));
    CHECK(verify_main_theorem_witness(clique(5), 4, 2));
    CHECK(verify_main_theorem_witness(cycle(5), 3, 2));
    CHECK_THROWS_AS(certify_fooling_witness(Digraph{2, {{1, 2}, {2, 2}}}, 3, 2), ArgumentError);
}

TEST_CASE("certificates agree with the level-k solver")
{
    for (int v = 2; v <= 4; ++v)
        for (auto & g : nonisomorphic_loopless_digraphs(v))
            for (int k = 2; k <= 3; ++k) {
                CHECK(verify_main_theorem_witness(g, 3, k));
                CHECK(aip_level_k(g, clique(3), k).yes());
            }
}
