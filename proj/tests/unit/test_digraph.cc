#include <crystals/digraph.hh>

#include <doctest.h>

using namespace crystals;

TEST_CASE("construction is validated")
{
    CHECK_THROWS_AS(Digraph(2, {{1, 3}}), BoundsError);
    CHECK_THROWS_AS(Digraph(2, {{0, 1}}), BoundsError);
    CHECK_THROWS_AS(Digraph(0, {}), ArgumentError);
    CHECK_THROWS_AS(Digraph(2, {{1, 2}, {1, 2}}), ArgumentError);
    Digraph g{3, {{1, 2}, {2, 2}}};
    CHECK(g.has_edge(1, 2));
    CHECK_FALSE(g.has_edge(2, 1));
    CHECK_FALSE(g.is_loopless());
    CHECK_FALSE(g.is_weakly_connected());
}

TEST_CASE("named families")
{
    CHECK(clique(3).edge_count() == 6);
    CHECK(clique(3).edges().front() == Edge{1, 2});
    CHECK(cycle(5).edge_count() == 10);
    CHECK(cycle(5).has_edge(5, 1));
    CHECK(cycle(5).has_edge(1, 5));
    CHECK(complete_with_loops(3).edge_count() == 9);
    CHECK(cycle(4).is_weakly_connected());

    CHECK(parse_shorthand("K4") == clique(4));
    CHECK(parse_shorthand("C6") == cycle(6));
    CHECK_FALSE(parse_shorthand("X3"));
    CHECK_FALSE(parse_shorthand("K"));
    CHECK_FALSE(parse_shorthand("K3x"));
    CHECK_THROWS_AS(parse_shorthand("C2"), ArgumentError);
    CHECK_THROWS_AS(parse_shorthand("K99999"), ArgumentError);
}

TEST_CASE("homomorphism search")
{
    CHECK(brute_homomorphism(clique(3), clique(3)));
    CHECK_FALSE(brute_homomorphism(clique(4), clique(3)));
    CHECK_FALSE(brute_homomorphism(clique(5), clique(4)));
    CHECK(brute_homomorphism(cycle(6), clique(2)));
    CHECK_FALSE(brute_homomorphism(cycle(5), clique(2)));
    CHECK(brute_homomorphism(cycle(5), clique(3)));
    CHECK(brute_homomorphism(Digraph{3, {}}, Digraph{1, {}}));
    CHECK_FALSE(brute_homomorphism(Digraph{1, {{1, 1}}}, clique(4)));
    CHECK(brute_homomorphism(clique(4), complete_with_loops(1)));

    auto f = brute_homomorphism(cycle(7), clique(3));
    REQUIRE(f);
    CHECK(is_homomorphism(cycle(7), clique(3), *f));
    CHECK_FALSE(is_homomorphism(clique(2), clique(2), {1, 1}));

    CHECK_THROWS_AS(brute_homomorphism(clique(20), clique(20), 1e6), CapacityError);
}

TEST_CASE("bipartiteness")
{
    CHECK(is_bipartite(cycle(6)));
    CHECK_FALSE(is_bipartite(cycle(5)));
    CHECK_FALSE(is_bipartite(Digraph{1, {{1, 1}}}));
    CHECK(is_bipartite(Digraph{3, {{1, 2}, {3, 2}}}));
    CHECK(is_bipartite(Digraph{1, {}}));
}

TEST_CASE("isomorphism classes")
{
    CHECK(nonisomorphic_loopless_digraphs(1).size() == 1);
    CHECK(nonisomorphic_loopless_digraphs(2).size() == 3);
    CHECK(nonisomorphic_loopless_digraphs(3).size() == 16);
    CHECK(nonisomorphic_loopless_digraphs(4).size() == 218);
    CHECK_THROWS_AS(nonisomorphic_loopless_digraphs(5), CapacityError);

    CHECK(canonical_code(Digraph{3, {{1, 2}}}) == canonical_code(Digraph{3, {{3, 1}}}));
    CHECK(canonical_code(Digraph{3, {{1, 2}}}) != canonical_code(Digraph{3, {{2, 1}, {1, 2}}}));
}
