#include <crystals/corpus.hh>
#include <crystals/tensor.hh>

#include <oracles.hh>

#include <doctest.h>

#include <limits>

using namespace crystals;

namespace
{
    auto matrix(std::initializer_list<std::initializer_list<Entry>> rows) -> IntTensor
    {
        std::vector<Entry> e;
        int cols = 0;
        for (auto & r : rows) {
            cols = static_cast<int>(r.size());
            e.insert(e.end(), r.begin(), r.end());
        }
        return IntTensor{Shape{static_cast<int>(rows.size()), cols}, e};
    }

    auto vec(std::initializer_list<Entry> v) -> IntTensor
    {
        return IntTensor{Shape{static_cast<int>(v.size())}, std::vector<Entry>(v)};
    }

    const auto m3 = matrix({{0, 0, 1}, {1, 0, -1}, {0, 0, 0}});
}

TEST_CASE("entries are read by 1-based tuples")
{
    CHECK(entry(matrix({{1, 2}, {3, 4}}), {2, 1}) == 3);
    CHECK(entry(IntTensor::scalar(7), {}) == 7);
    CHECK(entry(unit_tensor(Shape{3}, {2}), {2}) == 1);
    CHECK_THROWS_AS(entry(matrix({{1, 2}, {3, 4}}), {3, 1}), BoundsError);
    CHECK_THROWS_AS(entry(matrix({{1, 2}, {3, 4}}), {1}), BoundsError);
}

TEST_CASE("unit tensors")
{
    CHECK(unit_tensor(Shape{}, {}) == IntTensor::scalar(1));
    CHECK(unit_tensor(Shape{3}, {2}) == vec({0, 1, 0}));
    CHECK(unit_tensor(Shape{2, 2}, {1, 2}) == matrix({{0, 1}, {0, 0}}));
    CHECK_THROWS_AS(unit_tensor(Shape{2, 2}, {1, 3}), BoundsError);
}

TEST_CASE("shapes and tuples")
{
    CHECK(Shape{}.cell_count() == 1);
    CHECK(Shape{2, 3, 4}.cell_count() == 24);
    CHECK_THROWS_AS(Shape({2, 0}), ShapeError);
    CHECK_THROWS_AS(IndexTuple({1, 0}), BoundsError);
    CHECK(project_tuple({5, 7, 9}, {3, 1}) == IndexTuple{9, 5});
    CHECK(project_tuple({5, 7}, {}) == IndexTuple{});
    CHECK(project_tuple({4}, {1, 1, 1}) == IndexTuple{4, 4, 4});
    CHECK_THROWS_AS(project_tuple({4}, {2}), BoundsError);
    CHECK(increasing_tuples(4, 2).size() == 6);
    CHECK(increasing_tuples(2, 3).empty());
    CHECK(all_tuples(3, 2).size() == 9);
    CHECK(all_tuples(3, 2).front() == IndexTuple{1, 1});
    CHECK(all_tuples(3, 2).back() == IndexTuple{3, 3});

    Shape s{2, 3, 2};
    for (std::size_t o = 0; o < s.cell_count(); ++o)
        CHECK(s.offset_of(s.index_at(o)) == o);
    CHECK(s.index_at(1) == IndexTuple{1, 1, 2});
}

TEST_CASE("contraction examples")
{
    CHECK(contract(vec({1, 2, 3}), vec({1, 1, 1}), 1) == IntTensor::scalar(6));
    CHECK(contract(matrix({{1, 0, 2}, {0, 1, 0}}), matrix({{1, 0}, {0, 1}, {1, 0}}), 1) == matrix({{3, 0}, {0, 1}}));
    CHECK(contract(IntTensor::scalar(2), vec({1, -1}), 0) == vec({2, -2}));
    CHECK(star(IntTensor::scalar(2), IntTensor::scalar(3)) == IntTensor::scalar(6));
    CHECK_THROWS_AS(contract(vec({1, 2}), vec({1, 2, 3}), 1), ShapeError);
}

TEST_CASE("projection tensors")
{
    auto all_one = projection_tensor(Shape{2, 2}, {});
    CHECK(all_one == all_one_tensor(Shape{2, 2}));

    auto transpose = projection_tensor(Shape{3, 3}, {2, 1});
    CHECK(contract(transpose, m3, 2) == matrix({{0, 1, 0}, {0, 0, 0}, {1, -1, 0}}));

    auto diagonal = projection_tensor(Shape{2}, {1, 1});
    CHECK(diagonal.shape() == Shape{2, 2, 2});
    for (auto & cell : oracle::cells(diagonal.shape()))
        CHECK(entry(diagonal, cell) == (cell[0] == cell[2] && cell[1] == cell[2] ? 1 : 0));

    CHECK_THROWS_AS(projection_tensor(Shape{2, 2}, {3}), BoundsError);
}

TEST_CASE("apply_projection examples")
{
    CHECK(apply_projection(matrix({{1, 2}, {3, 4}}), {}) == IntTensor::scalar(10));
    CHECK(apply_projection(m3, {1}) == vec({1, 0, 0}));
    CHECK(apply_projection(m3, {2}) == vec({1, 0, 0}));
    CHECK(apply_projection(m3, {2, 1}) == matrix({{0, 1, 0}, {0, 0, 0}, {1, -1, 0}}));
    CHECK(apply_projection(vec({1, 2}), {1, 1}) == matrix({{1, 0}, {0, 2}}));
    CHECK_THROWS_AS(apply_projection(m3, {3}), BoundsError);
}

TEST_CASE("checked arithmetic refuses to wrap")
{
    constexpr auto big = std::numeric_limits<Entry>::max();
    CHECK_THROWS_AS(checked_add(big, 1), OverflowError);
    CHECK_THROWS_AS(checked_mul(big, 2), OverflowError);
    CHECK_THROWS_AS(checked_sub(std::numeric_limits<Entry>::min(), 1), OverflowError);
    CHECK_THROWS_AS(apply_projection(vec({big, 1}), {}), OverflowError);
    CHECK(checked_add(big - 1, 1) == big);
}

TEST_CASE("projection lemmas on seeded random instances")
{
    Rng rng{20240611};
    for (int trial = 0; trial < 150; ++trial) {
        auto n = oracle::random_shape(rng, 4, 3, 1);
        int q = n.rank();
        auto t = random_tensor(rng, n, -4, 4);

        // The epsilon projection is all ones.
        auto eps = projection_tensor(n, {});
        CHECK(std::all_of(eps.entries().begin(), eps.entries().end(), [](Entry e) { return e == 1; }));

        auto i = oracle::random_tuple(rng, static_cast<int>(rng.uniform(0, 3)), q);
        int p = static_cast<int>(i.length());
        auto pi = projection_tensor(n, i);

        // Entry description: row a of the projection tensor is the sum of unit tensors with b_i = a.
        std::vector<int> cell(p);
        for (int x = 0; x < p; ++x)
            cell[x] = static_cast<int>(rng.uniform(1, n.size(i[x])));
        IndexTuple a{cell};
        std::vector<Entry> fiber(n.cell_count(), 0);
        for (auto & b : oracle::cells(n))
            if (project_tuple(b, i) == a)
                fiber[n.offset_of(b)] = 1;
        CHECK(contract(unit_tensor(n.project(i), a), pi, p) == IntTensor{n, fiber});

        // Fiber-sum application agrees with the materialised tensor and with the cell-by-cell oracle.
        CHECK(apply_projection(t, i) == contract(pi, t, q));
        CHECK(apply_projection(t, i) == oracle::projection(t, i));

        // Composition of projections is contraction of projection tensors.
        if (p > 0) {
            auto j = oracle::random_tuple(rng, static_cast<int>(rng.uniform(0, 3)), p);
            CHECK(projection_tensor(n, project_tuple(i, j))
                == contract(projection_tensor(n.project(i), j), pi, p));
        }

        CHECK(apply_projection(t, identity_tuple(q)) == t);
    }
}

TEST_CASE("contraction matches the definition and is associative")
{
    Rng rng{77};
    for (int trial = 0; trial < 150; ++trial) {
        auto a = oracle::random_shape(rng, 2, 3);
        auto b = oracle::random_shape(rng, 2, 3);
        auto c = oracle::random_shape(rng, 1, 3);
        auto d = oracle::random_shape(rng, 2, 3);
        auto e = oracle::random_shape(rng, 2, 3);
        auto t = random_tensor(rng, a.concat(b), -3, 3);
        auto u = random_tensor(rng, b.concat(c).concat(d), -3, 3);
        auto v = random_tensor(rng, d.concat(e), -3, 3);
        int l = b.rank(), m = d.rank();

        CHECK(contract(t, u, l) == oracle::contraction(t, u, l));
        CHECK(contract(contract(t, u, l), v, m) == contract(t, contract(u, v, m), l));
    }
}

TEST_CASE("star folds from the left")
{
    auto x = vec({1, 2});
    auto y = matrix({{1, 1}, {0, 1}});
    CHECK(star({x, y, x}) == star(star(x, y), x));
    CHECK(star({x, y, x}) == IntTensor::scalar(7));
}
