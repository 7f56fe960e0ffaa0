#ifndef CRYSTALS_GUARD_CRYSTALS_TENSOR_HH
#define CRYSTALS_GUARD_CRYSTALS_TENSOR_HH 1

#include <crystals/errors.hh>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace crystals
{
    using Entry = std::int64_t;

    auto checked_add(Entry a, Entry b) -> Entry;
    auto checked_sub(Entry a, Entry b) -> Entry;
    auto checked_mul(Entry a, Entry b) -> Entry;

    /**
     * A tuple of positive integers. Depending on context the entries are
     * either coordinates of a cell (1-based, bounded by a Shape) or mode
     * positions (1-based, bounded by a mode count). The empty tuple plays the
     * role of epsilon.
     */
    class IndexTuple
    {
    private:
        std::vector<int> _entries;

    public:
        IndexTuple() = default;
        explicit IndexTuple(std::vector<int> entries);
        IndexTuple(std::initializer_list<int> entries);

        auto length() const -> std::size_t { return _entries.size(); }
        auto empty() const -> bool { return _entries.empty(); }

        /// Zero-based array access; the stored values keep their 1-based meaning.
        auto operator[](std::size_t pos) const -> int { return _entries[pos]; }
        auto entries() const -> const std::vector<int> & { return _entries; }

        auto is_increasing() const -> bool;

        /// Number of distinct values appearing in the tuple.
        auto distinct_count() const -> std::size_t;

        auto concat(const IndexTuple & other) const -> IndexTuple;
        auto to_string() const -> std::string;

        auto operator<=>(const IndexTuple &) const = default;
        auto operator==(const IndexTuple &) const -> bool = default;
    };

    /// The tuple (1, ..., q); epsilon for q = 0.
    auto identity_tuple(int q) -> IndexTuple;

    /// All strictly increasing tuples in [q]^p, lexicographically. {epsilon} for p = 0.
    auto increasing_tuples(int q, int p) -> std::vector<IndexTuple>;

    /// All tuples in [q]^p, lexicographically.
    auto all_tuples(int q, int p) -> std::vector<IndexTuple>;

    /// (b_{i_1}, ..., b_{i_p}); positions in i are 1-based.
    auto project_tuple(const IndexTuple & b, const IndexTuple & i) -> IndexTuple;

    class Shape
    {
    private:
        std::vector<int> _sizes;

    public:
        /// The scalar shape (no modes).
        Shape() = default;
        explicit Shape(std::vector<int> sizes);
        Shape(std::initializer_list<int> sizes);

        /// n * 1_q
        static auto cubical(int n, int q) -> Shape;

        auto rank() const -> int { return static_cast<int>(_sizes.size()); }

        /// Size of the 1-based mode.
        auto size(int mode) const -> int;
        auto sizes() const -> const std::vector<int> & { return _sizes; }
        auto cell_count() const -> std::size_t;

        auto contains(const IndexTuple & b) const -> bool;

        /// Row-major offset of a validated cell; throws BoundsError otherwise.
        auto offset_of(const IndexTuple & b) const -> std::size_t;
        auto index_at(std::size_t offset) const -> IndexTuple;

        /// n_i, the sizes of the modes selected by i.
        auto project(const IndexTuple & i) const -> Shape;
        auto concat(const Shape & other) const -> Shape;

        /// Prefix and suffix of the mode list.
        auto first_modes(int count) const -> Shape;
        auto last_modes(int count) const -> Shape;

        auto is_cubical() const -> bool;
        auto to_string() const -> std::string;

        auto operator==(const Shape &) const -> bool = default;
    };

    /// Steps b to the lexicographic successor within shape; false once exhausted.
    auto next_index(IndexTuple & b, const Shape & shape) -> bool;

    /**
     * A dense integer tensor in row-major order (first mode slowest). Values
     * are immutable once constructed; algorithms assemble an entry vector and
     * move it in.
     */
    class IntTensor
    {
    private:
        Shape _shape;
        std::vector<Entry> _entries;

    public:
        /// The scalar zero.
        IntTensor();
        explicit IntTensor(Shape shape);
        IntTensor(Shape shape, std::vector<Entry> entries);

        static auto scalar(Entry value) -> IntTensor;

        auto shape() const -> const Shape & { return _shape; }
        auto rank() const -> int { return _shape.rank(); }
        auto entries() const -> std::span<const Entry> { return _entries; }
        auto entry_vector() const -> const std::vector<Entry> & { return _entries; }
        auto at_offset(std::size_t offset) const -> Entry { return _entries[offset]; }

        auto operator==(const IntTensor &) const -> bool = default;
    };

    /// t_b.
    auto entry(const IntTensor & t, const IndexTuple & b) -> Entry;

    auto unit_tensor(const Shape & shape, const IndexTuple & i) -> IntTensor;

    auto all_one_tensor(const Shape & shape) -> IntTensor;

    /**
     * Contracts the last `shared` modes of t against the first `shared`
     * modes of u. With shared = 0 this is the outer product.
     */
    auto contract(const IntTensor & t, const IntTensor & u, int shared) -> IntTensor;

    /**
     * The contraction written without a mode count: it sums over all modes of
     * whichever operand has fewer of them. Chains are folded left to right.
     */
    auto star(const IntTensor & t, const IntTensor & u) -> IntTensor;
    auto star(std::initializer_list<IntTensor> operands) -> IntTensor;

    /// The projection operator for n and i, of shape (n_i, n).
    auto projection_tensor(const Shape & n, const IndexTuple & i) -> IntTensor;

    /**
     * Equivalent to contract(projection_tensor(t.shape(), i), t, q), computed
     * by fiber summation: entry a of the result is the sum of t_b over b with
     * b_i = a. Repeated positions in i are allowed.
     */
    auto apply_projection(const IntTensor & t, const IndexTuple & i) -> IntTensor;

    auto sum_entries(const IntTensor & t) -> Entry;
    auto add(const IntTensor & a, const IntTensor & b) -> IntTensor;
    auto subtract(const IntTensor & a, const IntTensor & b) -> IntTensor;
    auto scale(Entry factor, const IntTensor & t) -> IntTensor;

    auto to_string(const IntTensor & t) -> std::string;
}

#endif
