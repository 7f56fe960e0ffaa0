#include <crystals/tensor.hh>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

using std::size_t;
using std::string;
using std::vector;

namespace crystals
{
    using std::to_string;

    auto checked_add(Entry a, Entry b) -> Entry
    {
        Entry r;
        if (__builtin_add_overflow(a, b, &r))
            throw OverflowError("integer addition " + to_string(a) + " + " + to_string(b));
        return r;
    }

    auto checked_sub(Entry a, Entry b) -> Entry
    {
        Entry r;
        if (__builtin_sub_overflow(a, b, &r))
            throw OverflowError("integer subtraction " + to_string(a) + " - " + to_string(b));
        return r;
    }

    auto checked_mul(Entry a, Entry b) -> Entry
    {
        Entry r;
        if (__builtin_mul_overflow(a, b, &r))
            throw OverflowError("integer multiplication " + to_string(a) + " * " + to_string(b));
        return r;
    }

    IndexTuple::IndexTuple(vector<int> entries) :
        _entries(std::move(entries))
    {
        for (auto e : _entries)
            if (e < 1)
                throw BoundsError("index tuple entries are 1-based, got " + std::to_string(e));
    }

    IndexTuple::IndexTuple(std::initializer_list<int> entries) :
        IndexTuple(vector<int>(entries))
    {
    }

    auto IndexTuple::is_increasing() const -> bool
    {
        for (size_t j = 1; j < _entries.size(); ++j)
            if (_entries[j - 1] >= _entries[j])
                return false;
        return true;
    }

    auto IndexTuple::distinct_count() const -> size_t
    {
        return std::set<int>(_entries.begin(), _entries.end()).size();
    }

    auto IndexTuple::concat(const IndexTuple & other) const -> IndexTuple
    {
        vector<int> result = _entries;
        result.insert(result.end(), other._entries.begin(), other._entries.end());
        return IndexTuple{std::move(result)};
    }

    auto IndexTuple::to_string() const -> string
    {
        string s = "(";
        for (size_t j = 0; j < _entries.size(); ++j) {
            if (j > 0)
                s += ",";
            s += std::to_string(_entries[j]);
        }
        return s + ")";
    }

    auto identity_tuple(int q) -> IndexTuple
    {
        vector<int> e(std::max(q, 0));
        std::iota(e.begin(), e.end(), 1);
        return IndexTuple{std::move(e)};
    }

    auto increasing_tuples(int q, int p) -> vector<IndexTuple>
    {
        vector<IndexTuple> result;
        if (p < 0 || p > q)
            return result;
        vector<int> current(p);
        std::iota(current.begin(), current.end(), 1);
        while (true) {
            result.emplace_back(current);
            int pos = p - 1;
            while (pos >= 0 && current[pos] == q - (p - 1 - pos))
                --pos;
            if (pos < 0)
                break;
            ++current[pos];
            for (int j = pos + 1; j < p; ++j)
                current[j] = current[j - 1] + 1;
        }
        return result;
    }

    auto all_tuples(int q, int p) -> vector<IndexTuple>
    {
        vector<IndexTuple> result;
        if (p < 0 || (q < 1 && p > 0))
            return result;
        IndexTuple b{vector<int>(p, 1)};
        auto shape = Shape::cubical(std::max(q, 1), p);
        do
            result.push_back(b);
        while (next_index(b, shape));
        return result;
    }

    auto project_tuple(const IndexTuple & b, const IndexTuple & i) -> IndexTuple
    {
        vector<int> result;
        result.reserve(i.length());
        for (auto pos : i.entries()) {
            if (pos < 1 || static_cast<size_t>(pos) > b.length())
                throw BoundsError("position " + to_string(pos) + " outside tuple " + b.to_string());
            result.push_back(b[pos - 1]);
        }
        return IndexTuple{std::move(result)};
    }

    Shape::Shape(vector<int> sizes) :
        _sizes(std::move(sizes))
    {
        for (auto s : _sizes)
            if (s < 1)
                throw ShapeError("mode sizes must be positive, got " + std::to_string(s));
    }

    Shape::Shape(std::initializer_list<int> sizes) :
        Shape(vector<int>(sizes))
    {
    }

    auto Shape::cubical(int n, int q) -> Shape
    {
        return Shape{vector<int>(std::max(q, 0), n)};
    }

    auto Shape::size(int mode) const -> int
    {
        if (mode < 1 || mode > rank())
            throw BoundsError("mode " + std::to_string(mode) + " outside shape " + to_string());
        return _sizes[mode - 1];
    }

    auto Shape::cell_count() const -> size_t
    {
        size_t count = 1;
        for (auto s : _sizes)
            count *= static_cast<size_t>(s);
        return count;
    }

    auto Shape::contains(const IndexTuple & b) const -> bool
    {
        if (b.length() != _sizes.size())
            return false;
        for (size_t j = 0; j < _sizes.size(); ++j)
            if (b[j] < 1 || b[j] > _sizes[j])
                return false;
        return true;
    }

    auto Shape::offset_of(const IndexTuple & b) const -> size_t
    {
        if (! contains(b))
            throw BoundsError("index " + b.to_string() + " outside shape " + to_string());
        size_t offset = 0;
        for (size_t j = 0; j < _sizes.size(); ++j)
            offset = offset * _sizes[j] + (b[j] - 1);
        return offset;
    }

    auto Shape::index_at(size_t offset) const -> IndexTuple
    {
        if (offset >= cell_count())
            throw BoundsError("offset " + std::to_string(offset) + " outside shape " + to_string());
        vector<int> b(_sizes.size());
        for (size_t j = _sizes.size(); j-- > 0;) {
            b[j] = static_cast<int>(offset % _sizes[j]) + 1;
            offset /= _sizes[j];
        }
        return IndexTuple{std::move(b)};
    }

    auto Shape::project(const IndexTuple & i) const -> Shape
    {
        vector<int> result;
        result.reserve(i.length());
        for (auto mode : i.entries())
            result.push_back(size(mode));
        return Shape{std::move(result)};
    }

    auto Shape::concat(const Shape & other) const -> Shape
    {
        vector<int> result = _sizes;
        result.insert(result.end(), other._sizes.begin(), other._sizes.end());
        return Shape{std::move(result)};
    }

    auto Shape::first_modes(int count) const -> Shape
    {
        if (count < 0 || count > rank())
            throw ShapeError("cannot take " + std::to_string(count) + " modes of " + to_string());
        return Shape{vector<int>(_sizes.begin(), _sizes.begin() + count)};
    }

    auto Shape::last_modes(int count) const -> Shape
    {
        if (count < 0 || count > rank())
            throw ShapeError("cannot take " + std::to_string(count) + " modes of " + to_string());
        return Shape{vector<int>(_sizes.end() - count, _sizes.end())};
    }

    auto Shape::is_cubical() const -> bool
    {
        return std::adjacent_find(_sizes.begin(), _sizes.end(), std::not_equal_to<>()) == _sizes.end();
    }

    auto Shape::to_string() const -> string
    {
        string s = "[";
        for (size_t j = 0; j < _sizes.size(); ++j) {
            if (j > 0)
                s += ",";
            s += std::to_string(_sizes[j]);
        }
        return s + "]";
    }

    auto next_index(IndexTuple & b, const Shape & shape) -> bool
    {
        vector<int> e = b.entries();
        for (int j = shape.rank() - 1; j >= 0; --j) {
            if (e[j] < shape.sizes()[j]) {
                ++e[j];
                b = IndexTuple{std::move(e)};
                return true;
            }
            e[j] = 1;
        }
        b = IndexTuple{std::move(e)};
        return false;
    }

    IntTensor::IntTensor() :
        _entries(1, 0)
    {
    }

    IntTensor::IntTensor(Shape shape) :
        _shape(std::move(shape)),
        _entries(_shape.cell_count(), 0)
    {
    }

    IntTensor::IntTensor(Shape shape, vector<Entry> entries) :
        _shape(std::move(shape)),
        _entries(std::move(entries))
    {
        if (_entries.size() != _shape.cell_count())
            throw ShapeError("shape " + _shape.to_string() + " has " + std::to_string(_shape.cell_count())
                + " cells but " + std::to_string(_entries.size()) + " entries were given");
    }

    auto IntTensor::scalar(Entry value) -> IntTensor
    {
        return IntTensor{Shape{}, {value}};
    }

    auto entry(const IntTensor & t, const IndexTuple & b) -> Entry
    {
        return t.at_offset(t.shape().offset_of(b));
    }

    auto unit_tensor(const Shape & shape, const IndexTuple & i) -> IntTensor
    {
        vector<Entry> e(shape.cell_count(), 0);
        e[shape.offset_of(i)] = 1;
        return IntTensor{shape, std::move(e)};
    }

    auto all_one_tensor(const Shape & shape) -> IntTensor
    {
        return IntTensor{shape, vector<Entry>(shape.cell_count(), 1)};
    }

    auto contract(const IntTensor & t, const IntTensor & u, int shared) -> IntTensor
    {
        if (shared < 0 || shared > t.rank() || shared > u.rank())
            throw ShapeError("cannot contract " + std::to_string(shared) + " modes of " + t.shape().to_string()
                + " and " + u.shape().to_string());
        auto left = t.shape().first_modes(t.rank() - shared);
        auto middle = t.shape().last_modes(shared);
        auto right = u.shape().last_modes(u.rank() - shared);
        if (middle != u.shape().first_modes(shared))
            throw ShapeError("shared modes " + middle.to_string() + " of " + t.shape().to_string()
                + " do not lead " + u.shape().to_string());

        size_t na = left.cell_count(), nz = middle.cell_count(), nb = right.cell_count();
        auto te = t.entries(), ue = u.entries();
        vector<Entry> result(na * nb, 0);
        for (size_t a = 0; a < na; ++a)
            for (size_t z = 0; z < nz; ++z) {
                Entry tv = te[a * nz + z];
                if (tv == 0)
                    continue;
                for (size_t b = 0; b < nb; ++b)
                    if (ue[z * nb + b] != 0)
                        result[a * nb + b] = checked_add(result[a * nb + b], checked_mul(tv, ue[z * nb + b]));
            }
        return IntTensor{left.concat(right), std::move(result)};
    }

    auto star(const IntTensor & t, const IntTensor & u) -> IntTensor
    {
        return contract(t, u, std::min(t.rank(), u.rank()));
    }

    auto star(std::initializer_list<IntTensor> operands) -> IntTensor
    {
        if (operands.size() == 0)
            throw ArgumentError("empty contraction chain");
        auto it = operands.begin();
        IntTensor result = *it++;
        for (; it != operands.end(); ++it)
            result = star(result, *it);
        return result;
    }

    namespace
    {
        /// For each source mode, the stride it contributes in the projected tensor.
        auto projected_coefficients(const Shape & n, const IndexTuple & i) -> vector<size_t>
        {
            auto target = n.project(i);
            vector<size_t> target_stride(i.length(), 1);
            for (size_t j = i.length(); j-- > 1;)
                target_stride[j - 1] = target_stride[j] * target.sizes()[j];
            vector<size_t> coeff(n.rank(), 0);
            for (size_t j = 0; j < i.length(); ++j)
                coeff[i[j] - 1] += target_stride[j];
            return coeff;
        }

        /// Calls f(source offset, projected offset) for every cell of n.
        template <typename F_>
        auto for_each_projected(const Shape & n, const vector<size_t> & coeff, F_ && f) -> void
        {
            const auto & sizes = n.sizes();
            vector<int> counter(sizes.size(), 0);
            size_t cells = n.cell_count(), projected = 0;
            for (size_t source = 0; source < cells; ++source) {
                f(source, projected);
                for (size_t j = sizes.size(); j-- > 0;) {
                    if (++counter[j] < sizes[j]) {
                        projected += coeff[j];
                        break;
                    }
                    projected -= coeff[j] * (sizes[j] - 1);
                    counter[j] = 0;
                }
            }
        }
    }

    auto projection_tensor(const Shape & n, const IndexTuple & i) -> IntTensor
    {
        auto target = n.project(i);
        auto coeff = projected_coefficients(n, i);
        size_t cells = n.cell_count();
        vector<Entry> e(target.cell_count() * cells, 0);
        for_each_projected(n, coeff, [&](size_t b, size_t a) { e[a * cells + b] = 1; });
        return IntTensor{target.concat(n), std::move(e)};
    }

    auto apply_projection(const IntTensor & t, const IndexTuple & i) -> IntTensor
    {
        auto target = t.shape().project(i);
        auto coeff = projected_coefficients(t.shape(), i);
        vector<Entry> e(target.cell_count(), 0);
        auto te = t.entries();
        for_each_projected(t.shape(), coeff, [&](size_t b, size_t a) {
            if (te[b] != 0)
                e[a] = checked_add(e[a], te[b]);
        });
        return IntTensor{target, std::move(e)};
    }

    auto sum_entries(const IntTensor & t) -> Entry
    {
        Entry s = 0;
        for (auto v : t.entries())
            s = checked_add(s, v);
        return s;
    }

    auto add(const IntTensor & a, const IntTensor & b) -> IntTensor
    {
        if (a.shape() != b.shape())
            throw ShapeError("cannot add " + a.shape().to_string() + " and " + b.shape().to_string());
        vector<Entry> e(a.entries().size());
        for (size_t j = 0; j < e.size(); ++j)
            e[j] = checked_add(a.at_offset(j), b.at_offset(j));
        return IntTensor{a.shape(), std::move(e)};
    }

    auto subtract(const IntTensor & a, const IntTensor & b) -> IntTensor
    {
        if (a.shape() != b.shape())
            throw ShapeError("cannot subtract " + b.shape().to_string() + " from " + a.shape().to_string());
        vector<Entry> e(a.entries().size());
        for (size_t j = 0; j < e.size(); ++j)
            e[j] = checked_sub(a.at_offset(j), b.at_offset(j));
        return IntTensor{a.shape(), std::move(e)};
    }

    auto scale(Entry factor, const IntTensor & t) -> IntTensor
    {
        vector<Entry> e(t.entries().size());
        for (size_t j = 0; j < e.size(); ++j)
            e[j] = checked_mul(factor, t.at_offset(j));
        return IntTensor{t.shape(), std::move(e)};
    }

    auto to_string(const IntTensor & t) -> string
    {
        std::ostringstream s;
        s << "T" << t.shape().to_string() << "{";
        for (size_t j = 0; j < t.entries().size(); ++j)
            s << (j ? "," : "") << t.at_offset(j);
        s << "}";
        return s.str();
    }
}
