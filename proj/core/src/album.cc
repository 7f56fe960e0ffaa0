#include <crystals/album.hh>

#include <algorithm>

using std::map;
using std::optional;
using std::size_t;
using std::string;
using std::vector;

namespace crystals
{
    using std::to_string;

    Album::Album(int p, Shape modes, map<IndexTuple, IntTensor> pictures) :
        _p(p),
        _modes(std::move(modes)),
        _pictures(std::move(pictures))
    {
        if (_p < 1)
            throw ArgumentError("album picture dimension must be at least 1, got " + to_string(_p));

        auto expected = increasing_tuples(q(), _p);
        if (expected.size() != _pictures.size())
            throw StructureError("a (" + to_string(_p) + "," + _modes.to_string() + ")-album needs "
                + to_string(expected.size()) + " pictures, got " + to_string(_pictures.size()));

        for (const auto & i : expected) {
            auto it = _pictures.find(i);
            if (it == _pictures.end())
                throw StructureError("album is missing the picture for axes " + i.to_string());
            if (it->second.shape() != _modes.project(i))
                throw StructureError("picture " + i.to_string() + " has shape " + it->second.shape().to_string()
                    + ", expected " + _modes.project(i).to_string());
        }
    }

    auto Album::picture(const IndexTuple & i) const -> const IntTensor &
    {
        auto it = _pictures.find(i);
        if (it == _pictures.end())
            throw BoundsError("no picture for axes " + i.to_string());
        return it->second;
    }

    auto RealismViolation::to_string() const -> string
    {
        return "i=" + i.to_string() + " j=" + j.to_string() + " r=" + r.to_string() + " s=" + s.to_string();
    }

    RealismError::RealismError(const RealismViolation & v) :
        Error("album is not realistic: pictures disagree at " + v.to_string()),
        _violation(v)
    {
    }

    auto is_realistic(const Album & album) -> RealismCheck
    {
        struct View
        {
            IndexTuple i, r;
            IntTensor picture;
        };

        auto views = increasing_tuples(album.p(), album.p() - 1);
        map<IndexTuple, View> seen;
        for (const auto & [i, c] : album.pictures())
            for (const auto & r : views) {
                auto key = project_tuple(i, r);
                auto projected = apply_projection(c, r);
                auto it = seen.find(key);
                if (it == seen.end())
                    seen.emplace(key, View{i, r, std::move(projected)});
                else if (it->second.picture != projected)
                    return RealismCheck{false, RealismViolation{it->second.i, i, it->second.r, r}};
            }
        return RealismCheck{true, std::nullopt};
    }

    auto album_from_tensor(const IntTensor & t, int p) -> Album
    {
        map<IndexTuple, IntTensor> pictures;
        for (auto & i : increasing_tuples(t.rank(), p))
            pictures.emplace(i, apply_projection(t, i));
        return Album{p, t.shape(), std::move(pictures)};
    }

    namespace
    {
        auto validate_permutation(const IndexTuple & l, int q) -> void
        {
            if (l.length() != static_cast<size_t>(q) || l.distinct_count() != static_cast<size_t>(q))
                throw ArgumentError(l.to_string() + " is not a permutation of " + to_string(q) + " modes");
            for (auto v : l.entries())
                if (v > q)
                    throw ArgumentError(l.to_string() + " is not a permutation of " + to_string(q) + " modes");
        }

        auto inverse_permutation(const IndexTuple & l) -> IndexTuple
        {
            vector<int> inv(l.length());
            for (size_t m = 0; m < l.length(); ++m)
                inv[l[m] - 1] = static_cast<int>(m) + 1;
            return IndexTuple{std::move(inv)};
        }

        auto transposition(int q, int a, int b) -> IndexTuple
        {
            auto e = identity_tuple(q).entries();
            std::swap(e[a - 1], e[b - 1]);
            return IndexTuple{std::move(e)};
        }

        /// The slice of t whose last coordinate is `index` (1-based).
        auto last_slice(const IntTensor & t, int index) -> IntTensor
        {
            int last = t.shape().size(t.rank());
            auto slice_shape = t.shape().first_modes(t.rank() - 1);
            vector<Entry> e(slice_shape.cell_count());
            for (size_t a = 0; a < e.size(); ++a)
                e[a] = t.at_offset(a * last + (index - 1));
            return IntTensor{slice_shape, std::move(e)};
        }

        /// t with the last slice of its last mode removed.
        auto drop_last_slice(const IntTensor & t) -> IntTensor
        {
            auto sizes = t.shape().sizes();
            int last = sizes.back();
            sizes.back() = last - 1;
            Shape reduced{sizes};
            vector<Entry> e(reduced.cell_count());
            size_t rows = reduced.cell_count() / (last - 1);
            for (size_t a = 0; a < rows; ++a)
                for (int c = 0; c < last - 1; ++c)
                    e[a * (last - 1) + c] = t.at_offset(a * last + c);
            return IntTensor{reduced, std::move(e)};
        }

        /// Shape `modes`: `slice` on the last slice of the last mode, `rest` elsewhere.
        auto glue(const Shape & modes, const IntTensor & slice, const IntTensor & rest) -> IntTensor
        {
            int last = modes.size(modes.rank());
            size_t rows = modes.cell_count() / last;
            if (slice.shape() != modes.first_modes(modes.rank() - 1) || rest.entries().size() != rows * (last - 1))
                throw ShapeError("cannot glue " + slice.shape().to_string() + " and " + rest.shape().to_string()
                    + " into " + modes.to_string());
            vector<Entry> e(modes.cell_count());
            for (size_t a = 0; a < rows; ++a) {
                for (int c = 0; c < last - 1; ++c)
                    e[a * last + c] = rest.at_offset(a * (last - 1) + c);
                e[a * last + last - 1] = slice.at_offset(a);
            }
            return IntTensor{modes, std::move(e)};
        }

        auto peel_slice(const Shape & modes, Entry value) -> IntTensor
        {
            auto slice_shape = modes.first_modes(modes.rank() - 1);
            vector<Entry> e(slice_shape.cell_count(), 0);
            e.back() = value;
            return IntTensor{slice_shape, std::move(e)};
        }

        auto constant_tensor(const Shape & modes, Entry value) -> IntTensor
        {
            return IntTensor{modes, vector<Entry>(modes.cell_count(), value)};
        }

        auto all_unit(const Shape & modes) -> bool
        {
            return std::all_of(modes.sizes().begin(), modes.sizes().end(), [](int s) { return s == 1; });
        }

        auto realize_impl(const Album & album, RealizationTrace & trace) -> IntTensor;

        auto realize_rotated(const Album & album, RealizationTrace & trace) -> IntTensor
        {
            int q = album.q(), m = q - 1;
            while (album.modes().size(m) == 1)
                --m;
            auto l = transposition(q, m, q);
            auto rotated = realize_impl(rotate_album(album, l), trace);
            trace.steps.push_back(TraceStep{"rotate", album.modes(), 0, l, {}});
            return unrotate_tensor(rotated, l);
        }

        auto realize_peel(const Album & album, RealizationTrace & trace) -> IntTensor
        {
            int q = album.q();
            const auto & modes = album.modes();
            const auto & last_picture = album.picture(IndexTuple{q});
            Entry value = last_picture.entries().back();

            auto reduced_sizes = modes.sizes();
            --reduced_sizes.back();
            Shape reduced{reduced_sizes};

            map<IndexTuple, IntTensor> pictures;
            for (int i = 1; i < q; ++i) {
                auto c = album.picture(IndexTuple{i}).entry_vector();
                c.back() = checked_sub(c.back(), value);
                pictures.emplace(IndexTuple{i}, IntTensor{Shape{modes.size(i)}, std::move(c)});
            }
            pictures.emplace(IndexTuple{q}, drop_last_slice(last_picture));

            auto rest = realize_impl(Album{1, reduced, std::move(pictures)}, trace);
            trace.steps.push_back(TraceStep{"peel", modes, value, {}, {}});
            return glue(modes, peel_slice(modes, value), rest);
        }

        auto realize_slice(const Album & album, RealizationTrace & trace) -> IntTensor
        {
            int p = album.p(), q = album.q();
            const auto & modes = album.modes();
            int last = modes.size(q);
            auto head = modes.first_modes(q - 1);

            map<IndexTuple, IntTensor> top_pictures;
            for (auto & i : increasing_tuples(q - 1, p - 1))
                top_pictures.emplace(i, last_slice(album.picture(i.concat(IndexTuple{q})), last));
            auto top = realize_impl(Album{p - 1, head, std::move(top_pictures)}, trace);

            auto reduced_sizes = modes.sizes();
            --reduced_sizes.back();
            Shape reduced{reduced_sizes};

            map<IndexTuple, IntTensor> rest_pictures;
            for (auto & i : increasing_tuples(q, p)) {
                const auto & c = album.picture(i);
                if (i[p - 1] != q)
                    rest_pictures.emplace(i, subtract(c, apply_projection(top, i)));
                else
                    rest_pictures.emplace(i, drop_last_slice(c));
            }
            auto rest = realize_impl(Album{p, reduced, std::move(rest_pictures)}, trace);

            trace.steps.push_back(TraceStep{"glue", modes, 0, {}, {}});
            return glue(modes, top, rest);
        }

        auto realize_impl(const Album & album, RealizationTrace & trace) -> IntTensor
        {
            const auto & modes = album.modes();
            if (album.p() > album.q()) {
                trace.steps.push_back(TraceStep{"zero", modes, 0, {}, {}});
                return IntTensor{modes};
            }
            if (all_unit(modes)) {
                Entry value = album.pictures().begin()->second.entries().front();
                trace.steps.push_back(TraceStep{"base", modes, value, {}, {}});
                return constant_tensor(modes, value);
            }
            if (album.q() == 1) {
                const auto & c = album.picture(IndexTuple{1});
                trace.steps.push_back(TraceStep{"vector", modes, 0, {}, c.entry_vector()});
                return c;
            }
            if (modes.size(album.q()) == 1)
                return realize_rotated(album, trace);
            if (album.p() == 1)
                return realize_peel(album, trace);
            return realize_slice(album, trace);
        }

        auto require_realistic(const Album & album) -> void
        {
            auto check = is_realistic(album);
            if (! check.realistic)
                throw RealismError(*check.violation);
        }
    }

    auto rotate_album(const Album & album, const IndexTuple & l) -> Album
    {
        int p = album.p(), q = album.q();
        validate_permutation(l, q);

        map<IndexTuple, IntTensor> pictures;
        for (auto & i : increasing_tuples(q, p)) {
            auto original = project_tuple(l, i);
            auto sorted = original.entries();
            std::sort(sorted.begin(), sorted.end());
            vector<int> back(p);
            for (int t = 0; t < p; ++t)
                back[t] = static_cast<int>(std::find(sorted.begin(), sorted.end(), original[t]) - sorted.begin()) + 1;
            pictures.emplace(i, apply_projection(album.picture(IndexTuple{sorted}), IndexTuple{back}));
        }
        return Album{p, album.modes().project(l), std::move(pictures)};
    }

    auto unrotate_tensor(const IntTensor & rotated, const IndexTuple & l) -> IntTensor
    {
        validate_permutation(l, rotated.rank());
        return apply_projection(rotated, inverse_permutation(l));
    }

    auto realize_unit_shape(const Album & album) -> IntTensor
    {
        if (! all_unit(album.modes()))
            throw ArgumentError("album modes " + album.modes().to_string() + " are not all of size one");
        require_realistic(album);
        RealizationTrace trace;
        return realize_impl(album, trace);
    }

    auto realize_vectors(const Album & album) -> IntTensor
    {
        if (album.p() != 1)
            throw ArgumentError("expected one-dimensional pictures, got p = " + to_string(album.p()));
        require_realistic(album);
        RealizationTrace trace;
        return realize_impl(album, trace);
    }

    auto realize(const Album & album) -> Realization
    {
        require_realistic(album);
        RealizationTrace trace;
        auto tensor = realize_impl(album, trace);
        return Realization{std::move(tensor), std::move(trace)};
    }

    auto replay(const RealizationTrace & trace) -> IntTensor
    {
        vector<IntTensor> stack;
        auto pop = [&](const string & op) {
            if (stack.empty())
                throw StructureError("trace step '" + op + "' has nothing to consume");
            auto t = std::move(stack.back());
            stack.pop_back();
            return t;
        };

        for (const auto & step : trace.steps) {
            if (step.op == "zero")
                stack.emplace_back(step.modes);
            else if (step.op == "base")
                stack.push_back(constant_tensor(step.modes, step.value));
            else if (step.op == "vector")
                stack.emplace_back(step.modes, step.entries);
            else if (step.op == "peel") {
                auto rest = pop(step.op);
                stack.push_back(glue(step.modes, peel_slice(step.modes, step.value), rest));
            }
            else if (step.op == "glue") {
                auto rest = pop(step.op);
                auto top = pop(step.op);
                stack.push_back(glue(step.modes, top, rest));
            }
            else if (step.op == "rotate") {
                auto rotated = pop(step.op);
                stack.push_back(unrotate_tensor(rotated, step.tuple));
            }
            else
                throw StructureError("unknown trace step '" + step.op + "'");
        }

        if (stack.size() != 1)
            throw StructureError("trace leaves " + to_string(stack.size()) + " tensors on the stack");
        return stack.back();
    }

    namespace
    {
        auto require_square(const IntTensor & m) -> int
        {
            if (m.rank() != 2 || m.shape().size(1) != m.shape().size(2))
                throw ShapeError("expected a square matrix, got shape " + m.shape().to_string());
            return m.shape().size(1);
        }
    }

    auto mine_crystal(const IntTensor & m, int q) -> IntTensor
    {
        int n = require_square(m);
        if (q < 2)
            throw ArgumentError("crystal dimension must be at least 2, got " + to_string(q));
        if (apply_projection(m, IndexTuple{1}) != apply_projection(m, IndexTuple{2}))
            throw BalanceError("row sums " + to_string(apply_projection(m, IndexTuple{1})) + " differ from column sums "
                + to_string(apply_projection(m, IndexTuple{2})));

        map<IndexTuple, IntTensor> pictures;
        for (auto & i : increasing_tuples(q, 2))
            pictures.emplace(i, m);
        return realize(Album{2, Shape::cubical(n, q), std::move(pictures)}).tensor;
    }

    auto verify_crystal(const IntTensor & c, const IntTensor & m) -> bool
    {
        int n = require_square(m);
        if (c.shape() != Shape::cubical(n, c.rank()))
            throw ShapeError("crystal shape " + c.shape().to_string() + " is not cubical of size " + to_string(n));
        for (auto & i : increasing_tuples(c.rank(), 2))
            if (apply_projection(c, i) != m)
                return false;
        return true;
    }
}
