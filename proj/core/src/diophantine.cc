#include <crystals/diophantine.hh>

#include <algorithm>
#include <string>

using std::pair;
using std::size_t;
using std::vector;

namespace crystals
{
    using std::to_string;

    BigMatrix::BigMatrix(size_t rows, size_t cols) :
        _rows(rows),
        _cols(cols),
        _entries(rows * cols)
    {
    }

    BigMatrix::BigMatrix(size_t rows, size_t cols, vector<BigInt> entries) :
        _rows(rows),
        _cols(cols),
        _entries(std::move(entries))
    {
        if (_entries.size() != rows * cols)
            throw ShapeError("a " + to_string(rows) + "x" + to_string(cols) + " matrix needs " + to_string(rows * cols)
                + " entries, got " + to_string(_entries.size()));
    }

    BigMatrix::BigMatrix(std::initializer_list<std::initializer_list<long>> rows) :
        _rows(rows.size()),
        _cols(rows.size() ? rows.begin()->size() : 0)
    {
        for (auto & row : rows) {
            if (row.size() != _cols)
                throw ShapeError("ragged matrix literal");
            for (auto v : row)
                _entries.emplace_back(v);
        }
    }

    auto BigMatrix::identity(size_t n) -> BigMatrix
    {
        BigMatrix m(n, n);
        for (size_t j = 0; j < n; ++j)
            m(j, j) = 1;
        return m;
    }

    auto BigMatrix::column(size_t c) const -> BigVector
    {
        BigVector v(_rows);
        for (size_t r = 0; r < _rows; ++r)
            v[r] = (*this)(r, c);
        return v;
    }

    auto multiply(const BigMatrix & a, const BigMatrix & b) -> BigMatrix
    {
        if (a.cols() != b.rows())
            throw ShapeError("cannot multiply " + to_string(a.rows()) + "x" + to_string(a.cols()) + " by "
                + to_string(b.rows()) + "x" + to_string(b.cols()));
        BigMatrix c(a.rows(), b.cols());
        for (size_t r = 0; r < a.rows(); ++r)
            for (size_t k = 0; k < a.cols(); ++k) {
                if (sgn(a(r, k)) == 0)
                    continue;
                for (size_t j = 0; j < b.cols(); ++j)
                    c(r, j) += a(r, k) * b(k, j);
            }
        return c;
    }

    auto multiply(const BigMatrix & a, const BigVector & x) -> BigVector
    {
        if (a.cols() != x.size())
            throw ShapeError("cannot multiply " + to_string(a.rows()) + "x" + to_string(a.cols()) + " by a vector of length "
                + to_string(x.size()));
        BigVector y(a.rows());
        for (size_t r = 0; r < a.rows(); ++r)
            for (size_t k = 0; k < a.cols(); ++k)
                if (sgn(a(r, k)) != 0 && sgn(x[k]) != 0)
                    y[r] += a(r, k) * x[k];
        return y;
    }

    auto determinant(const BigMatrix & a) -> BigInt
    {
        if (a.rows() != a.cols())
            throw ShapeError("determinant of a non-square matrix");
        size_t n = a.rows();
        if (n == 0)
            return 1;

        // Bareiss elimination keeps every intermediate an exact integer.
        BigMatrix m = a;
        BigInt previous = 1;
        int sign = 1;
        for (size_t k = 0; k + 1 < n; ++k) {
            if (sgn(m(k, k)) == 0) {
                size_t swap_row = k + 1;
                while (swap_row < n && sgn(m(swap_row, k)) == 0)
                    ++swap_row;
                if (swap_row == n)
                    return 0;
                for (size_t j = 0; j < n; ++j)
                    std::swap(m(k, j), m(swap_row, j));
                sign = -sign;
            }
            for (size_t i = k + 1; i < n; ++i) {
                for (size_t j = k + 1; j < n; ++j) {
                    BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
                    m(i, j) = v;
                }
                m(i, k) = 0;
            }
            previous = m(k, k);
        }
        return sign * m(n - 1, n - 1);
    }

    namespace
    {
        /**
         * A column of the stacked matrix [A; U], stored sparsely. Indices below
         * the row count of A belong to the A part; the rest index into U.
         */
        using SparseColumn = vector<pair<size_t, BigInt>>;

        /// target <- target - factor * source
        auto axpy(SparseColumn & target, const BigInt & factor, const SparseColumn & source) -> void
        {
            SparseColumn result;
            result.reserve(target.size() + source.size());
            size_t a = 0, b = 0;
            while (a < target.size() || b < source.size()) {
                if (b == source.size() || (a < target.size() && target[a].first < source[b].first))
                    result.push_back(std::move(target[a++]));
                else if (a == target.size() || source[b].first < target[a].first) {
                    result.emplace_back(source[b].first, -factor * source[b].second);
                    ++b;
                }
                else {
                    BigInt v = target[a].second - factor * source[b].second;
                    if (sgn(v) != 0)
                        result.emplace_back(target[a].first, std::move(v));
                    ++a;
                    ++b;
                }
            }
            target = std::move(result);
        }

        auto negate(SparseColumn & c) -> void
        {
            for (auto & [_, v] : c)
                v = -v;
        }

        auto value_at(const SparseColumn & c, size_t index) -> BigInt
        {
            auto it = std::lower_bound(c.begin(), c.end(), index, [](const auto & e, size_t i) { return e.first < i; });
            if (it != c.end() && it->first == index)
                return it->second;
            return 0;
        }

        auto lead_row(const SparseColumn & c, size_t rows) -> size_t
        {
            if (c.empty() || c.front().first >= rows)
                return rows;
            return c.front().first;
        }

        struct Echelon
        {
            size_t rows, cols;
            vector<SparseColumn> columns;
            vector<size_t> pivot_columns, pivot_rows, zero_columns;
        };

        /**
         * Unimodular column elimination, one row at a time. Columns are
         * bucketed by their leading A-row; at row r the bucket is reduced by
         * repeated division with remainder against its smallest lead until a
         * single column survives as the pivot.
         */
        auto column_echelon(size_t rows, vector<SparseColumn> columns) -> Echelon
        {
            size_t cols = columns.size();
            for (size_t j = 0; j < cols; ++j)
                columns[j].emplace_back(rows + j, 1);

            vector<vector<size_t>> bucket(rows + 1);
            for (size_t j = 0; j < cols; ++j)
                bucket[lead_row(columns[j], rows)].push_back(j);

            Echelon result{rows, cols, {}, {}, {}, {}};
            for (size_t r = 0; r < rows; ++r) {
                auto active = std::move(bucket[r]);
                while (active.size() > 1) {
                    auto best = std::min_element(active.begin(), active.end(), [&](size_t x, size_t y) {
                        int c = mpz_cmpabs(columns[x].front().second.get_mpz_t(), columns[y].front().second.get_mpz_t());
                        return c < 0 || (c == 0 && columns[x].size() < columns[y].size());
                    });
                    size_t pivot = *best;
                    vector<size_t> still;
                    still.push_back(pivot);
                    for (auto j : active) {
                        if (j == pivot)
                            continue;
                        BigInt quotient;
                        mpz_tdiv_q(quotient.get_mpz_t(), columns[j].front().second.get_mpz_t(),
                            columns[pivot].front().second.get_mpz_t());
                        axpy(columns[j], quotient, columns[pivot]);
                        auto lead = lead_row(columns[j], rows);
                        if (lead == r)
                            still.push_back(j);
                        else
                            bucket[lead].push_back(j);
                    }
                    active = std::move(still);
                }
                if (active.empty())
                    continue;
                size_t pivot = active.front();
                if (sgn(columns[pivot].front().second) < 0)
                    negate(columns[pivot]);
                result.pivot_columns.push_back(pivot);
                result.pivot_rows.push_back(r);
            }
            result.zero_columns = std::move(bucket[rows]);
            std::sort(result.zero_columns.begin(), result.zero_columns.end());
            result.columns = std::move(columns);
            return result;
        }

        auto dense_columns(const BigMatrix & a) -> vector<SparseColumn>
        {
            vector<SparseColumn> columns(a.cols());
            for (size_t c = 0; c < a.cols(); ++c)
                for (size_t r = 0; r < a.rows(); ++r)
                    if (sgn(a(r, c)) != 0)
                        columns[c].emplace_back(r, a(r, c));
            return columns;
        }

        auto solve_echelon(const Echelon & e, const BigVector & b) -> DiophantineResult
        {
            DiophantineResult result;
            for (auto j : e.zero_columns) {
                BigVector v(e.cols);
                for (auto & [index, value] : e.columns[j])
                    v[index - e.rows] = value;
                result.kernel_basis.push_back(std::move(v));
            }

            BigVector residual = b;
            BigVector x(e.cols);
            for (size_t t = 0; t < e.pivot_columns.size(); ++t) {
                const auto & column = e.columns[e.pivot_columns[t]];
                size_t r = e.pivot_rows[t];
                if (sgn(residual[r]) == 0)
                    continue;
                BigInt y, remainder;
                mpz_tdiv_qr(y.get_mpz_t(), remainder.get_mpz_t(), residual[r].get_mpz_t(), column.front().second.get_mpz_t());
                if (sgn(remainder) != 0)
                    return result;
                for (auto & [index, value] : column) {
                    if (index < e.rows)
                        residual[index] -= y * value;
                    else
                        x[index - e.rows] += y * value;
                }
            }

            if (std::any_of(residual.begin(), residual.end(), [](const BigInt & v) { return sgn(v) != 0; }))
                return result;

            result.status = Feasibility::feasible;
            result.witness = std::move(x);
            return result;
        }
    }

    auto hermite_normal_form(const BigMatrix & a) -> HermiteForm
    {
        auto e = column_echelon(a.rows(), dense_columns(a));

        // Reduce entries left of each pivot into [0, pivot).
        for (size_t t = 0; t < e.pivot_columns.size(); ++t) {
            const auto & pivot = e.columns[e.pivot_columns[t]];
            size_t r = e.pivot_rows[t];
            for (size_t s = 0; s < t; ++s) {
                auto & left = e.columns[e.pivot_columns[s]];
                BigInt v = value_at(left, r);
                if (sgn(v) == 0)
                    continue;
                BigInt quotient;
                mpz_fdiv_q(quotient.get_mpz_t(), v.get_mpz_t(), pivot.front().second.get_mpz_t());
                if (sgn(quotient) != 0)
                    axpy(left, quotient, pivot);
            }
        }

        HermiteForm result;
        result.rank = e.pivot_columns.size();
        result.pivot_rows = e.pivot_rows;
        result.h = BigMatrix(a.rows(), a.cols());
        result.u = BigMatrix(a.cols(), a.cols());

        vector<size_t> order = e.pivot_columns;
        order.insert(order.end(), e.zero_columns.begin(), e.zero_columns.end());
        for (size_t c = 0; c < order.size(); ++c)
            for (auto & [index, value] : e.columns[order[c]]) {
                if (index < a.rows())
                    result.h(index, c) = value;
                else
                    result.u(index - a.rows(), c) = value;
            }
        return result;
    }

    auto solve_diophantine(const BigMatrix & a, const BigVector & b) -> DiophantineResult
    {
        if (b.size() != a.rows())
            throw ShapeError("right-hand side has length " + to_string(b.size()) + " but the matrix has "
                + to_string(a.rows()) + " rows");
        return solve_echelon(column_echelon(a.rows(), dense_columns(a)), b);
    }

    auto SparseSystem::to_dense() const -> BigMatrix
    {
        BigMatrix m(rows, columns.size());
        for (size_t c = 0; c < columns.size(); ++c)
            for (auto & [r, v] : columns[c])
                m(r, c) += v;
        return m;
    }

    auto solve_diophantine(const SparseSystem & system) -> DiophantineResult
    {
        if (system.rhs.size() != system.rows)
            throw ShapeError("right-hand side has length " + to_string(system.rhs.size()) + " but the system has "
                + to_string(system.rows) + " rows");

        vector<SparseColumn> columns(system.cols());
        for (size_t c = 0; c < system.cols(); ++c) {
            auto entries = system.columns[c];
            std::sort(entries.begin(), entries.end());
            for (auto & [r, v] : entries) {
                if (r >= system.rows)
                    throw ShapeError("column " + to_string(c) + " references row " + to_string(r));
                if (! columns[c].empty() && columns[c].back().first == r)
                    columns[c].back().second += v;
                else
                    columns[c].emplace_back(r, BigInt(v));
            }
            std::erase_if(columns[c], [](const auto & e) { return sgn(e.second) == 0; });
        }
        return solve_echelon(column_echelon(system.rows, std::move(columns)), system.rhs);
    }
}
