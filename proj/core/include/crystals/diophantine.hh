#ifndef CRYSTALS_GUARD_CRYSTALS_DIOPHANTINE_HH
#define CRYSTALS_GUARD_CRYSTALS_DIOPHANTINE_HH 1

#include <crystals/errors.hh>

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace crystals
{
    using BigInt = mpz_class;
    using BigVector = std::vector<BigInt>;

    class BigMatrix
    {
    private:
        std::size_t _rows = 0, _cols = 0;
        std::vector<BigInt> _entries;

    public:
        BigMatrix() = default;
        BigMatrix(std::size_t rows, std::size_t cols);
        BigMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);
        BigMatrix(std::initializer_list<std::initializer_list<long>> rows);

        static auto identity(std::size_t n) -> BigMatrix;

        auto rows() const -> std::size_t { return _rows; }
        auto cols() const -> std::size_t { return _cols; }

        auto operator()(std::size_t r, std::size_t c) -> BigInt & { return _entries[r * _cols + c]; }
        auto operator()(std::size_t r, std::size_t c) const -> const BigInt & { return _entries[r * _cols + c]; }

        auto entries() const -> const std::vector<BigInt> & { return _entries; }
        auto column(std::size_t c) const -> BigVector;

        auto operator==(const BigMatrix &) const -> bool = default;
    };

    auto multiply(const BigMatrix & a, const BigMatrix & b) -> BigMatrix;
    auto multiply(const BigMatrix & a, const BigVector & x) -> BigVector;

    /// Exact determinant by fraction-free elimination.
    auto determinant(const BigMatrix & a) -> BigInt;

    /**
     * Column-style Hermite normal form: A * U = H with U unimodular. The
     * first `rank` columns of H are pivot columns in order of increasing pivot
     * row; each pivot is positive, everything above it is zero, and entries to
     * its left in the pivot row lie in [0, pivot). The remaining columns of H
     * are zero.
     */
    struct HermiteForm
    {
        BigMatrix h, u;
        std::size_t rank = 0;
        std::vector<std::size_t> pivot_rows;
    };

    auto hermite_normal_form(const BigMatrix & a) -> HermiteForm;

    enum class Feasibility
    {
        feasible,
        infeasible
    };

    struct DiophantineResult
    {
        Feasibility status = Feasibility::infeasible;
        BigVector witness;
        std::vector<BigVector> kernel_basis;

        auto feasible() const -> bool { return status == Feasibility::feasible; }
    };

    /// Decides whether A x = b has an integer solution, returning one and a basis of the integer kernel.
    auto solve_diophantine(const BigMatrix & a, const BigVector & b) -> DiophantineResult;

    /// Sparse input for large structured systems: each column lists (row, value) pairs.
    struct SparseSystem
    {
        std::size_t rows = 0;
        std::vector<std::vector<std::pair<std::size_t, long>>> columns;
        BigVector rhs;

        auto cols() const -> std::size_t { return columns.size(); }
        auto to_dense() const -> BigMatrix;
    };

    auto solve_diophantine(const SparseSystem & system) -> DiophantineResult;
}

#endif
