#ifndef CRYSTALS_GUARD_CRYSTALS_ALBUM_HH
#define CRYSTALS_GUARD_CRYSTALS_ALBUM_HH 1

#include <crystals/tensor.hh>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace crystals
{
    /**
     * A (p, n)-album: one picture for every strictly increasing p-tuple of
     * modes of n, where the picture for i has shape n_i. The album claims to
     * depict a single tensor of shape n.
     */
    class Album
    {
    private:
        int _p;
        Shape _modes;
        std::map<IndexTuple, IntTensor> _pictures;

    public:
        /// Validates that the key set is exactly [q]^p increasing and that shapes agree.
        Album(int p, Shape modes, std::map<IndexTuple, IntTensor> pictures);

        auto p() const -> int { return _p; }
        auto q() const -> int { return _modes.rank(); }
        auto modes() const -> const Shape & { return _modes; }
        auto pictures() const -> const std::map<IndexTuple, IntTensor> & { return _pictures; }
        auto picture(const IndexTuple & i) const -> const IntTensor &;

        auto operator==(const Album &) const -> bool = default;
    };

    /// Pictures i and j disagree on their shared (p-1)-dimensional view: C_i seen along r versus C_j along s.
    struct RealismViolation
    {
        IndexTuple i, j, r, s;

        auto to_string() const -> std::string;
    };

    struct RealismCheck
    {
        bool realistic;
        std::optional<RealismViolation> violation;

        explicit operator bool() const { return realistic; }
    };

    class RealismError : public Error
    {
    private:
        RealismViolation _violation;

    public:
        explicit RealismError(const RealismViolation & v);
        auto violation() const -> const RealismViolation & { return _violation; }
    };

    auto is_realistic(const Album & album) -> RealismCheck;

    /// Photographs t from every increasing p-tuple of modes.
    auto album_from_tensor(const IntTensor & t, int p) -> Album;

    /**
     * Re-expresses the album in the mode order given by the permutation l:
     * the result is a (p, n_l)-album. Realising it and passing the result to
     * unrotate_tensor realises the original album.
     */
    auto rotate_album(const Album & album, const IndexTuple & l) -> Album;

    /// Undoes the mode permutation l on a tensor of shape n_l, giving shape n.
    auto unrotate_tensor(const IntTensor & rotated, const IndexTuple & l) -> IntTensor;

    /// Base case: every mode has size one.
    auto realize_unit_shape(const Album & album) -> IntTensor;

    /// Base case: one-dimensional pictures, built by peeling the last entry of the last mode.
    auto realize_vectors(const Album & album) -> IntTensor;

    /**
     * A post-order record of the realisation. Replaying it on a stack machine
     * reproduces the realised tensor:
     *   base    push the constant tensor of shape `modes` with entry `value`
     *   zero    push the zero tensor of shape `modes`
     *   vector  push the single picture of a one-mode album
     *   peel    pop C~, push the tensor of shape `modes` holding `value` in the
     *           last cell, zeros on the rest of the last slice, C~ elsewhere
     *   glue    pop C~, pop C^, push the tensor of shape `modes` with C^ on the
     *           last slice of the last mode and C~ elsewhere
     *   rotate  pop a tensor, push unrotate_tensor(it, `tuple`)
     */
    struct TraceStep
    {
        std::string op;
        Shape modes;
        Entry value = 0;
        IndexTuple tuple;
        std::vector<Entry> entries;

        auto operator==(const TraceStep &) const -> bool = default;
    };

    struct RealizationTrace
    {
        std::vector<TraceStep> steps;

        auto operator==(const RealizationTrace &) const -> bool = default;
    };

    auto replay(const RealizationTrace & trace) -> IntTensor;

    struct Realization
    {
        IntTensor tensor;
        RealizationTrace trace;
    };

    /// Throws RealismError when the album is not realistic.
    auto realize(const Album & album) -> Realization;

    /// A q-dimensional M-crystal. Requires a square M with equal row and column sums.
    auto mine_crystal(const IntTensor & m, int q) -> IntTensor;

    auto verify_crystal(const IntTensor & c, const IntTensor & m) -> bool;
}

#endif
