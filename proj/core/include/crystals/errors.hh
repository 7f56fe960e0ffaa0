#ifndef CRYSTALS_GUARD_CRYSTALS_ERRORS_HH
#define CRYSTALS_GUARD_CRYSTALS_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace crystals
{
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    /// An index tuple or mode position fell outside its shape.
    class BoundsError : public Error
    {
    public:
        explicit BoundsError(const std::string & m) : Error("bounds error: " + m) {}
    };

    class ShapeError : public Error
    {
    public:
        explicit ShapeError(const std::string & m) : Error("shape error: " + m) {}
    };

    /// Checked machine-width arithmetic wrapped around.
    class OverflowError : public Error
    {
    public:
        explicit OverflowError(const std::string & m) : Error("overflow error: " + m) {}
    };

    class ArgumentError : public Error
    {
    public:
        explicit ArgumentError(const std::string & m) : Error("argument error: " + m) {}
    };

    /// An album or system whose parts do not fit together.
    class StructureError : public Error
    {
    public:
        explicit StructureError(const std::string & m) : Error("structure error: " + m) {}
    };

    /// A matrix with unequal row and column sums was offered as a crystal picture.
    class BalanceError : public Error
    {
    public:
        explicit BalanceError(const std::string & m) : Error("balance error: " + m) {}
    };

    class CapacityError : public Error
    {
    public:
        explicit CapacityError(const std::string & m) : Error("capacity error: " + m) {}
    };

    class UnsupportedError : public Error
    {
    public:
        explicit UnsupportedError(const std::string & m) : Error("unsupported: " + m) {}
    };

    /// Malformed external input (JSON documents, shorthands, files).
    class FormatError : public Error
    {
    public:
        explicit FormatError(const std::string & m) : Error("format error: " + m) {}
    };
}

#endif
