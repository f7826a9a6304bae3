#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ortho {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A requested dimension exceeds the configured or hard cap.
class DimensionCapExceeded : public Error {
public:
    using Error::Error;
};

/// complement() was called on the identity class "1".
class ComplementOfIdentity : public Error {
public:
    using Error::Error;
};

/// A sign vector's length does not match the diagram dimension.
class LengthMismatch : public Error {
public:
    using Error::Error;
};

/// Two floral vectors bound to different class tables were combined.
class TableMismatch : public Error {
public:
    using Error::Error;
};

class EmptyInput : public Error {
public:
    using Error::Error;
};

class DimensionOutOfRange : public Error {
public:
    using Error::Error;
};

class RaggedTuple : public Error {
public:
    using Error::Error;
};

/// A grid cell was queried that is not contained in the orthotope.
class CellNotInPolytope : public Error {
public:
    using Error::Error;
};

/// The input is not a generic orthotope: some cell has a tangent cone that is
/// not described by a read-once function.  Carries the offending cell.
class NotGenericError : public Error {
public:
    NotGenericError(std::string msg, std::vector<int> anchor,
                    std::uint32_t directions, std::uint64_t occupancy)
        : Error(std::move(msg)), anchor(std::move(anchor)),
          directions(directions), occupancy(occupancy) {}

    std::vector<int> anchor;
    std::uint32_t directions;
    std::uint64_t occupancy;
};

/// An exact computation that must produce integers produced a proper fraction.
class NonIntegralResult : public Error {
public:
    using Error::Error;
};

/// A lattice point of a dilate had a non-floral tangent cone.  Cannot happen
/// for a generic input; indicates a bug or corrupted data.
class NonFloralPoint : public Error {
public:
    using Error::Error;
};

class GenerationFailed : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// A redundant internal cross-check (two independent computation routes)
/// disagreed.  Always a bug, never a data error.
class IdentityCheckFailed : public Error {
public:
    using Error::Error;
};

} // namespace ortho
