#pragma once

#include <stdexcept>
#include <string>

namespace rllforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct RankUnsupported : Error {
    using Error::Error;
};
struct RankMismatch : Error {
    using Error::Error;
};
struct BackendUnsupported : Error {
    using Error::Error;
};
struct CapExceeded : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct UnknownCheck : Error {
    using Error::Error;
};
struct UnknownTarget : Error {
    using Error::Error;
};
struct InvalidOption : Error {
    using Error::Error;
};

// pivot is 1-based
struct MinorNotInvertible : Error {
    int pivot;
    explicit MinorNotInvertible(int p)
        : Error("minor not invertible at pivot " + std::to_string(p)), pivot(p) {}
};

}  // namespace rllforge
