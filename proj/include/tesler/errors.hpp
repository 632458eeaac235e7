#pragma once

#include <stdexcept>
#include <string>

namespace tesler {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct SingularMatrix : Error {
    using Error::Error;
};
struct InconsistentSystem : Error {
    using Error::Error;
};
struct RankDeficient : Error {
    using Error::Error;
};
struct DuplicateAbscissa : Error {
    using Error::Error;
};
struct NonPositiveFirstEntry : Error {
    using Error::Error;
};
struct NonPositiveHookSum : Error {
    using Error::Error;
};
struct NonIntegralHookSum : Error {
    using Error::Error;
};
struct InvalidFacet : Error {
    using Error::Error;
};
struct InfeasibleVertex : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct NoVertexFound : Error {
    using Error::Error;
};
struct ZeroDiagonal : Error {
    using Error::Error;
};
struct CaseUnavailable : Error {
    using Error::Error;
};
struct UnsupportedCodim : Error {
    using Error::Error;
};
struct InterpolationMismatch : Error {
    using Error::Error;
};

}  // namespace tesler
