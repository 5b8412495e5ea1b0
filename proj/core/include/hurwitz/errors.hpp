#pragma once

#include <stdexcept>
#include <string>

namespace hurwitz {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SizeMismatch : Error {
    using Error::Error;
};
struct CutoffExceeded : Error {
    using Error::Error;
};
struct CutoffTooSmall : Error {
    using Error::Error;
};
struct ZeroArgument : Error {
    using Error::Error;
};
struct OddIndex : Error {
    using Error::Error;
};
struct IncompatibleTruncation : Error {
    using Error::Error;
};
struct InexactDivision : Error {
    using Error::Error;
};

// Thrown when a computation requires an off-wall input but some
// |mu_I| - |nu_J| vanishes.  The wall is reported as bitmasks over the
// part indices.
struct OnWall : Error {
    unsigned I, J;
    OnWall(unsigned I_, unsigned J_, const std::string& msg) : Error(msg), I(I_), J(J_) {}
};

struct NotTotallyNegative : Error {
    using Error::Error;
};
struct SingularSystem : Error {
    using Error::Error;
};
struct ChamberMismatch : Error {
    using Error::Error;
};
struct NotAdjacent : Error {
    using Error::Error;
};
struct SubInputOnWall : Error {
    using Error::Error;
};
struct NonPositiveDelta : Error {
    using Error::Error;
};

}  // namespace hurwitz
