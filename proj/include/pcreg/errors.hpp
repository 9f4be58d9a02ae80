#pragma once

#include <stdexcept>
#include <string>

namespace pcreg {

// Base class for everything this library can throw. Each failure condition
// gets its own type so callers can attribute errors to a pipeline stage.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateNeighborhood : Error { using Error::Error; };
struct NumericalOverflow : Error { using Error::Error; };
struct EmptyModel : Error { using Error::Error; };
struct DegenerateWeights : Error { using Error::Error; };
struct SingularCovariance : Error { using Error::Error; };
struct NoMatches : Error { using Error::Error; };
struct NoCorrespondences : Error { using Error::Error; };
struct DegenerateConfiguration : Error { using Error::Error; };
struct NoConsensus : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

}  // namespace pcreg
