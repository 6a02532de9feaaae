#pragma once

#include <stdexcept>
#include <string>

namespace mz {

/// Base class for every domain error thrown by the library. The CLI maps
/// these to exit code 64 (bad input) or 70 (internal failure).
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegreeTooSmall : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct InvalidRatio : Error { using Error::Error; };
struct DuplicateNodes : Error { using Error::Error; };
struct ZeroScale : Error { using Error::Error; };
struct GeomTemplateMismatch : Error { using Error::Error; };
struct AmbiguousRatio : Error { using Error::Error; };
struct OrderViolation : Error { using Error::Error; };
struct NoOrder : Error { using Error::Error; };
struct OutsideAnnulus : Error { using Error::Error; };
struct InsufficientRange : Error { using Error::Error; };
struct RangeTooShort : Error { using Error::Error; };
struct BothPartsVanish : Error { using Error::Error; };
struct NotIncreasing : Error { using Error::Error; };
struct BisectionFailure : Error { using Error::Error; };
struct InvalidParity : Error { using Error::Error; };
struct HypothesisViolation : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

} // namespace mz
