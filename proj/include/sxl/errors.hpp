#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sxl {

/// Base class for every error the library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VertexLimitExceeded : Error {
    using Error::Error;
};

struct InvalidEdge : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

struct DivisibilityError : Error {
    using Error::Error;
};

struct ConvergenceFailure : Error {
    using Error::Error;
};

struct InvalidPattern : Error {
    using Error::Error;
};

struct SizeLimitExceeded : Error {
    using Error::Error;
};

struct MalformedGraph6 : Error {
    using Error::Error;
};

struct SizeUnsupported : Error {
    using Error::Error;
};

struct InvalidRotation : Error {
    using Error::Error;
};

struct InvalidWeights : Error {
    using Error::Error;
};

/// A mathematical assertion failed during a scan or lemma check.
/// Carries the offending graph in graph6 form when one exists.
struct BoundViolation : Error {
    std::string counterexample;

    explicit BoundViolation(const std::string& what, std::string counterexample_g6 = {})
        : Error(what), counterexample(std::move(counterexample_g6)) {}
};

} // namespace sxl
