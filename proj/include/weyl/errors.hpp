#pragma once

#include <stdexcept>
#include <string>

namespace weyl {

// Error taxonomy used across the library. All derive from std::runtime_error
// so callers that do not care about the kind can catch one type.

struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnsupportedDomain : std::runtime_error {
    explicit UnsupportedDomain(const std::string& msg) : std::runtime_error(msg) {}
};

struct SingularPoint : std::runtime_error {
    explicit SingularPoint(const std::string& msg) : std::runtime_error(msg) {}
};

struct AccuracyError : std::runtime_error {
    explicit AccuracyError(const std::string& msg) : std::runtime_error(msg) {}
};

struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

struct RangeError : std::runtime_error {
    explicit RangeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SplitFailure : std::runtime_error {
    explicit SplitFailure(const std::string& msg) : std::runtime_error(msg) {}
};

struct FitFailure : std::runtime_error {
    explicit FitFailure(const std::string& msg) : std::runtime_error(msg) {}
};

struct SolverError : std::runtime_error {
    explicit SolverError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidPair : std::runtime_error {
    explicit InvalidPair(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace weyl
