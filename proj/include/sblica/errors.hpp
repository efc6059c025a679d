#pragma once

#include <stdexcept>
#include <string>

namespace sblica {

/// Whitening failed because the channel covariance is (numerically)
/// rank-deficient, e.g. two identical observation channels.
struct DegenerateDataError : std::runtime_error {
    explicit DegenerateDataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Internal consistency failure (filter self-test breach, solver defect).
/// User input cannot trigger this.
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace sblica
