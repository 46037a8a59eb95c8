#pragma once

#include <stdexcept>
#include <string>

namespace hypersteiner {

/// Raised when an instance fails a structural check (bad matrix, bad
/// polygon, bad graph). The message names the offending entity.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an operation is asked to run outside its supported size
/// or configuration envelope.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hypersteiner
