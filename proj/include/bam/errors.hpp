#pragma once

#include <stdexcept>
#include <string>

namespace bam {

// Malformed or inconsistent input (files, instance data, CLI arguments).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// An identifier was looked up that the profile/model does not know.
struct LookupError : std::runtime_error {
    explicit LookupError(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented precondition of an operation was violated by the caller.
struct PreconditionError : std::logic_error {
    explicit PreconditionError(const std::string& msg) : std::logic_error(msg) {}
};

// A solver ran into its node or time budget; distinct from a NO answer.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

// A witness did not decode back to a valid source-problem solution.
struct ExtractionError : std::runtime_error {
    explicit ExtractionError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace bam
