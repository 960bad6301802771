#pragma once

#include <stdexcept>
#include <string>

namespace qw {

// Exit codes used by the CLI; exceptions map onto them 1:1.
enum class ExitCode : int {
    Ok = 0,
    Failure = 1,
    Invalid = 2,
    EmptyVariety = 3,
    MethodNotApplicable = 4,
    InternalInconsistency = 5,
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// The dimension vector is not an N-combination of positive roots, so the
// variety is empty and there is nothing to analyze.
struct EmptyVarietyError : std::runtime_error {
    explicit EmptyVarietyError(const std::string& msg) : std::runtime_error(msg) {}
};

// The resolution-existence criterion fails for some canonical component.
struct MethodNotApplicableError : std::runtime_error {
    explicit MethodNotApplicableError(const std::string& msg) : std::runtime_error(msg) {}
};

// A structural guarantee was violated at runtime. Always a bug, never
// recoverable; the pipeline aborts loudly.
struct InternalInconsistency : std::logic_error {
    explicit InternalInconsistency(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace qw
