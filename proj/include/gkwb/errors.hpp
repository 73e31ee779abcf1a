#pragma once

#include <stdexcept>
#include <string>

namespace gkwb {

// Exit codes shared by the CLI and the acceptance runner.
enum ExitCode : int {
    exit_ok = 0,
    exit_math_failure = 1,
    exit_usage = 2,
    exit_budget = 3,
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller misuse: bad flags, malformed input, mismatched generator sets.
struct UsageError : Error {
    using Error::Error;
};

struct ParseError : UsageError {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : UsageError(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

// A configured step or size budget ran out.
struct BudgetError : Error {
    using Error::Error;
};

// A runtime check of a mathematical hypothesis failed. Carries the value
// that witnesses the failure, printed in canonical form.
struct TheoryViolation : Error {
    std::string residual;
    explicit TheoryViolation(const std::string& msg, std::string res = {})
        : Error(msg), residual(std::move(res)) {}
};

struct InternalError : Error {
    using Error::Error;
};

}  // namespace gkwb
