#pragma once

#include <stdexcept>
#include <string>

namespace charvar {

enum class ErrorCode {
    BadArgument,
    NotDivisible,
    ZeroDivisor,
    NotUnivariate,
    MissingAssignment,
    RouteDisagreement,
    ParseError,
    BadRange,
    NotOddM,
    UnknownGenerator,
    RelationViolated,
    DegenerateSample,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace charvar
