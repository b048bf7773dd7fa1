#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordpar {

/// Base of every domain error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define ORDPAR_DEFINE_ERROR(Name)                 \
    class Name : public Error {                   \
    public:                                       \
        using Error::Error;                       \
    }

ORDPAR_DEFINE_ERROR(InvalidShape);
ORDPAR_DEFINE_ERROR(DimensionMismatch);
ORDPAR_DEFINE_ERROR(NonBinaryEntry);
ORDPAR_DEFINE_ERROR(OutOfRange);
ORDPAR_DEFINE_ERROR(NotInOrderedBox);
ORDPAR_DEFINE_ERROR(IndexOutOfRange);
ORDPAR_DEFINE_ERROR(TooManyGroups);
ORDPAR_DEFINE_ERROR(TooLarge);
ORDPAR_DEFINE_ERROR(Infeasible);
ORDPAR_DEFINE_ERROR(MalformedProgram);
ORDPAR_DEFINE_ERROR(EmptyComponent);
ORDPAR_DEFINE_ERROR(OrderingViolated);
ORDPAR_DEFINE_ERROR(TooManyNodes);
ORDPAR_DEFINE_ERROR(DisconnectedGraph);
ORDPAR_DEFINE_ERROR(SelfLoop);
ORDPAR_DEFINE_ERROR(DuplicateEdge);
ORDPAR_DEFINE_ERROR(GraphTooSmall);
ORDPAR_DEFINE_ERROR(PivotLimitExceeded);

#undef ORDPAR_DEFINE_ERROR

/// Text input that could not be parsed; carries the 1-based line when known.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace ordpar
