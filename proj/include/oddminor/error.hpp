#pragma once

#include <stdexcept>
#include <string>

namespace oddminor {

enum class ErrorKind {
    LoopEdge,
    NegativeWeight,
    DuplicateEdge,
    Overflow,
    BadParameter,
    TooLarge,
    BudgetExhausted,
    NotBipartite,
    WidthTooLarge,
    BlindWidthExceeded,
    PreconditionViolated,
    NotClean,
    EarNotOnPerimeter,
    OrderTooSmall,
    BipartiteHost,
    Disconnected,
    Parse,
    Io,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// checked int64 helpers
long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

}  // namespace oddminor
