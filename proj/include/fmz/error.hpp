#pragma once

#include <stdexcept>
#include <string>

namespace fmz {

// Each error category maps to one CLI exit code.
enum class ErrorKind {
    Parse = 2,
    Domain = 3,
    Precondition = 4,
    Invariant = 5,
    Resource = 6,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    int exit_code() const noexcept { return static_cast<int>(kind_); }

private:
    ErrorKind kind_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(ErrorKind::Precondition, what) {}
};

struct InvariantError : Error {
    explicit InvariantError(const std::string& what) : Error(ErrorKind::Invariant, what) {}
};

struct ResourceError : Error {
    explicit ResourceError(const std::string& what) : Error(ErrorKind::Resource, what) {}
};

}  // namespace fmz
