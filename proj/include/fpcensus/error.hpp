#pragma once

#include <stdexcept>
#include <string>

namespace fpc {

enum class ErrorKind {
    parameter,
    syntax,
    degree,
    disconnected,
    contract,
    incomplete,
    format,
    checkpoint,
    io,
};

class CensusError : public std::runtime_error {
public:
    CensusError(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct ParameterError : CensusError {
    explicit ParameterError(const std::string& what) : CensusError(ErrorKind::parameter, what) {}
};

// Base for everything that makes a multigraph invalid.
struct MalformedGraphError : CensusError {
    using CensusError::CensusError;
};

struct GraphSyntaxError : MalformedGraphError {
    explicit GraphSyntaxError(const std::string& what)
        : MalformedGraphError(ErrorKind::syntax, what) {}
};

struct GraphDegreeError : MalformedGraphError {
    explicit GraphDegreeError(const std::string& what)
        : MalformedGraphError(ErrorKind::degree, what) {}
};

struct GraphDisconnectedError : MalformedGraphError {
    explicit GraphDisconnectedError(const std::string& what)
        : MalformedGraphError(ErrorKind::disconnected, what) {}
};

// Caller broke a documented precondition.
struct ContractError : CensusError {
    explicit ContractError(const std::string& what) : CensusError(ErrorKind::contract, what) {}
};

struct IncompleteError : CensusError {
    explicit IncompleteError(const std::string& what) : CensusError(ErrorKind::incomplete, what) {}
};

struct FormatError : CensusError {
    explicit FormatError(const std::string& what) : CensusError(ErrorKind::format, what) {}
};

}  // namespace fpc
